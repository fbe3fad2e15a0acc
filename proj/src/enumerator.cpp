#include "greenstack/enumerator.hpp"

#include <algorithm>
#include <deque>

namespace greenstack {

  std::optional<std::string> successor(std::string_view x) {
    std::size_t end = x.size();
    std::size_t j   = 0;
    while (end > 0 && x[end - 1] == '0') {
      --end;
      ++j;
    }
    std::size_t i = 0;
    while (end > 0 && x[end - 1] == '1') {
      --end;
      ++i;
    }
    if (i == 0 || end == 0) {
      return std::nullopt;
    }
    // x[end - 1] is the 0 in front of the block
    std::string y(x.substr(0, end - 1));
    y += '1';
    y.append(j + 1, '0');
    y.append(i - 1, '1');
    return y;
  }

  std::vector<std::string> successor_sequence(std::size_t n, std::size_t m) {
    if (m > n) {
      throw Error("successor_sequence: weight exceeds length");
    }
    std::vector<std::string> out{std::string(n - m, '0') + std::string(m, '1')};
    while (auto next = successor(out.back())) {
      out.push_back(std::move(*next));
    }
    return out;
  }

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    k               = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      r = r * (n - i) / (i + 1);
    }
    return r;
  }

  std::size_t counter_bits(std::size_t n) {
    std::size_t b = 1;
    while ((std::size_t{1} << b) < n) {
      ++b;
    }
    return b;
  }

  std::size_t head_counter_bits(std::size_t n) {
    return counter_bits(n + 1);
  }

  MachineU build_U(std::size_t n, std::size_t p_bits) {
    if (n == 0 || n % 2 != 0) {
      throw Error("build_U: n must be even and positive, got " + std::to_string(n));
    }
    MachineU u;
    u.n    = n;
    u.bits   = counter_bits(n);
    u.p_bits = p_bits == 0 ? head_counter_bits(n) : p_bits;
    if (u.p_bits < counter_bits(n)) {
      throw Error("build_U: P needs at least " + std::to_string(counter_bits(n)) + " bits");
    }

    TokenMachine tape = make_tape(n, "T");
    tape.remove_instruction("T.sync");
    TokenMachine m = tape;
    m = machine_union(m, make_counter(u.p_bits, "P").machine);
    m = machine_union(m, make_counter(u.bits, "Q").machine);
    m = machine_union(m, make_counter(u.bits, "Z").machine);
    u.P = CounterLayout::locate(m, "P", u.p_bits);
    u.Q = CounterLayout::locate(m, "Q", u.bits);
    u.Z = CounterLayout::locate(m, "Z", u.bits);
    add_ival(m, u.P, 0);
    add_ival(m, u.P, n - 1);
    add_ival(m, u.Q, n - 1);
    add_ival(m, u.Z, n / 2);
    for (std::size_t i = 0; i < n; ++i) {
      u.tape.push_back(m.cell("T.c" + std::to_string(i)));
    }

    Config init = m.empty_config();
    for (std::size_t i = 0; i < n / 2; ++i) {
      init.set(u.tape[i]);
    }
    for (auto const* l : {&u.P, &u.Q, &u.Z}) {
      init |= counter_config(m, *l, 0);
    }
    u.initial = std::move(init);
    u.machine = std::move(m);
    return u;
  }

  namespace {
    using namespace program;

    ProgramExpr t(char const* op) {
      return atom(std::string("T.") + op);
    }

    ProgramExpr val(char const* counter, std::size_t k) {
      return atom(ival_name(counter, k));
    }
  }  // namespace

  ProgramExpr program_rotl() {
    return seq({program_dec("P"), t("rotl")});
  }

  ProgramExpr program_rotr() {
    return seq({program_inc("P"), t("rotr")});
  }

  ProgramExpr program_eq1(std::size_t n) {
    return seq({t("rotr"),
                star(seq({alt({eps(), seq({t("eq0"), program_inc("Z")})}),
                          t("rotr"),
                          program_inc("Q")})),
                val("Q", n - 1),
                val("Z", n / 2),
                program_reset("Q"),
                program_reset("Z")});
  }

  namespace {
    // (L_=1 L_rotr)
    ProgramExpr eq1_rotr(std::size_t n) {
      return seq({program_eq1(n), program_rotr()});
    }
    // (L_rotl L_=1)
    ProgramExpr rotl_eq1(std::size_t n) {
      return seq({program_rotl(), program_eq1(n)});
    }
    // (mvr L_rotl)*
    ProgramExpr mvr_rotl_star() {
      return star(seq({t("mvr"), program_rotl()}));
    }
    // (eq0 L_rotr)*
    ProgramExpr eq0_rotr_star() {
      return star(seq({t("eq0"), program_rotr()}));
    }
  }  // namespace

  ProgramExpr program_L1(std::size_t n) {
    return seq({alt({val("P", 0), seq({program_rotl(), t("eq0"), program_rotr()})}),
                program_rotr(),
                star(eq1_rotr(n)),
                t("eq0"),
                program_rotl()});
  }

  ProgramExpr program_L2(std::size_t n) {
    return seq({plus(rotl_eq1(n)),
                val("P", 0),
                plus(eq1_rotr(n)),
                t("eq0"),
                program_rotl()});
  }

  ProgramExpr program_K1(std::size_t) {
    return seq({t("eq0"), program_rotl(), mvr_rotl_star(), val("P", 0)});
  }

  ProgramExpr program_K2(std::size_t n) {
    return seq({program_eq1(n),
                program_rotl(),
                mvr_rotl_star(),
                val("P", 0),
                program_rotr(),
                eq0_rotr_star(),
                program_eq1(n),
                program_rotr()});
  }

  ProgramExpr program_K3(std::size_t n) {
    return seq({program_eq1(n),
                program_rotl(),
                mvr_rotl_star(),
                program_rotl(),
                program_eq1(n),
                program_rotr(),
                program_rotr(),
                eq0_rotr_star(),
                program_eq1(n),
                program_rotr()});
  }

  ProgramExpr program_K4(std::size_t n) {
    return seq({t("eq0"),
                program_rotl(),
                mvr_rotl_star(),
                program_rotl(),
                program_eq1(n),
                program_rotr()});
  }

  ProgramExpr program_L3(std::size_t n) {
    return seq({plus(rotl_eq1(n)),
                program_rotl(),
                t("eq0"),
                program_rotr(),
                program_rotr(),
                alt({program_K1(n),
                     seq({program_K2(n), star(program_K3(n)), program_K4(n)})})});
  }

  ProgramExpr program_L(std::size_t n) {
    return seq({program_reset("P"),
                program_reset("Q"),
                program_reset("Z"),
                star(eq1_rotr(n)),
                t("eq0"),
                program_rotl(),
                star(seq({t("mvl"), alt({program_L1(n), program_L2(n), program_L3(n)})})),
                val("P", n - 1)});
  }

  SplitBudgetExceeded::SplitBudgetExceeded(SplitStats stats)
      : Error("control unit: split budget exhausted after "
              + std::to_string(stats.splits) + " splits (" + std::to_string(stats.states)
              + " states from " + std::to_string(stats.initial_states) + ", "
              + std::to_string(stats.pending) + " conflicts pending)"),
        stats_(stats) {}

  namespace {
    std::vector<std::uint32_t> letter_map(Automaton const&                dfa,
                                          std::vector<std::string> const& alphabet) {
      std::vector<std::uint32_t> map;
      for (auto const& name : alphabet) {
        auto it = std::find(dfa.alphabet.begin(), dfa.alphabet.end(), name);
        map.push_back(it == dfa.alphabet.end()
                          ? kUndefined
                          : static_cast<std::uint32_t>(it - dfa.alphabet.begin()));
      }
      for (auto const& name : dfa.alphabet) {
        if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end()) {
          throw Error("control unit: automaton letter '" + name
                      + "' missing from the alphabet");
        }
      }
      return map;
    }

    TokenMachine to_machine(std::vector<std::vector<std::uint32_t>> const& delta,
                            std::vector<std::uint32_t> const&              letters,
                            std::vector<std::string> const&                alphabet) {
      std::vector<std::string> labels;
      for (std::size_t q = 0; q < delta.size(); ++q) {
        labels.push_back("CU.q" + std::to_string(q));
      }
      TokenMachine m(std::move(labels));
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        std::vector<State> f(delta.size(), kUndefined);
        if (letters[a] != kUndefined) {
          for (std::size_t q = 0; q < delta.size(); ++q) {
            f[q] = delta[q][letters[a]];
          }
        }
        m.add_instruction(alphabet[a], PartialTransformation(std::move(f)));
      }
      return m;
    }
  }  // namespace

  TokenMachine build_control_unit(Automaton const&                dfa,
                                  std::vector<std::string> const& alphabet,
                                  std::size_t                     split_budget,
                                  SplitStats*                     stats_out) {
    auto const letters = letter_map(dfa, alphabet);
    if (dfa.empty()) {
      return to_machine({}, letters, alphabet);
    }
    // minimize() numbers states breadth-first from the initial state 0
    std::size_t const                       k     = dfa.alphabet.size();
    std::vector<std::vector<std::uint32_t>> delta = dfa.delta;
    std::vector<std::vector<std::uint32_t>> sources(delta.size() * k);
    for (std::uint32_t s = 0; s < delta.size(); ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        if (delta[s][a] != kUndefined) {
          sources[delta[s][a] * k + a].push_back(s);
        }
      }
    }
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (sources[i].size() >= 2) {
        queue.push_back(i);
      }
    }
    SplitStats stats;
    stats.initial_states = delta.size();
    while (!queue.empty()) {
      std::size_t const slot = queue.front();
      queue.pop_front();
      auto const t = static_cast<std::uint32_t>(slot / k);
      auto const a = slot % k;
      while (sources[slot].size() >= 2) {
        if (stats.splits == split_budget) {
          stats.states  = delta.size();
          stats.pending = queue.size() + 1;
          if (stats_out != nullptr) {
            *stats_out = stats;
          }
          throw SplitBudgetExceeded(stats);
        }
        auto& src = sources[slot];
        auto  it  = std::max_element(src.begin(), src.end());
        auto  s   = *it;
        src.erase(it);
        auto copy = static_cast<std::uint32_t>(delta.size());
        delta.push_back(delta[t]);
        sources.resize(delta.size() * k);
        for (std::size_t b = 0; b < k; ++b) {
          auto u = delta[copy][b];
          if (u != kUndefined) {
            auto& in = sources[u * k + b];
            in.push_back(copy);
            if (in.size() == 2) {
              queue.push_back(u * k + b);
            }
          }
        }
        delta[s][a] = copy;
        sources[copy * k + a].push_back(s);
        ++stats.splits;
      }
    }
    stats.states = delta.size();
    if (stats_out != nullptr) {
      *stats_out = stats;
    }
    return to_machine(delta, letters, alphabet);
  }

  TokenMachine automaton_control_unit(Automaton const&                dfa,
                                      std::vector<std::string> const& alphabet) {
    return to_machine(dfa.delta, letter_map(dfa, alphabet), alphabet);
  }

  MachineV build_V(std::size_t n, ControlMode mode, std::size_t split_budget,
                   std::size_t p_bits) {
    MachineV v;
    v.u       = build_U(n, p_bits);
    v.mode    = mode;
    auto const& names = v.u.machine.instruction_names();
    v.program = compile_minimal(program_L(n), names);
    if (v.program.empty()) {
      throw Error("build_V: the program language is empty");
    }
    v.control = mode == ControlMode::kInjective
                    ? build_control_unit(v.program, names, split_budget)
                    : automaton_control_unit(v.program, names);
    v.machine = machine_union(v.u.machine, v.control);
    v.initial = v.machine.empty_config();
    v.u.initial.for_each([&](std::size_t i) { v.initial.set(i); });
    v.initial.set(v.u.machine.cell_count() + v.program.initial);
    return v;
  }

  Trace run_enumeration(MachineV const& v, std::size_t budget) {
    RunResult r = deterministic_run(v.machine, v.initial, v.program, budget);
    if (r.status != RunStatus::kFound) {
      throw Error("run_enumeration(" + std::to_string(v.u.n) + "): "
                  + std::string(to_string(r.status)) + " after "
                  + std::to_string(r.nodes) + " search nodes");
    }
    return std::move(r.trace);
  }

  std::string encode(MachineU const& u, Config const& c) {
    if (!is_valid(u.P, c) || !is_synchronized(u.P, c)) {
      throw Error("encode: counter P is not valid and synchronized");
    }
    std::uint64_t const v = counter_value(u.P, c);
    std::string         bits(u.n, '0');
    for (std::size_t i = 0; i < u.n; ++i) {
      if (c.test(u.tape[i])) {
        std::size_t b            = (i + v) % u.n;
        bits[u.n - 1 - b] = '1';
      }
    }
    return bits;
  }

  std::vector<std::string> encodings_of_trace(MachineU const& u, Trace const& t) {
    std::vector<std::string> out;
    auto push = [&](Config const& c) {
      auto e = encode(u, c);
      if (out.empty() || out.back() != e) {
        out.push_back(std::move(e));
      }
    };
    push(t.configs.front());
    for (std::size_t i = 0; i < t.length(); ++i) {
      if (t.word[i] == "T.mvl") {
        push(t.configs[i]);
      }
    }
    push(t.configs.back());
    return out;
  }

  namespace {
    // Index of the leftmost bit of the rightmost 1-block (b_index).
    std::optional<std::size_t> rightmost_block_top(std::string const& bits) {
      std::size_t const n = bits.size();
      std::size_t       i = 0;
      while (i < n && bits[n - 1 - i] == '0') {
        ++i;
      }
      if (i == n) {
        return std::nullopt;
      }
      while (i + 1 < n && bits[n - 1 - (i + 1)] == '1') {
        ++i;
      }
      return i;
    }
  }  // namespace

  EnumerationInvariants check_enumeration_invariants(MachineU const& u, Trace const& t) {
    EnumerationInvariants inv;
    std::size_t const     half = u.n / 2;
    for (std::size_t i = 0; i < t.configs.size(); ++i) {
      std::size_t w = 0;
      for (auto c : u.tape) {
        w += t.configs[i].test(c) ? 1 : 0;
      }
      if (w != half) {
        inv.tape_weight = false;
        inv.detail += "tape weight " + std::to_string(w) + " at step " + std::to_string(i) + "; ";
        break;
      }
    }

    auto zero_synced = [](CounterLayout const& l, Config const& c) {
      return is_valid(l, c) && is_synchronized(l, c) && counter_value(l, c) == 0;
    };
    auto boundary_ok = [&](Config const& c) {
      return zero_synced(u.Q, c) && zero_synced(u.Z, c) && is_valid(u.P, c)
             && is_synchronized(u.P, c);
    };
    std::string const qval = ival_name("Q", u.n - 1);
    std::string const zval = ival_name("Z", u.n / 2);
    for (std::size_t p = 0; p < t.length(); ++p) {
      if (t.word[p] != qval) {
        continue;
      }
      ++inv.eq1_factors;
      std::size_t rotations = 0;
      std::size_t start     = p;
      while (start > 0 && rotations < u.n) {
        --start;
        if (t.word[start] == "T.rotr") {
          ++rotations;
        }
      }
      std::size_t syncs = 0;
      std::size_t end   = p + 1;
      if (end < t.length() && t.word[end] == zval) {
        ++end;
      }
      while (end < t.length() && syncs < 2) {
        if (t.word[end] == "Z.sync") {
          ++syncs;
        }
        ++end;
      }
      if (rotations != u.n || syncs != 2 || !boundary_ok(t.configs[start])
          || !boundary_ok(t.configs[end])) {
        inv.eq1_boundaries = false;
        inv.detail += "equality-test factor around position " + std::to_string(p)
                      + " breaks the counter invariant; ";
      }
    }

    for (std::size_t i = 0; i < t.length(); ++i) {
      if (t.word[i] != "T.mvl") {
        continue;
      }
      ++inv.mvl_steps;
      Config const& c = t.configs[i];
      if (!is_valid(u.P, c) || !is_synchronized(u.P, c)) {
        inv.head_position = false;
        inv.detail += "P not synchronized at T.mvl position " + std::to_string(i) + "; ";
        continue;
      }
      auto top = rightmost_block_top(encode(u, c));
      if (!top || *top != counter_value(u.P, c)) {
        inv.head_position = false;
        inv.detail += "head not on the rightmost block at T.mvl position "
                      + std::to_string(i) + "; ";
      }
    }
    return inv;
  }

}  // namespace greenstack
