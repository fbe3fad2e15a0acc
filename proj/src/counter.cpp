#include "greenstack/counter.hpp"

namespace greenstack {

  namespace {
    std::string label(std::string_view name, std::string_view cell, std::size_t i) {
      return std::string(name) + "." + std::string(cell) + std::to_string(i);
    }

    std::string instr(std::string_view name, std::string_view suffix) {
      return std::string(name) + "." + std::string(suffix);
    }
  }  // namespace

  TokenMachine make_tape(std::size_t n, std::string_view name, std::string_view cell) {
    if (n == 0) {
      throw Error("make_tape: a tape needs at least one cell");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(label(name, cell, i));
    }
    TokenMachine m(std::move(labels));
    auto         st = [](std::size_t i) { return static_cast<State>(i); };

    std::vector<State> rotl(n), rotr(n), eq0(n), sync(n, kUndefined), mvl(n), mvr(n);
    for (std::size_t i = 0; i < n; ++i) {
      rotl[i] = st((i + 1) % n);
      rotr[i] = st((i + n - 1) % n);
      eq0[i]  = st(i);
      mvl[i]  = st(i);
      mvr[i]  = st(i);
    }
    eq0[0]  = kUndefined;
    sync[0] = 0;
    // c0 -> c1 with c1 blocked; for n = 1 both roles fall on c0
    mvl[0]            = st(1 % n);
    mvl[1 % n]        = kUndefined;
    mvr[0]            = st(n - 1);
    mvr[n - 1]        = kUndefined;
    m.add_instruction(instr(name, "rotl"), PartialTransformation(rotl));
    m.add_instruction(instr(name, "rotr"), PartialTransformation(rotr));
    m.add_instruction(instr(name, "eq0"), PartialTransformation(eq0));
    m.add_instruction(instr(name, "sync"), PartialTransformation(sync));
    m.add_instruction(instr(name, "mvl"), PartialTransformation(mvl));
    m.add_instruction(instr(name, "mvr"), PartialTransformation(mvr));
    return m;
  }

  std::uint64_t tape_value(TokenMachine const& m, Config const& c,
                           std::string_view name, std::size_t n,
                           std::string_view cell) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c.test(m.cell(label(name, cell, i)))) {
        v += std::uint64_t{1} << i;
      }
    }
    return v;
  }

  CounterLayout CounterLayout::locate(TokenMachine const& m, std::string_view name,
                                      std::size_t bits) {
    CounterLayout l;
    l.name = std::string(name);
    l.bits = bits;
    for (std::size_t i = 0; i < bits; ++i) {
      l.d.push_back(m.cell(label(instr(name, "S"), "d", i)));
      l.c.push_back(m.cell(label(instr(name, "T"), "c", i)));
      l.cbar.push_back(m.cell(label(instr(name, "Tbar"), "c", i)));
    }
    return l;
  }

  std::vector<std::string> const& counter_instruction_suffixes() {
    static std::vector<std::string> const s{
        "rotl", "rotr", "eq0", "eq1", "sync", "off", "inc", "dec"};
    return s;
  }

  Counter make_counter(std::size_t n, std::string_view name) {
    if (n == 0) {
      throw Error("make_counter: a counter needs at least one bit");
    }
    std::string const s  = instr(name, "S");
    std::string const t  = instr(name, "T");
    std::string const tb = instr(name, "Tbar");
    TokenMachine      m  = machine_union(
        machine_union(make_tape(n, s, "d"), make_tape(n, t, "c")),
        make_tape(n, tb, "c"));
    std::vector<std::string> raw = m.instruction_names();

    auto i = [](std::string const& tape, char const* op) { return tape + "." + op; };
    m.add_instruction(instr(name, "rotl"),
                      compose_instruction(m, {i(t, "rotl"), i(tb, "rotl"), i(s, "rotl")}));
    m.add_instruction(instr(name, "rotr"),
                      compose_instruction(m, {i(t, "rotr"), i(tb, "rotr"), i(s, "rotr")}));
    m.add_instruction(instr(name, "eq0"), m.instruction(i(t, "eq0")));
    m.add_instruction(instr(name, "eq1"), m.instruction(i(tb, "eq0")));
    m.add_instruction(instr(name, "sync"), m.instruction(i(s, "sync")));
    m.add_instruction(instr(name, "off"), m.instruction(i(s, "eq0")));

    CounterLayout      l = CounterLayout::locate(m, name, n);
    auto               id = PartialTransformation::identity(m.cell_count());
    std::vector<State> inc(id.mapping().begin(), id.mapping().end());
    std::vector<State> dec = inc;
    inc[l.cbar[0]]         = static_cast<State>(l.c[0]);
    inc[l.c[0]]            = kUndefined;
    dec[l.c[0]]            = static_cast<State>(l.cbar[0]);
    dec[l.cbar[0]]         = kUndefined;
    m.add_instruction(instr(name, "inc"), PartialTransformation(std::move(inc)));
    m.add_instruction(instr(name, "dec"), PartialTransformation(std::move(dec)));

    for (auto const& r : raw) {
      m.remove_instruction(r);
    }
    return {std::move(m), std::move(l)};
  }

  bool is_valid(CounterLayout const& l, Config const& c) {
    std::size_t heads = 0;
    for (auto i : l.d) {
      heads += c.test(i) ? 1 : 0;
    }
    if (heads != 1) {
      return false;
    }
    for (std::size_t i = 0; i < l.bits; ++i) {
      if (c.test(l.c[i]) == c.test(l.cbar[i])) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t counter_value(CounterLayout const& l, Config const& c) {
    if (!is_valid(l, c)) {
      throw Error("counter " + l.name + ": configuration is not valid");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < l.bits; ++i) {
      if (c.test(l.c[i])) {
        v += std::uint64_t{1} << i;
      }
    }
    return v;
  }

  bool is_synchronized(CounterLayout const& l, Config const& c) {
    return c.test(l.d[0]);
  }

  Config counter_config(TokenMachine const& m, CounterLayout const& l,
                        std::uint64_t value, std::size_t head) {
    Config c = m.empty_config();
    c.set(l.d.at(head));
    for (std::size_t i = 0; i < l.bits; ++i) {
      c.set(((value >> i) & 1U) != 0 ? l.c[i] : l.cbar[i]);
    }
    return c;
  }

  PartialTransformation ival(TokenMachine const& m, CounterLayout const& l,
                             std::uint64_t k) {
    if (l.bits < 64 && k >= (std::uint64_t{1} << l.bits)) {
      throw Error("ival: value " + std::to_string(k) + " does not fit in "
                  + std::to_string(l.bits) + " bits");
    }
    auto               id = PartialTransformation::identity(m.cell_count());
    std::vector<State> f(id.mapping().begin(), id.mapping().end());
    for (std::size_t i = 0; i < l.bits; ++i) {
      if (((k >> i) & 1U) != 0) {
        f[l.cbar[i]] = kUndefined;
      } else {
        f[l.c[i]] = kUndefined;
      }
    }
    return PartialTransformation(std::move(f));
  }

  std::string ival_name(std::string_view counter, std::uint64_t k) {
    return std::string(counter) + ".val" + std::to_string(k);
  }

  std::string add_ival(TokenMachine& m, CounterLayout const& l, std::uint64_t k) {
    std::string name = ival_name(l.name, k);
    m.add_instruction(name, ival(m, l, k));
    return name;
  }

  ProgramExpr program_reset(std::string_view counter) {
    using namespace program;
    auto a = [&](char const* s) { return atom(instr(counter, s)); };
    auto zero_or_dec = [&] { return alt({a("eq0"), a("dec")}); };
    return seq({a("sync"),
                star(seq({zero_or_dec(), a("rotr"), a("off")})),
                zero_or_dec(),
                a("rotr"),
                a("sync")});
  }

  namespace {
    ProgramExpr step_program(std::string_view counter, char const* carry, char const* flip) {
      using namespace program;
      auto a = [&](char const* s) { return atom(instr(counter, s)); };
      return seq({a("sync"),
                  star(seq({a(carry), a("rotr"), a("off")})),
                  a(flip),
                  star(seq({a("off"), a("rotr")})),
                  a("sync")});
    }
  }  // namespace

  ProgramExpr program_inc(std::string_view counter) {
    return step_program(counter, "dec", "inc");
  }

  ProgramExpr program_dec(std::string_view counter) {
    return step_program(counter, "inc", "dec");
  }

  std::vector<Config> all_valid_configs(Counter const& counter) {
    std::vector<Config> out;
    auto const&         l = counter.layout;
    for (std::size_t head = 0; head < l.bits; ++head) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << l.bits); ++v) {
        out.push_back(counter_config(counter.machine, l, v, head));
      }
    }
    return out;
  }

}  // namespace greenstack
