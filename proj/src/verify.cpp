#include "greenstack/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "greenstack/constructions.hpp"
#include "greenstack/counter.hpp"
#include "greenstack/enumerator.hpp"
#include "greenstack/green.hpp"
#include "greenstack/programs.hpp"
#include "greenstack/token.hpp"

namespace greenstack {

  bool Report::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.ok; });
  }

  std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["ok"]    = ok();
    auto& arr  = j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks) {
      nlohmann::ordered_json e;
      e["name"]    = c.name;
      e["ok"]      = c.ok;
      e["seconds"] = c.seconds;
      if (!c.detail.empty()) {
        e["detail"] = c.detail;
      }
      e["counts"] = c.counts;
      arr.push_back(std::move(e));
    }
    return j.dump(2);
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"counter",  "sequence", "enumeration",
                                                "bounds",   "isolated", "opposite",
                                                "tokens",   "full",     "oracle"};
    return names;
  }

  PartialTransformation random_partial(std::mt19937_64& rng, std::size_t n,
                                       double undefined_rate) {
    std::uniform_int_distribution<State>   pick(0, static_cast<State>(n - 1));
    std::bernoulli_distribution            undefined(undefined_rate);
    std::vector<State>                     m(n);
    for (auto& q : m) {
      q = undefined(rng) ? kUndefined : pick(rng);
    }
    return PartialTransformation(std::move(m));
  }

  PartialTransformation random_partial_injection(std::mt19937_64& rng, std::size_t n) {
    std::vector<State> targets(n);
    std::iota(targets.begin(), targets.end(), State{0});
    std::shuffle(targets.begin(), targets.end(), rng);
    std::bernoulli_distribution undefined(0.3);
    for (auto& q : targets) {
      if (undefined(rng)) {
        q = kUndefined;
      }
    }
    return PartialTransformation(std::move(targets));
  }

  namespace {
    using Clock = std::chrono::steady_clock;

    void fail(Check& c, std::string const& msg) {
      if (c.ok) {
        c.detail = msg;
      }
      c.ok = false;
    }

    void expect(Check& c, bool cond, std::string const& msg) {
      if (!cond) {
        fail(c, msg);
      }
    }

    Check timed(std::string name, std::function<void(Check&)> const& body) {
      Check c;
      c.name     = std::move(name);
      auto start = Clock::now();
      try {
        body(c);
      } catch (std::exception const& e) {
        fail(c, e.what());
      }
      c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return c;
    }

    std::size_t budget_of(VerifyOptions const& o) {
      return o.budget == 0 ? default_budget() : o.budget;
    }

    std::pair<std::size_t, std::size_t> range(VerifyOptions const& o, std::size_t lo,
                                              std::size_t hi) {
      if (o.lo == 0) {
        return {lo, hi};
      }
      return {o.lo, std::max(o.lo, o.hi)};
    }

    std::string n_tag(std::size_t n) {
      return ".n" + std::to_string(n);
    }

    std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

    // Index of a generator word evaluated in the table.
    std::size_t element_of(SemigroupTable const& t, PartialTransformation const& f) {
      auto i = t.find(f.mapping());
      if (!i) {
        throw Error("element not found in table: " + f.to_string());
      }
      return *i;
    }

    // Strictly descending in <=_R by the definitional oracle.
    bool strict_r_chain(SemigroupTable const& t, std::vector<std::size_t> const& chain) {
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!oracle_leq(t, chain[i], chain[i - 1], Relation::R)
            || oracle_leq(t, chain[i - 1], chain[i], Relation::R)) {
          return false;
        }
      }
      return true;
    }

    // Elements reachable from the given generators by right multiplication
    // with the same generators.
    std::vector<std::uint32_t> generated_inside(SemigroupTable const&       t,
                                                std::vector<Letter> const&   letters) {
      Bitset                     seen(t.size());
      std::vector<std::uint32_t> out;
      for (Letter a : letters) {
        auto g = static_cast<std::uint32_t>(element_of(t, t.generators()[a]));
        if (!seen.test(g)) {
          seen.set(g);
          out.push_back(g);
        }
      }
      for (std::size_t k = 0; k < out.size(); ++k) {
        for (Letter a : letters) {
          std::uint32_t s = t.right(out[k], a);
          if (!seen.test(s)) {
            seen.set(s);
            out.push_back(s);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // ---- counter ------------------------------------------------------

    void counter_suite(VerifyOptions const& o, Report& r) {
      auto [lo, hi] = range(o, 2, 3);
      for (std::size_t n = lo; n <= hi; ++n) {
        Counter            ctr = make_counter(n, "N");
        auto const&        m   = ctr.machine;
        auto const&        l   = ctr.layout;
        auto const         all = all_valid_configs(ctr);
        auto const&        alphabet = m.instruction_names();
        Automaton const    reset    = compile_minimal(program_reset("N"), alphabet);
        Automaton const    inc      = compile_minimal(program_inc("N"), alphabet);
        Automaton const    dec      = compile_minimal(program_dec("N"), alphabet);
        std::uint64_t const top     = (std::uint64_t{1} << n) - 1;
        std::size_t const   budget  = budget_of(o);
        std::string const   tag     = n_tag(n);

        r.checks.push_back(timed("counter" + tag + ".shape", [&](Check& c) {
          expect(c, m.cell_count() == 3 * n, "cell count " + std::to_string(m.cell_count()));
          expect(c, m.instruction_count() == 8,
                 "instruction count " + std::to_string(m.instruction_count()));
          for (std::size_t i = 0; i < m.instruction_count(); ++i) {
            expect(c, m.instruction(i).is_injective(),
                   m.instruction_names()[i] + " is not injective");
          }
          c.counts["cells"]        = static_cast<std::int64_t>(m.cell_count());
          c.counts["instructions"] = static_cast<std::int64_t>(m.instruction_count());
        }));

        r.checks.push_back(timed("counter" + tag + ".valid", [&](Check& c) {
          std::int64_t pairs = 0;
          for (auto const& cfg : all) {
            for (std::size_t i = 0; i < m.instruction_count(); ++i) {
              Config next = apply(m.instruction(i), cfg);
              ++pairs;
              if (next.count() == cfg.count() && !is_valid(l, next)) {
                fail(c, alphabet[i] + " leaves the valid configurations");
              }
            }
          }
          c.counts["pairs"] = pairs;
        }));

        r.checks.push_back(timed("counter" + tag + ".reset", [&](Check& c) {
          for (auto const& cfg : all) {
            auto res = deterministic_run(m, cfg, reset, budget);
            // the leading sync needs a synchronized start
            if (!is_synchronized(l, cfg)) {
              expect(c, res.status == RunStatus::kNotFound,
                     "reset succeeds from an unsynchronized configuration");
              continue;
            }
            if (res.status != RunStatus::kFound) {
              fail(c, "no reset word from a synchronized configuration");
              continue;
            }
            auto const& end = res.trace.final_config();
            expect(c, is_valid(l, end) && counter_value(l, end) == 0 && is_synchronized(l, end),
                   "reset does not end at value 0, synchronized");
          }
          c.counts["configs"] = static_cast<std::int64_t>(all.size());
        }));

        auto step_check = [&](char const* what, Automaton const& prog, int delta,
                              std::uint64_t blocked) {
          r.checks.push_back(timed("counter" + tag + "." + what, [&](Check& c) {
            std::int64_t found = 0;
            for (auto const& cfg : all) {
              auto res      = deterministic_run(m, cfg, prog, budget);
              auto v        = counter_value(l, cfg);
              bool expected = is_synchronized(l, cfg) && v != blocked;
              if (!expected) {
                expect(c, res.status == RunStatus::kNotFound,
                       std::string(what) + " succeeds at value " + std::to_string(v));
                continue;
              }
              if (res.status != RunStatus::kFound) {
                fail(c, std::string(what) + " fails at value " + std::to_string(v));
                continue;
              }
              ++found;
              auto const& end = res.trace.final_config();
              expect(c,
                     is_valid(l, end) && is_synchronized(l, end)
                         && counter_value(l, end)
                                == static_cast<std::uint64_t>(static_cast<std::int64_t>(v)
                                                              + delta),
                     std::string(what) + " gives the wrong value from " + std::to_string(v));
            }
            c.counts["found"] = found;
          }));
        };
        step_check("inc", inc, +1, top);
        step_check("dec", dec, -1, 0);

        r.checks.push_back(timed("counter" + tag + ".deterministic", [&](Check& c) {
          std::size_t const max_len = 6 * n + 6;
          std::int64_t      runs    = 0;
          for (auto const& cfg : all) {
            for (auto const* prog : {&reset, &inc, &dec}) {
              ++runs;
              expect(c, check_deterministic_bounded(m, cfg, *prog, max_len),
                     "two cardinality-preserving words on one configuration");
            }
          }
          c.counts["runs"]    = runs;
          c.counts["max_len"] = static_cast<std::int64_t>(max_len);
        }));

        r.checks.push_back(timed("counter" + tag + ".count_up", [&](Check& c) {
          Config cfg = counter_config(m, l, 0);
          for (std::uint64_t v = 0; v < top; ++v) {
            auto res = deterministic_run(m, cfg, inc, budget);
            if (res.status != RunStatus::kFound) {
              fail(c, "increment failed at " + std::to_string(v));
              return;
            }
            cfg = res.trace.final_config();
          }
          expect(c, counter_value(l, cfg) == top, "did not reach the top value");
          expect(c, deterministic_run(m, cfg, inc, budget).status == RunStatus::kNotFound,
                 "increment past the top value");
        }));
      }
    }

    // ---- sequence -----------------------------------------------------

    void sequence_suite(VerifyOptions const& o, Report& r) {
      auto [lo, hi] = range(o, 1, 10);
      for (std::size_t n = lo; n <= hi; ++n) {
        r.checks.push_back(timed("sequence" + n_tag(n), [&](Check& c) {
          for (std::size_t m = 0; m <= n; ++m) {
            auto seq = successor_sequence(n, m);
            // independent count of weight-m strings
            std::uint64_t weight_m = 0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
              weight_m += static_cast<std::uint64_t>(std::popcount(x)) == m ? 1 : 0;
            }
            std::string const tag = "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
            expect(c, seq.size() == weight_m && seq.size() == binomial(n, m),
                   tag + ": " + std::to_string(seq.size()) + " terms");
            expect(c, std::set<std::string>(seq.begin(), seq.end()).size() == seq.size(),
                   tag + ": repeated term");
            expect(c, seq.front() == std::string(n - m, '0') + std::string(m, '1'),
                   tag + ": wrong first term");
            expect(c, seq.back() == std::string(m, '1') + std::string(n - m, '0'),
                   tag + ": wrong last term");
            for (auto const& x : seq) {
              expect(c, static_cast<std::size_t>(std::count(x.begin(), x.end(), '1')) == m,
                     tag + ": weight changes at " + x);
            }
            c.counts["terms"] += static_cast<std::int64_t>(seq.size());
          }
        }));
      }
    }

    // ---- enumeration --------------------------------------------------

    // First step at which an instruction other than the taken one keeps the
    // cardinality; empty when the trace is progressing.
    std::string progressing_witness(TokenMachine const& m, Trace const& t) {
      std::unordered_set<Config, BitsetHash> seen;
      for (std::size_t i = 0; i < t.configs.size(); ++i) {
        if (!seen.insert(t.configs[i]).second) {
          return "configuration repeats at step " + std::to_string(i);
        }
      }
      for (std::size_t i = 0; i < t.length(); ++i) {
        auto const& before = t.configs[i];
        for (std::size_t k = 0; k < m.instruction_count(); ++k) {
          if (m.instruction_names()[k] == t.word[i]) {
            continue;
          }
          if (apply(m.instruction(k), before).count() == before.count()) {
            return "step " + std::to_string(i) + " takes " + t.word[i] + " while "
                   + m.instruction_names()[k] + " also keeps the cardinality";
          }
        }
      }
      return {};
    }

    void enumeration_suite(VerifyOptions const& o, Report& r) {
      auto [lo, hi] = range(o, 4, 6);
      for (std::size_t n = lo; n <= hi; ++n) {
        if (n % 2 != 0) {
          continue;
        }
        std::string const tag = "enumeration" + n_tag(n);
        MachineV          v;
        Trace             trace;
        bool              have_trace = false;

        r.checks.push_back(timed(tag + ".build", [&](Check& c) {
          v              = build_V(n);
          auto const& u  = v.u;
          std::size_t cells = n + 3 * u.p_bits + 6 * u.bits;
          expect(c, u.machine.cell_count() == cells,
                 "U has " + std::to_string(u.machine.cell_count()) + " cells");
          expect(c, u.machine.instruction_count() == 33,
                 "U has " + std::to_string(u.machine.instruction_count()) + " instructions");
          for (std::size_t i = 0; i < u.machine.instruction_count(); ++i) {
            expect(c, u.machine.instruction(i).is_injective(),
                   u.machine.instruction_names()[i] + " is not injective");
          }
          expect(c, encode(u, u.initial) == std::string(n / 2, '0') + std::string(n / 2, '1'),
                 "initial configuration encodes " + encode(u, u.initial));
          Config tape = u.machine.empty_config();
          for (auto i : u.tape) {
            tape.set(i);
          }
          expect(c, check_submachine(u.machine, tape, 2000, o.seed),
                 "T is not a sub-machine of U");
          c.counts["U_cells"]          = static_cast<std::int64_t>(u.machine.cell_count());
          c.counts["U_instructions"]   = static_cast<std::int64_t>(u.machine.instruction_count());
          c.counts["P_bits"]           = static_cast<std::int64_t>(u.p_bits);
          c.counts["counter_bits"]     = static_cast<std::int64_t>(u.bits);
          c.counts["program_states"]   = static_cast<std::int64_t>(v.program.state_count());
          c.counts["V_cells"]          = static_cast<std::int64_t>(v.machine.cell_count());
          c.counts["initial_cardinality"] = static_cast<std::int64_t>(v.initial.count());
        }));

        r.checks.push_back(timed(tag + ".run", [&](Check& c) {
          trace      = run_enumeration(v, budget_of(o));
          have_trace = true;
          auto need  = binomial(n, n / 2);
          expect(c, trace.is_computation(), "trace is not a computation");
          expect(c, trace.length() >= need,
                 "length " + std::to_string(trace.length()) + " < " + std::to_string(need));
          c.counts["length"]   = static_cast<std::int64_t>(trace.length());
          c.counts["binomial"] = static_cast<std::int64_t>(need);
        }));
        if (!have_trace) {
          continue;
        }

        r.checks.push_back(timed(tag + ".encodings", [&](Check& c) {
          auto got  = encodings_of_trace(v.u, trace);
          auto want = successor_sequence(n, n / 2);
          expect(c, got == want, "decoded encodings differ from the successor sequence");
          c.counts["encodings"] = static_cast<std::int64_t>(got.size());
        }));

        r.checks.push_back(timed(tag + ".invariants", [&](Check& c) {
          auto inv = check_enumeration_invariants(v.u, trace);
          expect(c, inv.ok(), inv.detail);
          c.counts["eq1_factors"] = static_cast<std::int64_t>(inv.eq1_factors);
          c.counts["mvl_steps"]   = static_cast<std::int64_t>(inv.mvl_steps);
        }));

        r.checks.push_back(timed(tag + ".maximal", [&](Check& c) {
          expect(c, check_maximal(v.machine, trace), "some instruction keeps the final cardinality");
        }));

        r.checks.push_back(timed(tag + ".progressing", [&](Check& c) {
          bool ok = check_progressing(v.machine, trace);
          expect(c, ok, progressing_witness(v.machine, trace));
        }));

        r.checks.push_back(timed(tag + ".injective_control_unit", [&](Check& c) {
          SplitStats stats;
          try {
            auto cu = build_control_unit(v.program, v.u.machine.instruction_names(),
                                         kDefaultSplitBudget, &stats);
            c.counts["cells"] = static_cast<std::int64_t>(cu.cell_count());
          } catch (SplitBudgetExceeded const& e) {
            stats = e.stats();
            fail(c, e.what());
          }
          c.counts["splits"]  = static_cast<std::int64_t>(stats.splits);
          c.counts["states"]  = static_cast<std::int64_t>(stats.states);
          c.counts["pending"] = static_cast<std::int64_t>(stats.pending);
        }));
      }
    }

    // ---- bounds -------------------------------------------------------

    SemigroupTable random_semigroup(std::mt19937_64& rng, std::size_t max_degree,
                                    std::size_t cap) {
      std::uniform_int_distribution<std::size_t> degree(1, max_degree);
      std::uniform_int_distribution<std::size_t> count(1, 3);
      std::uniform_int_distribution<int>         rate(0, 3);
      std::size_t const                          n = degree(rng);
      std::vector<PartialTransformation>         gens;
      std::size_t const                          k = count(rng);
      double const                               u = 0.15 * rate(rng);
      for (std::size_t i = 0; i < k; ++i) {
        gens.push_back(random_partial(rng, n, u));
      }
      return generate(gens, cap);
    }

    void bounds_suite(VerifyOptions const& o, Report& r) {
      r.checks.push_back(timed("bounds.rheight_upper", [&](Check& c) {
        std::mt19937_64 rng(o.seed);
        std::int64_t    max_height = 0;
        std::int64_t    max_size   = 0;
        for (int trial = 0; trial < 200; ++trial) {
          auto t     = random_semigroup(rng, 5, o.cap);
          auto gs    = green_classes(t, Relation::R);
          auto limit = std::size_t{1} << t.degree();
          expect(c, gs.height <= limit,
                 "trial " + std::to_string(trial) + ": R-height " + std::to_string(gs.height)
                     + " > 2^" + std::to_string(t.degree()));
          expect(c, check_distinct_images_along_chain(t, longest_chain(gs)),
                 "trial " + std::to_string(trial) + ": repeated image along a chain");
          max_height = std::max<std::int64_t>(max_height, static_cast<std::int64_t>(gs.height));
          max_size   = std::max<std::int64_t>(max_size, static_cast<std::int64_t>(t.size()));
        }
        c.counts["semigroups"] = 200;
        c.counts["max_height"] = max_height;
        c.counts["max_size"]   = max_size;
      }));

      auto [lo, hi] = range(o, 4, 6);
      for (std::size_t n = lo; n <= hi; ++n) {
        if (n % 2 != 0) {
          continue;
        }
        r.checks.push_back(timed("bounds.growing" + n_tag(n), [&](Check& c) {
          auto m     = growing_alphabet_machine(n);
          auto trace = growing_alphabet_trace(m, n);
          auto need  = binomial(n, n / 2) - 1;
          expect(c, trace.is_computation() && trace.length() == need,
                 "canonical computation has length " + std::to_string(trace.length()));
          expect(c, check_progressing(m, trace), "canonical computation is not progressing");
          expect(c, check_maximal(m, trace), "canonical computation is not maximal");
          std::vector<PartialTransformation> gens;
          for (std::size_t i = 0; i < m.instruction_count(); ++i) {
            gens.push_back(m.instruction(i));
          }
          auto t  = generate(gens, o.cap);
          auto gs = green_classes(t, Relation::R);
          expect(c, gs.height >= need,
                 "R-height " + std::to_string(gs.height) + " < " + std::to_string(need));
          std::vector<std::size_t> chain;
          for (auto const& w : rchain_words(m, trace)) {
            chain.push_back(element_of(t, compose_instruction(m, w)));
          }
          expect(c, strict_r_chain(t, chain), "prefix words do not form a strict R-chain");
          c.counts["elements"] = static_cast<std::int64_t>(t.size());
          c.counts["r_height"] = static_cast<std::int64_t>(gs.height);
          c.counts["length"]   = static_cast<std::int64_t>(trace.length());
        }));
      }
    }

    // ---- isolated -----------------------------------------------------

    void completion_checks(Check& c, std::vector<PartialTransformation> const& base,
                           std::size_t expected_states, std::size_t min_j,
                           std::size_t cap) {
      Dfa dfa = completion_automaton(base);
      expect(c, dfa.state_count() == expected_states,
             "automaton has " + std::to_string(dfa.state_count()) + " states");
      Dfa min = minimize(dfa);
      expect(c, min.state_count() == dfa.state_count(), "completion automaton is not minimal");
      expect(c, minimize(min) == min, "minimization is not a fixed point");
      auto big = generate(transition_generators(dfa), cap);
      auto j   = green_classes(big, Relation::J);
      expect(c, j.class_count() >= min_j,
             std::to_string(j.class_count()) + " J-classes < " + std::to_string(min_j));
      std::vector<Letter> sigma;
      for (std::size_t a = 0; a < base.size(); ++a) {
        sigma.push_back(static_cast<Letter>(a));
      }
      auto sub = generated_inside(big, sigma);
      auto own = generate(base, cap);
      expect(c, sub.size() == own.size(), "embedded copy has a different size");
      expect(c, relations_agree_on_isolated_subsemigroup(big, sub),
             "relations differ on the embedded semigroup");
      c.counts["automaton_states"] = static_cast<std::int64_t>(dfa.state_count());
      c.counts["elements"]         = static_cast<std::int64_t>(big.size());
      c.counts["embedded"]         = static_cast<std::int64_t>(sub.size());
      c.counts["j_classes"]        = static_cast<std::int64_t>(j.class_count());
    }

    void isolated_suite(VerifyOptions const& o, Report& r) {
      auto const t3 = full_transformation_generators(3);

      r.checks.push_back(timed("isolated.blowup", [&](Check& c) {
        auto base    = generate(t3, o.cap);
        auto blown   = jclass_blowup(t3);
        auto t       = generate(blown, o.cap);
        auto j       = green_classes(t, Relation::J);
        expect(c, j.class_count() >= base.size(),
               std::to_string(j.class_count()) + " J-classes < " + std::to_string(base.size()));
        // c u c for every u of the base semigroup, pairwise J-incomparable
        auto const&        cl = blown.back();
        std::vector<std::size_t> cuc;
        for (std::size_t i = 0; i < base.size(); ++i) {
          PartialTransformation u = cl;
          for (Letter a : base.witness(i)) {
            u = compose(u, blown[a]);
          }
          cuc.push_back(element_of(t, compose(u, cl)));
        }
        for (std::size_t x = 0; x < cuc.size(); ++x) {
          for (std::size_t y = 0; y < cuc.size(); ++y) {
            if (x != y && oracle_leq(t, cuc[x], cuc[y], Relation::J)) {
              fail(c, "cuc elements " + std::to_string(x) + ", " + std::to_string(y)
                          + " are J-comparable");
            }
          }
        }
        c.counts["base"]      = static_cast<std::int64_t>(base.size());
        c.counts["elements"]  = static_cast<std::int64_t>(t.size());
        c.counts["j_classes"] = static_cast<std::int64_t>(j.class_count());
      }));

      r.checks.push_back(timed("isolated.completion_t3", [&](Check& c) {
        completion_checks(c, t3, 4, 3, o.cap);
      }));

      r.checks.push_back(timed("isolated.blowup_completion", [&](Check& c) {
        // 7 states, at least (7 - 4)^(7 - 4) J-classes
        completion_checks(c, jclass_blowup(t3), 7, 27, o.cap);
      }));
    }

    // ---- opposite -----------------------------------------------------

    void opposite_suite(VerifyOptions const& o, Report& r) {
      r.checks.push_back(timed("opposite.heights", [&](Check& c) {
        std::mt19937_64                            rng(o.seed);
        std::uniform_int_distribution<std::size_t> degree(1, 5);
        std::uniform_int_distribution<std::size_t> count(1, 3);
        std::int64_t                               max_height = 0;
        for (int trial = 0; trial < 100; ++trial) {
          std::size_t const                  n = degree(rng);
          std::vector<PartialTransformation> gens;
          for (std::size_t i = count(rng); i > 0; --i) {
            gens.push_back(random_partial_injection(rng, n));
          }
          auto s  = generate(gens, o.cap);
          auto op = generate(opposite(gens), o.cap);
          auto hl = green_classes(s, Relation::L).height;
          auto hr = green_classes(op, Relation::R).height;
          expect(c, s.size() == op.size(), "trial " + std::to_string(trial) + ": sizes differ");
          expect(c, hl == hr,
                 "trial " + std::to_string(trial) + ": L-height " + std::to_string(hl)
                     + " vs opposite R-height " + std::to_string(hr));
          expect(c,
                 green_classes(s, Relation::R).height == green_classes(op, Relation::L).height,
                 "trial " + std::to_string(trial) + ": R-height differs from opposite L-height");
          max_height = std::max<std::int64_t>(max_height, static_cast<std::int64_t>(hl));
        }
        c.counts["semigroups"] = 100;
        c.counts["max_height"] = max_height;
      }));
    }

    // ---- tokens -------------------------------------------------------

    // Longest maximal progressing computation over all start configurations.
    // Progressing forces the unique cardinality-preserving instruction at
    // every step, so each start has at most one candidate.
    struct TokenScan {
      std::size_t longest = 0;
      Trace       witness;
      std::size_t found   = 0;
    };

    TokenScan scan_computations(TokenMachine const& m) {
      TokenScan   out;
      std::size_t cells = m.cell_count();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
        Config start = m.empty_config();
        for (std::size_t i = 0; i < cells; ++i) {
          if ((mask >> i) & 1U) {
            start.set(i);
          }
        }
        std::unordered_set<Config, BitsetHash> seen{start};
        std::vector<std::string>               word;
        Config                                 cur = start;
        while (true) {
          std::size_t keep = 0, taken = 0;
          Config      next;
          for (std::size_t k = 0; k < m.instruction_count(); ++k) {
            Config img = apply(m.instruction(k), cur);
            if (img.count() == cur.count()) {
              ++keep;
              taken = k;
              next  = std::move(img);
            }
          }
          if (keep == 0) {
            ++out.found;
            if (word.size() > out.longest || out.witness.configs.empty()) {
              out.longest = word.size();
              out.witness = run(m, start, word);
            }
            break;
          }
          if (keep > 1 || !seen.insert(next).second) {
            break;
          }
          word.push_back(m.instruction_names()[taken]);
          cur = std::move(next);
        }
      }
      return out;
    }

    void tokens_check(Check& c, TokenMachine const& m, std::size_t cap, bool oracle) {
      auto scan = scan_computations(m);
      if (scan.found == 0) {
        return;
      }
      std::vector<PartialTransformation> gens;
      for (std::size_t i = 0; i < m.instruction_count(); ++i) {
        gens.push_back(m.instruction(i));
      }
      auto t = generate(gens, cap);
      auto h = green_classes(t, Relation::R).height;
      c.counts["computations"] += static_cast<std::int64_t>(scan.found);
      c.counts["longest"] = std::max<std::int64_t>(c.counts["longest"],
                                                   static_cast<std::int64_t>(scan.longest));
      if (scan.longest > h) {
        fail(c, "computation of length " + std::to_string(scan.longest) + " but R-height "
                    + std::to_string(h));
        return;
      }
      if (!check_progressing(m, scan.witness) || !check_maximal(m, scan.witness)) {
        fail(c, "scanned computation rejected by the progressing/maximal checks");
        return;
      }
      if (oracle && scan.longest > 0) {
        std::vector<std::size_t> chain;
        for (auto const& w : rchain_words(m, scan.witness)) {
          chain.push_back(element_of(t, compose_instruction(m, w)));
        }
        expect(c, strict_r_chain(t, chain), "prefix words do not form a strict R-chain");
        ++c.counts["oracle_chains"];
      }
    }

    TokenMachine machine_of(std::size_t cells, std::vector<PartialTransformation> gens) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < cells; ++i) {
        labels.push_back(std::to_string(i));
      }
      TokenMachine m(std::move(labels));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        m.add_instruction("i" + std::to_string(i + 1), std::move(gens[i]));
      }
      return m;
    }

    // Every partial transformation on n points.
    std::vector<PartialTransformation> all_partial(std::size_t n) {
      std::vector<PartialTransformation> out;
      std::vector<State>                 m(n, 0);
      auto const                         base = static_cast<State>(n + 1);
      std::uint64_t                      total = ipow(base, n);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t q = 0; q < n; ++q) {
          auto v = static_cast<State>(x % base);
          m[q]   = v == n ? kUndefined : v;
          x /= base;
        }
        out.emplace_back(m);
      }
      return out;
    }

    void tokens_suite(VerifyOptions const& o, Report& r) {
      r.checks.push_back(timed("tokens.exhaustive", [&](Check& c) {
        // every machine up to instruction order: 2 or 3 cells with up to 3
        // instructions, 4 cells with up to 2, 5 or 6 cells with 1
        for (auto [cells, limit] : {std::pair<std::size_t, std::size_t>{2, 3},
                                    {3, 3}, {4, 2}, {5, 1}, {6, 1}}) {
          auto const maps = all_partial(cells);
          for (std::size_t k = 1; k <= limit; ++k) {
            std::vector<std::size_t> idx(k, 0);
            while (true) {
              std::vector<PartialTransformation> gens;
              for (auto i : idx) {
                gens.push_back(maps[i]);
              }
              tokens_check(c, machine_of(cells, std::move(gens)), o.cap, false);
              ++c.counts["machines"];
              // next non-decreasing index tuple
              std::size_t j = k;
              while (j > 0 && idx[j - 1] == maps.size() - 1) {
                --j;
              }
              if (j == 0) {
                break;
              }
              ++idx[j - 1];
              std::fill(idx.begin() + static_cast<std::ptrdiff_t>(j), idx.end(), idx[j - 1]);
            }
          }
        }
      }));

      r.checks.push_back(timed("tokens.sampled", [&](Check& c) {
        std::mt19937_64                            rng(o.seed);
        std::uniform_int_distribution<std::size_t> cells(4, 6);
        std::uniform_int_distribution<std::size_t> count(1, 3);
        std::bernoulli_distribution                injective(0.5);
        for (int trial = 0; trial < 1500; ++trial) {
          std::size_t const                  n = cells(rng);
          std::vector<PartialTransformation> gens;
          for (std::size_t i = count(rng); i > 0; --i) {
            gens.push_back(injective(rng) ? random_partial_injection(rng, n)
                                          : random_partial(rng, n, 0.3));
          }
          tokens_check(c, machine_of(n, std::move(gens)), o.cap, trial % 10 == 0);
          ++c.counts["machines"];
        }
      }));
    }

    // ---- full and oracle ----------------------------------------------

    void full_suite(VerifyOptions const& o, Report& r) {
      auto [lo, hi] = range(o, 2, 4);
      for (std::size_t n = lo; n <= hi; ++n) {
        r.checks.push_back(timed("full" + n_tag(n), [&](Check& c) {
          auto t = generate(full_transformation_generators(n), o.cap);
          expect(c, t.size() == ipow(n, n),
                 std::to_string(t.size()) + " elements, expected " + std::to_string(ipow(n, n)));
          c.counts["elements"] = static_cast<std::int64_t>(t.size());
        }));
      }
    }

    void oracle_suite(VerifyOptions const& o, Report& r) {
      r.checks.push_back(timed("oracle.classes", [&](Check& c) {
        auto corpus = oracle_corpus(o.seed, 3000);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
          auto const&         t = corpus[k];
          std::string const   tag = "table " + std::to_string(k) + " (" + std::to_string(t.size())
                                  + " elements)";
          std::vector<GreenStructure> gs;
          std::vector<std::vector<Bitset>> ideals;
          for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
            gs.push_back(green_classes(t, kind));
            ideals.push_back(oracle_ideals(t, kind));
            auto const& g = gs.back();
            auto const& id = ideals.back();
            std::string const name = tag + " " + std::string(to_string(kind));
            expect(c, classes_from_ideals(id) == g.class_of, name + ": classes differ");
            // preorder: s <= t iff class(s) is below class(t)
            std::vector<Bitset> below(g.class_count());
            for (std::uint32_t x = 0; x < g.class_count(); ++x) {
              below[x] = classes_below(g, x);
            }
            for (std::size_t a = 0; a < t.size(); ++a) {
              for (std::size_t b = 0; b < t.size(); ++b) {
                bool scc = below[g.class_of[b]].test(g.class_of[a]);
                if (scc != id[b].test(a)) {
                  fail(c, name + ": preorder differs at (" + std::to_string(a) + ", "
                              + std::to_string(b) + ")");
                  break;
                }
              }
            }
          }
          // s <_R t or s <_L t implies s <_J t
          for (std::size_t a = 0; a < t.size(); ++a) {
            for (std::size_t b = 0; b < t.size(); ++b) {
              for (int side : {0, 1}) {
                bool strict = ideals[side][b].test(a) && !ideals[side][a].test(b);
                if (strict && !(ideals[2][b].test(a) && !ideals[2][a].test(b))) {
                  fail(c, tag + ": strict one-sided order without strict J order");
                }
              }
            }
          }
          // every R-class and L-class lies inside one J-class
          for (int side : {0, 1}) {
            for (std::size_t a = 0; a < t.size(); ++a) {
              auto rep = gs[side].representative[gs[side].class_of[a]];
              expect(c, gs[2].class_of[a] == gs[2].class_of[rep],
                     tag + ": one-sided class split across J-classes");
            }
          }
          ++c.counts["tables"];
          c.counts["elements"] += static_cast<std::int64_t>(t.size());
        }
      }));
    }

  }  // namespace

  std::vector<SemigroupTable> oracle_corpus(std::uint64_t seed, std::size_t max_size) {
    std::vector<SemigroupTable> out;
    auto add = [&](std::vector<PartialTransformation> const& gens) {
      try {
        out.push_back(generate(gens, max_size));
      } catch (CapExceeded const&) {
      }
    };
    for (std::size_t n = 2; n <= 4; ++n) {
      add(full_transformation_generators(n));
    }
    add({PartialTransformation::identity(3)});
    add({PartialTransformation(std::vector<State>{0, 0, 0})});
    add(jclass_blowup(full_transformation_generators(2)));
    add(jclass_blowup(full_transformation_generators(3)));
    add(transition_generators(completion_automaton(full_transformation_generators(3))));
    for (std::size_t n : {2, 4, 6}) {
      auto                               m = growing_alphabet_machine(n);
      std::vector<PartialTransformation> gens;
      for (std::size_t i = 0; i < m.instruction_count(); ++i) {
        gens.push_back(m.instruction(i));
      }
      add(gens);
    }
    {
      auto                               ctr = make_counter(1, "N");
      std::vector<PartialTransformation> gens;
      for (std::size_t i = 0; i < ctr.machine.instruction_count(); ++i) {
        gens.push_back(ctr.machine.instruction(i));
      }
      add(gens);
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> degree(1, 5);
    std::uniform_int_distribution<std::size_t> count(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t const                  n = degree(rng);
      std::vector<PartialTransformation> gens;
      for (std::size_t i = count(rng); i > 0; --i) {
        gens.push_back(trial % 3 == 0 ? random_partial_injection(rng, n)
                                      : random_partial(rng, n, 0.25));
      }
      add(gens);
      if (trial % 3 == 0) {
        add(opposite(gens));
      }
    }
    return out;
  }

  Report run_suite(std::string_view suite, VerifyOptions const& opts) {
    Report r;
    r.suite = std::string(suite);
    if (suite == "counter") {
      counter_suite(opts, r);
    } else if (suite == "sequence") {
      sequence_suite(opts, r);
    } else if (suite == "enumeration") {
      enumeration_suite(opts, r);
    } else if (suite == "bounds") {
      bounds_suite(opts, r);
    } else if (suite == "isolated") {
      isolated_suite(opts, r);
    } else if (suite == "opposite") {
      opposite_suite(opts, r);
    } else if (suite == "tokens") {
      tokens_suite(opts, r);
    } else if (suite == "full") {
      full_suite(opts, r);
    } else if (suite == "oracle") {
      oracle_suite(opts, r);
    } else {
      throw Error("unknown suite '" + std::string(suite) + "'");
    }
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](Check const& a, Check const& b) { return a.name < b.name; });
    return r;
  }

}  // namespace greenstack
