// greenstack: command-line front end.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greenstack/constructions.hpp"
#include "greenstack/counter.hpp"
#include "greenstack/enumerator.hpp"
#include "greenstack/green.hpp"
#include "greenstack/machine_file.hpp"
#include "greenstack/programs.hpp"
#include "greenstack/semigroup.hpp"
#include "greenstack/token.hpp"
#include "greenstack/verify.hpp"
#include "json.hpp"

namespace gs = greenstack;

namespace {

  struct Globals {
    std::size_t   cap    = gs::kDefaultCap;
    std::uint64_t seed   = 1;
    std::size_t   budget = 0;
    std::string   dot;
    std::string   json;
    std::string   cache;
  };

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw gs::Error("cannot write '" + path + "'");
    }
    out << text;
  }

  std::size_t budget(Globals const& g) {
    return g.budget == 0 ? gs::default_budget() : g.budget;
  }

  gs::SemigroupTable table_for(Globals const& g, gs::MachineFile const& mf) {
    if (!g.cache.empty() && std::filesystem::exists(g.cache)) {
      auto t = gs::load_table(g.cache);
      if (t.generators() == mf.gens) {
        return t;
      }
      std::cerr << "cache '" << g.cache << "' belongs to other generators, regenerating\n";
    }
    auto t = gs::generate(mf.gens, g.cap);
    if (!g.cache.empty()) {
      gs::save_table(t, g.cache);
    }
    return t;
  }

  std::string plural(std::size_t n, char const* word) {
    std::string w = word;
    if (n != 1) {
      w += w.ends_with('s') ? "es" : "s";
    }
    return std::to_string(n) + " " + w;
  }

  // "a..b" or "a"
  std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
    auto num = [&](std::string_view s) {
      std::size_t v   = 0;
      auto        res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw gs::Error("bad range '" + text + "'");
      }
      return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto v = num(text);
      return {v, v};
    }
    return {num(std::string_view(text).substr(0, dots)),
            num(std::string_view(text).substr(dots + 2))};
  }

  int cmd_generate(Globals const& g, std::string const& file) {
    auto mf = gs::read_machine_file(file);
    auto t  = table_for(g, mf);
    std::size_t longest = 0;
    double      total   = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto len = t.witness_length(i);
      longest  = std::max(longest, len);
      total += static_cast<double>(len);
    }
    std::cout << plural(t.size(), "element") << "\n"
              << plural(t.generator_count(), "generator") << "\n"
              << "witness length: max " << longest << ", mean "
              << (t.size() == 0 ? 0.0 : total / static_cast<double>(t.size())) << "\n";
    if (!g.json.empty()) {
      nlohmann::ordered_json j;
      j["elements"]           = t.size();
      j["generators"]         = t.generator_count();
      j["max_witness_length"] = longest;
      write_file(g.json, j.dump(2) + "\n");
    }
    return 0;
  }

  int cmd_green(Globals const& g, std::string const& file, std::string const& relation,
                std::string const& eggbox) {
    auto mf = gs::read_machine_file(file);
    auto t  = table_for(g, mf);
    std::vector<gs::Relation> kinds;
    if (relation == "all") {
      kinds = {gs::Relation::R, gs::Relation::L, gs::Relation::J};
    } else {
      kinds = {gs::parse_relation(relation)};
    }
    nlohmann::ordered_json j;
    j["elements"] = t.size();
    for (auto kind : kinds) {
      auto s = gs::green_classes(t, kind);
      std::cout << gs::to_string(kind) << ": " << plural(s.class_count(), "class")
                << ", height " << s.height << "\n";
      j[std::string(gs::to_string(kind))] = {{"classes", s.class_count()},
                                             {"height", s.height}};
      if (!g.dot.empty() && kinds.size() == 1) {
        write_file(g.dot, gs::to_dot(t, s));
      }
    }
    if (!g.dot.empty() && kinds.size() != 1) {
      throw gs::Error("--dot needs a single relation");
    }
    if (!eggbox.empty()) {
      write_file(eggbox, gs::eggbox_json(t, gs::green_classes(t, gs::Relation::R),
                                         gs::green_classes(t, gs::Relation::L),
                                         gs::green_classes(t, gs::Relation::J)));
    }
    if (!g.json.empty()) {
      write_file(g.json, j.dump(2) + "\n");
    }
    return 0;
  }

  std::size_t positive(std::string const& text) {
    auto [lo, hi] = parse_range(text);
    if (lo != hi) {
      throw gs::Error("expected a number, got '" + text + "'");
    }
    return lo;
  }

  int cmd_construct(Globals const& g, std::string const& kind, std::string const& arg,
                    std::string const& mode) {
    gs::MachineFile mf;
    if (kind == "full") {
      mf = gs::from_generators(gs::full_transformation_generators(positive(arg)));
    } else if (kind == "blowup") {
      auto base  = gs::read_machine_file(arg);
      auto        names = base.names;
      std::string fresh = "c";
      for (int k = 1; std::find(names.begin(), names.end(), fresh) != names.end(); ++k) {
        fresh = "c" + std::to_string(k);
      }
      names.push_back(fresh);
      mf = gs::from_generators(gs::jclass_blowup(base.gens), names);
    } else if (kind == "complete") {
      mf = gs::from_automaton(gs::completion_automaton(gs::read_machine_file(arg).gens));
    } else if (kind == "subsets") {
      std::size_t n = positive(arg);
      auto        m = gs::growing_alphabet_machine(n);
      mf            = gs::from_token_machine(m, gs::growing_alphabet_trace(m, n).start);
    } else if (kind == "counter") {
      auto c = gs::make_counter(positive(arg), "N");
      mf     = gs::from_token_machine(c.machine, gs::counter_config(c.machine, c.layout, 0));
    } else if (kind == "enumerator") {
      auto cm = mode == "injective" ? gs::ControlMode::kInjective : gs::ControlMode::kAutomaton;
      auto v  = gs::build_V(positive(arg), cm);
      mf      = gs::from_token_machine(v.machine, v.initial);
    } else {
      throw gs::Error("unknown construction '" + kind + "'");
    }
    (void) g;
    std::cout << gs::emit_machine_file(mf);
    return 0;
  }

  int cmd_verify(Globals const& g, std::string const& suite, std::string const& range) {
    gs::VerifyOptions o;
    if (!range.empty()) {
      std::tie(o.lo, o.hi) = parse_range(range);
    }
    o.seed   = g.seed;
    o.budget = g.budget;
    o.cap    = g.cap;
    std::vector<std::string> suites;
    if (suite == "all") {
      suites = gs::suite_names();
    } else {
      suites = {suite};
    }
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    bool                   ok  = true;
    for (auto const& s : suites) {
      auto report = gs::run_suite(s, o);
      for (auto const& c : report.checks) {
        std::cerr << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.ok) {
          std::cerr << ": " << c.detail;
        }
        std::cerr << "\n";
      }
      ok = ok && report.ok();
      all.push_back(nlohmann::ordered_json::parse(report.to_json()));
    }
    std::string text = (suites.size() == 1 ? all.front() : all).dump(2) + "\n";
    if (g.json.empty()) {
      std::cout << text;
    } else {
      write_file(g.json, text);
    }
    return ok ? 0 : 1;
  }

  int cmd_run(Globals const& g, std::string const& file, std::string const& program,
              std::vector<std::string> const& start) {
    auto mf = gs::read_machine_file(file);
    auto m  = gs::to_token_machine(mf);
    auto c  = start.empty() ? gs::initial_config(mf, m) : m.config(start);
    auto a  = gs::compile_minimal(gs::parse_program(program), m.instruction_names());
    auto r  = gs::deterministic_run(m, c, a, budget(g));
    std::cout << gs::to_string(r.status) << " (" << r.nodes << " nodes)\n";
    if (r.status != gs::RunStatus::kFound) {
      return 1;
    }
    std::cout << "length " << r.trace.length() << "\n";
    for (std::size_t i = 0; i < r.trace.word.size(); ++i) {
      std::cout << (i == 0 ? "" : " ") << r.trace.word[i];
    }
    std::cout << "\n";
    if (!g.json.empty()) {
      write_file(g.json, gs::trace_json(m, r.trace) + "\n");
    }
    return 0;
  }

  int cmd_dump(Globals const& g, std::string const& file) {
    auto mf = gs::read_machine_file(file);
    std::size_t injective = 0, total = 0;
    for (auto const& f : mf.gens) {
      injective += f.is_injective() ? 1 : 0;
      total += f.is_total() ? 1 : 0;
    }
    std::cerr << plural(mf.state_count, mf.cells.empty() ? "state" : "cell") << ", "
              << plural(mf.gens.size(), "generator") << " (" << injective << " injective, "
              << total << " total)\n";
    std::cout << gs::emit_machine_file(mf);
    (void) g;
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's relations of transformation semigroups and token machines"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap", g.cap, "maximal number of semigroup elements");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--budget", g.budget, "search node budget (default: GREENSTACK_BUDGET or 10^7)");
  app.add_option("--dot", g.dot, "write the condensation DAG in DOT format");
  app.add_option("--json", g.json, "write a JSON report");
  app.add_option("--cache", g.cache, "binary cache of the generated semigroup");

  std::string file, relation = "all", eggbox, kind, arg, mode = "automaton", suite, range,
                    program;
  std::vector<std::string> start;

  auto* generate = app.add_subcommand("generate", "generate the semigroup of a machine file");
  generate->add_option("file", file)->required();

  auto* green = app.add_subcommand("green", "Green's classes and heights");
  green->add_option("file", file)->required();
  green->add_option("relation", relation, "R, L, J or all")->capture_default_str();
  green->add_option("--eggbox", eggbox, "write J-classes with their R- and L-classes (JSON)");

  auto* construct = app.add_subcommand(
      "construct", "emit a construction: full n | blowup FILE | complete FILE | subsets n | "
                   "counter n | enumerator n");
  construct->add_option("kind", kind)->required();
  construct->add_option("arg", arg)->required();
  construct->add_option("--mode", mode, "control unit of the enumerator: automaton or injective")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite, report as JSON");
  verify->add_option("suite", suite)->required();
  verify->add_option("range", range, "n or lo..hi");

  auto* run = app.add_subcommand("run", "execute a program on a machine file");
  run->add_option("file", file)->required();
  run->add_option("program", program)->required();
  run->add_option("--start", start, "start configuration as cell labels");

  auto* dump = app.add_subcommand("dump", "summarize and re-emit a machine file");
  dump->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*generate) {
      return cmd_generate(g, file);
    }
    if (*green) {
      return cmd_green(g, file, relation, eggbox);
    }
    if (*construct) {
      return cmd_construct(g, kind, arg, mode);
    }
    if (*verify) {
      return cmd_verify(g, suite, range);
    }
    if (*run) {
      return cmd_run(g, file, program, start);
    }
    if (*dump) {
      return cmd_dump(g, file);
    }
  } catch (gs::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
