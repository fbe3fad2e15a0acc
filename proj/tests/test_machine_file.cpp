#include "doctest.h"
#include "greenstack/constructions.hpp"
#include "greenstack/counter.hpp"
#include "greenstack/machine_file.hpp"

using namespace greenstack;

namespace {
  constexpr State U = kUndefined;

  std::size_t error_line(std::string_view text) {
    try {
      parse_machine_file(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  }
}  // namespace

TEST_CASE("parsing a states file") {
  auto mf = parse_machine_file(
      "# comment\n"
      "states 3\n"
      "gen a: 1 2 0   # trailing comment\n"
      "gen b: - 0 2\n"
      "initial 0\n"
      "final 2\n");
  CHECK(mf.state_count == 3);
  CHECK(mf.cells.empty());
  CHECK(mf.names == std::vector<std::string>{"a", "b"});
  CHECK(mf.gens[0] == PartialTransformation(std::vector<State>{1, 2, 0}));
  CHECK(mf.gens[1] == PartialTransformation(std::vector<State>{U, 0, 2}));
  CHECK(mf.initial == std::vector<State>{0});
  CHECK(mf.final == std::vector<State>{2});

  auto dfa = to_automaton(mf);
  CHECK(dfa.state_count() == 3);
  CHECK(accepts(dfa, std::vector<std::string>{"a", "a"}));
  CHECK_FALSE(accepts(dfa, std::vector<std::string>{"a"}));
  CHECK(parse_machine_file(emit_machine_file(mf)) == mf);
}

TEST_CASE("parsing a cells file") {
  auto mf = parse_machine_file(
      "cells x y z\n"
      "gen rot: y z x\n"
      "gen kill: - 1 z\n"
      "initial x z\n");
  CHECK(mf.state_count == 3);
  CHECK(mf.gens[0] == PartialTransformation(std::vector<State>{1, 2, 0}));
  CHECK(mf.gens[1] == PartialTransformation(std::vector<State>{U, 1, 2}));
  auto m = to_token_machine(mf);
  CHECK(m.cell("z") == 2);
  CHECK(initial_config(mf, m) == m.config({"x", "z"}));
  CHECK(m.instruction("rot") == mf.gens[0]);
}

TEST_CASE("parse errors carry the line") {
  CHECK(error_line("states 3\ngen a: 5 0 1\n") == 2);
  CHECK(error_line("states 3\ngen a: 0 1\n") == 2);
  CHECK(error_line("states 2\nstates 2\n") == 2);
  CHECK(error_line("states 2\ngen a: 0 1\ngen a: 1 0\n") == 3);
  CHECK(error_line("gen a: 0\n") == 1);
  CHECK(error_line("states 2\n\nfrobnicate\n") == 3);
  CHECK(error_line("cells x y\ngen a: x w\n") == 2);
  CHECK(error_line("cells x x\n") == 1);
  CHECK(error_line("states two\n") == 1);
  CHECK_THROWS_AS(read_machine_file("does-not-exist.txt"), Error);
}

TEST_CASE("automaton conversion needs one initial state") {
  auto none = parse_machine_file("states 2\ngen a: 1 0\n");
  CHECK_THROWS_AS(to_automaton(none), Error);
  auto two = parse_machine_file("states 2\ngen a: 1 0\ninitial 0 1\n");
  CHECK_THROWS_AS(to_automaton(two), Error);
  auto no_final = to_automaton(parse_machine_file("states 2\ngen a: 1 0\ninitial 0\n"));
  CHECK_FALSE(accepts(no_final, std::vector<std::string>{"a"}));
}

TEST_CASE("round trips") {
  auto ctr = make_counter(2, "N");
  auto cfg = counter_config(ctr.machine, ctr.layout, 2, 1);
  auto mf  = from_token_machine(ctr.machine, cfg);
  auto back = parse_machine_file(emit_machine_file(mf));
  CHECK(back == mf);
  auto m = to_token_machine(back);
  CHECK(m == ctr.machine);
  CHECK(initial_config(back, m) == cfg);

  auto gm = growing_alphabet_machine(4);
  CHECK(to_token_machine(parse_machine_file(emit_machine_file(from_token_machine(gm)))) == gm);

  auto dfa = completion_automaton(full_transformation_generators(3));
  CHECK(to_automaton(parse_machine_file(emit_machine_file(from_automaton(dfa)))) == dfa);

  auto gens = full_transformation_generators(3);
  auto g    = from_generators(gens);
  CHECK(g.names == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_machine_file(emit_machine_file(g)).gens == gens);
  CHECK(from_generators(gens, {"x", "y", "z"}).names == std::vector<std::string>{"x", "y", "z"});
}
