#include <random>

#include "doctest.h"
#include "greenstack/constructions.hpp"
#include "greenstack/counter.hpp"
#include "greenstack/green.hpp"
#include "greenstack/token.hpp"
#include "greenstack/verify.hpp"
#include "json.hpp"

using namespace greenstack;

namespace {
  constexpr State U = kUndefined;

  TokenMachine small_machine() {
    TokenMachine m({"x", "y", "z"});
    m.add_instruction("rot", PartialTransformation(std::vector<State>{1, 2, 0}));
    m.add_instruction("kill_x", PartialTransformation(std::vector<State>{U, 1, 2}));
    return m;
  }
}  // namespace

TEST_CASE("machine bookkeeping") {
  auto m = small_machine();
  CHECK(m.cell_count() == 3);
  CHECK(m.cell("y") == 1);
  CHECK_FALSE(m.find_cell("w").has_value());
  CHECK_THROWS_AS(m.cell("w"), Error);
  CHECK_THROWS_AS(m.add_instruction("rot", PartialTransformation::identity(3)), Error);
  CHECK_THROWS_AS(m.add_instruction("bad", PartialTransformation::identity(2)), Error);
  CHECK(m.instruction_names() == std::vector<std::string>{"rot", "kill_x"});
  m.remove_instruction("rot");
  CHECK(m.instruction_names() == std::vector<std::string>{"kill_x"});
  CHECK_THROWS_AS(m.remove_instruction("rot"), Error);
  CHECK(m.labels_of(m.config({"z", "x"})) == std::vector<std::string>{"x", "z"});
  CHECK_THROWS_AS(TokenMachine({"a", "a"}), Error);
}

TEST_CASE("apply") {
  auto m    = small_machine();
  auto full = m.config({"x", "y", "z"});
  CHECK(apply(m, full, "rot") == full);
  CHECK(apply(m, full, "kill_x").count() == 2);
  CHECK(apply(m, m.empty_config(), "rot") == m.empty_config());
  CHECK_THROWS_AS(apply(m, full, "nope"), Error);

  auto tape = make_tape(4, "T");
  auto c    = tape.config({"T.c0", "T.c2"});
  CHECK(apply(tape, c, "T.eq0").count() == 1);
}

TEST_CASE("run and computations") {
  auto m     = small_machine();
  auto start = m.config({"x"});
  auto empty = run(m, start, {});
  CHECK(empty.length() == 0);
  CHECK(empty.is_computation());
  CHECK(empty.final_config() == start);

  auto t = run(m, start, {"rot", "rot"});
  CHECK(t.is_computation());
  CHECK(t.final_config() == m.config({"z"}));
  CHECK_FALSE(run(m, start, {"kill_x"}).is_computation());
  CHECK_THROWS_AS(run(m, start, {"nope"}), Error);

  auto gm = growing_alphabet_machine(4);
  auto gt = growing_alphabet_trace(gm, 4);
  CHECK(gt.length() == 5);
  CHECK(gt.is_computation());
}

TEST_CASE("progressing and maximal") {
  auto gm = growing_alphabet_machine(4);
  auto gt = growing_alphabet_trace(gm, 4);
  CHECK(check_progressing(gm, gt));
  CHECK(check_maximal(gm, gt));

  // a single configuration where the only instruction drops the cardinality
  TokenMachine one({"a", "b"});
  one.add_instruction("drop", PartialTransformation(std::vector<State>{U, 1}));
  auto single = run(one, one.config({"a", "b"}), {});
  CHECK(check_progressing(one, single));
  CHECK(check_maximal(one, single));

  // a rotation applied n times revisits its start
  auto tape = make_tape(3, "T");
  auto back = run(tape, tape.config({"T.c0"}), {"T.rotl", "T.rotl", "T.rotl"});
  CHECK_FALSE(check_progressing(tape, back));

  // a global identity never lets a computation be maximal
  TokenMachine id({"a"});
  id.add_instruction("id", PartialTransformation::identity(1));
  CHECK_FALSE(check_maximal(id, run(id, id.config({"a"}), {})));

  auto m = small_machine();
  CHECK_THROWS_AS(check_progressing(m, run(m, m.config({"x"}), {"kill_x"})), Error);
}

TEST_CASE("union") {
  TokenMachine a({"a0", "a1"});
  a.add_instruction("s", PartialTransformation(std::vector<State>{1, 0}));
  a.add_instruction("only_a", PartialTransformation(std::vector<State>{U, 1}));
  TokenMachine b({"b0"});
  b.add_instruction("s", PartialTransformation(std::vector<State>{U}));
  b.add_instruction("only_b", PartialTransformation(std::vector<State>{0}));

  auto u = machine_union(a, b);
  CHECK(u.cell_count() == 3);
  CHECK(u.instruction("s") == PartialTransformation(std::vector<State>{1, 0, U}));
  CHECK(u.instruction("only_a") == PartialTransformation(std::vector<State>{U, 1, 2}));
  CHECK(u.instruction("only_b") == PartialTransformation(std::vector<State>{0, 1, 2}));
  CHECK(machine_union(a, TokenMachine{}) == a);
  CHECK_THROWS_AS(machine_union(a, a), Error);

  Config cells_a = u.config({"a0", "a1"});
  Config cells_b = u.config({"b0"});
  CHECK(check_submachine(u, cells_a));
  CHECK(check_submachine(u, cells_b));

  // associativity up to cell order
  TokenMachine c({"c0"});
  c.add_instruction("s", PartialTransformation(std::vector<State>{0}));
  CHECK(machine_union(machine_union(a, b), c) == machine_union(a, machine_union(b, c)));
}

TEST_CASE("compose_instruction") {
  auto m = machine_union(machine_union(make_tape(2, "A"), make_tape(2, "B")), make_tape(2, "C"));
  auto f = compose_instruction(m, {"A.rotl", "B.rotl", "C.rotl"});
  for (std::size_t i = 0; i < m.cell_count(); ++i) {
    CHECK(f[static_cast<State>(i)] != U);
  }
  CHECK(compose_instruction(m, {}) == PartialTransformation::identity(m.cell_count()));
  CHECK_THROWS_AS(compose_instruction(m, {"nope"}), Error);

  std::mt19937_64 rng(2);
  std::vector<std::string> word{"A.mvl", "B.eq0", "C.rotr", "A.rotl", "B.sync"};
  auto g = compose_instruction(m, word);
  for (int i = 0; i < 100; ++i) {
    Config c = m.empty_config();
    for (std::size_t k = 0; k < m.cell_count(); ++k) {
      if (rng() % 2 == 0) {
        c.set(k);
      }
    }
    CHECK(apply(g, c) == run(m, c, word).final_config());
  }
}

TEST_CASE("sub-machines") {
  auto ctr = make_counter(2, "N");
  CHECK(check_submachine(ctr.machine, ctr.machine.empty_config()));
  // a cardinality-preserving step is injective on R, hence on any part of R
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Config cells = ctr.machine.empty_config();
    for (std::size_t k = 0; k < ctr.machine.cell_count(); ++k) {
      if (rng() % 3 == 0) {
        cells.set(k);
      }
    }
    CHECK(check_submachine(ctr.machine, cells));
  }
  TokenMachine merge({"x", "y", "z"});
  merge.add_instruction("f", PartialTransformation(std::vector<State>{2, 2, U}));
  CHECK(check_submachine(merge, merge.config({"x"})));

  // sampled mode on a larger machine
  auto big  = machine_union(make_tape(10, "A"), make_tape(10, "B"));
  Config a  = big.empty_config();
  for (std::size_t i = 0; i < 10; ++i) {
    a.set(big.cell("A.c" + std::to_string(i)));
  }
  CHECK(check_submachine(big, a, 500, 3));
}

TEST_CASE("R-chains from maximal progressing computations") {
  auto gm    = growing_alphabet_machine(4);
  auto gt    = growing_alphabet_trace(gm, 4);
  auto words = rchain_words(gm, gt);
  REQUIRE(words.size() == 5);
  std::vector<PartialTransformation> gens;
  for (std::size_t i = 0; i < gm.instruction_count(); ++i) {
    gens.push_back(gm.instruction(i));
  }
  auto t = generate(gens);
  std::vector<std::size_t> idx;
  for (auto const& w : words) {
    idx.push_back(t.find(compose_instruction(gm, w).mapping()).value());
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    CHECK(oracle_leq(t, idx[i], idx[i - 1], Relation::R));
    CHECK_FALSE(oracle_leq(t, idx[i - 1], idx[i], Relation::R));
  }

  auto g2 = growing_alphabet_machine(2);
  CHECK(rchain_words(g2, growing_alphabet_trace(g2, 2)).size() == 1);

  auto tape = make_tape(3, "T");
  CHECK_THROWS_AS(rchain_words(tape, run(tape, tape.config({"T.c0"}), {"T.rotl"})), Error);
}

TEST_CASE("trace export") {
  auto m = small_machine();
  auto j = nlohmann::json::parse(trace_json(m, run(m, m.config({"x"}), {"rot"})));
  CHECK(j["word"] == nlohmann::json::array({"rot"}));
  CHECK(j["configs"].size() == 2);
  CHECK(j["configs"][1] == nlohmann::json::array({"y"}));
  CHECK(j["computation"] == true);
}

TEST_CASE("cardinality never increases") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    std::size_t  n = 2 + i % 5;
    TokenMachine m([&] {
      std::vector<std::string> l;
      for (std::size_t k = 0; k < n; ++k) {
        l.push_back(std::to_string(k));
      }
      return l;
    }());
    m.add_instruction("f", random_partial(rng, n, 0.3));
    m.add_instruction("g", random_partial(rng, n, 0.3));
    Config c = m.empty_config();
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 2 == 0) {
        c.set(k);
      }
    }
    auto t = run(m, c, {"f", "g", "f", "f", "g"});
    for (std::size_t k = 1; k < t.configs.size(); ++k) {
      CHECK(t.configs[k].count() <= t.configs[k - 1].count());
    }
  }
}
