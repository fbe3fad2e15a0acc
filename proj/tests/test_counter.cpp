#include "doctest.h"
#include "greenstack/counter.hpp"
#include "greenstack/programs.hpp"

using namespace greenstack;

namespace {
  constexpr State U = kUndefined;

  struct Langs {
    Automaton reset, inc, dec;
  };

  Langs langs(Counter const& c) {
    auto const& names = c.machine.instruction_names();
    return {compile_minimal(program_reset(c.layout.name), names),
            compile_minimal(program_inc(c.layout.name), names),
            compile_minimal(program_dec(c.layout.name), names)};
  }
}  // namespace

TEST_CASE("tapes") {
  auto t1 = make_tape(1, "T");
  CHECK(t1.instruction("T.rotl") == PartialTransformation::identity(1));
  CHECK(t1.instruction("T.rotr") == PartialTransformation::identity(1));

  auto t3 = make_tape(3, "T");
  CHECK(t3.instruction("T.rotl") == PartialTransformation(std::vector<State>{1, 2, 0}));
  CHECK(t3.instruction("T.eq0") == PartialTransformation(std::vector<State>{U, 1, 2}));
  CHECK(t3.instruction("T.sync") == PartialTransformation(std::vector<State>{0, U, U}));
  CHECK(t3.instruction("T.mvl") == PartialTransformation(std::vector<State>{1, U, 2}));
  CHECK(t3.instruction("T.mvr") == PartialTransformation(std::vector<State>{2, 1, U}));
  CHECK(t3.cell_labels() == std::vector<std::string>{"T.c0", "T.c1", "T.c2"});

  for (std::size_t n = 1; n <= 8; ++n) {
    auto t = make_tape(n, "T");
    CHECK(compose(t.instruction("T.rotl"), t.instruction("T.rotr"))
          == PartialTransformation::identity(n));
    CHECK(t.instruction("T.mvl").is_injective());
    CHECK(t.instruction("T.mvr").is_injective());
  }
  CHECK_THROWS_AS(make_tape(0, "T"), Error);
}

TEST_CASE("tape values") {
  auto t = make_tape(4, "T");
  CHECK(tape_value(t, t.empty_config(), "T", 4) == 0);
  CHECK(tape_value(t, t.config({"T.c0", "T.c2"}), "T", 4) == 5);
  CHECK(tape_value(t, t.config({"T.c0", "T.c1", "T.c2", "T.c3"}), "T", 4) == 15);
}

TEST_CASE("counter shape") {
  auto c = make_counter(2, "N");
  CHECK(c.machine.cell_count() == 6);
  CHECK(c.machine.instruction_count() == 8);
  std::vector<std::string> expected;
  for (auto const& s : counter_instruction_suffixes()) {
    expected.push_back("N." + s);
  }
  CHECK(c.machine.instruction_names() == expected);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(c.machine.instruction(i).is_injective());
  }
  CHECK_THROWS_AS(make_counter(0, "N"), Error);
}

TEST_CASE("inc and dec undo each other") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto        c   = make_counter(n, "N");
    auto const& m   = c.machine;
    auto        ind = compose(m.instruction("N.inc"), m.instruction("N.dec"));
    auto        din = compose(m.instruction("N.dec"), m.instruction("N.inc"));
    for (auto const& cfg : all_valid_configs(c)) {
      if (cfg.test(c.layout.cbar[0])) {
        CHECK(apply(ind, cfg) == cfg);
      } else {
        CHECK(apply(din, cfg) == cfg);
      }
    }
  }
}

TEST_CASE("validity, values, synchronization") {
  auto c = make_counter(2, "N");
  auto m = c.machine;
  CHECK(is_valid(c.layout, m.config({"N.S.d0", "N.Tbar.c0", "N.Tbar.c1"})));
  CHECK_FALSE(is_valid(c.layout, m.config({"N.S.d0", "N.T.c0", "N.Tbar.c0", "N.Tbar.c1"})));
  CHECK_FALSE(is_valid(c.layout, m.config({"N.Tbar.c0", "N.Tbar.c1"})));

  auto v1 = m.config({"N.S.d0", "N.T.c0", "N.Tbar.c1"});
  CHECK(counter_value(c.layout, v1) == 1);
  CHECK(is_synchronized(c.layout, v1));
  auto v2 = m.config({"N.S.d1", "N.T.c1", "N.Tbar.c0"});
  CHECK(counter_value(c.layout, v2) == 2);
  CHECK_FALSE(is_synchronized(c.layout, v2));
  CHECK_THROWS_AS(counter_value(c.layout, m.empty_config()), Error);
  CHECK(counter_config(m, c.layout, 2, 1) == v2);
}

TEST_CASE("valid configurations stay valid") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto c = make_counter(n, "N");
    for (auto const& cfg : all_valid_configs(c)) {
      for (std::size_t i = 0; i < c.machine.instruction_count(); ++i) {
        auto next = apply(c.machine.instruction(i), cfg);
        if (next.count() == cfg.count()) {
          CHECK(is_valid(c.layout, next));
        }
      }
    }
  }
}

TEST_CASE("value assertions") {
  auto c = make_counter(2, "N");
  auto m = c.machine;
  for (std::uint64_t k = 0; k < 4; ++k) {
    auto f = ival(m, c.layout, k);
    CHECK(f.is_injective());
    for (auto const& cfg : all_valid_configs(c)) {
      auto img = apply(f, cfg);
      if (counter_value(c.layout, cfg) == k) {
        CHECK(img == cfg);
      } else {
        CHECK(img.count() < cfg.count());
      }
    }
    for (auto d : c.layout.d) {
      CHECK(f[static_cast<State>(d)] == d);
    }
  }
  CHECK_THROWS_AS(ival(m, c.layout, 4), Error);
  CHECK(ival_name("P", 3) == "P.val3");
  std::string name = add_ival(m, c.layout, 0);
  CHECK(name == "N.val0");
  CHECK(apply(m, counter_config(m, c.layout, 0), name) == counter_config(m, c.layout, 0));
}

TEST_CASE("reset, inc and dec semantics") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto       c   = make_counter(n, "N");
    auto       l   = langs(c);
    auto const top = (std::uint64_t{1} << n) - 1;
    for (auto const& cfg : all_valid_configs(c)) {
      auto v    = counter_value(c.layout, cfg);
      bool sync = is_synchronized(c.layout, cfg);

      auto r = deterministic_run(c.machine, cfg, l.reset);
      if (sync) {
        REQUIRE(r.status == RunStatus::kFound);
        CHECK(counter_value(c.layout, r.trace.final_config()) == 0);
        CHECK(is_synchronized(c.layout, r.trace.final_config()));
      } else {
        CHECK(r.status == RunStatus::kNotFound);
      }

      auto i = deterministic_run(c.machine, cfg, l.inc);
      if (sync && v < top) {
        REQUIRE(i.status == RunStatus::kFound);
        CHECK(counter_value(c.layout, i.trace.final_config()) == v + 1);
        CHECK(is_synchronized(c.layout, i.trace.final_config()));
      } else {
        CHECK(i.status == RunStatus::kNotFound);
      }

      auto d = deterministic_run(c.machine, cfg, l.dec);
      if (sync && v > 0) {
        REQUIRE(d.status == RunStatus::kFound);
        CHECK(counter_value(c.layout, d.trace.final_config()) == v - 1);
        CHECK(is_synchronized(c.layout, d.trace.final_config()));
      } else {
        CHECK(d.status == RunStatus::kNotFound);
      }
    }
  }
}

TEST_CASE("counter languages are deterministic on valid configurations") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto c = make_counter(n, "N");
    auto l = langs(c);
    for (auto const& cfg : all_valid_configs(c)) {
      CHECK(check_deterministic_bounded(c.machine, cfg, l.reset, 6 * n + 6));
      CHECK(check_deterministic_bounded(c.machine, cfg, l.inc, 6 * n + 6));
      CHECK(check_deterministic_bounded(c.machine, cfg, l.dec, 6 * n + 6));
    }
  }
}

TEST_CASE("counting up to the top value") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto c   = make_counter(n, "N");
    auto l   = langs(c);
    auto cfg = counter_config(c.machine, c.layout, 0);
    auto top = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t v = 0; v < top; ++v) {
      auto r = deterministic_run(c.machine, cfg, l.inc);
      REQUIRE(r.status == RunStatus::kFound);
      cfg = r.trace.final_config();
    }
    CHECK(counter_value(c.layout, cfg) == top);
    CHECK(deterministic_run(c.machine, cfg, l.inc).status == RunStatus::kNotFound);
  }
}

TEST_CASE("all valid configurations") {
  auto c   = make_counter(3, "N");
  auto all = all_valid_configs(c);
  CHECK(all.size() == 3 * 8);
  for (auto const& cfg : all) {
    CHECK(is_valid(c.layout, cfg));
  }
}
