#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "doctest.h"
#include "greenstack/constructions.hpp"
#include "greenstack/semigroup.hpp"
#include "greenstack/verify.hpp"

using namespace greenstack;

namespace {
  std::set<std::vector<State>> element_set(SemigroupTable const& t) {
    std::set<std::vector<State>> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto e = t.element(i);
      out.emplace(e.begin(), e.end());
    }
    return out;
  }

  // Closure by repeated squaring of the whole set, independent of generate().
  std::set<std::vector<State>> naive_closure(std::vector<PartialTransformation> const& gens) {
    std::set<std::vector<State>> s;
    for (auto const& g : gens) {
      s.emplace(g.mapping().begin(), g.mapping().end());
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<State>> cur(s.begin(), s.end());
      for (auto const& a : cur) {
        for (auto const& b : cur) {
          auto p = compose(PartialTransformation(a), PartialTransformation(b));
          grew |= s.emplace(p.mapping().begin(), p.mapping().end()).second;
        }
      }
    }
    return s;
  }
}  // namespace

TEST_CASE("closure sizes") {
  CHECK(generate(full_transformation_generators(3)).size() == 27);
  CHECK(generate({PartialTransformation::identity(3)}).size() == 1);
  CHECK(generate({PartialTransformation(std::vector<State>{1, 2, 0})}).size() == 3);
  CHECK(generate(full_transformation_generators(2)).size() == 4);
  CHECK(generate(full_transformation_generators(4)).size() == 256);
}

TEST_CASE("closure agrees with a naive fixed point") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    std::size_t                        n = 1 + i % 4;
    std::vector<PartialTransformation> gens;
    for (int k = 0; k < 1 + i % 3; ++k) {
      gens.push_back(random_partial(rng, n, 0.25));
    }
    CHECK(element_set(generate(gens)) == naive_closure(gens));
  }
}

TEST_CASE("table invariants: distinct, closed, witnesses evaluate") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    std::size_t                        n = 2 + i % 4;
    std::vector<PartialTransformation> gens;
    for (int k = 0; k < 1 + i % 3; ++k) {
      gens.push_back(random_partial(rng, n, 0.2));
    }
    auto t = generate(gens);
    CHECK(element_set(t).size() == t.size());
    for (std::size_t s = 0; s < t.size(); ++s) {
      auto e = t.transformation(s);
      for (Letter a = 0; a < gens.size(); ++a) {
        CHECK(t.transformation(t.right(s, a)) == compose(e, gens[a]));
        CHECK(t.transformation(t.left(s, a)) == compose(gens[a], e));
      }
      auto w = t.witness(s);
      REQUIRE(!w.empty());
      CHECK(w.size() == t.witness_length(s));
      auto v = gens[w[0]];
      for (std::size_t k = 1; k < w.size(); ++k) {
        v = compose(v, gens[w[k]]);
      }
      CHECK(v == e);
    }
    for (std::size_t s = 0; s < std::min<std::size_t>(t.size(), 20); ++s) {
      for (std::size_t u = 0; u < std::min<std::size_t>(t.size(), 20); ++u) {
        CHECK(t.transformation(t.multiply(s, u))
              == compose(t.transformation(s), t.transformation(u)));
      }
    }
  }
}

TEST_CASE("generation does not depend on generator order") {
  auto gens = full_transformation_generators(3);
  auto base = element_set(generate(gens));
  std::sort(gens.begin(), gens.end());
  do {
    CHECK(element_set(generate(gens)) == base);
  } while (std::next_permutation(gens.begin(), gens.end()));
}

TEST_CASE("cap overflow is an error") {
  try {
    generate(full_transformation_generators(4), 100);
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& e) {
    CHECK(e.cap() == 100);
    CHECK(e.partial_count() >= 100);
  }
}

TEST_CASE("identity is adjoined virtually") {
  auto cyc  = generate({PartialTransformation(std::vector<State>{1, 2, 0})});
  auto view = adjoin_identity_virtually(cyc);
  CHECK_FALSE(view.identity_is_adjoined());
  CHECK(view.size() == cyc.size());

  auto cst   = generate({PartialTransformation(std::vector<State>{0, 0})});
  auto view2 = adjoin_identity_virtually(cst);
  CHECK(view2.identity_is_adjoined());
  CHECK(view2.size() == 2);
  CHECK(view2.multiply(view2.identity_index(), 0) == 0);
  CHECK(view2.multiply(0, view2.identity_index()) == 0);
  CHECK(view2.multiply(view2.identity_index(), view2.identity_index())
        == view2.identity_index());
}

TEST_CASE("binary cache round trip") {
  auto        t    = generate(full_transformation_generators(3));
  std::string path = "greenstack_test_cache.bin";
  save_table(t, path);
  auto back = load_table(path);
  std::remove(path.c_str());
  REQUIRE(back.size() == t.size());
  CHECK(back.generators() == t.generators());
  for (std::size_t s = 0; s < t.size(); ++s) {
    CHECK(back.transformation(s) == t.transformation(s));
    CHECK(back.witness(s) == t.witness(s));
    for (Letter a = 0; a < t.generator_count(); ++a) {
      CHECK(back.right(s, a) == t.right(s, a));
      CHECK(back.left(s, a) == t.left(s, a));
    }
  }
  CHECK_THROWS_AS(load_table("does-not-exist.bin"), Error);
}
