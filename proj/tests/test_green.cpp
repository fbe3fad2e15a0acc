#include <random>

#include "doctest.h"
#include "greenstack/constructions.hpp"
#include "greenstack/green.hpp"
#include "greenstack/verify.hpp"
#include "json.hpp"

using namespace greenstack;

namespace {
  constexpr State U = kUndefined;

  SemigroupTable random_table(std::mt19937_64& rng, std::size_t n) {
    std::vector<PartialTransformation> gens;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      gens.push_back(random_partial(rng, n, 0.25));
    }
    return generate(gens);
  }

  std::size_t index_of(SemigroupTable const& t, std::vector<State> const& m) {
    auto i = t.find(m);
    REQUIRE(i.has_value());
    return *i;
  }

  // Image size of every element: J-classes of T_n are the rank levels.
  std::size_t distinct_ranks(SemigroupTable const& t) {
    std::vector<bool> seen(t.degree() + 1, false);
    std::size_t       out = 0;
    for (std::size_t s = 0; s < t.size(); ++s) {
      auto r = t.transformation(s).rank();
      if (!seen[r]) {
        seen[r] = true;
        ++out;
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("classes of the full transformation semigroup on 3 states") {
  auto t = generate(full_transformation_generators(3));
  auto j = green_classes(t, Relation::J);
  CHECK(j.class_count() == 3);
  CHECK(j.class_count() == distinct_ranks(t));
  CHECK(j.height == 3);
  for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
    CHECK(classes_from_ideals(oracle_ideals(t, kind)) == green_classes(t, kind).class_of);
  }
  auto id  = index_of(t, {0, 1, 2});
  auto cst = index_of(t, {0, 0, 0});
  CHECK(oracle_leq(t, cst, id, Relation::J));
  CHECK_FALSE(oracle_leq(t, id, cst, Relation::J));
}

TEST_CASE("single element semigroup") {
  auto t = generate({PartialTransformation(std::vector<State>{1, 1})});
  for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
    auto g = green_classes(t, kind);
    CHECK(g.class_count() == 1);
    CHECK(height(g) == 1);
    CHECK(oracle_leq(t, 0, 0, kind));
  }
}

TEST_CASE("reflexivity holds without an identity element") {
  auto t = generate({PartialTransformation(std::vector<State>{0, 0, 0}),
                     PartialTransformation(std::vector<State>{1, 1, 1})});
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
      CHECK(oracle_leq(t, s, s, kind));
      CHECK(leq(green_classes(t, kind), s, s));
    }
  }
}

TEST_CASE("SCC classes and preorders agree with the definitional oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    auto t = random_table(rng, 1 + i % 5);
    if (t.size() > 600) {
      continue;
    }
    for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
      auto g  = green_classes(t, kind);
      auto id = oracle_ideals(t, kind);
      CHECK(classes_from_ideals(id) == g.class_of);
      for (std::size_t s = 0; s < t.size(); s += 3) {
        for (std::size_t u = 0; u < t.size(); u += 2) {
          CHECK(leq(g, s, u) == id[u].test(s));
          if (t.size() < 80) {
            CHECK(oracle_leq(t, s, u, kind) == id[u].test(s));
          }
        }
      }
    }
  }
}

TEST_CASE("strict one-sided order implies strict J order") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    auto t = random_table(rng, 2 + i % 3);
    auto r = green_classes(t, Relation::R);
    auto l = green_classes(t, Relation::L);
    auto j = green_classes(t, Relation::J);
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t u = 0; u < t.size(); ++u) {
        bool sj = leq(j, s, u) && !leq(j, u, s);
        if (leq(r, s, u) && !leq(r, u, s)) {
          CHECK(sj);
        }
        if (leq(l, s, u) && !leq(l, u, s)) {
          CHECK(sj);
        }
      }
    }
    // every one-sided class lies inside a J-class
    for (std::size_t s = 0; s < t.size(); ++s) {
      CHECK(j.class_of[s] == j.class_of[r.representative[r.class_of[s]]]);
      CHECK(j.class_of[s] == j.class_of[l.representative[l.class_of[s]]]);
    }
  }
}

TEST_CASE("R-height is at most 2^n and images along chains are distinct") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    auto t = random_table(rng, 1 + i % 5);
    auto g = green_classes(t, Relation::R);
    CHECK(g.height <= (std::size_t{1} << t.degree()));
    auto chain = longest_chain(g);
    CHECK(chain.size() == g.height);
    CHECK(check_distinct_images_along_chain(t, chain));
  }
}

TEST_CASE("chain checks") {
  auto t = generate(full_transformation_generators(3));
  CHECK(check_distinct_images_along_chain(t, {0}));
  auto id  = static_cast<std::uint32_t>(index_of(t, {0, 1, 2}));
  auto cst = static_cast<std::uint32_t>(index_of(t, {0, 0, 0}));
  CHECK(check_distinct_images_along_chain(t, {id, cst}));
  CHECK_THROWS_AS(check_distinct_images_along_chain(t, {cst, id}), Error);
  // x and x y with equal images are R-equivalent, so they do not form a chain
  auto x  = PartialTransformation(std::vector<State>{0, 1, 1});
  auto y  = PartialTransformation(std::vector<State>{1, 0, 2});
  auto xi = static_cast<std::uint32_t>(index_of(t, {0, 1, 1}));
  auto xy = static_cast<std::uint32_t>(t.find(compose(x, y).mapping()).value());
  CHECK_THROWS_AS(check_distinct_images_along_chain(t, {xi, xy}), Error);
}

TEST_CASE("witness for equal images") {
  std::mt19937_64 rng(17);
  int             hits = 0;
  for (int i = 0; i < 500 && hits < 50; ++i) {
    std::size_t n = 1 + i % 5;
    auto        x = random_partial(rng, n, 0.2);
    auto        y = random_partial(rng, n, 0.2);
    if (image(x) != image(compose(x, y))) {
      CHECK_THROWS_AS(equal_image_witness(x, y), Error);
      continue;
    }
    ++hits;
    auto z = equal_image_witness(x, y);
    CHECK(compose(compose(x, y), z) == x);
  }
  CHECK(hits > 0);
  auto one = PartialTransformation(std::vector<State>{0});
  CHECK(equal_image_witness(one, one) == one);
}

TEST_CASE("heights of opposite semigroups") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    std::size_t                        n = 1 + i % 5;
    std::vector<PartialTransformation> gens;
    for (int k = 0; k < 1 + i % 3; ++k) {
      gens.push_back(random_partial_injection(rng, n));
    }
    auto s  = generate(gens);
    auto op = generate(opposite(gens));
    CHECK(s.size() == op.size());
    CHECK(green_classes(s, Relation::L).height == green_classes(op, Relation::R).height);
    CHECK(green_classes(s, Relation::R).height == green_classes(op, Relation::L).height);
  }
}

TEST_CASE("isolated subsemigroups") {
  auto t3 = generate(full_transformation_generators(3));
  std::vector<std::uint32_t> all(t3.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  CHECK(relations_agree_on_isolated_subsemigroup(t3, all));

  // the constant maps form an ideal, which is not completely isolated
  std::vector<std::uint32_t> constants;
  for (std::uint32_t i = 0; i < t3.size(); ++i) {
    if (t3.transformation(i).rank() == 1) {
      constants.push_back(i);
    }
  }
  CHECK_THROWS_AS(relations_agree_on_isolated_subsemigroup(t3, constants), Error);

  // a subset that is not closed
  auto id = static_cast<std::uint32_t>(index_of(t3, {0, 1, 2}));
  auto sw = static_cast<std::uint32_t>(index_of(t3, {1, 0, 2}));
  CHECK_THROWS_AS(relations_agree_on_isolated_subsemigroup(t3, {sw}), Error);
  // {id, sw} is a closed group, but the 3-cycles multiply into it
  CHECK_THROWS_AS(
      relations_agree_on_isolated_subsemigroup(t3, {std::min(id, sw), std::max(id, sw)}), Error);
}

TEST_CASE("exports") {
  auto t   = generate(full_transformation_generators(3));
  auto r   = green_classes(t, Relation::R);
  auto l   = green_classes(t, Relation::L);
  auto j   = green_classes(t, Relation::J);
  auto dot = to_dot(t, j);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  auto box = nlohmann::json::parse(eggbox_json(t, r, l, j));
  REQUIRE(box.is_object());
  CHECK(box["j_classes"] == 3);
  REQUIRE(box["eggbox"].size() == 3);
  std::size_t rs = 0;
  for (auto const& c : box["eggbox"]) {
    CHECK(!c["r_classes"].empty());
    CHECK(!c["l_classes"].empty());
    rs += c["r_classes"].size();
  }
  CHECK(rs == r.class_count());
}

TEST_CASE("relation names") {
  CHECK(parse_relation("R") == Relation::R);
  CHECK(parse_relation("j") == Relation::J);
  CHECK(to_string(Relation::L) == "L");
  CHECK_THROWS_AS(parse_relation("H"), Error);
  (void) U;
}
