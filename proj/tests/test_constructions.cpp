#include <algorithm>
#include <set>

#include "doctest.h"
#include "greenstack/constructions.hpp"
#include "greenstack/green.hpp"
#include "greenstack/verify.hpp"

using namespace greenstack;

namespace {
  constexpr State U = kUndefined;

  std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  // k-subsets of {0..n-1} sorted by the reversed element list, which is
  // the colex order.
  std::vector<std::vector<std::size_t>> colex_oracle(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) {
        continue;
      }
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (((mask >> i) & 1U) != 0) {
          s.push_back(i);
        }
      }
      out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
  }
}  // namespace

TEST_CASE("full transformation semigroups have n^n elements") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(generate(full_transformation_generators(n)).size() == power(n, n));
  }
  CHECK_THROWS_AS(full_transformation_generators(1), Error);
}

TEST_CASE("J-class blow-up") {
  auto base  = full_transformation_generators(3);
  auto gens  = jclass_blowup(base);
  REQUIRE(gens.size() == base.size() + 1);
  for (auto const& g : gens) {
    CHECK(g.degree() == 6);
    CHECK(g.is_total());
  }
  auto const& c = gens.back();
  CHECK(c == PartialTransformation(std::vector<State>{0, 1, 2, 4, 5, 0}));
  auto t = generate(gens);
  auto j = green_classes(t, Relation::J);
  CHECK(j.class_count() >= 27);

  // c u c for every u in the base semigroup: pairwise J-incomparable
  auto                  base_t = generate(base);
  std::set<std::size_t> cuc;
  for (std::size_t s = 0; s < base_t.size(); ++s) {
    PartialTransformation w = c;
    for (Letter a : base_t.witness(s)) {
      w = compose(w, gens[a]);
    }
    cuc.insert(t.find(compose(w, c).mapping()).value());
  }
  CHECK(cuc.size() == 27);
  for (auto a : cuc) {
    for (auto b : cuc) {
      if (a != b) {
        CHECK_FALSE(leq(j, a, b));
      }
    }
  }

  CHECK_THROWS_AS(jclass_blowup({PartialTransformation(std::vector<State>{U, 0})}), Error);
  CHECK_THROWS_AS(jclass_blowup(base, 7), Error);
  // a trivial base still works
  auto trivial = jclass_blowup({PartialTransformation::identity(1)});
  CHECK(generate(trivial).size() >= 2);
}

TEST_CASE("completion of T3") {
  auto dfa = completion_automaton(full_transformation_generators(3));
  CHECK(dfa.state_count() == 4);
  CHECK(dfa.initial == 0);
  CHECK(dfa.alphabet == std::vector<std::string>{"a0", "a1", "a2", "c"});
  CHECK(minimize(dfa).state_count() == dfa.state_count());

  auto gens = transition_generators(dfa);
  auto big  = generate(gens);
  auto t3   = generate(full_transformation_generators(3));
  CHECK(big.size() > t3.size());

  // the elements fixing q0 and generated by the old letters form a copy of T3
  std::vector<PartialTransformation> old(gens.begin(), gens.end() - 1);
  auto                               sub = generate(old);
  CHECK(sub.size() == t3.size());
  std::vector<std::uint32_t> inside;
  for (std::size_t s = 0; s < sub.size(); ++s) {
    inside.push_back(static_cast<std::uint32_t>(big.find(sub.element(s)).value()));
  }
  std::sort(inside.begin(), inside.end());
  CHECK(relations_agree_on_isolated_subsemigroup(big, inside));
}

TEST_CASE("blow-up then completion") {
  auto dfa = completion_automaton(jclass_blowup(full_transformation_generators(3)));
  CHECK(dfa.state_count() == 7);
  CHECK(minimize(dfa).state_count() == 7);
  auto t = generate(transition_generators(dfa));
  CHECK(green_classes(t, Relation::J).class_count() >= 27);
}

TEST_CASE("opposite") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<PartialTransformation> gens{random_partial_injection(rng, 4),
                                            random_partial_injection(rng, 4)};
    auto op = opposite(gens);
    CHECK(opposite(op) == gens);
    CHECK(generate(op).size() == generate(gens).size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto p = compose(compose(gens[k], op[k]), gens[k]);
      CHECK(p == gens[k]);
    }
  }
  CHECK_THROWS_AS(opposite({PartialTransformation(std::vector<State>{0, 0})}), Error);
}

TEST_CASE("growing-alphabet machines") {
  CHECK(growing_alphabet_machine(2).instruction_count() == 1);
  CHECK(growing_alphabet_machine(4).instruction_count() == 5);
  CHECK(growing_alphabet_machine(6).instruction_count() == 19);
  CHECK_THROWS_AS(growing_alphabet_machine(3), Error);
  CHECK_THROWS_AS(growing_alphabet_machine(0), Error);

  for (std::size_t n : {4, 6}) {
    auto m  = growing_alphabet_machine(n);
    auto tr = growing_alphabet_trace(m, n);
    CHECK(tr.length() == m.instruction_count());
    CHECK(check_progressing(m, tr));
    CHECK(check_maximal(m, tr));
    std::vector<PartialTransformation> gens;
    for (std::size_t i = 0; i < m.instruction_count(); ++i) {
      gens.push_back(m.instruction(i));
      CHECK(m.instruction(i).is_injective());
    }
    auto t = generate(gens);
    CHECK(green_classes(t, Relation::R).height >= m.instruction_count());
  }
}

TEST_CASE("colex order") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(colex_subsets(n, k) == colex_oracle(n, k));
    }
  }
}
