#ifndef GREENSTACK_VERIFY_HPP_
#define GREENSTACK_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/core.hpp"
#include "greenstack/semigroup.hpp"

namespace greenstack {

  struct Check {
    std::string                          name;
    bool                                 ok = true;
    std::string                          detail;  // first failure, if any
    double                               seconds = 0;
    std::map<std::string, std::int64_t>  counts;
  };

  struct Report {
    std::string        suite;
    std::vector<Check> checks;

    bool        ok() const noexcept;
    std::string to_json() const;
  };

  struct VerifyOptions {
    std::size_t   lo     = 0;  // 0: the suite's default range
    std::size_t   hi     = 0;
    std::uint64_t seed   = 1;
    std::size_t   budget = 0;  // 0: default_budget()
    std::size_t   cap    = kDefaultCap;
  };

  // counter, sequence, enumeration, bounds, isolated, opposite, tokens,
  // plus full (closure sizes) and oracle (SCC classes vs. ideals).
  std::vector<std::string> const& suite_names();

  // Checks are sorted by name. Throws Error for an unknown suite.
  Report run_suite(std::string_view suite, VerifyOptions const& opts);

  // Random generator sets used by the suites.
  PartialTransformation random_partial(std::mt19937_64& rng, std::size_t n,
                                       double undefined_rate);
  PartialTransformation random_partial_injection(std::mt19937_64& rng, std::size_t n);

  // Every table the suites generate with at most `max_size` elements,
  // for the oracle comparison.
  std::vector<SemigroupTable> oracle_corpus(std::uint64_t seed, std::size_t max_size);

}  // namespace greenstack

#endif  // GREENSTACK_VERIFY_HPP_
