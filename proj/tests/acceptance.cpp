// Acceptance runner: one PASS/FAIL line per criterion. With an argument,
// runs only that criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "greenstack/verify.hpp"

using namespace greenstack;

namespace {
  struct Criterion {
    int                      id;
    std::string              title;
    std::vector<std::string> suites;       // suite names
    std::vector<std::string> prefixes;     // only checks with these prefixes; empty = all
    std::size_t              lo = 0, hi = 0;
    double                   limit_seconds = 0;  // 0: no limit
  };

  std::vector<Criterion> const& criteria() {
    static std::vector<Criterion> const all = {
        {1, "full semigroup sizes n^n for n = 2..4", {"full"}, {}, 2, 4, 10},
        {2, "SCC classes equal the definitional oracle", {"oracle"}, {}, 0, 0, 60},
        {3, "R-height at most 2^n with distinct images on chains",
         {"bounds"}, {"bounds.rheight_upper"}, 0, 0, 0},
        {4, "growing-alphabet machine heights at n = 4, 6",
         {"bounds"}, {"bounds.growing"}, 0, 0, 30},
        {5, "counter reset, inc, dec and determinism, 2 and 3 bits", {"counter"}, {}, 2, 3, 60},
        {6, "successor sequences for n <= 10", {"sequence"}, {}, 1, 10, 0},
        {7, "fixed-alphabet enumeration at n = 4, 6", {"enumeration"}, {}, 4, 6, 300},
        {8, "blow-up and completion of T3", {"isolated"}, {}, 0, 0, 60},
        {9, "L-height equals R-height of the opposite", {"opposite"}, {}, 0, 0, 0},
        {10, "computation length bounded by R-height", {"tokens"}, {}, 0, 0, 120},
    };
    return all;
  }

  bool selected(Criterion const& c, std::string const& name) {
    if (c.prefixes.empty()) {
      return true;
    }
    for (auto const& p : c.prefixes) {
      if (name.rfind(p, 0) == 0) {
        return true;
      }
    }
    return false;
  }

  bool run(Criterion const& c) {
    auto                     start = std::chrono::steady_clock::now();
    bool                     ok    = true;
    std::size_t              count = 0;
    std::vector<std::string> failures;
    for (auto const& s : c.suites) {
      VerifyOptions o;
      o.lo = c.lo;
      o.hi = c.hi;
      try {
        auto report = run_suite(s, o);
        for (auto const& ch : report.checks) {
          if (!selected(c, ch.name)) {
            continue;
          }
          ++count;
          if (!ch.ok) {
            ok = false;
            failures.push_back(ch.name + ": " + ch.detail);
          }
        }
      } catch (std::exception const& e) {
        ok = false;
        failures.push_back(s + ": " + e.what());
      }
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (count == 0) {
      ok = false;
      failures.push_back("no checks ran");
    }
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    if (!in_time) {
      failures.push_back("time limit " + std::to_string(c.limit_seconds) + " s exceeded");
    }
    bool pass = ok && in_time;
    std::printf("criterion %d: %s  %s  (%zu checks, %.2f s)\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), count, secs);
    for (auto const& f : failures) {
      std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    return pass;
  }
}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  bool any    = false;
  for (auto const& c : criteria()) {
    if (only != 0 && c.id != only) {
      continue;
    }
    any = true;
    all_ok &= run(c);
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  return all_ok ? 0 : 1;
}
