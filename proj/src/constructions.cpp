#include "greenstack/constructions.hpp"

namespace greenstack {

  std::vector<PartialTransformation> full_transformation_generators(std::size_t n) {
    if (n < 2) {
      throw Error("full_transformation_generators: n must be at least 2");
    }
    std::vector<State> cycle(n), swap(n), collapse(n);
    for (std::size_t q = 0; q < n; ++q) {
      cycle[q]    = static_cast<State>((q + 1) % n);
      swap[q]     = static_cast<State>(q);
      collapse[q] = static_cast<State>(q);
    }
    swap[0]         = 1;
    swap[1]         = 0;
    collapse[n - 1] = 0;
    return {PartialTransformation(cycle), PartialTransformation(swap),
            PartialTransformation(collapse)};
  }

  std::vector<PartialTransformation>
  jclass_blowup(std::vector<PartialTransformation> const& gens, State q0) {
    if (gens.empty()) {
      throw Error("jclass_blowup: empty generator list");
    }
    std::size_t const n = gens.front().degree();
    if (q0 >= n) {
      throw Error("jclass_blowup: q0 out of range");
    }
    auto const q1 = static_cast<State>(n);
    auto const q2 = static_cast<State>(n + 1);
    auto const q3 = static_cast<State>(n + 2);
    std::vector<PartialTransformation> out;
    for (auto const& g : gens) {
      if (g.degree() != n || !g.is_total()) {
        throw Error("jclass_blowup: generators must be total of equal degree");
      }
      std::vector<State> m(g.mapping().begin(), g.mapping().end());
      m.push_back(q0);  // q1
      m.push_back(q2);  // q2
      m.push_back(q0);  // q3
      out.emplace_back(std::move(m));
    }
    std::vector<State> c(n + 3);
    for (std::size_t q = 0; q < n; ++q) {
      c[q] = static_cast<State>(q);
    }
    c[q1] = q2;
    c[q2] = q3;
    c[q3] = q0;
    out.emplace_back(std::move(c));
    return out;
  }

  Dfa completion_automaton(std::vector<PartialTransformation> const& gens) {
    if (gens.empty()) {
      throw Error("completion_automaton: empty generator list");
    }
    std::size_t const n = gens.front().degree();
    if (n == 0) {
      throw Error("completion_automaton: no states");
    }
    Dfa dfa;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (gens[a].degree() != n || !gens[a].is_total()) {
        throw Error("completion_automaton: generators must be total of equal degree");
      }
      dfa.alphabet.push_back("a" + std::to_string(a));
    }
    dfa.alphabet.push_back("c");
    std::size_t const k = gens.size();
    dfa.delta.assign(n + 1, std::vector<std::uint32_t>(k + 1));
    for (std::size_t a = 0; a < k; ++a) {
      dfa.delta[0][a] = 0;
      for (std::size_t q = 0; q < n; ++q) {
        dfa.delta[q + 1][a] = gens[a][static_cast<State>(q)] + 1;
      }
    }
    dfa.delta[0][k] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      dfa.delta[i][k] = static_cast<std::uint32_t>(i == n ? 1 : i + 1);
    }
    dfa.initial = 0;
    dfa.accepting.assign(n + 1, false);
    dfa.accepting[n] = true;
    return dfa;
  }

  std::vector<PartialTransformation> transition_generators(Dfa const& dfa) {
    std::vector<PartialTransformation> out;
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      std::vector<State> m(dfa.state_count());
      for (std::size_t q = 0; q < dfa.state_count(); ++q) {
        m[q] = dfa.delta[q][a];
      }
      out.emplace_back(std::move(m));
    }
    return out;
  }

  std::vector<PartialTransformation>
  opposite(std::vector<PartialTransformation> const& gens) {
    std::vector<PartialTransformation> out;
    out.reserve(gens.size());
    for (auto const& g : gens) {
      out.push_back(invert(g));
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
    if (n > 62 || k > n) {
      throw Error("colex_subsets: unsupported size");
    }
    std::vector<std::vector<std::size_t>> out;
    if (k == 0) {
      out.emplace_back();
      return out;
    }
    // increasing bit masks of fixed weight are in colex order
    std::uint64_t       mask  = (std::uint64_t{1} << k) - 1;
    std::uint64_t const limit = std::uint64_t{1} << n;
    while (mask < limit) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
          s.push_back(i);
        }
      }
      out.push_back(std::move(s));
      std::uint64_t low  = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = ripple | (((ripple ^ mask) >> 2) / low);
    }
    return out;
  }

  TokenMachine growing_alphabet_machine(std::size_t n) {
    if (n == 0 || n % 2 != 0) {
      throw Error("growing_alphabet_machine: n must be even and positive, got "
                  + std::to_string(n));
    }
    auto                     subsets = colex_subsets(n, n / 2);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
    }
    TokenMachine m(std::move(labels));
    for (std::size_t i = 1; i < subsets.size(); ++i) {
      std::vector<State> f(n, kUndefined);
      for (std::size_t j = 0; j < n / 2; ++j) {
        f[subsets[i - 1][j]] = static_cast<State>(subsets[i][j]);
      }
      m.add_instruction("g" + std::to_string(i), PartialTransformation(std::move(f)));
    }
    return m;
  }

  Trace growing_alphabet_trace(TokenMachine const& m, std::size_t n) {
    auto   subsets = colex_subsets(n, n / 2);
    Config start   = m.empty_config();
    for (auto c : subsets.front()) {
      start.set(c);
    }
    return run(m, start, m.instruction_names());
  }

}  // namespace greenstack
