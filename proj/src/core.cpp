#include "greenstack/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace greenstack {

  PartialTransformation::PartialTransformation(std::vector<State> mapping)
      : map_(std::move(mapping)) {
    for (std::size_t q = 0; q < map_.size(); ++q) {
      if (map_[q] != kUndefined && map_[q] >= map_.size()) {
        throw Error("partial transformation: entry " + std::to_string(q)
                    + " maps to " + std::to_string(map_[q])
                    + ", outside a domain of size "
                    + std::to_string(map_.size()));
      }
    }
  }

  PartialTransformation PartialTransformation::identity(std::size_t n) {
    std::vector<State> m(n);
    for (std::size_t q = 0; q < n; ++q) {
      m[q] = static_cast<State>(q);
    }
    return PartialTransformation(std::move(m));
  }

  PartialTransformation PartialTransformation::empty(std::size_t n) {
    return PartialTransformation(std::vector<State>(n, kUndefined));
  }

  bool PartialTransformation::is_total() const noexcept {
    return std::none_of(
        map_.begin(), map_.end(), [](State s) { return s == kUndefined; });
  }

  bool PartialTransformation::is_injective() const noexcept {
    std::vector<bool> seen(map_.size(), false);
    for (State s : map_) {
      if (s == kUndefined) {
        continue;
      }
      if (seen[s]) {
        return false;
      }
      seen[s] = true;
    }
    return true;
  }

  std::size_t PartialTransformation::rank() const {
    return image(*this).size();
  }

  std::string PartialTransformation::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < map_.size(); ++q) {
      if (q != 0) {
        out += ' ';
      }
      out += map_[q] == kUndefined ? "-" : std::to_string(map_[q]);
    }
    return out;
  }

  PartialTransformation PartialTransformation::parse(std::string_view text) {
    std::vector<State> m;
    std::size_t        i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        ++i;
      }
      if (i == text.size()) {
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t') {
        ++j;
      }
      auto token = text.substr(i, j - i);
      if (token == "-") {
        m.push_back(kUndefined);
      } else {
        State v   = 0;
        auto  res = std::from_chars(token.data(), token.data() + token.size(), v);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
          throw Error("partial transformation: bad entry '"
                      + std::string(token) + "'");
        }
        m.push_back(v);
      }
      i = j;
    }
    return PartialTransformation(std::move(m));
  }

  std::size_t hash_mapping(std::span<State const> mapping) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (State s : mapping) {
      h ^= s;
      h *= 0x100000001b3ULL;
    }
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  std::size_t PartialTransformationHash::operator()(
      PartialTransformation const& f) const noexcept {
    return hash_mapping(f.mapping());
  }

  void compose_into(std::span<State const> f,
                    std::span<State const> g,
                    std::span<State>       out) noexcept {
    for (std::size_t q = 0; q < f.size(); ++q) {
      out[q] = f[q] == kUndefined ? kUndefined : g[f[q]];
    }
  }

  PartialTransformation compose(PartialTransformation const& f,
                                PartialTransformation const& g) {
    if (f.degree() != g.degree()) {
      throw Error("compose: degrees differ (" + std::to_string(f.degree())
                  + " vs " + std::to_string(g.degree()) + ")");
    }
    std::vector<State> m(f.degree());
    compose_into(f.mapping(), g.mapping(), m);
    return PartialTransformation(std::move(m));
  }

  std::vector<State> image(PartialTransformation const& f,
                           std::span<State const>       subset) {
    std::vector<State> out;
    out.reserve(subset.size());
    for (State q : subset) {
      if (f.is_defined(q)) {
        out.push_back(f[q]);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<State> image(PartialTransformation const& f) {
    std::vector<State> all(f.degree());
    for (std::size_t q = 0; q < all.size(); ++q) {
      all[q] = static_cast<State>(q);
    }
    return image(f, all);
  }

  PartialTransformation invert(PartialTransformation const& f) {
    if (!f.is_injective()) {
      throw Error("invert: transformation " + f.to_string()
                  + " is not injective");
    }
    std::vector<State> m(f.degree(), kUndefined);
    for (std::size_t q = 0; q < f.degree(); ++q) {
      if (f.is_defined(static_cast<State>(q))) {
        m[f[static_cast<State>(q)]] = static_cast<State>(q);
      }
    }
    return PartialTransformation(std::move(m));
  }

  std::vector<PartialTransformation>
  totalize(std::vector<PartialTransformation> const& gens) {
    if (gens.empty()) {
      throw Error("totalize: empty generator list");
    }
    std::size_t const n = gens.front().degree();
    std::vector<PartialTransformation> out;
    out.reserve(gens.size());
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw Error("totalize: generators of different degrees");
      }
      std::vector<State> m(n + 1);
      for (std::size_t q = 0; q < n; ++q) {
        State s = g[static_cast<State>(q)];
        m[q]    = s == kUndefined ? static_cast<State>(n) : s;
      }
      m[n] = static_cast<State>(n);
      out.emplace_back(std::move(m));
    }
    return out;
  }

  PartialTransformation power(PartialTransformation const& f,
                              std::uint64_t                k) {
    if (k == 0) {
      throw Error("power: exponent must be positive");
    }
    PartialTransformation result = f;
    PartialTransformation base   = f;
    --k;
    while (k > 0) {
      if (k & 1U) {
        result = compose(result, base);
      }
      base = compose(base, base);
      k >>= 1U;
    }
    return result;
  }

}  // namespace greenstack
