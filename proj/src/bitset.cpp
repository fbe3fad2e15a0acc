#include "greenstack/bitset.hpp"

#include <algorithm>

namespace greenstack {

  std::vector<std::size_t> Bitset::elements() const {
    std::vector<std::size_t> out;
    for_each([&out](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& Bitset::operator|=(Bitset const& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] |= other.words_[k];
    }
    return *this;
  }

  Bitset& Bitset::operator&=(Bitset const& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= other.words_[k];
    }
    return *this;
  }

  bool Bitset::is_subset_of(Bitset const& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t Bitset::hash() const noexcept {
    // splitmix-style mixing per word
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (auto w : words_) {
      std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }

  std::string Bitset::to_string() const {
    std::string s(size_, '0');
    for_each([&](std::size_t i) { s[size_ - 1 - i] = '1'; });
    return s;
  }

  Bitset operator&(Bitset lhs, Bitset const& rhs) {
    lhs &= rhs;
    return lhs;
  }

}  // namespace greenstack
