#ifndef GREENSTACK_BITSET_HPP_
#define GREENSTACK_BITSET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace greenstack {

  // Fixed-width dynamic bitset. Used for token-machine configurations and
  // for the ideal tables of the definitional Green oracle.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept {
      return size_;
    }

    bool test(std::size_t i) const noexcept {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    void set(std::size_t i) noexcept {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) noexcept {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() noexcept {
      std::fill(words_.begin(), words_.end(), 0);
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    // Calls f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w != 0) {
          auto bit = static_cast<std::size_t>(std::countr_zero(w));
          f(k * 64 + bit);
          w &= w - 1;
        }
      }
    }

    std::vector<std::size_t> elements() const;

    Bitset& operator|=(Bitset const& other) noexcept;
    Bitset& operator&=(Bitset const& other) noexcept;
    bool    is_subset_of(Bitset const& other) const noexcept;

    std::vector<std::uint64_t> const& words() const noexcept {
      return words_;
    }

    std::size_t hash() const noexcept;

    // Most significant bit first, e.g. {0, 2} of size 4 -> "0101".
    std::string to_string() const;

    friend bool operator==(Bitset const&, Bitset const&) = default;

   private:
    std::size_t                size_ = 0;
    std::vector<std::uint64_t> words_;
  };

  Bitset operator&(Bitset lhs, Bitset const& rhs);

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept {
      return b.hash();
    }
  };

}  // namespace greenstack

#endif  // GREENSTACK_BITSET_HPP_
