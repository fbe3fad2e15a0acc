#ifndef GREENSTACK_SEMIGROUP_HPP_
#define GREENSTACK_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greenstack/core.hpp"

namespace greenstack {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  inline constexpr std::size_t kDefaultCap = 5'000'000;

  class CapExceeded : public Error {
   public:
    CapExceeded(std::size_t cap, std::size_t partial)
        : Error("semigroup generation exceeded the cap of "
                + std::to_string(cap) + " elements ("
                + std::to_string(partial) + " found so far)"),
          cap_(cap),
          partial_(partial) {}

    std::size_t cap() const noexcept {
      return cap_;
    }
    std::size_t partial_count() const noexcept {
      return partial_;
    }

   private:
    std::size_t cap_;
    std::size_t partial_;
  };

  // The semigroup generated by a list of partial transformations, with its
  // right and left Cayley graphs. Element i was discovered in breadth-first
  // order; its witness word is the BFS-tree path (shortlex by generator
  // index among the words reaching it first).
  class SemigroupTable {
   public:
    std::size_t size() const noexcept {
      return parent_.size();
    }
    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t generator_count() const noexcept {
      return gens_.size();
    }
    std::vector<PartialTransformation> const& generators() const noexcept {
      return gens_;
    }

    std::span<State const> element(std::size_t i) const noexcept {
      return {data_.data() + i * degree_, degree_};
    }
    PartialTransformation transformation(std::size_t i) const;

    // Index of the element whose mapping equals `mapping`, if present.
    std::optional<std::size_t> find(std::span<State const> mapping) const;

    // s . a and a . s for generator index a.
    std::uint32_t right(std::size_t s, Letter a) const noexcept {
      return right_[s * gens_.size() + a];
    }
    std::uint32_t left(std::size_t s, Letter a) const noexcept {
      return left_[s * gens_.size() + a];
    }

    Word        witness(std::size_t i) const;
    std::size_t witness_length(std::size_t i) const;

    // Index of the product s t, found by following the witness of t along
    // right edges.
    std::uint32_t multiply(std::size_t s, std::size_t t) const;

    // Index of an element acting as the identity on all of Q, if any.
    std::optional<std::size_t> identity() const;

    friend SemigroupTable generate(std::vector<PartialTransformation> const&,
                                   std::size_t);
    friend SemigroupTable load_table(std::string const&);
    friend void save_table(SemigroupTable const&, std::string const&);

   private:
    std::size_t                        degree_ = 0;
    std::vector<PartialTransformation> gens_;
    std::vector<State>                 data_;
    std::vector<std::uint32_t>         parent_;  // kUndefined for generators
    std::vector<Letter>                last_letter_;
    std::vector<std::uint32_t>         right_;
    std::vector<std::uint32_t>         left_;
    std::vector<std::uint32_t>         slots_;  // open addressing index

    void          rebuild_index();
    std::uint32_t insert_or_find(std::span<State const> mapping,
                                 bool&                  inserted);
  };

  // Breadth-first closure under right multiplication by the generators,
  // followed by a pass filling in the left edges.
  SemigroupTable generate(std::vector<PartialTransformation> const& gens,
                          std::size_t cap = kDefaultCap);

  // S^1 semantics on top of a table without materialising the identity.
  // Position size() stands for the adjoined neutral element whenever the
  // table has no element acting as identity.
  class MonoidView {
   public:
    explicit MonoidView(SemigroupTable const& table);

    SemigroupTable const& table() const noexcept {
      return *table_;
    }
    bool identity_is_adjoined() const noexcept {
      return !identity_.has_value();
    }
    // Number of elements of S^1.
    std::size_t size() const noexcept {
      return table_->size() + (identity_ ? 0 : 1);
    }
    std::size_t identity_index() const noexcept {
      return identity_ ? *identity_ : table_->size();
    }
    // Product of two positions of S^1, result again a position of S^1.
    std::size_t multiply(std::size_t s, std::size_t t) const;

   private:
    SemigroupTable const*      table_;
    std::optional<std::size_t> identity_;
  };

  MonoidView adjoin_identity_virtually(SemigroupTable const& table);

  // Binary cache, little-endian:
  //   magic "GSTB", u32 version (1), u32 degree, u32 generator count,
  //   u64 element count, generators (degree u32 each), elements (degree
  //   u32 each), parents (u32), last letters (u32), right edges (u32 per
  //   element and generator), left edges (same).
  // Undefined entries are stored as 0xFFFFFFFF.
  void           save_table(SemigroupTable const& table, std::string const& path);
  SemigroupTable load_table(std::string const& path);

}  // namespace greenstack

#endif  // GREENSTACK_SEMIGROUP_HPP_
