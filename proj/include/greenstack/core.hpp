#ifndef GREENSTACK_CORE_HPP_
#define GREENSTACK_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace greenstack {

  using State = std::uint32_t;

  inline constexpr State kUndefined = std::numeric_limits<State>::max();

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A partial self-map of {0, ..., n - 1}. Entry q is the image q . f or
  // kUndefined. Values are immutable once constructed.
  class PartialTransformation {
   public:
    PartialTransformation() = default;

    // Throws Error if some defined entry is >= mapping.size().
    explicit PartialTransformation(std::vector<State> mapping);

    static PartialTransformation identity(std::size_t n);
    static PartialTransformation empty(std::size_t n);

    std::size_t degree() const noexcept {
      return map_.size();
    }

    State operator[](State q) const noexcept {
      return map_[q];
    }

    bool is_defined(State q) const noexcept {
      return map_[q] != kUndefined;
    }

    std::span<State const> mapping() const noexcept {
      return map_;
    }

    bool        is_total() const noexcept;
    bool        is_injective() const noexcept;
    std::size_t rank() const;

    // Space-separated entries, `-` for undefined: "2 - 0".
    std::string                  to_string() const;
    static PartialTransformation parse(std::string_view text);

    friend bool operator==(PartialTransformation const&,
                           PartialTransformation const&)
        = default;
    friend auto operator<=>(PartialTransformation const&,
                            PartialTransformation const&)
        = default;

   private:
    std::vector<State> map_;
  };

  struct PartialTransformationHash {
    std::size_t operator()(PartialTransformation const& f) const noexcept;
  };

  std::size_t hash_mapping(std::span<State const> mapping) noexcept;

  // q . (fg) = (q . f) . g, undefined if either step is.
  PartialTransformation compose(PartialTransformation const& f,
                                PartialTransformation const& g);

  // Writes f composed with g into out (all of the same degree).
  void compose_into(std::span<State const> f,
                    std::span<State const> g,
                    std::span<State>       out) noexcept;

  // R . f as a sorted list of states.
  std::vector<State> image(PartialTransformation const& f,
                           std::span<State const>       subset);

  // Q . f, the image of the full domain.
  std::vector<State> image(PartialTransformation const& f);

  // Inverse of an injective partial transformation: undefined outside
  // the image of f, and (q . f) . invert(f) = q.
  PartialTransformation invert(PartialTransformation const& f);

  // Adds a sink state n and redirects every undefined entry to it.
  std::vector<PartialTransformation>
  totalize(std::vector<PartialTransformation> const& gens);

  // f^k for k >= 1.
  PartialTransformation power(PartialTransformation const& f, std::uint64_t k);

}  // namespace greenstack

#endif  // GREENSTACK_CORE_HPP_
