#ifndef GREENSTACK_GREEN_HPP_
#define GREENSTACK_GREEN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/bitset.hpp"
#include "greenstack/semigroup.hpp"

namespace greenstack {

  enum class Relation { R, L, J };

  std::string_view to_string(Relation kind) noexcept;
  Relation         parse_relation(std::string_view text);

  // Strongly connected components of one Cayley graph and their
  // condensation. Classes are numbered by their smallest element, so the
  // class of element 0 is class 0.
  struct GreenStructure {
    Relation                                kind = Relation::R;
    std::vector<std::uint32_t>              class_of;
    std::vector<std::uint32_t>              representative;  // smallest member
    std::vector<std::vector<std::uint32_t>> below;  // condensation edges
    std::vector<std::uint32_t>              topological_order;  // sources first
    std::vector<std::uint32_t> chain_length;  // longest chain starting at class
    std::size_t                height = 0;

    std::size_t class_count() const noexcept {
      return representative.size();
    }
  };

  GreenStructure green_classes(SemigroupTable const& table, Relation kind);

  // Longest descending chain of classes, counted in classes.
  std::size_t height(GreenStructure const& gs) noexcept;

  // A strictly descending chain of maximal length, as element indices
  // (class representatives), top first. Ties go to the lower class index.
  std::vector<std::uint32_t> longest_chain(GreenStructure const& gs);

  // All classes reachable from `cls` in the condensation, including cls.
  Bitset classes_below(GreenStructure const& gs, std::uint32_t cls);

  // s <=_K t via condensation reachability.
  bool leq(GreenStructure const& gs, std::size_t s, std::size_t t);

  // Definitional check of s <=_K t over S^1:
  //   R: s = t u,  L: s = u t,  J: s = u t v  for some u, v in S^1.
  bool oracle_leq(SemigroupTable const& table,
                  std::size_t           s,
                  std::size_t           t,
                  Relation              kind);

  // Principal ideals computed from the definition for every element:
  // ideal[t] is the set of s with s <=_K t. Quadratic in the table size
  // for R and L; J is assembled from the L- and R-ideals.
  std::vector<Bitset> oracle_ideals(SemigroupTable const& table, Relation kind);

  // Partition induced by mutual containment of principal ideals, numbered
  // like GreenStructure::class_of.
  std::vector<std::uint32_t> classes_from_ideals(std::vector<Bitset> const& ideals);

  // Every image Q . u_i along a strict R-chain must be distinct. Throws
  // Error if the chain is not strictly descending in <=_R.
  bool check_distinct_images_along_chain(SemigroupTable const&             table,
                                         std::vector<std::uint32_t> const& chain);

  // x and x y lie in the same R-class whenever Q . x = Q . xy. Returns z
  // with x y z = x, namely z = y^(n! - 1). Throws Error if the images differ.
  PartialTransformation equal_image_witness(PartialTransformation const& x,
                                            PartialTransformation const& y);

  // Checks that `sub` (indices into big, closed under multiplication) is
  // completely isolated, then compares <=_R, <=_L, <=_J and R, L, J between
  // the big semigroup and the subsemigroup itself on all pairs of `sub`.
  // Throws Error when the subset is not a completely isolated subsemigroup.
  bool relations_agree_on_isolated_subsemigroup(
      SemigroupTable const&             big,
      std::vector<std::uint32_t> const& sub);

  // DOT rendering of the condensation. Node labels carry the class index
  // and a witness word of the representative, cut at 40 symbols.
  std::string to_dot(SemigroupTable const& table, GreenStructure const& gs);

  // Egg-box summary as JSON text: for each J-class the R- and L-classes it
  // contains.
  std::string eggbox_json(SemigroupTable const& table,
                          GreenStructure const& r,
                          GreenStructure const& l,
                          GreenStructure const& j);

}  // namespace greenstack

#endif  // GREENSTACK_GREEN_HPP_
