#ifndef GREENSTACK_CONSTRUCTIONS_HPP_
#define GREENSTACK_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "greenstack/core.hpp"
#include "greenstack/programs.hpp"
#include "greenstack/semigroup.hpp"
#include "greenstack/token.hpp"

namespace greenstack {

  // Deterministic automata share the representation of compiled programs.
  using Dfa = Automaton;

  // The n-cycle, the transposition (0 1) and n-1 -> 0. Throws Error for
  // n < 2.
  std::vector<PartialTransformation> full_transformation_generators(std::size_t n);

  // Extends total generators on n states by three states q1 = n,
  // q2 = n + 1, q3 = n + 2 and a letter c appended last:
  //   q . c = q on the old states,
  //   q1 . a = q3 . a = q3 . c = q0,  q1 . c = q2 . a = q2,  q2 . c = q3.
  // Throws Error for partial generators or q0 out of range.
  std::vector<PartialTransformation>
  jclass_blowup(std::vector<PartialTransformation> const& gens, State q0 = 0);

  // Adds a state q0 (index 0, old state i becomes i + 1) fixed by every
  // old letter, and a cyclic letter c (last) with q0 . c = q1 and
  // q_i . c = q_(i+1), q_n . c = q1. Initial q0, final q_n. Letters are
  // named a0, a1, ... and c.
  Dfa completion_automaton(std::vector<PartialTransformation> const& gens);

  // Letters of a deterministic automaton as transformations of its states.
  std::vector<PartialTransformation> transition_generators(Dfa const& dfa);

  // Inverses of injective generators. Throws Error otherwise.
  std::vector<PartialTransformation>
  opposite(std::vector<PartialTransformation> const& gens);

  // n cells, one instruction g<i> per consecutive pair of n/2-subsets in
  // colex order, each the order-preserving bijection between them.
  // Throws Error for odd or zero n.
  TokenMachine growing_alphabet_machine(std::size_t n);

  // The computation through all n/2-subsets in colex order.
  Trace growing_alphabet_trace(TokenMachine const& m, std::size_t n);

  // n/2-subsets of {0, ..., n-1} in colex order.
  std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k);

}  // namespace greenstack

#endif  // GREENSTACK_CONSTRUCTIONS_HPP_
