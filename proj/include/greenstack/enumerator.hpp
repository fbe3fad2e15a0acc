#ifndef GREENSTACK_ENUMERATOR_HPP_
#define GREENSTACK_ENUMERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/counter.hpp"
#include "greenstack/programs.hpp"
#include "greenstack/token.hpp"

namespace greenstack {

  // Bit strings are written most significant bit first: "0011" has
  // b_1 = b_0 = 1.

  // p 0 1^i 0^j -> p 1 0^(j+1) 1^(i-1), or nothing if x has no such form.
  std::optional<std::string> successor(std::string_view x);

  // 0^(n-m) 1^m followed by its iterated successors: C(n, m) terms.
  std::vector<std::string> successor_sequence(std::size_t n, std::size_t m);

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

  // ceil(log2 n), at least 1.
  std::size_t counter_bits(std::size_t n);

  // Width of P by default: ceil(log2 (n + 1)). P tracks the head offset,
  // which reaches n when the last block wraps around the top of the tape.
  std::size_t head_counter_bits(std::size_t n);

  // Tape T with n cells together with the counters P, Q and Z.
  struct MachineU {
    std::size_t              n    = 0;
    std::size_t              bits   = 0;  // Q and Z
    std::size_t              p_bits = 0;
    TokenMachine             machine;
    std::vector<std::size_t> tape;  // cell index of T.c_i
    CounterLayout            P, Q, Z;
    Config                   initial;
  };

  // Throws Error unless n is even and positive. p_bits = 0 selects
  // head_counter_bits(n).
  MachineU build_U(std::size_t n, std::size_t p_bits = 0);

  // Program languages over U's instruction names.
  ProgramExpr program_rotl();
  ProgramExpr program_rotr();
  ProgramExpr program_eq1(std::size_t n);
  ProgramExpr program_L1(std::size_t n);
  ProgramExpr program_L2(std::size_t n);
  ProgramExpr program_L3(std::size_t n);
  ProgramExpr program_K1(std::size_t n);
  ProgramExpr program_K2(std::size_t n);
  ProgramExpr program_K3(std::size_t n);
  ProgramExpr program_K4(std::size_t n);
  ProgramExpr program_L(std::size_t n);

  struct SplitStats {
    std::size_t initial_states = 0;
    std::size_t states         = 0;
    std::size_t splits         = 0;
    std::size_t pending        = 0;  // conflicts still queued
  };

  class SplitBudgetExceeded : public Error {
   public:
    explicit SplitBudgetExceeded(SplitStats stats);
    SplitStats const& stats() const noexcept {
      return stats_;
    }

   private:
    SplitStats stats_;
  };

  inline constexpr std::size_t kDefaultSplitBudget = 100'000;

  // Injective control unit over `alphabet` (a superset of the automaton's
  // letters; extra letters get the empty map). While some state has two
  // in-edges with the same letter, a copy of it takes over the edge from
  // the larger-index source. Conflicts are queued in breadth-first order of
  // their target state. Cells are `CU.q<i>`, q0 the initial state. Throws
  // SplitBudgetExceeded after `split_budget` copies.
  TokenMachine build_control_unit(Automaton const&                dfa,
                                  std::vector<std::string> const& alphabet,
                                  std::size_t split_budget = kDefaultSplitBudget,
                                  SplitStats* stats        = nullptr);

  // The trimmed automaton itself as a (not necessarily injective) token
  // machine with the same cell naming.
  TokenMachine automaton_control_unit(Automaton const&                dfa,
                                      std::vector<std::string> const& alphabet);

  enum class ControlMode { kInjective, kAutomaton };

  struct MachineV {
    MachineU     u;
    Automaton    program;  // minimal automaton of L over U's instructions
    TokenMachine control;
    TokenMachine machine;  // union of U and the control unit
    Config       initial;
    ControlMode  mode = ControlMode::kAutomaton;
  };

  MachineV build_V(std::size_t n, ControlMode mode = ControlMode::kAutomaton,
                   std::size_t split_budget = kDefaultSplitBudget,
                   std::size_t p_bits       = 0);

  // Runs L from V's initial configuration. Throws Error when no word is
  // found or the search budget runs out.
  Trace run_enumeration(MachineV const& v, std::size_t budget = default_budget());

  // The word b_(n-1) ... b_0 encoded by a configuration: b_((i + v) mod n)
  // is set iff T.c_i is, v the value of P. Throws Error unless P is valid
  // and synchronized.
  std::string encode(MachineU const& u, Config const& c);

  // Encodings at the start, before every T.mvl and at the end, with
  // consecutive repeats dropped.
  std::vector<std::string> encodings_of_trace(MachineU const& u, Trace const& t);

  struct EnumerationInvariants {
    bool        tape_weight   = true;  // |R & T| = n/2 throughout
    bool        eq1_boundaries = true;  // Q, Z zero and synchronized, P synchronized
    bool        head_position  = true;  // P marks the rightmost 1-block at T.mvl
    std::size_t eq1_factors    = 0;
    std::size_t mvl_steps      = 0;
    std::string detail;

    bool ok() const noexcept {
      return tape_weight && eq1_boundaries && head_position;
    }
  };

  EnumerationInvariants check_enumeration_invariants(MachineU const& u, Trace const& t);

}  // namespace greenstack

#endif  // GREENSTACK_ENUMERATOR_HPP_
