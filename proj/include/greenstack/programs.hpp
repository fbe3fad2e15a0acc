#ifndef GREENSTACK_PROGRAMS_HPP_
#define GREENSTACK_PROGRAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/token.hpp"

namespace greenstack {

  // Regular expression over instruction names.
  struct ProgramExpr {
    enum class Kind { kAtom, kEps, kSeq, kAlt, kStar, kPlus, kOpt };

    Kind                     kind = Kind::kEps;
    std::string              atom;
    std::vector<ProgramExpr> children;

    friend bool operator==(ProgramExpr const&, ProgramExpr const&) = default;
  };

  namespace program {
    ProgramExpr atom(std::string name);
    ProgramExpr eps();
    ProgramExpr seq(std::vector<ProgramExpr> parts);
    ProgramExpr alt(std::vector<ProgramExpr> parts);
    ProgramExpr star(ProgramExpr e);
    ProgramExpr plus(ProgramExpr e);
    ProgramExpr opt(ProgramExpr e);
  }  // namespace program

  // Text syntax: identifiers (letters, digits, '_', '.') are atoms,
  // juxtaposition is concatenation, `|` alternation, postfix `* + ?`,
  // parentheses group, `()` is the empty word. Throws Error on bad input.
  ProgramExpr parse_program(std::string_view text);
  std::string to_string(ProgramExpr const& e);

  // Distinct atoms in order of first occurrence.
  std::vector<std::string> atoms(ProgramExpr const& e);

  using LetterWord = std::vector<std::uint32_t>;

  struct Nfa {
    std::vector<std::string>                 alphabet;
    std::size_t                              state_count = 0;
    std::vector<std::vector<std::uint32_t>>  epsilon;  // per state
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
                  edges;  // per state: (letter, target)
    std::uint32_t initial = 0;
    std::uint32_t final   = 0;
  };

  // Partial deterministic automaton; kUndefined marks a missing edge.
  struct Automaton {
    std::vector<std::string>                alphabet;
    std::vector<std::vector<std::uint32_t>> delta;  // [state][letter]
    std::uint32_t                           initial = kUndefined;
    std::vector<bool>                       accepting;

    std::size_t state_count() const noexcept {
      return delta.size();
    }
    bool empty() const noexcept {
      return delta.empty();
    }
    // Index of a letter name; Throws Error if absent.
    std::uint32_t letter(std::string_view name) const;

    friend bool operator==(Automaton const&, Automaton const&) = default;
  };

  // Thompson construction. Every atom must occur in `alphabet`, otherwise
  // Error. The one-argument form uses atoms(e) as the alphabet.
  Nfa compile(ProgramExpr const& e, std::vector<std::string> alphabet);
  Nfa compile(ProgramExpr const& e);

  bool accepts(Nfa const& nfa, LetterWord const& word);
  bool accepts(Automaton const& dfa, LetterWord const& word);
  bool accepts(Automaton const& dfa, std::vector<std::string> const& word);

  // Subset construction, Hopcroft minimisation, then removal of states that
  // cannot reach an accepting state (edges into them become undefined).
  // States are renumbered in breadth-first order from the initial state.
  // An empty language gives an automaton without states.
  Automaton determinize_minimize(Nfa const& nfa);

  // Hopcroft minimisation and trimming of a partial deterministic
  // automaton, with the same normal form as determinize_minimize.
  Automaton minimize(Automaton const& dfa);

  Automaton compile_minimal(ProgramExpr const& e, std::vector<std::string> alphabet);

  enum class RunStatus { kFound, kNotFound, kBudgetExceeded };

  struct RunResult {
    RunStatus   status = RunStatus::kNotFound;
    Trace       trace;  // filled when found
    std::size_t nodes = 0;
  };

  std::string_view to_string(RunStatus s) noexcept;

  inline constexpr std::size_t kDefaultBudget = 10'000'000;

  // kDefaultBudget, or the value of GREENSTACK_BUDGET when set.
  std::size_t default_budget();

  // Depth-first search for an accepted word u with |start . u| = |start|.
  // Letters are tried in the machine's instruction order; branches whose
  // cardinality drops are cut, and (automaton state, configuration) pairs
  // are visited at most once. Every letter of the automaton must name an
  // instruction of the machine (Error otherwise).
  RunResult deterministic_run(TokenMachine const& m,
                              Config const&       start,
                              Automaton const&    program,
                              std::size_t         budget = default_budget());

  // Counts accepted words of length <= max_len that preserve the
  // cardinality of `start`; true iff there is at most one.
  bool check_deterministic_bounded(TokenMachine const& m,
                                   Config const&       start,
                                   Automaton const&    program,
                                   std::size_t         max_len);

  // Number of such words, for diagnostics.
  std::size_t count_preserving_words(TokenMachine const& m,
                                     Config const&       start,
                                     Automaton const&    program,
                                     std::size_t         max_len);

}  // namespace greenstack

#endif  // GREENSTACK_PROGRAMS_HPP_
