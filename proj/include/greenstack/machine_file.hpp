#ifndef GREENSTACK_MACHINE_FILE_HPP_
#define GREENSTACK_MACHINE_FILE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/core.hpp"
#include "greenstack/programs.hpp"
#include "greenstack/token.hpp"

namespace greenstack {

  // Text format, one directive per line, `#` starts a comment:
  //
  //   states 3                 or   cells T.c0 T.c1 T.c2
  //   gen a: 1 2 0             entries are states or cell labels, `-` undefined
  //   initial 0                a state (automata) or a list of cells
  //   final 2                  accepting states of an automaton
  //
  // With a `cells` header, entries and `initial` may name cells by label
  // or by index.
  struct MachineFile {
    std::size_t                        state_count = 0;
    std::vector<std::string>           cells;  // empty for a `states` header
    std::vector<std::string>           names;
    std::vector<PartialTransformation> gens;
    std::optional<std::vector<State>>  initial;
    std::optional<std::vector<State>>  final;

    friend bool operator==(MachineFile const&, MachineFile const&) = default;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& message);
    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Throws ParseError with 1-based line and column.
  MachineFile parse_machine_file(std::string_view text);
  MachineFile read_machine_file(std::string const& path);
  std::string emit_machine_file(MachineFile const& mf);

  // Cells are the labels, or "0" ... "n-1" for a `states` header.
  TokenMachine to_token_machine(MachineFile const& mf);
  // The initial configuration of a machine file (empty when absent).
  Config initial_config(MachineFile const& mf, TokenMachine const& m);
  MachineFile from_token_machine(TokenMachine const&          m,
                                 std::optional<Config> const& initial = std::nullopt);

  // Requires one initial state; missing `final` means no accepting state.
  Automaton   to_automaton(MachineFile const& mf);
  MachineFile from_automaton(Automaton const& dfa);

  MachineFile from_generators(std::vector<PartialTransformation> const& gens,
                              std::vector<std::string>                  names = {});

}  // namespace greenstack

#endif  // GREENSTACK_MACHINE_FILE_HPP_
