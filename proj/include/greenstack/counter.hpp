#ifndef GREENSTACK_COUNTER_HPP_
#define GREENSTACK_COUNTER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greenstack/programs.hpp"
#include "greenstack/token.hpp"

namespace greenstack {

  // An n-bit ring tape with cells `<name>.<cell>0 ... <name>.<cell>{n-1}`
  // and instructions `<name>.rotl`, `.rotr`, `.eq0`, `.sync`, `.mvl`, `.mvr`.
  // Throws Error for n = 0.
  TokenMachine make_tape(std::size_t n, std::string_view name,
                         std::string_view cell = "c");

  // Sum of 2^i over the set cells `<name>.<cell>i`.
  std::uint64_t tape_value(TokenMachine const& m, Config const& c,
                           std::string_view name, std::size_t n,
                           std::string_view cell = "c");

  // Cell indices of one counter inside some machine.
  struct CounterLayout {
    std::string              name;
    std::size_t              bits = 0;
    std::vector<std::size_t> d;     // S tape (head marker)
    std::vector<std::size_t> c;     // T tape (value bits)
    std::vector<std::size_t> cbar;  // complement tape

    // Looks the counter's cells up by label. Throws Error if missing.
    static CounterLayout locate(TokenMachine const& m, std::string_view name,
                                std::size_t bits);
  };

  struct Counter {
    TokenMachine  machine;
    CounterLayout layout;
  };

  // The eight instruction suffixes, in insertion order.
  std::vector<std::string> const& counter_instruction_suffixes();

  // n-bit binary counter: tapes `<name>.S` (cells d), `<name>.T` (c) and
  // `<name>.Tbar` (c), instructions `<name>.rotl`, `.rotr`, `.eq0`, `.eq1`,
  // `.sync`, `.off`, `.inc`, `.dec`. Throws Error for n = 0.
  Counter make_counter(std::size_t n, std::string_view name);

  // |R & S| = 1 and exactly one of c_i, cbar_i for every i.
  bool is_valid(CounterLayout const& l, Config const& c);
  // Throws Error on an invalid configuration.
  std::uint64_t counter_value(CounterLayout const& l, Config const& c);
  bool          is_synchronized(CounterLayout const& l, Config const& c);

  // The valid configuration with head at d_head and the given value.
  Config counter_config(TokenMachine const& m, CounterLayout const& l,
                        std::uint64_t value, std::size_t head = 0);

  // Partial identity asserting the value k, acting as the identity outside
  // the counter's T and Tbar cells. Throws Error unless k < 2^bits.
  PartialTransformation ival(TokenMachine const& m, CounterLayout const& l,
                             std::uint64_t k);
  std::string ival_name(std::string_view counter, std::uint64_t k);
  // Adds `<name>.val<k>` to the machine and returns its name.
  std::string add_ival(TokenMachine& m, CounterLayout const& l, std::uint64_t k);

  ProgramExpr program_reset(std::string_view counter);
  ProgramExpr program_inc(std::string_view counter);
  ProgramExpr program_dec(std::string_view counter);

  // All valid configurations of a standalone counter (every head position
  // and value).
  std::vector<Config> all_valid_configs(Counter const& counter);

}  // namespace greenstack

#endif  // GREENSTACK_COUNTER_HPP_
