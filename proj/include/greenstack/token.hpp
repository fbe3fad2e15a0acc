#ifndef GREENSTACK_TOKEN_HPP_
#define GREENSTACK_TOKEN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "greenstack/bitset.hpp"
#include "greenstack/core.hpp"

namespace greenstack {

  // A configuration is a set of cells.
  using Config = Bitset;

  // Cells with string labels and named instructions, each a partial
  // transformation on the cells. Instructions keep their insertion order,
  // which is the order every search in the library tries them in.
  class TokenMachine {
   public:
    TokenMachine() = default;
    explicit TokenMachine(std::vector<std::string> cell_labels);

    std::size_t cell_count() const noexcept {
      return labels_.size();
    }
    std::vector<std::string> const& cell_labels() const noexcept {
      return labels_;
    }
    std::optional<std::size_t> find_cell(std::string_view label) const;
    // Throws Error for an unknown label.
    std::size_t cell(std::string_view label) const;

    std::size_t instruction_count() const noexcept {
      return names_.size();
    }
    std::vector<std::string> const& instruction_names() const noexcept {
      return names_;
    }
    PartialTransformation const& instruction(std::size_t i) const noexcept {
      return instrs_[i];
    }
    std::optional<std::size_t>   find_instruction(std::string_view name) const;
    PartialTransformation const& instruction(std::string_view name) const;

    // Throws Error on a duplicate name or a degree mismatch.
    void add_instruction(std::string name, PartialTransformation f);
    // Throws Error if the name is unknown.
    void remove_instruction(std::string_view name);

    Config                   empty_config() const;
    Config                   config(std::vector<std::string> const& labels) const;
    std::vector<std::string> labels_of(Config const& c) const;

    friend bool operator==(TokenMachine const& a, TokenMachine const& b) {
      return a.labels_ == b.labels_ && a.names_ == b.names_
             && a.instrs_ == b.instrs_;
    }

   private:
    std::vector<std::string>                     labels_;
    std::unordered_map<std::string, std::size_t> cell_index_;
    std::vector<std::string>                     names_;
    std::vector<PartialTransformation>           instrs_;
    std::unordered_map<std::string, std::size_t> name_index_;

    void reindex_names();
  };

  Config apply(PartialTransformation const& f, Config const& c);
  // Throws Error for an unknown instruction.
  Config apply(TokenMachine const& m, Config const& c, std::string_view name);

  struct Trace {
    Config                   start;
    std::vector<std::string> word;
    std::vector<Config>      configs;  // configs[0] == start

    std::size_t length() const noexcept {
      return word.size();
    }
    Config const& final_config() const noexcept {
      return configs.back();
    }
    // Every configuration has the cardinality of the start.
    bool is_computation() const;
  };

  Trace run(TokenMachine const& m, Config const& start,
            std::vector<std::string> const& word);

  // Pairwise distinct configurations, and at every step each instruction
  // other than the one taken drops the cardinality. Throws Error if the
  // trace is not a computation.
  bool check_progressing(TokenMachine const& m, Trace const& trace);

  // Every instruction drops the cardinality of the final configuration.
  bool check_maximal(TokenMachine const& m, Trace const& trace);

  // Disjoint union of cell sets. Shared instruction names act on both
  // parts; a name known to one side only acts as the identity on the
  // other side's cells. Throws Error on a cell label collision.
  TokenMachine machine_union(TokenMachine const& a, TokenMachine const& b);

  // Sequential composition of the named instructions; the identity for
  // the empty word.
  PartialTransformation compose_instruction(TokenMachine const&             m,
                                            std::vector<std::string> const& word);

  // Whether `cells` is a sub-machine: every instruction preserving |R|
  // also preserves |R & cells|. Exhaustive over all configurations when
  // the machine has at most 16 cells, otherwise `samples` random
  // configurations from the given seed.
  bool check_submachine(TokenMachine const& m,
                        Config const&       cells,
                        std::size_t         samples = 2000,
                        std::uint64_t       seed    = 1);

  // The prefixes u_1, ..., u_l of the label of a maximal progressing
  // computation. Throws Error if the trace is not one.
  std::vector<std::vector<std::string>> rchain_words(TokenMachine const& m,
                                                     Trace const&        trace);

  // {"word": [...], "configs": [[labels...], ...], "computation": bool}
  std::string trace_json(TokenMachine const& m, Trace const& trace);

}  // namespace greenstack

#endif  // GREENSTACK_TOKEN_HPP_
