#include "greenstack/token.hpp"

#include <random>
#include <unordered_set>

#include "json.hpp"

namespace greenstack {

  TokenMachine::TokenMachine(std::vector<std::string> cell_labels)
      : labels_(std::move(cell_labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!cell_index_.emplace(labels_[i], i).second) {
        throw Error("token machine: duplicate cell label '" + labels_[i] + "'");
      }
    }
  }

  std::optional<std::size_t> TokenMachine::find_cell(std::string_view label) const {
    auto it = cell_index_.find(std::string(label));
    if (it == cell_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t TokenMachine::cell(std::string_view label) const {
    if (auto i = find_cell(label)) {
      return *i;
    }
    throw Error("token machine: unknown cell '" + std::string(label) + "'");
  }

  std::optional<std::size_t>
  TokenMachine::find_instruction(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  PartialTransformation const&
  TokenMachine::instruction(std::string_view name) const {
    if (auto i = find_instruction(name)) {
      return instrs_[*i];
    }
    throw Error("token machine: unknown instruction '" + std::string(name) + "'");
  }

  void TokenMachine::add_instruction(std::string name, PartialTransformation f) {
    if (f.degree() != labels_.size()) {
      throw Error("token machine: instruction '" + name + "' has degree "
                  + std::to_string(f.degree()) + ", expected "
                  + std::to_string(labels_.size()));
    }
    if (name_index_.count(name) != 0) {
      throw Error("token machine: duplicate instruction '" + name + "'");
    }
    name_index_.emplace(name, names_.size());
    names_.push_back(std::move(name));
    instrs_.push_back(std::move(f));
  }

  void TokenMachine::remove_instruction(std::string_view name) {
    auto i = find_instruction(name);
    if (!i) {
      throw Error("token machine: unknown instruction '" + std::string(name) + "'");
    }
    names_.erase(names_.begin() + static_cast<std::ptrdiff_t>(*i));
    instrs_.erase(instrs_.begin() + static_cast<std::ptrdiff_t>(*i));
    reindex_names();
  }

  void TokenMachine::reindex_names() {
    name_index_.clear();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      name_index_.emplace(names_[i], i);
    }
  }

  Config TokenMachine::empty_config() const {
    return Config(labels_.size());
  }

  Config TokenMachine::config(std::vector<std::string> const& labels) const {
    Config c = empty_config();
    for (auto const& l : labels) {
      c.set(cell(l));
    }
    return c;
  }

  std::vector<std::string> TokenMachine::labels_of(Config const& c) const {
    std::vector<std::string> out;
    c.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    std::sort(out.begin(), out.end());
    return out;
  }

  Config apply(PartialTransformation const& f, Config const& c) {
    Config out(c.size());
    c.for_each([&](std::size_t i) {
      State s = f[static_cast<State>(i)];
      if (s != kUndefined) {
        out.set(s);
      }
    });
    return out;
  }

  Config apply(TokenMachine const& m, Config const& c, std::string_view name) {
    return apply(m.instruction(name), c);
  }

  bool Trace::is_computation() const {
    std::size_t const k = start.count();
    for (auto const& c : configs) {
      if (c.count() != k) {
        return false;
      }
    }
    return true;
  }

  Trace run(TokenMachine const& m, Config const& start,
            std::vector<std::string> const& word) {
    Trace t;
    t.start = start;
    t.word  = word;
    t.configs.push_back(start);
    for (auto const& name : word) {
      t.configs.push_back(apply(m, t.configs.back(), name));
    }
    return t;
  }

  namespace {
    void require_computation(Trace const& trace, char const* who) {
      if (!trace.is_computation()) {
        throw Error(std::string(who) + ": trace is not a computation");
      }
    }
  }  // namespace

  bool check_progressing(TokenMachine const& m, Trace const& trace) {
    require_computation(trace, "check_progressing");
    std::unordered_set<Config, BitsetHash> seen;
    for (auto const& c : trace.configs) {
      if (!seen.insert(c).second) {
        return false;
      }
    }
    std::size_t const k = trace.start.count();
    for (std::size_t i = 0; i < trace.length(); ++i) {
      auto taken = m.find_instruction(trace.word[i]);
      for (std::size_t j = 0; j < m.instruction_count(); ++j) {
        if (taken && j == *taken) {
          continue;
        }
        if (apply(m.instruction(j), trace.configs[i]).count() >= k) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_maximal(TokenMachine const& m, Trace const& trace) {
    require_computation(trace, "check_maximal");
    std::size_t const k = trace.start.count();
    for (std::size_t j = 0; j < m.instruction_count(); ++j) {
      if (apply(m.instruction(j), trace.final_config()).count() >= k) {
        return false;
      }
    }
    return true;
  }

  TokenMachine machine_union(TokenMachine const& a, TokenMachine const& b) {
    std::vector<std::string> labels = a.cell_labels();
    for (auto const& l : b.cell_labels()) {
      if (a.find_cell(l)) {
        throw Error("machine_union: cell label '" + l + "' occurs in both machines");
      }
      labels.push_back(l);
    }
    std::size_t const na = a.cell_count();
    std::size_t const nb = b.cell_count();
    TokenMachine      u(std::move(labels));

    auto combined = [&](std::string const& name) {
      std::vector<State> m(na + nb);
      auto               ia = a.find_instruction(name);
      auto               ib = b.find_instruction(name);
      for (std::size_t q = 0; q < na; ++q) {
        m[q] = ia ? a.instruction(*ia)[static_cast<State>(q)] : static_cast<State>(q);
      }
      for (std::size_t q = 0; q < nb; ++q) {
        State s = ib ? b.instruction(*ib)[static_cast<State>(q)] : static_cast<State>(q);
        m[na + q] = s == kUndefined ? kUndefined : static_cast<State>(na + s);
      }
      return PartialTransformation(std::move(m));
    };
    for (auto const& name : a.instruction_names()) {
      u.add_instruction(name, combined(name));
    }
    for (auto const& name : b.instruction_names()) {
      if (!a.find_instruction(name)) {
        u.add_instruction(name, combined(name));
      }
    }
    return u;
  }

  PartialTransformation compose_instruction(TokenMachine const&             m,
                                            std::vector<std::string> const& word) {
    PartialTransformation f = PartialTransformation::identity(m.cell_count());
    for (auto const& name : word) {
      f = compose(f, m.instruction(name));
    }
    return f;
  }

  bool check_submachine(TokenMachine const& m,
                        Config const&       cells,
                        std::size_t         samples,
                        std::uint64_t       seed) {
    std::size_t const n = m.cell_count();
    auto ok = [&](Config const& r) {
      std::size_t const k  = r.count();
      Config const      rs = r & cells;
      std::size_t const ks = rs.count();
      for (std::size_t j = 0; j < m.instruction_count(); ++j) {
        auto const& f = m.instruction(j);
        if (apply(f, r).count() == k && apply(f, rs).count() != ks) {
          return false;
        }
      }
      return true;
    };
    if (n <= 16) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Config r(n);
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1U) {
            r.set(i);
          }
        }
        if (!ok(r)) {
          return false;
        }
      }
      return true;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      Config r(n);
      // vary the density so that small and large configurations both occur
      std::uniform_int_distribution<std::uint64_t> pick(0, 15);
      std::uint64_t const                          density = pick(rng);
      for (std::size_t i = 0; i < n; ++i) {
        if (pick(rng) < density) {
          r.set(i);
        }
      }
      if (!ok(r)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<std::string>> rchain_words(TokenMachine const& m,
                                                     Trace const&        trace) {
    if (!check_progressing(m, trace) || !check_maximal(m, trace)) {
      throw Error("rchain_words: computation is not maximal and progressing");
    }
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 1; i <= trace.length(); ++i) {
      out.emplace_back(trace.word.begin(),
                       trace.word.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return out;
  }

  std::string trace_json(TokenMachine const& m, Trace const& trace) {
    nlohmann::json out;
    out["word"]        = trace.word;
    out["computation"] = trace.is_computation();
    nlohmann::json cs  = nlohmann::json::array();
    for (auto const& c : trace.configs) {
      cs.push_back(m.labels_of(c));
    }
    out["configs"] = std::move(cs);
    return out.dump(2);
  }

}  // namespace greenstack
