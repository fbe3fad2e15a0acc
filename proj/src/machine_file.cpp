#include "greenstack/machine_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace greenstack {

  ParseError::ParseError(std::size_t line, std::size_t column, std::string const& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
              + message),
        line_(line),
        column_(column) {}

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    std::vector<Token> split(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
          ++i;
        }
        if (i == line.size()) {
          break;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
          ++j;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
      }
      return out;
    }

    bool is_name(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char ch : s) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')
                  || (ch >= '0' && ch <= '9') || ch == '_' || ch == '.';
        if (!ok) {
          return false;
        }
      }
      return true;
    }

    std::optional<std::uint64_t> number(std::string_view s) {
      std::uint64_t v   = 0;
      auto          res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    }

    class Parser {
     public:
      MachineFile run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos     = 0;
        while (pos <= text.size()) {
          std::size_t end = text.find('\n', pos);
          if (end == std::string_view::npos) {
            end = text.size();
          }
          ++line_no;
          std::string_view line = text.substr(pos, end - pos);
          if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
          }
          line_ = line_no;
          directive(split(line));
          pos = end + 1;
        }
        if (!header_) {
          throw ParseError(line_no, 1, "missing `states` or `cells` header");
        }
        return std::move(mf_);
      }

     private:
      MachineFile                                  mf_;
      bool                                         header_ = false;
      std::size_t                                  line_   = 0;
      std::unordered_map<std::string, State>       cell_index_;
      std::unordered_set<std::string>              names_;

      [[noreturn]] void fail(std::size_t column, std::string const& msg) const {
        throw ParseError(line_, column, msg);
      }

      State entry(Token const& t) const {
        if (!mf_.cells.empty()) {
          if (auto it = cell_index_.find(std::string(t.text)); it != cell_index_.end()) {
            return it->second;
          }
        }
        auto v = number(t.text);
        if (!v) {
          fail(t.column, "expected a state, got '" + std::string(t.text) + "'");
        }
        if (*v >= mf_.state_count) {
          fail(t.column, "state " + std::to_string(*v) + " out of range (" +
                             std::to_string(mf_.state_count) + " states)");
        }
        return static_cast<State>(*v);
      }

      std::vector<State> entries(std::vector<Token> const& toks, std::size_t from) const {
        std::vector<State> out;
        for (std::size_t i = from; i < toks.size(); ++i) {
          out.push_back(entry(toks[i]));
        }
        return out;
      }

      void directive(std::vector<Token> const& toks) {
        if (toks.empty()) {
          return;
        }
        auto const& head = toks.front();
        if (head.text == "states" || head.text == "cells") {
          if (header_) {
            fail(head.column, "duplicate header");
          }
          header_ = true;
          if (head.text == "states") {
            if (toks.size() != 2) {
              fail(head.column, "`states` takes one count");
            }
            auto n = number(toks[1].text);
            if (!n) {
              fail(toks[1].column, "bad state count '" + std::string(toks[1].text) + "'");
            }
            mf_.state_count = *n;
          } else {
            for (std::size_t i = 1; i < toks.size(); ++i) {
              std::string label(toks[i].text);
              if (!cell_index_.emplace(label, static_cast<State>(i - 1)).second) {
                fail(toks[i].column, "duplicate cell '" + label + "'");
              }
              mf_.cells.push_back(std::move(label));
            }
            mf_.state_count = mf_.cells.size();
          }
          return;
        }
        if (!header_) {
          fail(head.column, "expected `states` or `cells` before '" + std::string(head.text)
                                + "'");
        }
        if (head.text == "gen") {
          if (toks.size() < 2 || toks[1].text.size() < 2 || toks[1].text.back() != ':') {
            fail(toks.size() < 2 ? head.column : toks[1].column, "expected `gen <name>:`");
          }
          std::string name(toks[1].text.substr(0, toks[1].text.size() - 1));
          if (!is_name(name)) {
            fail(toks[1].column, "bad generator name '" + name + "'");
          }
          if (!names_.insert(name).second) {
            fail(toks[1].column, "duplicate generator '" + name + "'");
          }
          if (toks.size() - 2 != mf_.state_count) {
            fail(toks[1].column, "generator '" + name + "' has " +
                                     std::to_string(toks.size() - 2) + " entries, expected " +
                                     std::to_string(mf_.state_count));
          }
          std::vector<State> m;
          for (std::size_t i = 2; i < toks.size(); ++i) {
            m.push_back(toks[i].text == "-" ? kUndefined : entry(toks[i]));
          }
          mf_.names.push_back(std::move(name));
          mf_.gens.emplace_back(std::move(m));
        } else if (head.text == "initial") {
          if (mf_.initial) {
            fail(head.column, "duplicate `initial`");
          }
          mf_.initial = entries(toks, 1);
        } else if (head.text == "final") {
          if (mf_.final) {
            fail(head.column, "duplicate `final`");
          }
          mf_.final = entries(toks, 1);
        } else {
          fail(head.column, "unknown directive '" + std::string(head.text) + "'");
        }
      }
    };

    std::string state_text(MachineFile const& mf, State q) {
      if (q == kUndefined) {
        return "-";
      }
      return mf.cells.empty() ? std::to_string(q) : mf.cells[q];
    }
  }  // namespace

  MachineFile parse_machine_file(std::string_view text) {
    return Parser().run(text);
  }

  MachineFile read_machine_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_machine_file(buf.str());
  }

  std::string emit_machine_file(MachineFile const& mf) {
    std::string out;
    if (mf.cells.empty()) {
      out += "states " + std::to_string(mf.state_count) + "\n";
    } else {
      out += "cells";
      for (auto const& c : mf.cells) {
        out += " " + c;
      }
      out += "\n";
    }
    for (std::size_t i = 0; i < mf.gens.size(); ++i) {
      out += "gen " + mf.names[i] + ":";
      for (State q : mf.gens[i].mapping()) {
        out += " " + state_text(mf, q);
      }
      out += "\n";
    }
    auto list = [&](char const* key, std::vector<State> const& qs) {
      out += key;
      for (State q : qs) {
        out += " " + state_text(mf, q);
      }
      out += "\n";
    };
    if (mf.initial) {
      list("initial", *mf.initial);
    }
    if (mf.final) {
      list("final", *mf.final);
    }
    return out;
  }

  TokenMachine to_token_machine(MachineFile const& mf) {
    std::vector<std::string> labels = mf.cells;
    if (labels.empty()) {
      for (std::size_t i = 0; i < mf.state_count; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    TokenMachine m(std::move(labels));
    for (std::size_t i = 0; i < mf.gens.size(); ++i) {
      m.add_instruction(mf.names[i], mf.gens[i]);
    }
    return m;
  }

  Config initial_config(MachineFile const& mf, TokenMachine const& m) {
    Config c = m.empty_config();
    if (mf.initial) {
      for (State q : *mf.initial) {
        c.set(q);
      }
    }
    return c;
  }

  MachineFile from_token_machine(TokenMachine const& m, std::optional<Config> const& initial) {
    MachineFile mf;
    mf.state_count = m.cell_count();
    mf.cells       = m.cell_labels();
    mf.names       = m.instruction_names();
    for (std::size_t i = 0; i < m.instruction_count(); ++i) {
      mf.gens.push_back(m.instruction(i));
    }
    if (initial) {
      std::vector<State> qs;
      initial->for_each([&](std::size_t q) { qs.push_back(static_cast<State>(q)); });
      mf.initial = std::move(qs);
    }
    return mf;
  }

  Automaton to_automaton(MachineFile const& mf) {
    if (!mf.initial || mf.initial->size() != 1) {
      throw Error("automaton: exactly one initial state required");
    }
    Automaton dfa;
    dfa.alphabet = mf.names;
    dfa.delta.assign(mf.state_count, std::vector<std::uint32_t>(mf.gens.size(), kUndefined));
    for (std::size_t a = 0; a < mf.gens.size(); ++a) {
      for (std::size_t q = 0; q < mf.state_count; ++q) {
        dfa.delta[q][a] = mf.gens[a][static_cast<State>(q)];
      }
    }
    dfa.initial = mf.initial->front();
    dfa.accepting.assign(mf.state_count, false);
    if (mf.final) {
      for (State q : *mf.final) {
        dfa.accepting[q] = true;
      }
    }
    return dfa;
  }

  MachineFile from_automaton(Automaton const& dfa) {
    MachineFile mf;
    mf.state_count = dfa.state_count();
    mf.names       = dfa.alphabet;
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      std::vector<State> m(dfa.state_count());
      for (std::size_t q = 0; q < dfa.state_count(); ++q) {
        m[q] = dfa.delta[q][a];
      }
      mf.gens.emplace_back(std::move(m));
    }
    if (dfa.initial != kUndefined) {
      mf.initial = std::vector<State>{dfa.initial};
    }
    std::vector<State> fin;
    for (std::size_t q = 0; q < dfa.accepting.size(); ++q) {
      if (dfa.accepting[q]) {
        fin.push_back(static_cast<State>(q));
      }
    }
    mf.final = std::move(fin);
    return mf;
  }

  MachineFile from_generators(std::vector<PartialTransformation> const& gens,
                              std::vector<std::string>                  names) {
    if (gens.empty()) {
      throw Error("machine file: no generators");
    }
    if (names.empty()) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                               : "g" + std::to_string(i));
      }
    }
    if (names.size() != gens.size()) {
      throw Error("machine file: name count differs from generator count");
    }
    MachineFile mf;
    mf.state_count = gens.front().degree();
    mf.names       = std::move(names);
    mf.gens        = gens;
    return mf;
  }

}  // namespace greenstack
