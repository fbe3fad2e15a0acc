#include "greenstack/programs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace greenstack {

  namespace program {
    ProgramExpr atom(std::string name) {
      ProgramExpr e;
      e.kind = ProgramExpr::Kind::kAtom;
      e.atom = std::move(name);
      return e;
    }

    ProgramExpr eps() {
      return ProgramExpr{};
    }

    ProgramExpr seq(std::vector<ProgramExpr> parts) {
      if (parts.empty()) {
        return eps();
      }
      if (parts.size() == 1) {
        return std::move(parts.front());
      }
      ProgramExpr e;
      e.kind     = ProgramExpr::Kind::kSeq;
      e.children = std::move(parts);
      return e;
    }

    ProgramExpr alt(std::vector<ProgramExpr> parts) {
      if (parts.empty()) {
        throw Error("program::alt: no alternatives");
      }
      if (parts.size() == 1) {
        return std::move(parts.front());
      }
      ProgramExpr e;
      e.kind     = ProgramExpr::Kind::kAlt;
      e.children = std::move(parts);
      return e;
    }

    namespace {
      ProgramExpr unary(ProgramExpr::Kind k, ProgramExpr child) {
        ProgramExpr e;
        e.kind = k;
        e.children.push_back(std::move(child));
        return e;
      }
    }  // namespace

    ProgramExpr star(ProgramExpr e) {
      return unary(ProgramExpr::Kind::kStar, std::move(e));
    }
    ProgramExpr plus(ProgramExpr e) {
      return unary(ProgramExpr::Kind::kPlus, std::move(e));
    }
    ProgramExpr opt(ProgramExpr e) {
      return unary(ProgramExpr::Kind::kOpt, std::move(e));
    }
  }  // namespace program

  namespace {

    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'
             || c == '.';
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      ProgramExpr parse() {
        ProgramExpr e = alternation();
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
      }

     private:
      std::string_view text_;
      std::size_t      pos_ = 0;

      [[noreturn]] void fail(std::string const& what) const {
        throw Error("program syntax error at column " + std::to_string(pos_ + 1)
                    + ": " + what);
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
          ++pos_;
        }
      }

      ProgramExpr alternation() {
        std::vector<ProgramExpr> parts{sequence()};
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == '|') {
          ++pos_;
          parts.push_back(sequence());
          skip_space();
        }
        return program::alt(std::move(parts));
      }

      ProgramExpr sequence() {
        std::vector<ProgramExpr> parts;
        while (true) {
          skip_space();
          if (pos_ == text_.size() || text_[pos_] == '|' || text_[pos_] == ')') {
            break;
          }
          parts.push_back(postfix());
        }
        return program::seq(std::move(parts));
      }

      ProgramExpr postfix() {
        ProgramExpr e = primary();
        while (pos_ < text_.size()) {
          char c = text_[pos_];
          if (c == '*') {
            e = program::star(std::move(e));
          } else if (c == '+') {
            e = program::plus(std::move(e));
          } else if (c == '?') {
            e = program::opt(std::move(e));
          } else {
            break;
          }
          ++pos_;
        }
        return e;
      }

      ProgramExpr primary() {
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          ProgramExpr e = alternation();
          skip_space();
          if (pos_ == text_.size() || text_[pos_] != ')') {
            fail("missing ')'");
          }
          ++pos_;
          return e;
        }
        if (!is_ident_char(c)) {
          fail("unexpected '" + std::string(1, c) + "'");
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
          ++pos_;
        }
        return program::atom(std::string(text_.substr(start, pos_ - start)));
      }
    };

    int precedence(ProgramExpr const& e) {
      switch (e.kind) {
        case ProgramExpr::Kind::kAlt:
          return 0;
        case ProgramExpr::Kind::kSeq:
          return 1;
        default:
          return 2;
      }
    }

    void print(ProgramExpr const& e, std::string& out) {
      auto wrapped = [&](ProgramExpr const& child, int min_prec) {
        if (precedence(child) < min_prec) {
          out += '(';
          print(child, out);
          out += ')';
        } else {
          print(child, out);
        }
      };
      switch (e.kind) {
        case ProgramExpr::Kind::kAtom:
          out += e.atom;
          break;
        case ProgramExpr::Kind::kEps:
          out += "()";
          break;
        case ProgramExpr::Kind::kSeq:
          for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i != 0) {
              out += ' ';
            }
            wrapped(e.children[i], 2);
          }
          break;
        case ProgramExpr::Kind::kAlt:
          for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i != 0) {
              out += " | ";
            }
            wrapped(e.children[i], 1);
          }
          break;
        case ProgramExpr::Kind::kStar:
        case ProgramExpr::Kind::kPlus:
        case ProgramExpr::Kind::kOpt: {
          auto const& c = e.children.front();
          if (c.kind == ProgramExpr::Kind::kAtom || c.kind == ProgramExpr::Kind::kEps) {
            print(c, out);
          } else {
            out += '(';
            print(c, out);
            out += ')';
          }
          out += e.kind == ProgramExpr::Kind::kStar   ? '*'
                 : e.kind == ProgramExpr::Kind::kPlus ? '+'
                                                      : '?';
          break;
        }
      }
    }

    void collect_atoms(ProgramExpr const&               e,
                       std::vector<std::string>&        out,
                       std::unordered_set<std::string>& seen) {
      if (e.kind == ProgramExpr::Kind::kAtom) {
        if (seen.insert(e.atom).second) {
          out.push_back(e.atom);
        }
        return;
      }
      for (auto const& c : e.children) {
        collect_atoms(c, out, seen);
      }
    }

  }  // namespace

  ProgramExpr parse_program(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(ProgramExpr const& e) {
    std::string out;
    print(e, out);
    return out;
  }

  std::vector<std::string> atoms(ProgramExpr const& e) {
    std::vector<std::string>        out;
    std::unordered_set<std::string> seen;
    collect_atoms(e, out, seen);
    return out;
  }

  std::uint32_t Automaton::letter(std::string_view name) const {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (alphabet[a] == name) {
        return static_cast<std::uint32_t>(a);
      }
    }
    throw Error("automaton: unknown letter '" + std::string(name) + "'");
  }

  namespace {

    class ThompsonBuilder {
     public:
      ThompsonBuilder(Nfa& nfa, std::unordered_map<std::string, std::uint32_t> const& letters)
          : nfa_(nfa), letters_(letters) {}

      std::pair<std::uint32_t, std::uint32_t> build(ProgramExpr const& e) {
        using K = ProgramExpr::Kind;
        switch (e.kind) {
          case K::kAtom: {
            auto it = letters_.find(e.atom);
            if (it == letters_.end()) {
              throw Error("compile: unknown instruction '" + e.atom + "'");
            }
            auto s = fresh();
            auto t = fresh();
            nfa_.edges[s].emplace_back(it->second, t);
            return {s, t};
          }
          case K::kEps: {
            auto s = fresh();
            auto t = fresh();
            eps(s, t);
            return {s, t};
          }
          case K::kSeq: {
            auto first = build(e.children.front());
            auto last  = first;
            for (std::size_t i = 1; i < e.children.size(); ++i) {
              auto next = build(e.children[i]);
              eps(last.second, next.first);
              last = next;
            }
            return {first.first, last.second};
          }
          case K::kAlt: {
            auto s = fresh();
            auto t = fresh();
            for (auto const& c : e.children) {
              auto f = build(c);
              eps(s, f.first);
              eps(f.second, t);
            }
            return {s, t};
          }
          case K::kStar:
          case K::kPlus:
          case K::kOpt: {
            auto f = build(e.children.front());
            auto s = fresh();
            auto t = fresh();
            eps(s, f.first);
            eps(f.second, t);
            if (e.kind != K::kPlus) {
              eps(s, t);
            }
            if (e.kind != K::kOpt) {
              eps(f.second, f.first);
            }
            return {s, t};
          }
        }
        throw Error("compile: malformed expression");
      }

     private:
      Nfa&                                                  nfa_;
      std::unordered_map<std::string, std::uint32_t> const& letters_;

      std::uint32_t fresh() {
        nfa_.epsilon.emplace_back();
        nfa_.edges.emplace_back();
        return static_cast<std::uint32_t>(nfa_.state_count++);
      }
      void eps(std::uint32_t s, std::uint32_t t) {
        nfa_.epsilon[s].push_back(t);
      }
    };

    // Sorted epsilon closure of a set of NFA states.
    std::vector<std::uint32_t> closure(Nfa const& nfa, std::vector<std::uint32_t> set) {
      std::vector<bool>          in(nfa.state_count, false);
      std::vector<std::uint32_t> todo;
      for (auto s : set) {
        if (!in[s]) {
          in[s] = true;
          todo.push_back(s);
        }
      }
      std::vector<std::uint32_t> out;
      while (!todo.empty()) {
        auto s = todo.back();
        todo.pop_back();
        out.push_back(s);
        for (auto t : nfa.epsilon[s]) {
          if (!in[t]) {
            in[t] = true;
            todo.push_back(t);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    struct VectorHash {
      std::size_t operator()(std::vector<std::uint32_t> const& v) const noexcept {
        return hash_mapping(v);
      }
    };

  }  // namespace

  Nfa compile(ProgramExpr const& e, std::vector<std::string> alphabet) {
    Nfa nfa;
    nfa.alphabet = std::move(alphabet);
    std::unordered_map<std::string, std::uint32_t> letters;
    for (std::size_t a = 0; a < nfa.alphabet.size(); ++a) {
      if (!letters.emplace(nfa.alphabet[a], static_cast<std::uint32_t>(a)).second) {
        throw Error("compile: duplicate letter '" + nfa.alphabet[a] + "'");
      }
    }
    ThompsonBuilder b(nfa, letters);
    auto            f = b.build(e);
    nfa.initial       = f.first;
    nfa.final         = f.second;
    return nfa;
  }

  Nfa compile(ProgramExpr const& e) {
    return compile(e, atoms(e));
  }

  bool accepts(Nfa const& nfa, LetterWord const& word) {
    auto cur = closure(nfa, {nfa.initial});
    for (auto a : word) {
      std::vector<std::uint32_t> next;
      for (auto s : cur) {
        for (auto [l, t] : nfa.edges[s]) {
          if (l == a) {
            next.push_back(t);
          }
        }
      }
      cur = closure(nfa, std::move(next));
      if (cur.empty()) {
        return false;
      }
    }
    return std::binary_search(cur.begin(), cur.end(), nfa.final);
  }

  bool accepts(Automaton const& dfa, LetterWord const& word) {
    if (dfa.empty()) {
      return false;
    }
    std::uint32_t q = dfa.initial;
    for (auto a : word) {
      if (a >= dfa.alphabet.size()) {
        return false;
      }
      q = dfa.delta[q][a];
      if (q == kUndefined) {
        return false;
      }
    }
    return dfa.accepting[q];
  }

  bool accepts(Automaton const& dfa, std::vector<std::string> const& word) {
    LetterWord w;
    for (auto const& name : word) {
      auto it = std::find(dfa.alphabet.begin(), dfa.alphabet.end(), name);
      if (it == dfa.alphabet.end()) {
        return false;
      }
      w.push_back(static_cast<std::uint32_t>(it - dfa.alphabet.begin()));
    }
    return accepts(dfa, w);
  }

  Automaton determinize_minimize(Nfa const& nfa) {
    Automaton   dfa;
    dfa.alphabet        = nfa.alphabet;
    std::size_t const k = nfa.alphabet.size();
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> ids;
    std::vector<std::vector<std::uint32_t>> sets;

    auto intern = [&](std::vector<std::uint32_t> set) {
      auto it = ids.find(set);
      if (it != ids.end()) {
        return it->second;
      }
      auto id = static_cast<std::uint32_t>(sets.size());
      dfa.accepting.push_back(std::binary_search(set.begin(), set.end(), nfa.final));
      dfa.delta.emplace_back(k, kUndefined);
      ids.emplace(set, id);
      sets.push_back(std::move(set));
      return id;
    };
    dfa.initial = intern(closure(nfa, {nfa.initial}));
    std::vector<std::vector<std::uint32_t>> targets(k);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (auto& t : targets) {
        t.clear();
      }
      for (auto s : sets[i]) {
        for (auto [l, t] : nfa.edges[s]) {
          targets[l].push_back(t);
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        if (targets[a].empty()) {
          continue;
        }
        auto id        = intern(closure(nfa, targets[a]));
        dfa.delta[i][a] = id;
      }
    }
    return minimize(dfa);
  }

  Automaton minimize(Automaton const& dfa) {
    Automaton out;
    out.alphabet = dfa.alphabet;
    if (dfa.empty()) {
      return out;
    }
    std::size_t const k    = dfa.alphabet.size();
    std::size_t const n    = dfa.state_count() + 1;  // plus an explicit sink
    auto const        sink = static_cast<std::uint32_t>(n - 1);
    auto step = [&](std::uint32_t q, std::size_t a) -> std::uint32_t {
      if (q == sink) {
        return sink;
      }
      auto t = dfa.delta[q][a];
      return t == kUndefined ? sink : t;
    };

    // predecessors per letter, in compressed form
    std::vector<std::vector<std::uint32_t>> pred_start(k, std::vector<std::uint32_t>(n + 1, 0));
    std::vector<std::vector<std::uint32_t>> pred(k, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < k; ++a) {
      auto& ps = pred_start[a];
      for (std::uint32_t q = 0; q < n; ++q) {
        ++ps[step(q, a) + 1];
      }
      for (std::size_t i = 0; i < n; ++i) {
        ps[i + 1] += ps[i];
      }
      std::vector<std::uint32_t> fill(ps.begin(), ps.end() - 1);
      for (std::uint32_t q = 0; q < n; ++q) {
        pred[a][fill[step(q, a)]++] = q;
      }
    }

    // Hopcroft partition refinement
    std::vector<std::uint32_t>              block_of(n);
    std::vector<std::vector<std::uint32_t>> blocks;
    {
      std::vector<std::uint32_t> acc, rej;
      for (std::uint32_t q = 0; q < n; ++q) {
        bool a = q != sink && dfa.accepting[q];
        (a ? acc : rej).push_back(q);
      }
      for (auto* b : {&acc, &rej}) {
        if (!b->empty()) {
          for (auto q : *b) {
            block_of[q] = static_cast<std::uint32_t>(blocks.size());
          }
          blocks.push_back(std::move(*b));
        }
      }
    }
    std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
    std::vector<std::vector<bool>>                      in_work;
    auto add_work = [&](std::uint32_t b, std::uint32_t a) {
      if (in_work.size() <= b) {
        in_work.resize(b + 1, std::vector<bool>(k, false));
      }
      if (!in_work[b][a]) {
        in_work[b][a] = true;
        work.emplace_back(b, a);
      }
    };
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
      for (std::uint32_t a = 0; a < k; ++a) {
        add_work(b, a);
      }
    }
    std::vector<std::uint32_t> hits(n, 0);
    std::vector<std::uint32_t> touched;
    std::vector<bool>          marked(n, false);
    while (!work.empty()) {
      auto [b, a] = work.front();
      work.pop_front();
      in_work[b][a] = false;
      std::vector<std::uint32_t> xs;
      for (auto q : blocks[b]) {
        for (auto i = pred_start[a][q]; i < pred_start[a][q + 1]; ++i) {
          xs.push_back(pred[a][i]);
        }
      }
      touched.clear();
      for (auto p : xs) {
        marked[p] = true;
        auto y    = block_of[p];
        if (hits[y]++ == 0) {
          touched.push_back(y);
        }
      }
      for (auto y : touched) {
        if (hits[y] < blocks[y].size()) {
          std::vector<std::uint32_t> in, outside;
          for (auto q : blocks[y]) {
            (marked[q] ? in : outside).push_back(q);
          }
          auto z = static_cast<std::uint32_t>(blocks.size());
          // the new block takes the marked part
          blocks[y] = std::move(outside);
          for (auto q : in) {
            block_of[q] = z;
          }
          blocks.push_back(std::move(in));
          for (std::uint32_t c = 0; c < k; ++c) {
            bool y_pending = in_work.size() > y && in_work[y][c];
            if (y_pending || blocks[z].size() <= blocks[y].size()) {
              add_work(z, c);
            } else {
              add_work(y, c);
            }
          }
        }
        hits[y] = 0;
      }
      for (auto p : xs) {
        marked[p] = false;
      }
    }

    // quotient, then keep states that are reachable and co-reachable
    std::size_t const                       nb = blocks.size();
    std::vector<std::vector<std::uint32_t>> qdelta(nb, std::vector<std::uint32_t>(k));
    std::vector<bool>                       qacc(nb, false);
    for (std::uint32_t b = 0; b < nb; ++b) {
      auto q  = blocks[b].front();
      qacc[b] = q != sink && dfa.accepting[q];
      for (std::uint32_t a = 0; a < k; ++a) {
        qdelta[b][a] = block_of[step(q, a)];
      }
    }
    std::vector<bool>                       live(nb, false);
    std::vector<std::vector<std::uint32_t>> rev(nb);
    for (std::uint32_t b = 0; b < nb; ++b) {
      for (std::uint32_t a = 0; a < k; ++a) {
        rev[qdelta[b][a]].push_back(b);
      }
    }
    std::vector<std::uint32_t> todo;
    for (std::uint32_t b = 0; b < nb; ++b) {
      if (qacc[b]) {
        live[b] = true;
        todo.push_back(b);
      }
    }
    while (!todo.empty()) {
      auto b = todo.back();
      todo.pop_back();
      for (auto p : rev[b]) {
        if (!live[p]) {
          live[p] = true;
          todo.push_back(p);
        }
      }
    }
    auto init = block_of[dfa.initial];
    if (!live[init]) {
      return out;
    }
    std::vector<std::uint32_t> renumber(nb, kUndefined);
    std::deque<std::uint32_t>  bfs{init};
    renumber[init] = 0;
    std::vector<std::uint32_t> order{init};
    while (!bfs.empty()) {
      auto b = bfs.front();
      bfs.pop_front();
      for (std::uint32_t a = 0; a < k; ++a) {
        auto t = qdelta[b][a];
        if (live[t] && renumber[t] == kUndefined) {
          renumber[t] = static_cast<std::uint32_t>(order.size());
          order.push_back(t);
          bfs.push_back(t);
        }
      }
    }
    out.initial = 0;
    out.delta.assign(order.size(), std::vector<std::uint32_t>(k, kUndefined));
    out.accepting.assign(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto b           = order[i];
      out.accepting[i] = qacc[b];
      for (std::uint32_t a = 0; a < k; ++a) {
        auto t = qdelta[b][a];
        if (live[t]) {
          out.delta[i][a] = renumber[t];
        }
      }
    }
    return out;
  }

  Automaton compile_minimal(ProgramExpr const& e, std::vector<std::string> alphabet) {
    return determinize_minimize(compile(e, std::move(alphabet)));
  }

  std::string_view to_string(RunStatus s) noexcept {
    switch (s) {
      case RunStatus::kFound:
        return "found";
      case RunStatus::kNotFound:
        return "not-found";
      case RunStatus::kBudgetExceeded:
        return "budget-exceeded";
    }
    return "?";
  }

  std::size_t default_budget() {
    char const* env = std::getenv("GREENSTACK_BUDGET");
    if (env == nullptr || *env == '\0') {
      return kDefaultBudget;
    }
    std::size_t      v   = 0;
    std::string_view s   = env;
    auto             res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0) {
      throw Error("GREENSTACK_BUDGET must be a positive integer, got '"
                  + std::string(s) + "'");
    }
    return v;
  }

  namespace {

    // Automaton letters paired with machine instructions, in machine order.
    std::vector<std::pair<std::uint32_t, std::size_t>>
    bind_letters(TokenMachine const& m, Automaton const& program) {
      std::vector<std::pair<std::uint32_t, std::size_t>> out;
      for (std::size_t a = 0; a < program.alphabet.size(); ++a) {
        auto i = m.find_instruction(program.alphabet[a]);
        if (!i) {
          throw Error("program letter '" + program.alphabet[a]
                      + "' is not an instruction of the machine");
        }
        out.emplace_back(static_cast<std::uint32_t>(a), *i);
      }
      std::sort(out.begin(), out.end(),
                [](auto const& x, auto const& y) { return x.second < y.second; });
      return out;
    }

    struct NodeKey {
      std::uint32_t state;
      Config        config;
      bool          operator==(NodeKey const&) const = default;
    };

    struct NodeKeyHash {
      std::size_t operator()(NodeKey const& k) const noexcept {
        return k.config.hash() ^ (std::size_t{k.state} * 0x9e3779b97f4a7c15ULL);
      }
    };

  }  // namespace

  RunResult deterministic_run(TokenMachine const& m,
                              Config const&       start,
                              Automaton const&    program,
                              std::size_t         budget) {
    RunResult result;
    if (program.empty()) {
      return result;
    }
    auto const        letters = bind_letters(m, program);
    std::size_t const k       = start.count();

    struct Frame {
      std::uint32_t state;
      Config        config;
      std::size_t   next;
      std::uint32_t via;  // letter that led here
    };
    std::vector<Frame>                           stack;
    std::unordered_set<NodeKey, NodeKeyHash>     visited;
    auto finish = [&]() {
      result.status      = RunStatus::kFound;
      result.trace.start = start;
      for (std::size_t i = 0; i < stack.size(); ++i) {
        if (i != 0) {
          result.trace.word.push_back(program.alphabet[stack[i].via]);
        }
        result.trace.configs.push_back(stack[i].config);
      }
      return result;
    };

    stack.push_back({program.initial, start, 0, kUndefined});
    visited.insert({program.initial, start});
    result.nodes = 1;
    if (program.accepting[program.initial]) {
      return finish();
    }
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == letters.size()) {
        stack.pop_back();
        continue;
      }
      auto [a, instr] = letters[top.next++];
      auto target     = program.delta[top.state][a];
      if (target == kUndefined) {
        continue;
      }
      Config next = apply(m.instruction(instr), top.config);
      if (next.count() < k) {
        continue;
      }
      if (!visited.insert({target, next}).second) {
        continue;
      }
      if (++result.nodes > budget) {
        result.status = RunStatus::kBudgetExceeded;
        return result;
      }
      stack.push_back({target, std::move(next), 0, a});
      if (program.accepting[target]) {
        return finish();
      }
    }
    result.status = RunStatus::kNotFound;
    return result;
  }

  namespace {
    void count_words(TokenMachine const&                                      m,
                     Automaton const&                                         program,
                     std::vector<std::pair<std::uint32_t, std::size_t>> const& letters,
                     std::uint32_t                                            state,
                     Config const&                                            config,
                     std::size_t                                              k,
                     std::size_t                                              depth_left,
                     std::size_t&                                             count) {
      if (program.accepting[state]) {
        ++count;
      }
      if (depth_left == 0) {
        return;
      }
      for (auto [a, instr] : letters) {
        auto target = program.delta[state][a];
        if (target == kUndefined) {
          continue;
        }
        Config next = apply(m.instruction(instr), config);
        if (next.count() < k) {
          continue;
        }
        count_words(m, program, letters, target, next, k, depth_left - 1, count);
      }
    }
  }  // namespace

  std::size_t count_preserving_words(TokenMachine const& m,
                                     Config const&       start,
                                     Automaton const&    program,
                                     std::size_t         max_len) {
    if (program.empty()) {
      return 0;
    }
    auto        letters = bind_letters(m, program);
    std::size_t count   = 0;
    count_words(m, program, letters, program.initial, start, start.count(), max_len, count);
    return count;
  }

  bool check_deterministic_bounded(TokenMachine const& m,
                                   Config const&       start,
                                   Automaton const&    program,
                                   std::size_t         max_len) {
    return count_preserving_words(m, start, program, max_len) <= 1;
  }

}  // namespace greenstack
