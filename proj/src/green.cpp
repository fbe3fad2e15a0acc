#include "greenstack/green.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace greenstack {

  std::string_view to_string(Relation kind) noexcept {
    switch (kind) {
      case Relation::R:
        return "R";
      case Relation::L:
        return "L";
      case Relation::J:
        return "J";
    }
    return "?";
  }

  Relation parse_relation(std::string_view text) {
    if (text == "R" || text == "r") {
      return Relation::R;
    }
    if (text == "L" || text == "l") {
      return Relation::L;
    }
    if (text == "J" || text == "j") {
      return Relation::J;
    }
    throw Error("unknown relation '" + std::string(text)
                + "' (expected R, L or J)");
  }

  namespace {

    // Out-edges of element s in the Cayley graph of the given kind.
    template <typename F>
    void for_each_edge(SemigroupTable const& t, Relation kind, std::size_t s,
                       F&& f) {
      auto const k = static_cast<Letter>(t.generator_count());
      if (kind != Relation::L) {
        for (Letter a = 0; a < k; ++a) {
          f(t.right(s, a));
        }
      }
      if (kind != Relation::R) {
        for (Letter a = 0; a < k; ++a) {
          f(t.left(s, a));
        }
      }
    }

    // Iterative Tarjan. Returns component ids in emission order: a
    // component is emitted only after every component reachable from it.
    std::vector<std::uint32_t> tarjan(SemigroupTable const& t,
                                      Relation              kind,
                                      std::uint32_t&        component_count) {
      std::size_t const          n = t.size();
      std::vector<std::uint32_t> index(n, kUndefined);
      std::vector<std::uint32_t> low(n, 0);
      std::vector<std::uint32_t> comp(n, kUndefined);
      std::vector<bool>          on_stack(n, false);
      std::vector<std::uint32_t> stack;
      std::vector<std::uint32_t> succ;
      struct Frame {
        std::uint32_t              node;
        std::vector<std::uint32_t> succ;
        std::size_t                next;
      };
      std::vector<Frame> call;
      std::uint32_t      counter = 0;
      component_count          = 0;

      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUndefined) {
          continue;
        }
        auto push = [&](std::uint32_t v) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          Frame f{v, {}, 0};
          for_each_edge(t, kind, v, [&f](std::uint32_t w) { f.succ.push_back(w); });
          call.push_back(std::move(f));
        };
        push(static_cast<std::uint32_t>(root));
        while (!call.empty()) {
          Frame& f = call.back();
          if (f.next < f.succ.size()) {
            std::uint32_t w = f.succ[f.next++];
            if (index[w] == kUndefined) {
              push(w);
            } else if (on_stack[w]) {
              low[f.node] = std::min(low[f.node], index[w]);
            }
            continue;
          }
          std::uint32_t v = f.node;
          if (low[v] == index[v]) {
            std::uint32_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = component_count;
            } while (w != v);
            ++component_count;
          }
          call.pop_back();
          if (!call.empty()) {
            std::uint32_t parent = call.back().node;
            low[parent]          = std::min(low[parent], low[v]);
          }
        }
      }
      return comp;
    }

  }  // namespace

  GreenStructure green_classes(SemigroupTable const& table, Relation kind) {
    GreenStructure gs;
    gs.kind = kind;
    std::uint32_t count = 0;
    auto          comp  = tarjan(table, kind, count);

    // renumber by smallest member
    std::vector<std::uint32_t> renumber(count, kUndefined);
    gs.class_of.resize(table.size());
    for (std::size_t s = 0; s < table.size(); ++s) {
      auto& r = renumber[comp[s]];
      if (r == kUndefined) {
        r = static_cast<std::uint32_t>(gs.representative.size());
        gs.representative.push_back(static_cast<std::uint32_t>(s));
      }
      gs.class_of[s] = r;
    }

    gs.below.assign(count, {});
    for (std::size_t s = 0; s < table.size(); ++s) {
      std::uint32_t cs = gs.class_of[s];
      for_each_edge(table, kind, s, [&](std::uint32_t w) {
        std::uint32_t cw = gs.class_of[w];
        if (cw != cs) {
          gs.below[cs].push_back(cw);
        }
      });
    }
    for (auto& b : gs.below) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    // emission order of Tarjan is reverse topological
    gs.topological_order.resize(count);
    for (std::uint32_t old = 0; old < count; ++old) {
      gs.topological_order[count - 1 - old] = renumber[old];
    }
    gs.chain_length.assign(count, 1);
    for (auto it = gs.topological_order.rbegin();
         it != gs.topological_order.rend();
         ++it) {
      std::uint32_t c = *it;
      for (std::uint32_t d : gs.below[c]) {
        gs.chain_length[c] = std::max(gs.chain_length[c], gs.chain_length[d] + 1);
      }
    }
    gs.height = 0;
    for (auto h : gs.chain_length) {
      gs.height = std::max<std::size_t>(gs.height, h);
    }
    return gs;
  }

  std::size_t height(GreenStructure const& gs) noexcept {
    return gs.height;
  }

  std::vector<std::uint32_t> longest_chain(GreenStructure const& gs) {
    std::vector<std::uint32_t> chain;
    if (gs.class_count() == 0) {
      return chain;
    }
    std::uint32_t cur = 0;
    for (std::uint32_t c = 0; c < gs.class_count(); ++c) {
      if (gs.chain_length[c] > gs.chain_length[cur]) {
        cur = c;
      }
    }
    while (true) {
      chain.push_back(gs.representative[cur]);
      if (gs.chain_length[cur] == 1) {
        break;
      }
      std::uint32_t next = kUndefined;
      for (std::uint32_t d : gs.below[cur]) {
        if (gs.chain_length[d] + 1 == gs.chain_length[cur]) {
          next = d;  // below is sorted, first hit is the lowest index
          break;
        }
      }
      cur = next;
    }
    return chain;
  }

  Bitset classes_below(GreenStructure const& gs, std::uint32_t cls) {
    Bitset                     seen(gs.class_count());
    std::vector<std::uint32_t> todo{cls};
    seen.set(cls);
    while (!todo.empty()) {
      std::uint32_t c = todo.back();
      todo.pop_back();
      for (std::uint32_t d : gs.below[c]) {
        if (!seen.test(d)) {
          seen.set(d);
          todo.push_back(d);
        }
      }
    }
    return seen;
  }

  bool leq(GreenStructure const& gs, std::size_t s, std::size_t t) {
    return classes_below(gs, gs.class_of[t]).test(gs.class_of[s]);
  }

  namespace {
    bool equal_mapping(std::span<State const> a, std::span<State const> b) {
      return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
  }  // namespace

  bool oracle_leq(SemigroupTable const& table,
                  std::size_t           s,
                  std::size_t           t,
                  Relation              kind) {
    if (s == t) {
      return true;  // empty word
    }
    std::size_t const  n = table.degree();
    std::vector<State> tu(n), utv(n);
    auto               target = table.element(s);
    auto               tt     = table.element(t);
    switch (kind) {
      case Relation::R:
        for (std::size_t u = 0; u < table.size(); ++u) {
          compose_into(tt, table.element(u), tu);
          if (equal_mapping(tu, target)) {
            return true;
          }
        }
        return false;
      case Relation::L:
        for (std::size_t u = 0; u < table.size(); ++u) {
          compose_into(table.element(u), tt, tu);
          if (equal_mapping(tu, target)) {
            return true;
          }
        }
        return false;
      case Relation::J: {
        // u ranges over S^1: the adjoined identity is the first candidate
        for (std::size_t u = 0; u <= table.size(); ++u) {
          if (u == table.size()) {
            std::copy(tt.begin(), tt.end(), tu.begin());
          } else {
            compose_into(table.element(u), tt, tu);
          }
          if (equal_mapping(tu, target)) {
            return true;
          }
          for (std::size_t v = 0; v < table.size(); ++v) {
            compose_into(tu, table.element(v), utv);
            if (equal_mapping(utv, target)) {
              return true;
            }
          }
        }
        return false;
      }
    }
    return false;
  }

  std::vector<Bitset> oracle_ideals(SemigroupTable const& table,
                                    Relation              kind) {
    std::size_t const   m = table.size();
    std::size_t const   n = table.degree();
    std::vector<State>  buf(n);
    auto one_sided = [&](bool right) {
      std::vector<Bitset> ideals(m, Bitset(m));
      for (std::size_t t = 0; t < m; ++t) {
        ideals[t].set(t);
        for (std::size_t u = 0; u < m; ++u) {
          if (right) {
            compose_into(table.element(t), table.element(u), buf);
          } else {
            compose_into(table.element(u), table.element(t), buf);
          }
          auto found = table.find(buf);
          if (!found) {
            throw Error("oracle_ideals: table is not closed");
          }
          ideals[t].set(*found);
        }
      }
      return ideals;
    };
    if (kind == Relation::R) {
      return one_sided(true);
    }
    if (kind == Relation::L) {
      return one_sided(false);
    }
    auto                right = one_sided(true);
    auto                left  = one_sided(false);
    std::vector<Bitset> ideals(m, Bitset(m));
    for (std::size_t t = 0; t < m; ++t) {
      left[t].for_each([&](std::size_t y) { ideals[t] |= right[y]; });
    }
    return ideals;
  }

  std::vector<std::uint32_t>
  classes_from_ideals(std::vector<Bitset> const& ideals) {
    std::size_t const          m = ideals.size();
    std::vector<std::uint32_t> cls(m, kUndefined);
    std::uint32_t              next = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (cls[s] != kUndefined) {
        continue;
      }
      cls[s] = next;
      for (std::size_t t = s + 1; t < m; ++t) {
        if (cls[t] == kUndefined && ideals[s].test(t) && ideals[t].test(s)) {
          cls[t] = next;
        }
      }
      ++next;
    }
    return cls;
  }

  bool check_distinct_images_along_chain(
      SemigroupTable const&             table,
      std::vector<std::uint32_t> const& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      std::uint32_t upper = chain[i];
      std::uint32_t lower = chain[i + 1];
      if (!oracle_leq(table, lower, upper, Relation::R)
          || oracle_leq(table, upper, lower, Relation::R)) {
        throw Error("check_distinct_images_along_chain: chain is not "
                    "strictly descending at position "
                    + std::to_string(i + 1));
      }
    }
    std::vector<std::vector<State>> images;
    for (std::uint32_t u : chain) {
      images.push_back(image(table.transformation(u)));
    }
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
  }

  PartialTransformation equal_image_witness(PartialTransformation const& x,
                                            PartialTransformation const& y) {
    if (x.degree() != y.degree()) {
      throw Error("equal_image_witness: degrees differ");
    }
    if (image(x) != image(compose(x, y))) {
      throw Error("equal_image_witness: Q.x differs from Q.xy");
    }
    std::size_t const n = x.degree();
    if (n > 20) {
      throw Error("equal_image_witness: degree too large for n!");
    }
    std::uint64_t omega = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
      omega *= k;
    }
    if (omega == 1) {
      return PartialTransformation::identity(n);
    }
    return power(y, omega - 1);
  }

  bool relations_agree_on_isolated_subsemigroup(
      SemigroupTable const&             big,
      std::vector<std::uint32_t> const& sub) {
    std::vector<bool> in_sub(big.size(), false);
    for (auto s : sub) {
      if (s >= big.size()) {
        throw Error("relations_agree_on_isolated_subsemigroup: index "
                    + std::to_string(s) + " out of range");
      }
      if (in_sub[s]) {
        throw Error("relations_agree_on_isolated_subsemigroup: duplicate "
                    "index " + std::to_string(s));
      }
      in_sub[s] = true;
    }
    if (sub.empty()) {
      return true;
    }
    std::vector<State> buf(big.degree());
    for (auto x : sub) {
      for (auto y : sub) {
        compose_into(big.element(x), big.element(y), buf);
        auto found = big.find(buf);
        if (!found || !in_sub[*found]) {
          throw Error("relations_agree_on_isolated_subsemigroup: subset is "
                      "not closed under multiplication");
        }
      }
    }
    // s1 s2 in T forces s1, s2 in T  <=>  the complement is an ideal, which
    // can be checked along generator edges.
    for (std::size_t x = 0; x < big.size(); ++x) {
      if (in_sub[x]) {
        continue;
      }
      for (Letter a = 0; a < big.generator_count(); ++a) {
        for (auto w : {big.right(x, a), big.left(x, a)}) {
          if (in_sub[w]) {
            throw Error("relations_agree_on_isolated_subsemigroup: subset is "
                        "not completely isolated (element "
                        + std::to_string(x) + " outside times generator "
                        + std::to_string(a) + " lands inside)");
          }
        }
      }
    }

    std::vector<PartialTransformation> gens;
    gens.reserve(sub.size());
    for (auto s : sub) {
      gens.push_back(big.transformation(s));
    }
    SemigroupTable small = generate(gens);
    std::vector<std::uint32_t> small_index(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      small_index[i] = static_cast<std::uint32_t>(*small.find(big.element(sub[i])));
    }

    for (Relation kind : {Relation::R, Relation::L, Relation::J}) {
      auto gb = green_classes(big, kind);
      auto gt = green_classes(small, kind);
      std::vector<Bitset> below_big, below_small;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        below_big.push_back(classes_below(gb, gb.class_of[sub[i]]));
        below_small.push_back(classes_below(gt, gt.class_of[small_index[i]]));
      }
      for (std::size_t i = 0; i < sub.size(); ++i) {
        for (std::size_t j = 0; j < sub.size(); ++j) {
          // x = sub[i] <= y = sub[j]
          bool in_big   = below_big[j].test(gb.class_of[sub[i]]);
          bool in_small = below_small[j].test(gt.class_of[small_index[i]]);
          if (in_big != in_small) {
            return false;
          }
          bool eq_big   = gb.class_of[sub[i]] == gb.class_of[sub[j]];
          bool eq_small = gt.class_of[small_index[i]] == gt.class_of[small_index[j]];
          if (eq_big != eq_small) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    std::string word_label(Word const& w, std::size_t gen_count) {
      std::string out;
      std::size_t shown = std::min<std::size_t>(w.size(), 40);
      for (std::size_t i = 0; i < shown; ++i) {
        if (gen_count <= 26) {
          out += static_cast<char>('a' + w[i]);
        } else {
          if (i != 0) {
            out += ' ';
          }
          out += "g" + std::to_string(w[i]);
        }
      }
      if (w.size() > shown) {
        out += "...";
      }
      return out;
    }
  }  // namespace

  std::string to_dot(SemigroupTable const& table, GreenStructure const& gs) {
    std::ostringstream out;
    out << "digraph " << to_string(gs.kind) << "_classes {\n";
    for (std::uint32_t c = 0; c < gs.class_count(); ++c) {
      out << "  c" << c << " [label=\"" << c << ": "
          << word_label(table.witness(gs.representative[c]),
                        table.generator_count())
          << "\"];\n";
    }
    for (std::uint32_t c = 0; c < gs.class_count(); ++c) {
      for (std::uint32_t d : gs.below[c]) {
        out << "  c" << c << " -> c" << d << ";\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string eggbox_json(SemigroupTable const& table,
                          GreenStructure const& r,
                          GreenStructure const& l,
                          GreenStructure const& j) {
    std::vector<std::vector<std::uint32_t>> rs(j.class_count()), ls(j.class_count());
    for (std::size_t s = 0; s < table.size(); ++s) {
      rs[j.class_of[s]].push_back(r.class_of[s]);
      ls[j.class_of[s]].push_back(l.class_of[s]);
    }
    nlohmann::json out;
    out["elements"]  = table.size();
    out["r_classes"] = r.class_count();
    out["l_classes"] = l.class_count();
    out["j_classes"] = j.class_count();
    nlohmann::json boxes = nlohmann::json::array();
    for (std::uint32_t c = 0; c < j.class_count(); ++c) {
      auto tidy = [](std::vector<std::uint32_t> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
      };
      boxes.push_back({{"j_class", c},
                       {"size", rs[c].size()},
                       {"r_classes", tidy(rs[c])},
                       {"l_classes", tidy(ls[c])}});
    }
    out["eggbox"] = std::move(boxes);
    return out.dump(2);
  }

}  // namespace greenstack
