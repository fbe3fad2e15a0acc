#include "greenstack/semigroup.hpp"

#include <algorithm>
#include <fstream>

namespace greenstack {

  PartialTransformation SemigroupTable::transformation(std::size_t i) const {
    auto e = element(i);
    return PartialTransformation(std::vector<State>(e.begin(), e.end()));
  }

  std::optional<std::size_t>
  SemigroupTable::find(std::span<State const> mapping) const {
    if (mapping.size() != degree_ || slots_.empty()) {
      return std::nullopt;
    }
    std::size_t const mask = slots_.size() - 1;
    std::size_t       pos  = hash_mapping(mapping) & mask;
    while (slots_[pos] != kUndefined) {
      auto e = element(slots_[pos]);
      if (std::equal(e.begin(), e.end(), mapping.begin())) {
        return slots_[pos];
      }
      pos = (pos + 1) & mask;
    }
    return std::nullopt;
  }

  void SemigroupTable::rebuild_index() {
    std::size_t cap = 16;
    while (cap < 2 * (size() + 1)) {
      cap <<= 1;
    }
    slots_.assign(cap, kUndefined);
    std::size_t const mask = cap - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t pos = hash_mapping(element(i)) & mask;
      while (slots_[pos] != kUndefined) {
        pos = (pos + 1) & mask;
      }
      slots_[pos] = static_cast<std::uint32_t>(i);
    }
  }

  std::uint32_t SemigroupTable::insert_or_find(std::span<State const> mapping,
                                               bool& inserted) {
    if (auto found = find(mapping)) {
      inserted = false;
      return static_cast<std::uint32_t>(*found);
    }
    inserted = true;
    auto idx = static_cast<std::uint32_t>(size());
    data_.insert(data_.end(), mapping.begin(), mapping.end());
    parent_.push_back(kUndefined);
    last_letter_.push_back(0);
    if (2 * (size() + 1) > slots_.size()) {
      rebuild_index();
    } else {
      std::size_t const mask = slots_.size() - 1;
      std::size_t       pos  = hash_mapping(mapping) & mask;
      while (slots_[pos] != kUndefined) {
        pos = (pos + 1) & mask;
      }
      slots_[pos] = idx;
    }
    return idx;
  }

  Word SemigroupTable::witness(std::size_t i) const {
    Word w;
    auto cur = static_cast<std::uint32_t>(i);
    while (true) {
      w.push_back(last_letter_[cur]);
      if (parent_[cur] == kUndefined) {
        break;
      }
      cur = parent_[cur];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::size_t SemigroupTable::witness_length(std::size_t i) const {
    std::size_t len = 1;
    auto        cur = static_cast<std::uint32_t>(i);
    while (parent_[cur] != kUndefined) {
      cur = parent_[cur];
      ++len;
    }
    return len;
  }

  std::uint32_t SemigroupTable::multiply(std::size_t s, std::size_t t) const {
    auto cur = static_cast<std::uint32_t>(s);
    for (Letter a : witness(t)) {
      cur = right(cur, a);
    }
    return cur;
  }

  std::optional<std::size_t> SemigroupTable::identity() const {
    auto id = PartialTransformation::identity(degree_);
    return find(id.mapping());
  }

  SemigroupTable generate(std::vector<PartialTransformation> const& gens,
                          std::size_t                               cap) {
    if (gens.empty()) {
      throw Error("generate: empty generator list");
    }
    SemigroupTable t;
    t.degree_ = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != t.degree_) {
        throw Error("generate: generators of different degrees");
      }
    }
    t.gens_ = gens;
    t.rebuild_index();
    std::size_t const k = gens.size();

    for (std::size_t a = 0; a < k; ++a) {
      bool inserted = false;
      auto idx      = t.insert_or_find(gens[a].mapping(), inserted);
      if (inserted) {
        t.last_letter_[idx] = static_cast<Letter>(a);
        if (t.size() > cap) {
          throw CapExceeded(cap, t.size());
        }
      }
    }

    std::vector<State> buf(t.degree_);
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        compose_into(t.element(s), gens[a].mapping(), buf);
        bool inserted = false;
        auto idx      = t.insert_or_find(buf, inserted);
        if (inserted) {
          t.parent_[idx]      = static_cast<std::uint32_t>(s);
          t.last_letter_[idx] = static_cast<Letter>(a);
          if (t.size() > cap) {
            throw CapExceeded(cap, t.size());
          }
        }
        t.right_.push_back(idx);
      }
    }

    t.left_.resize(t.size() * k);
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        compose_into(gens[a].mapping(), t.element(s), buf);
        auto found = t.find(buf);
        // closure guarantees presence
        t.left_[s * k + a] = static_cast<std::uint32_t>(*found);
      }
    }
    return t;
  }

  MonoidView::MonoidView(SemigroupTable const& table)
      : table_(&table), identity_(table.identity()) {}

  std::size_t MonoidView::multiply(std::size_t s, std::size_t t) const {
    if (s == identity_index()) {
      return t;
    }
    if (t == identity_index()) {
      return s;
    }
    return table_->multiply(s, t);
  }

  MonoidView adjoin_identity_virtually(SemigroupTable const& table) {
    return MonoidView(table);
  }

  namespace {
    constexpr char          kMagic[4] = {'G', 'S', 'T', 'B'};
    constexpr std::uint32_t kVersion  = 1;

    void put_u32(std::ostream& out, std::uint32_t v) {
      char b[4];
      for (int i = 0; i < 4; ++i) {
        b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
      }
      out.write(b, 4);
    }

    void put_u64(std::ostream& out, std::uint64_t v) {
      put_u32(out, static_cast<std::uint32_t>(v & 0xFFFFFFFFULL));
      put_u32(out, static_cast<std::uint32_t>(v >> 32));
    }

    std::uint32_t get_u32(std::istream& in) {
      unsigned char b[4];
      if (!in.read(reinterpret_cast<char*>(b), 4)) {
        throw Error("load_table: truncated cache file");
      }
      return static_cast<std::uint32_t>(b[0])
             | (static_cast<std::uint32_t>(b[1]) << 8)
             | (static_cast<std::uint32_t>(b[2]) << 16)
             | (static_cast<std::uint32_t>(b[3]) << 24);
    }

    std::uint64_t get_u64(std::istream& in) {
      std::uint64_t lo = get_u32(in);
      std::uint64_t hi = get_u32(in);
      return lo | (hi << 32);
    }
  }  // namespace

  void save_table(SemigroupTable const& table, std::string const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("save_table: cannot open " + path);
    }
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(table.degree()));
    put_u32(out, static_cast<std::uint32_t>(table.generator_count()));
    put_u64(out, table.size());
    for (auto const& g : table.generators()) {
      for (State s : g.mapping()) {
        put_u32(out, s);
      }
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (State s : table.element(i)) {
        put_u32(out, s);
      }
    }
    for (auto p : table.parent_) {
      put_u32(out, p);
    }
    for (auto l : table.last_letter_) {
      put_u32(out, l);
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (Letter a = 0; a < table.generator_count(); ++a) {
        put_u32(out, table.right(i, a));
      }
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (Letter a = 0; a < table.generator_count(); ++a) {
        put_u32(out, table.left(i, a));
      }
    }
    if (!out) {
      throw Error("save_table: write failed for " + path);
    }
  }

  SemigroupTable load_table(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("load_table: cannot open " + path);
    }
    char magic[4];
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
      throw Error("load_table: " + path + " is not a table cache");
    }
    if (get_u32(in) != kVersion) {
      throw Error("load_table: unsupported cache version in " + path);
    }
    SemigroupTable t;
    t.degree_         = get_u32(in);
    std::uint32_t k   = get_u32(in);
    std::uint64_t cnt = get_u64(in);
    for (std::uint32_t a = 0; a < k; ++a) {
      std::vector<State> m(t.degree_);
      for (auto& s : m) {
        s = get_u32(in);
      }
      t.gens_.emplace_back(std::move(m));
    }
    t.data_.resize(cnt * t.degree_);
    for (auto& s : t.data_) {
      s = get_u32(in);
      if (s != kUndefined && s >= t.degree_) {
        throw Error("load_table: corrupt element entry in " + path);
      }
    }
    t.parent_.resize(cnt);
    for (auto& p : t.parent_) {
      p = get_u32(in);
    }
    t.last_letter_.resize(cnt);
    for (auto& l : t.last_letter_) {
      l = get_u32(in);
    }
    t.right_.resize(cnt * k);
    for (auto& e : t.right_) {
      e = get_u32(in);
    }
    t.left_.resize(cnt * k);
    for (auto& e : t.left_) {
      e = get_u32(in);
    }
    for (std::size_t i = 0; i < cnt; ++i) {
      if ((t.parent_[i] != kUndefined && t.parent_[i] >= cnt)
          || t.last_letter_[i] >= k) {
        throw Error("load_table: corrupt witness data in " + path);
      }
    }
    for (auto e : t.right_) {
      if (e >= cnt) {
        throw Error("load_table: corrupt edge in " + path);
      }
    }
    for (auto e : t.left_) {
      if (e >= cnt) {
        throw Error("load_table: corrupt edge in " + path);
      }
    }
    t.rebuild_index();
    return t;
  }

}  // namespace greenstack
