#include "shiftlab/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <unordered_set>

#include "shiftlab/error.hpp"
#include "shiftlab/graph_algo.hpp"

namespace shiftlab {

namespace {

std::size_t utf8_codepoints(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n'; }

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (Symbol i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::ValidationError, "empty symbol name");
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::ValidationError, "duplicate symbol name '" + names_[i] + "'");
    if (utf8_codepoints(names_[i]) != 1) compact_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error(ErrorKind::UnknownLabel, "unknown symbol '" + std::string(name) + "'");
}

Word Alphabet::parse_word(std::string_view text) const {
  Word out;
  if (std::any_of(text.begin(), text.end(), is_separator)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_separator(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) ++j;
      if (j > i) out.push_back(at(text.substr(i, j - i)));
      i = j;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = 0;
    Symbol best_symbol = 0;
    for (Symbol s = 0; s < names_.size(); ++s) {
      const auto& n = names_[s];
      if (n.size() > best && text.substr(i, n.size()) == n) {
        best = n.size();
        best_symbol = s;
      }
    }
    if (best == 0)
      throw Error(ErrorKind::UnknownLabel, "cannot tokenize '" + std::string(text.substr(i)) + "'");
    out.push_back(best_symbol);
    i += best;
  }
  return out;
}

std::string Alphabet::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact_) out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::vector<std::pair<Symbol, Symbol>> SymbolGraph::edges() const {
  std::vector<std::pair<Symbol, Symbol>> out;
  for (Symbol s = 0; s < size(); ++s) succ_[s].for_each([&](Symbol t) { out.emplace_back(s, t); });
  return out;
}

std::size_t SymbolGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.count();
  return n;
}

SymbolSet SymbolGraph::image(const SymbolSet& from) const {
  SymbolSet out(size());
  from.for_each([&](Symbol s) { out |= succ_[s]; });
  return out;
}

SymbolSet SymbolGraph::preimage(const SymbolSet& to) const {
  SymbolSet out(size());
  to.for_each([&](Symbol s) { out |= pred_[s]; });
  return out;
}

bool SymbolGraph::is_path(const Word& w) const {
  for (auto s : w)
    if (s >= size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!has_edge(w[i], w[i + 1])) return false;
  return true;
}

SymbolGraph make_graph_unchecked(Alphabet symbols, const std::vector<std::pair<Symbol, Symbol>>& edges) {
  SymbolGraph g;
  const auto n = symbols.size();
  g.symbols_ = std::move(symbols);
  g.succ_.assign(n, SymbolSet(n));
  g.pred_.assign(n, SymbolSet(n));
  for (auto [a, b] : edges) {
    g.succ_[a].set(b);
    g.pred_[b].set(a);
  }
  return g;
}

namespace {

SymbolGraph essentialize(const Alphabet& symbols, const std::vector<std::pair<Symbol, Symbol>>& edges,
                         const SymbolSet& keep, EssentializeLog* log) {
  graph::Adjacency adj(symbols.size());
  for (auto [a, b] : edges)
    if (keep.test(a) && keep.test(b)) adj[a].push_back(b);
  auto alive = graph::essential_vertices(adj);
  std::vector<std::string> names;
  std::vector<Symbol> remap(symbols.size(), std::numeric_limits<Symbol>::max());
  for (Symbol s = 0; s < symbols.size(); ++s) {
    if (alive[s] && keep.test(s)) {
      remap[s] = static_cast<Symbol>(names.size());
      names.push_back(symbols.name(s));
    } else if (log != nullptr) {
      log->removed.push_back(symbols.name(s));
    }
  }
  if (names.empty()) throw Error(ErrorKind::EmptyAfterEssentialization, "no bi-infinite path exists");
  std::vector<std::pair<Symbol, Symbol>> kept;
  for (auto [a, b] : edges)
    if (remap[a] != std::numeric_limits<Symbol>::max() && remap[b] != std::numeric_limits<Symbol>::max())
      kept.emplace_back(remap[a], remap[b]);
  return make_graph_unchecked(Alphabet(std::move(names)), kept);
}

}  // namespace

SymbolGraph build_graph(const std::vector<std::string>& symbols,
                        const std::vector<std::pair<std::string, std::string>>& edges, EssentializeLog* log) {
  if (symbols.empty()) throw Error(ErrorKind::ValidationError, "symbol list is empty");
  Alphabet alphabet(symbols);
  std::vector<std::pair<Symbol, Symbol>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto fa = alphabet.find(a);
    auto fb = alphabet.find(b);
    if (!fa || !fb)
      throw Error(ErrorKind::ValidationError, "edge [" + a + ", " + b + "] references an undeclared symbol");
    indexed.emplace_back(*fa, *fb);
  }
  return essentialize(alphabet, indexed, SymbolSet::full(alphabet.size()), log);
}

SymbolGraph induced_subgraph(const SymbolGraph& g, const SymbolSet& keep, EssentializeLog* log) {
  return essentialize(g.symbols(), g.edges(), keep, log);
}

namespace {

graph::Adjacency adjacency_of(const SymbolGraph& g) {
  graph::Adjacency adj(g.size());
  for (Symbol s = 0; s < g.size(); ++s) adj[s] = g.successors(s).members();
  return adj;
}

}  // namespace

bool is_irreducible(const SymbolGraph& g) {
  if (g.size() == 0) return false;
  auto comps = graph::strongly_connected(adjacency_of(g));
  return comps.members.size() == 1;
}

Word HigherBlock::encode(const Word& w) const {
  if (w.size() < n) throw Error(ErrorKind::InvalidArgument, "word shorter than block length");
  Word out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    Word block(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
    auto it = std::find(blocks.begin(), blocks.end(), block);
    if (it == blocks.end()) throw Error(ErrorKind::InvalidArgument, "word is not a path of the base graph");
    out.push_back(static_cast<Symbol>(it - blocks.begin()));
  }
  return out;
}

Word HigherBlock::decode(const Word& w) const {
  if (w.empty()) return {};
  Word out = blocks.at(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(blocks.at(w[i]).back());
  return out;
}

HigherBlock higher_block(const SymbolGraph& g, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "block length must be >= 1");
  HigherBlock hb;
  hb.n = n;
  if (n == 1) {
    hb.graph = g;
    for (Symbol s = 0; s < g.size(); ++s) hb.blocks.push_back({s});
    return hb;
  }
  // enumerate n-paths in lexicographic order
  std::vector<Word> frontier;
  for (Symbol s = 0; s < g.size(); ++s) frontier.push_back({s});
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      g.successors(w.back()).for_each([&](Symbol t) {
        Word e = w;
        e.push_back(t);
        next.push_back(std::move(e));
      });
    frontier = std::move(next);
  }
  hb.blocks = frontier;

  bool compact = std::all_of(g.symbols().names().begin(), g.symbols().names().end(),
                             [](const std::string& s) { return s.size() == 1; });
  std::vector<std::string> names;
  for (const auto& b : hb.blocks) {
    std::string name;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i > 0 && !compact) name += '|';
      name += g.symbols().name(b[i]);
    }
    names.push_back(std::move(name));
  }

  // overlap: block u -> block v iff u[1..] == v[..n-1]
  std::unordered_map<std::size_t, std::vector<Symbol>> by_prefix;
  auto key = [](const Word& w, std::size_t from, std::size_t to) {
    std::size_t h = to - from;
    for (std::size_t i = from; i < to; ++i) hash_combine(h, w[i]);
    return h;
  };
  for (Symbol v = 0; v < hb.blocks.size(); ++v) by_prefix[key(hb.blocks[v], 0, n - 1)].push_back(v);
  std::vector<std::pair<Symbol, Symbol>> edges;
  for (Symbol u = 0; u < hb.blocks.size(); ++u) {
    const auto& bu = hb.blocks[u];
    auto it = by_prefix.find(key(bu, 1, n));
    if (it == by_prefix.end()) continue;
    for (Symbol v : it->second)
      if (std::equal(bu.begin() + 1, bu.end(), hb.blocks[v].begin())) edges.emplace_back(u, v);
  }
  hb.graph = make_graph_unchecked(Alphabet(std::move(names)), edges);
  return hb;
}

SymbolGraph transpose(const SymbolGraph& g) {
  std::vector<std::pair<Symbol, Symbol>> rev;
  for (auto [a, b] : g.edges()) rev.emplace_back(b, a);
  return make_graph_unchecked(g.symbols(), rev);
}

std::size_t connecting_gap(const SymbolGraph& g) {
  std::size_t worst = 0;
  for (Symbol s = 0; s < g.size(); ++s) {
    std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
    std::deque<Symbol> queue;
    g.successors(s).for_each([&](Symbol t) {
      if (dist[t] == std::numeric_limits<std::size_t>::max()) {
        dist[t] = 1;
        queue.push_back(t);
      }
    });
    while (!queue.empty()) {
      Symbol v = queue.front();
      queue.pop_front();
      g.successors(v).for_each([&](Symbol t) {
        if (dist[t] == std::numeric_limits<std::size_t>::max()) {
          dist[t] = dist[v] + 1;
          queue.push_back(t);
        }
      });
    }
    for (auto d : dist) {
      if (d == std::numeric_limits<std::size_t>::max())
        throw Error(ErrorKind::NotIrreducible, "connecting gap is undefined on a reducible graph");
      worst = std::max(worst, d - 1);
    }
  }
  return worst;
}

FactorTriple::FactorTriple(std::string name, SymbolGraph x, Alphabet y, std::vector<Symbol> labels)
    : name_(std::move(name)), x_(std::move(x)), y_(std::move(y)), labels_(std::move(labels)) {
  if (labels_.size() != x_.size()) throw Error(ErrorKind::ValidationError, "label map is not total");
  fibers_.assign(y_.size(), SymbolSet(x_.size()));
  for (Symbol s = 0; s < x_.size(); ++s) {
    if (labels_[s] >= y_.size()) throw Error(ErrorKind::ValidationError, "label out of range");
    fibers_[labels_[s]].set(s);
  }
}

Word FactorTriple::project(const Word& x_word) const {
  Word out;
  out.reserve(x_word.size());
  for (auto s : x_word) out.push_back(labels_[s]);
  return out;
}

std::optional<WordMatrix> word_matrix(const FactorTriple& t, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidArgument, "word_matrix needs a nonempty word");
  for (auto b : w)
    if (b >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "word uses a symbol outside A(Y)");
  WordMatrix m{BoolMatrix::diagonal(t.fiber(w[0])), w[0], w[0], {w[0]}};
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto next = extend_right(t, m, w[i]);
    if (!next) return std::nullopt;
    m = std::move(*next);
  }
  return m;
}

std::optional<WordMatrix> extend_right(const FactorTriple& t, const WordMatrix& m, Symbol b) {
  const auto n = t.x_size();
  BoolMatrix bits(n);
  bool any = false;
  for (Symbol i = 0; i < n; ++i) {
    if (!m.bits.row_any(i)) continue;
    auto row = t.step_forward(m.bits.row(i), b);
    if (row.any()) {
      bits.or_row(i, row);
      any = true;
    }
  }
  if (!any) return std::nullopt;
  Word witness = m.witness;
  witness.push_back(b);
  return WordMatrix{std::move(bits), m.first_label, b, std::move(witness)};
}

std::vector<SymbolSet> forward_sets(const FactorTriple& t, const Word& w) {
  std::vector<SymbolSet> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    out.push_back(k == 0 ? t.fiber(w[0]) : t.step_forward(out.back(), w[k]));
  return out;
}

std::vector<SymbolSet> backward_sets(const FactorTriple& t, const Word& w) {
  std::vector<SymbolSet> out(w.size());
  for (std::size_t k = w.size(); k-- > 0;)
    out[k] = (k + 1 == w.size()) ? t.fiber(w[k]) : t.step_backward(out[k + 1], w[k]);
  return out;
}

std::size_t default_monoid_cap() {
  if (const char* env = std::getenv("SHIFTLAB_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMonoidCap;
}

namespace {

struct MatrixKey {
  const WordMatrix* m;
};

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const {
    std::size_t h = k.m->bits.hash();
    hash_combine(h, k.m->first_label);
    hash_combine(h, k.m->last_label);
    return h;
  }
};

struct MatrixKeyEq {
  bool operator()(const MatrixKey& a, const MatrixKey& b) const {
    return a.m->first_label == b.m->first_label && a.m->last_label == b.m->last_label &&
           a.m->bits == b.m->bits;
  }
};

}  // namespace

Monoid monoid_closure(const FactorTriple& t, std::size_t cap, std::size_t min_length) {
  if (min_length == 0) throw Error(ErrorKind::InvalidArgument, "min_length must be >= 1");
  Monoid monoid;
  monoid.cap = cap;
  monoid.min_length = min_length;

  // Seeds: every word of length exactly min_length, in lexicographic order.
  std::vector<WordMatrix> seeds;
  for (Symbol b = 0; b < t.y_size(); ++b)
    seeds.push_back(WordMatrix{BoolMatrix::diagonal(t.fiber(b)), b, b, {b}});
  for (std::size_t len = 1; len < min_length; ++len) {
    std::vector<WordMatrix> next;
    for (const auto& m : seeds)
      for (Symbol b = 0; b < t.y_size(); ++b)
        if (auto e = extend_right(t, m, b)) next.push_back(std::move(*e));
    seeds = std::move(next);
  }

  // Element storage must stay stable for the key set, so reserve generously
  // and fall back to index-based rebuilds if it would reallocate.
  std::unordered_set<MatrixKey, MatrixKeyHash, MatrixKeyEq> seen;
  auto& elems = monoid.elements;
  elems.reserve(std::min<std::size_t>(cap, 1 << 16));

  auto try_add = [&](WordMatrix&& m) -> bool {
    MatrixKey probe{&m};
    if (seen.contains(probe)) return true;
    if (elems.size() >= cap) {
      monoid.status = MonoidStatus::Capped;
      return false;
    }
    if (elems.size() == elems.capacity()) {
      seen.clear();
      elems.reserve(elems.capacity() * 2);
      for (const auto& e : elems) seen.insert(MatrixKey{&e});
    }
    elems.push_back(std::move(m));
    seen.insert(MatrixKey{&elems.back()});
    return true;
  };

  for (auto& s : seeds)
    if (!try_add(std::move(s))) return monoid;

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Symbol b = 0; b < t.y_size(); ++b) {
      auto e = extend_right(t, elems[head], b);
      if (!e) continue;
      if (!try_add(std::move(*e))) return monoid;
    }
  }
  return monoid;
}

}  // namespace shiftlab
