#include "shiftlab/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "shiftlab/codes.hpp"
#include "shiftlab/error.hpp"

namespace shiftlab {

bool TauPermutation::is_identity() const {
  return std::all_of(map.begin(), map.end(), [](const auto& p) { return p.first == p.second; });
}

std::optional<Symbol> TauPermutation::apply(Symbol a) const {
  for (const auto& [from, to] : map)
    if (from == a) return to;
  return std::nullopt;
}

TauPermutation tau_permutation(const FactorTriple& t, const TransitionBlockCert& cert, const Word& bridge,
                               std::optional<std::size_t> class_degree_value) {
  if (!is_transition_block(t, cert.w, cert.n, cert.m))
    throw Error(ErrorKind::InvalidArgument, "certificate is not a transition block");
  std::size_t c = class_degree_value ? *class_degree_value : class_degree(t).value;
  if (cert.depth() != c)
    throw Error(ErrorKind::NotMinimal, "certificate depth " + std::to_string(cert.depth()) +
                                           " differs from the class degree " + std::to_string(c));
  TauPermutation tau{cert, bridge, cert.w, {}};
  tau.u.insert(tau.u.end(), bridge.begin(), bridge.end());
  tau.u.insert(tau.u.end(), cert.w.begin(), cert.w.end());
  if (!in_image(t, tau.u)) throw Error(ErrorKind::BridgeNotInImage, "w v w is not in B(Y)");

  const std::size_t first = cert.n;
  const std::size_t second = cert.w.size() + bridge.size() + cert.n;
  auto fwd = forward_sets(t, tau.u);
  auto bwd = backward_sets(t, tau.u);
  auto segment = word_matrix(t, Word(tau.u.begin() + static_cast<std::ptrdiff_t>(first),
                                     tau.u.begin() + static_cast<std::ptrdiff_t>(second) + 1));

  std::vector<std::size_t> in_degree(t.x_size(), 0);
  for (auto a : cert.m.members()) {
    std::vector<Symbol> targets;
    if (fwd[first].test(a) && segment) {
      auto row = segment->bits.row(a) & bwd[second] & cert.m;
      targets = row.members();
    }
    if (targets.size() != 1)
      throw Error(ErrorKind::NonPermutation, "symbol '" + t.x().symbols().name(a) + "' has " +
                                                 std::to_string(targets.size()) + " images under τ");
    ++in_degree[targets.front()];
    tau.map.emplace_back(a, targets.front());
  }
  for (auto b : cert.m.members())
    if (in_degree[b] != 1) throw Error(ErrorKind::NonPermutation, "τ is not injective");
  return tau;
}

std::vector<Word> preimages(const FactorTriple& t, const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return out;
  auto bwd = backward_sets(t, w);
  Word cur;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == w.size()) {
      out.push_back(cur);
      return;
    }
    auto options = i == 0 ? bwd[0] : (t.x().successors(cur.back()) & bwd[i]);
    options.for_each([&](Symbol s) {
      cur.push_back(s);
      self(self, i + 1);
      cur.pop_back();
    });
  };
  dfs(dfs, 0);
  return out;
}

namespace {

std::vector<ContextRow> context_rows(const FactorTriple& t, const Word& w, std::size_t k, std::size_t p_max,
                                     std::size_t c) {
  std::vector<ContextRow> rows;
  for (const auto& pw : periodic_words(t, p_max)) {
    auto cs = periodic_classes(t, pw.q);
    for (std::size_t o = 0; o < cs.unrolled; ++o) {
      bool occurs = true;
      for (std::size_t j = 0; j < w.size() && occurs; ++j) occurs = pw.at(o + j) == w[j];
      if (!occurs) continue;
      ContextRow row{pw.q, o, cs.classes.size(), cs.classes.size() == c, class_restriction(cs, t.x_size(), o + k)};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Analysis {
  std::vector<SymbolSet> components;  // ordered by least member
  std::optional<NoPartitionWitness> conflict;
  // separated[x][y] = first eligible row separating x and y
  std::map<std::pair<Symbol, Symbol>, std::size_t> separated;
};

Analysis analyze(const FactorTriple& t, const SymbolSet& fiber, const std::vector<ContextRow>& rows) {
  const auto n = t.x_size();
  UnionFind uf(n);
  // co-occurrence edges, first row that shows them
  std::map<std::pair<Symbol, Symbol>, std::size_t> together;
  Analysis a;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].eligible) continue;
    const auto& sets = rows[r].sets;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto mi = (sets[i] & fiber).members();
      for (std::size_t x = 0; x < mi.size(); ++x)
        for (std::size_t y = x + 1; y < mi.size(); ++y) {
          together.emplace(std::make_pair(mi[x], mi[y]), r);
          uf.unite(mi[x], mi[y]);
        }
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        for (auto x : mi)
          for (auto y : (sets[j] & fiber).members())
            if (x != y) a.separated.emplace(std::minmax(x, y), r);
    }
  }

  std::map<std::size_t, SymbolSet> comps;
  fiber.for_each([&](Symbol s) {
    auto root = uf.find(s);
    comps.try_emplace(root, n).first->second.set(s);
  });
  for (auto& [root, set] : comps) a.components.push_back(set);
  std::sort(a.components.begin(), a.components.end(), lex_less);

  for (const auto& [pair, row] : a.separated) {
    if (uf.find(pair.first) != uf.find(pair.second)) continue;
    NoPartitionWitness wit{pair, row, {}};
    // shortest co-occurrence chain from pair.first to pair.second
    std::map<Symbol, std::pair<Symbol, std::size_t>> parent;
    std::deque<Symbol> queue{pair.first};
    parent[pair.first] = {pair.first, 0};
    while (!queue.empty() && !parent.contains(pair.second)) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& [edge, r] : together) {
        Symbol other;
        if (edge.first == x) other = edge.second;
        else if (edge.second == x) other = edge.first;
        else continue;
        if (parent.contains(other)) continue;
        parent[other] = {x, r};
        queue.push_back(other);
      }
    }
    for (Symbol cur = pair.second; cur != pair.first;) {
      auto [prev, r] = parent.at(cur);
      wit.chain.emplace_back(prev, cur, r);
      cur = prev;
    }
    std::reverse(wit.chain.begin(), wit.chain.end());
    a.conflict = std::move(wit);
    break;
  }
  return a;
}

// Lexicographically least assignment of exactly `colors` colors to the
// components such that separated components differ.
std::optional<std::vector<std::size_t>> color_components(const Analysis& a, std::size_t colors) {
  const auto m = a.components.size();
  std::vector<std::vector<bool>> clash(m, std::vector<bool>(m, false));
  for (const auto& [pair, row] : a.separated)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && a.components[i].test(pair.first) && a.components[j].test(pair.second))
          clash[i][j] = clash[j][i] = true;
  std::vector<std::size_t> color(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == m) return used == colors;
    if (used + (m - i) < colors) return false;
    // new colors are introduced in order, which removes permuted duplicates
    for (std::size_t c = 0; c < std::min(colors, used + 1); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !(clash[i][j] && color[j] == c);
      if (!ok) continue;
      color[i] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  if (colors == 0 || !rec(rec, 0, 0)) return std::nullopt;
  return color;
}

}  // namespace

SymbolClassTable symbol_class_table(const FactorTriple& t, Symbol label, std::size_t p_max,
                                    std::optional<std::size_t> class_degree_value) {
  if (label >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "label outside A(Y)");
  SymbolClassTable table;
  table.label = label;
  table.class_degree = class_degree_value ? *class_degree_value : class_degree(t).value;
  table.rows = context_rows(t, {label}, 0, p_max, table.class_degree);
  const auto& fiber = t.fiber(label);
  for (const auto& row : table.rows) {
    if (!row.eligible) continue;
    SymbolSet all(t.x_size());
    for (const auto& s : row.sets) all |= s;
    if (all == fiber) table.full_fiber_realized = true;
  }

  auto a = analyze(t, fiber, table.rows);
  if (a.conflict) {
    table.witness = a.conflict;
    return table;
  }
  auto coloring = color_components(a, table.class_degree);
  if (!coloring) {
    table.reason = "the separation constraints admit no split into " + std::to_string(table.class_degree) + " parts";
    return table;
  }
  table.parts.assign(table.class_degree, SymbolSet(t.x_size()));
  for (std::size_t i = 0; i < a.components.size(); ++i) table.parts[(*coloring)[i]] |= a.components[i];
  std::sort(table.parts.begin(), table.parts.end(), lex_less);
  table.partition_exists = true;
  return table;
}

BlockPartition magic_partition(const FactorTriple& t, const Word& magic_word, std::size_t p_max,
                               std::optional<std::size_t> class_degree_value) {
  if (!is_irreducible(t.x())) throw Error(ErrorKind::NotIrreducible, t.name() + " has a reducible domain");
  auto d = d_of_word(t, magic_word);
  auto magic = magic_search(t);
  if (d.value != magic.d_min)
    throw Error(ErrorKind::NotMagic, "d(w) = " + std::to_string(d.value) + " but d_min = " + std::to_string(magic.d_min));
  std::size_t c = class_degree_value ? *class_degree_value : class_degree(t).value;

  BlockPartition bp;
  bp.word = magic_word;
  bp.coordinate = d.coordinate;
  bp.contexts = context_rows(t, magic_word, d.coordinate, p_max, c);
  auto symbols = symbol_set_at(t, magic_word, d.coordinate);
  auto a = analyze(t, symbols, bp.contexts);
  if (a.conflict)
    throw Error(ErrorKind::InconsistentContexts, "contexts both merge and separate two magic-coordinate symbols");
  if (a.components.size() != c)
    throw Error(ErrorKind::InconsistentContexts, "tested contexts yield " + std::to_string(a.components.size()) +
                                                     " parts, expected " + std::to_string(c));
  bp.symbol_parts = a.components;
  bp.parts.resize(c);
  for (auto& u : preimages(t, magic_word))
    for (std::size_t i = 0; i < c; ++i)
      if (bp.symbol_parts[i].test(u[d.coordinate])) bp.parts[i].push_back(u);
  return bp;
}

CompositionCheck composition_check(const FactorTriple& t1, const FactorTriple& t2, const ClassDegreeOptions& options) {
  auto composed = compose(t1, t2);
  CompositionCheck out;
  out.warnings = composed.warnings;
  out.r1 = class_degree(t1, options);
  out.r2 = class_degree(t2, options);
  out.rc = class_degree(composed.triple, options);
  out.c1 = out.r1.value;
  out.c2 = out.r2.value;
  out.composed = out.rc.value;
  out.holds = out.composed <= out.c1 * out.c2;
  out.strict = out.composed < out.c1 * out.c2;
  return out;
}

namespace {

// KMP transition table for matching `pattern` over symbols < alphabet.
std::vector<std::vector<std::size_t>> match_automaton(const Word& pattern, std::size_t alphabet) {
  const auto m = pattern.size();
  std::vector<std::size_t> fail(m + 1, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k];
    if (pattern[i] == pattern[k]) ++k;
    fail[i + 1] = k;
  }
  std::vector<std::vector<std::size_t>> delta(m + 1, std::vector<std::size_t>(alphabet, 0));
  for (std::size_t state = 0; state <= m; ++state)
    for (Symbol s = 0; s < alphabet; ++s) {
      if (state == m) {
        delta[state][s] = m;  // once seen, stays seen
        continue;
      }
      std::size_t k = state;
      while (k > 0 && pattern[k] != s) k = fail[k];
      delta[state][s] = pattern[k] == s ? k + 1 : 0;
    }
  return delta;
}

bool contains(const Word& w, const Word& pattern) {
  return std::search(w.begin(), w.end(), pattern.begin(), pattern.end()) != w.end();
}

}  // namespace

bool is_subshift_diamond(const FactorTriple& t, const SymbolSet& keep, const Word& v_bar, const Diamond& d,
                         std::size_t bound) {
  if (!is_diamond(t, d)) return false;
  if (!std::all_of(d.u.begin(), d.u.end(), [&](Symbol s) { return keep.test(s); })) return false;
  return contains(d.v, v_bar) && d.v.size() < bound;
}

SubshiftDiamond subshift_diamond(const FactorTriple& t, const SymbolSet& keep, const Word& v_bar,
                                 std::optional<std::size_t> bound_override) {
  if (!is_irreducible(t.x())) throw Error(ErrorKind::NotIrreducible, t.name() + " has a reducible domain");
  EssentializeLog log;
  SymbolGraph sub;
  try {
    sub = induced_subgraph(t.x(), keep, &log);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyAfterEssentialization) throw;
    throw Error(ErrorKind::ImageNotEqual, "the subshift is empty");
  }
  // subshift symbols as X symbols
  SymbolSet inside(t.x_size());
  std::vector<Symbol> to_x;
  for (Symbol s = 0; s < sub.size(); ++s) {
    auto x = *t.x().symbols().find(sub.symbols().name(s));
    inside.set(x);
    to_x.push_back(x);
  }
  if (sub.size() == t.x_size() && sub.edge_count() == t.x().edge_count())
    throw Error(ErrorKind::NotProperSubshift, "the selected symbols span all of X");
  if (v_bar.empty() || !t.x().is_path(v_bar)) throw Error(ErrorKind::InvalidArgument, "v̄ is not a word of X");
  bool in_sub = std::all_of(v_bar.begin(), v_bar.end(), [&](Symbol s) { return inside.test(s); });
  for (std::size_t i = 0; in_sub && i + 1 < v_bar.size(); ++i) {
    auto a = *sub.symbols().find(t.x().symbols().name(v_bar[i]));
    auto b = *sub.symbols().find(t.x().symbols().name(v_bar[i + 1]));
    in_sub = sub.has_edge(a, b);
  }
  if (in_sub) throw Error(ErrorKind::WordInSubshift, "v̄ is a word of the subshift");

  std::vector<Symbol> sub_labels;
  for (auto x : to_x) sub_labels.push_back(t.label(x));
  FactorTriple sub_triple(t.name() + "|sub", sub, t.y(), sub_labels);
  auto full_p = image_presentation(t);
  auto sub_p = image_presentation(sub_triple);
  if (!language_included(full_p, sub_p) || !language_included(sub_p, full_p))
    throw Error(ErrorKind::ImageNotEqual, "π(X̄) differs from Y");

  SubshiftDiamond out;
  out.l = class_degree(t).certificate.w.size();
  out.k = connecting_gap(t.x());
  out.bound = bound_override ? *bound_override : v_bar.size() + 2 * out.l + 2 * out.k;

  const auto n = t.x_size();
  const auto m = v_bar.size();
  auto delta = match_automaton(v_bar, n);
  // state: (x̄, x, progress) with x̄ inside the subshift
  auto id = [&](Symbol a, Symbol b, std::size_t p) { return (static_cast<std::size_t>(a) * n + b) * (m + 1) + p; };
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> parent(n * n * (m + 1), none);
  std::vector<bool> seen(n * n * (m + 1), false);
  std::deque<std::tuple<Symbol, Symbol, std::size_t>> layer;

  auto rebuild = [&](std::size_t state) {
    Diamond d;
    for (std::size_t cur = state;; cur = parent[cur]) {
      auto ab = cur / (m + 1);
      d.u.push_back(static_cast<Symbol>(ab / n));
      d.v.push_back(static_cast<Symbol>(ab % n));
      if (parent[cur] == none) break;
    }
    std::reverse(d.u.begin(), d.u.end());
    std::reverse(d.v.begin(), d.v.end());
    d.label = t.project(d.u);
    return d;
  };

  for (Symbol s = 0; s < n; ++s) {
    if (!inside.test(s)) continue;
    auto p = delta[0][s];
    seen[id(s, s, p)] = true;
    layer.emplace_back(s, s, p);
  }
  for (std::size_t len = 1; len < out.bound && !layer.empty(); ++len) {
    std::deque<std::tuple<Symbol, Symbol, std::size_t>> next;
    for (auto [a, b, p] : layer) {
      if (len >= 2 && a == b && p == m) {
        out.diamond = rebuild(id(a, b, p));
        return out;
      }
    }
    if (len + 1 >= out.bound) break;
    for (auto [a, b, p] : layer) {
      auto sa = t.x().successors(a) & inside;
      sa.for_each([&](Symbol x) {
        t.x().successors(b).for_each([&](Symbol y) {
          if (t.label(x) != t.label(y)) return;
          auto q = delta[p][y];
          auto sid = id(x, y, q);
          if (seen[sid]) return;
          seen[sid] = true;
          parent[sid] = id(a, b, p);
          next.emplace_back(x, y, q);
        });
      });
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace shiftlab
