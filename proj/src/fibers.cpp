#include "shiftlab/fibers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "shiftlab/codes.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/graph_algo.hpp"

namespace shiftlab {

namespace {

bool is_lyndon(const Word& q) {
  for (std::size_t r = 1; r < q.size(); ++r) {
    Word rot(q.begin() + static_cast<std::ptrdiff_t>(r), q.end());
    rot.insert(rot.end(), q.begin(), q.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(q < rot)) return false;
  }
  return true;
}

// Layered graph over times Z_period, where period is a multiple of |q|.
struct Layered {
  std::vector<FiberVertex> vertices;
  graph::Adjacency adj;
};

Layered layered(const FactorTriple& t, const Word& q, std::size_t period, bool essentialize) {
  Layered g;
  std::vector<std::vector<std::uint32_t>> at(period);
  for (std::size_t j = 0; j < period; ++j) {
    t.fiber(q[j % q.size()]).for_each([&](Symbol s) {
      at[j].push_back(static_cast<std::uint32_t>(g.vertices.size()));
      g.vertices.push_back({j, s});
    });
  }
  g.adj.resize(g.vertices.size());
  for (std::size_t j = 0; j < period; ++j) {
    std::size_t next = (j + 1) % period;
    for (auto u : at[j])
      for (auto v : at[next])
        if (t.x().has_edge(g.vertices[u].symbol, g.vertices[v].symbol)) g.adj[u].push_back(v);
  }
  if (!essentialize) return g;

  auto keep = graph::essential_vertices(g.adj);
  std::vector<std::int64_t> remap(g.vertices.size(), -1);
  Layered out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!keep[v]) continue;
    remap[v] = static_cast<std::int64_t>(out.vertices.size());
    out.vertices.push_back(g.vertices[v]);
  }
  out.adj.resize(out.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (remap[v] < 0) continue;
    for (auto w : g.adj[v])
      if (remap[w] >= 0) out.adj[static_cast<std::size_t>(remap[v])].push_back(static_cast<std::uint32_t>(remap[w]));
  }
  return out;
}

std::size_t unrolled_period(const FactorTriple& t, const Word& q) {
  auto g = layered(t, q, q.size(), true);
  if (g.vertices.empty()) throw Error(ErrorKind::NotInImage, "the periodic point has no preimage");
  auto comps = graph::strongly_connected(g.adj);
  std::size_t period = q.size();
  for (std::size_t c = 0; c < comps.members.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    auto per = static_cast<std::size_t>(graph::component_period(g.adj, comps.members[c], comps.id));
    period = std::lcm(period, per);
  }
  return period;
}

void validate_word(const FactorTriple& t, const Word& q) {
  if (q.empty()) throw Error(ErrorKind::InvalidArgument, "periodic word must be nonempty");
  for (auto b : q)
    if (b >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "word uses a symbol outside A(Y)");
}

std::vector<Symbol> find_cycle(const Layered& g, const graph::Components& comps, std::uint32_t start) {
  auto comp = comps.id[start];
  std::vector<std::int64_t> parent(g.vertices.size(), -1);
  std::deque<std::uint32_t> queue{start};
  std::vector<bool> seen(g.vertices.size(), false);
  std::int64_t last = -1;
  while (!queue.empty() && last < 0) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.adj[u]) {
      if (comps.id[v] != comp) continue;
      if (v == start) {
        last = u;
        break;
      }
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  std::vector<Symbol> cycle;
  for (auto v = last; v >= 0 && static_cast<std::uint32_t>(v) != start; v = parent[static_cast<std::size_t>(v)])
    cycle.push_back(g.vertices[static_cast<std::size_t>(v)].symbol);
  cycle.push_back(g.vertices[start].symbol);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

// Sorts classes by vertex list and rewrites arrows accordingly.
void canonicalize(ClassStructure& cs) {
  std::vector<std::size_t> order(cs.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cs.classes[a].vertices < cs.classes[b].vertices; });
  std::vector<std::size_t> rank(order.size());
  std::vector<TransitionClass> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = k;
    sorted.push_back(std::move(cs.classes[order[k]]));
  }
  cs.classes = std::move(sorted);
  for (auto& [a, b] : cs.arrows) {
    a = rank[a];
    b = rank[b];
  }
  std::sort(cs.arrows.begin(), cs.arrows.end());
}

}  // namespace

PeriodicWord canonical_periodic(const Word& q) {
  if (q.empty()) throw Error(ErrorKind::InvalidArgument, "periodic word must be nonempty");
  std::size_t p = q.size();
  for (std::size_t d = 1; d <= q.size(); ++d) {
    if (q.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < q.size() && ok; ++i) ok = q[i] == q[i - d];
    if (ok) {
      p = d;
      break;
    }
  }
  Word root(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(p));
  Word best = root;
  for (std::size_t r = 1; r < p; ++r) {
    Word rot(root.begin() + static_cast<std::ptrdiff_t>(r), root.end());
    rot.insert(rot.end(), root.begin(), root.begin() + static_cast<std::ptrdiff_t>(r));
    best = std::min(best, rot);
  }
  return {best};
}

Word reversed_periodic(const Word& q) {
  Word out;
  out.reserve(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) out.push_back(q[(q.size() - j) % q.size()]);
  return out;
}

std::vector<PeriodicWord> periodic_words(const FactorTriple& t, std::size_t p_max) {
  std::vector<std::vector<PeriodicWord>> by_len(p_max + 1);
  Word prefix;
  auto dfs = [&](auto&& self, const SymbolSet& reach) -> void {
    if (!prefix.empty() && is_lyndon(prefix)) {
      if (!layered(t, prefix, prefix.size(), true).vertices.empty()) by_len[prefix.size()].push_back({prefix});
    }
    if (prefix.size() == p_max) return;
    for (Symbol b = 0; b < t.y_size(); ++b) {
      auto next = prefix.empty() ? t.fiber(b) : t.step_forward(reach, b);
      if (next.none()) continue;
      prefix.push_back(b);
      self(self, next);
      prefix.pop_back();
    }
  };
  dfs(dfs, SymbolSet(t.x_size()));
  std::vector<PeriodicWord> out;
  for (auto& bucket : by_len) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::optional<std::uint32_t> FiberGraph::index(std::size_t phase, Symbol s) const {
  FiberVertex key{phase, s};
  auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
  if (it == vertices.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

std::size_t FiberGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adj) n += a.size();
  return n;
}

FiberGraph fiber_graph(const FactorTriple& t, const Word& q) {
  validate_word(t, q);
  auto g = layered(t, q, q.size(), true);
  if (g.vertices.empty()) throw Error(ErrorKind::NotInImage, "the periodic point has no preimage");
  return FiberGraph{q, std::move(g.vertices), std::move(g.adj)};
}

bool ClassStructure::has_arrow(std::size_t from, std::size_t to) const {
  return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(from, to));
}

ClassStructure periodic_classes(const FactorTriple& t, const Word& q) {
  validate_word(t, q);
  ClassStructure cs;
  cs.q = q;
  cs.unrolled = unrolled_period(t, q);
  auto g = layered(t, q, cs.unrolled, true);
  auto comps = graph::strongly_connected(g.adj);
  auto reach = graph::reachability(g.adj);

  std::vector<std::size_t> class_of_comp(comps.members.size(), SIZE_MAX);
  std::vector<std::uint32_t> anchor;
  for (std::size_t c = 0; c < comps.members.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    TransitionClass cls;
    for (auto v : comps.members[c]) cls.vertices.push_back(g.vertices[v]);
    std::sort(cls.vertices.begin(), cls.vertices.end());
    // every cycle crosses time 0, and vertices are ordered by time first
    std::uint32_t start = comps.members[c].front();
    for (auto v : comps.members[c])
      if (g.vertices[v] < g.vertices[start]) start = v;
    cls.cycle = find_cycle(g, comps, start);
    class_of_comp[c] = cs.classes.size();
    anchor.push_back(start);
    cs.classes.push_back(std::move(cls));
  }
  for (std::size_t a = 0; a < cs.classes.size(); ++a)
    for (std::size_t b = 0; b < cs.classes.size(); ++b)
      if (a != b && reach[anchor[a]][anchor[b]]) cs.arrows.emplace_back(a, b);
  canonicalize(cs);
  return cs;
}

std::vector<SymbolSet> class_restriction(const ClassStructure& cs, std::size_t universe, std::size_t i) {
  std::size_t time = i % cs.unrolled;
  std::vector<SymbolSet> out;
  for (const auto& cls : cs.classes) {
    SymbolSet s(universe);
    for (const auto& v : cls.vertices)
      if (v.phase == time) s.set(v.symbol);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SymbolSet> class_restriction_all(const FactorTriple& t, const ClassStructure& cs, std::size_t i) {
  auto g = layered(t, cs.q, cs.unrolled, true);
  auto rev = graph::reversed(g.adj);
  std::size_t time = i % cs.unrolled;
  std::vector<SymbolSet> out;
  for (const auto& cls : cs.classes) {
    // backward search from the class collects everything that ends up in it
    std::vector<bool> seen(g.vertices.size(), false);
    std::deque<std::uint32_t> queue;
    for (const auto& v : cls.vertices) {
      auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
      auto id = static_cast<std::uint32_t>(it - g.vertices.begin());
      seen[id] = true;
      queue.push_back(id);
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : rev[u])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    SymbolSet s(t.x_size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (seen[v] && g.vertices[v].phase == time) s.set(g.vertices[v].symbol);
    out.push_back(std::move(s));
  }
  return out;
}

ClassStructure reflect(const ClassStructure& cs, Word q) {
  ClassStructure out;
  out.q = std::move(q);
  out.unrolled = cs.unrolled;
  out.arrows = cs.arrows;
  for (const auto& cls : cs.classes) {
    TransitionClass r;
    for (const auto& v : cls.vertices) r.vertices.push_back({(cs.unrolled - v.phase) % cs.unrolled, v.symbol});
    std::sort(r.vertices.begin(), r.vertices.end());
    r.cycle = reversed_periodic(cls.cycle);
    out.classes.push_back(std::move(r));
  }
  canonicalize(out);
  return out;
}

ClassStructure reversed_classes(const FactorTriple& t, const Word& q) {
  return reflect(periodic_classes(transpose_triple(t), reversed_periodic(q)), q);
}

SeparationReport separation_diagnostic(const ClassStructure& cs, std::size_t universe) {
  SeparationReport report;
  for (std::size_t time = 0; time < cs.unrolled; ++time) {
    auto sets = class_restriction(cs, universe, time);
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a + 1; b < sets.size(); ++b) {
        bool meet = sets[a].intersects(sets[b]);
        report.entries.push_back({time, a, b, meet});
        if (meet) report.all_disjoint = false;
      }
  }
  if (!report.all_disjoint)
    report.note = "classes share symbols at some time; mutual separation is only guaranteed over transitive points";
  return report;
}

PointCount fiber_point_count(const FactorTriple& t, const Word& q) {
  validate_word(t, q);
  auto period = unrolled_period(t, q);
  auto g = layered(t, q, period, true);
  auto comps = graph::strongly_connected(g.adj);
  auto reach = graph::reachability(g.adj);
  PointCount pc;
  std::vector<std::size_t> cyclic;
  for (std::size_t c = 0; c < comps.members.size(); ++c) {
    if (!comps.cyclic[c]) continue;
    std::size_t inner = 0;
    for (auto v : comps.members[c])
      for (auto w : g.adj[v]) inner += comps.id[w] == c ? 1 : 0;
    if (inner != comps.members[c].size()) pc.finite = false;
    for (auto v : comps.members[c]) pc.count += g.vertices[v].phase == 0 ? 1 : 0;
    cyclic.push_back(c);
  }
  for (auto a : cyclic)
    for (auto b : cyclic)
      if (a != b && reach[comps.members[a].front()][comps.members[b].front()]) pc.finite = false;
  if (!pc.finite) pc.count = 0;
  return pc;
}

}  // namespace shiftlab
