#include "shiftlab/degree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "shiftlab/error.hpp"

namespace shiftlab {

SymbolSet symbol_set_at(const FactorTriple& t, const Word& w, std::size_t k) {
  if (k >= w.size()) throw Error(ErrorKind::InvalidArgument, "coordinate outside the word");
  for (auto b : w)
    if (b >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "word uses a symbol outside A(Y)");
  auto fwd = forward_sets(t, w);
  if (fwd.back().none()) throw Error(ErrorKind::WordNotInImage, "word is not in B(Y)");
  auto bwd = backward_sets(t, w);
  return fwd[k] & bwd[k];
}

DValue d_of_word(const FactorTriple& t, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidArgument, "d(w) needs a nonempty word");
  for (auto b : w)
    if (b >= t.y_size()) throw Error(ErrorKind::UnknownLabel, "word uses a symbol outside A(Y)");
  auto fwd = forward_sets(t, w);
  if (fwd.back().none()) throw Error(ErrorKind::WordNotInImage, "word is not in B(Y)");
  auto bwd = backward_sets(t, w);
  DValue best{std::numeric_limits<std::size_t>::max(), 0};
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto c = (fwd[k] & bwd[k]).count();
    if (c < best.value) best = {c, k};
  }
  return best;
}

namespace {

struct SubsetNode {
  SymbolSet set;
  Word witness;
  Symbol junction;  // label at the shared coordinate
};

// BFS over forward (or backward) propagated subsets seeded with single fibers.
std::vector<SubsetNode> explore_subsets(const FactorTriple& t, bool forward, std::size_t cap, bool& capped) {
  std::vector<SubsetNode> nodes;
  std::unordered_map<SymbolSet, std::size_t> index;
  for (Symbol b = 0; b < t.y_size(); ++b) {
    if (index.emplace(t.fiber(b), nodes.size()).second) nodes.push_back({t.fiber(b), {b}, b});
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (Symbol b = 0; b < t.y_size(); ++b) {
      auto next = forward ? t.step_forward(nodes[head].set, b) : t.step_backward(nodes[head].set, b);
      if (next.none() || index.contains(next)) continue;
      if (nodes.size() >= cap) {
        capped = true;
        return nodes;
      }
      Word w;
      if (forward) {
        w = nodes[head].witness;
        w.push_back(b);
      } else {
        w.push_back(b);
        w.insert(w.end(), nodes[head].witness.begin(), nodes[head].witness.end());
      }
      index.emplace(next, nodes.size());
      nodes.push_back({std::move(next), std::move(w), b});
    }
  }
  return nodes;
}

}  // namespace

MagicReport magic_search(const FactorTriple& t, std::size_t cap) {
  if (!is_irreducible(t.x())) throw Error(ErrorKind::NotIrreducible, t.name() + " has a reducible domain");
  bool capped = false;
  auto fwd = explore_subsets(t, true, cap, capped);
  auto bwd = explore_subsets(t, false, cap, capped);

  std::vector<std::vector<const SubsetNode*>> bwd_by_label(t.y_size());
  for (const auto& n : bwd) bwd_by_label[n.junction].push_back(&n);

  MagicReport report;
  report.status = capped ? SearchStatus::Bounded : SearchStatus::Exact;
  report.explored = fwd.size() + bwd.size();
  bool found = false;
  std::tuple<std::size_t, std::size_t, Word, std::size_t> best;
  for (const auto& f : fwd) {
    for (const SubsetNode* b : bwd_by_label[f.junction]) {
      auto c = (f.set & b->set).count();
      if (c == 0) continue;
      if (found && c > std::get<0>(best)) continue;
      Word w = f.witness;
      w.insert(w.end(), b->witness.begin() + 1, b->witness.end());
      auto key = std::make_tuple(c, w.size(), w, f.witness.size() - 1);
      if (!found || key < best) {
        best = std::move(key);
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorKind::EmptyAfterEssentialization, "image shift has no words");
  report.d_min = std::get<0>(best);
  report.witness_word = std::get<2>(best);
  report.witness_coordinate = std::get<3>(best);
  return report;
}

bool is_diamond(const FactorTriple& t, const Diamond& d) {
  if (d.u.size() != d.v.size() || d.u.size() < 2) return false;
  if (d.u == d.v) return false;
  if (!t.x().is_path(d.u) || !t.x().is_path(d.v)) return false;
  if (d.u.front() != d.v.front() || d.u.back() != d.v.back()) return false;
  return t.project(d.u) == t.project(d.v) && (d.label.empty() || d.label == t.project(d.u));
}

std::optional<Diamond> find_diamond(const FactorTriple& t) {
  const auto n = static_cast<Symbol>(t.x_size());
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  // state = ordered pair (s, s') of distinct symbols with equal labels
  auto id = [n](Symbol a, Symbol b) { return static_cast<std::size_t>(a) * n + b; };
  std::vector<std::size_t> parent(static_cast<std::size_t>(n) * n, none);
  std::vector<Symbol> origin(static_cast<std::size_t>(n) * n, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  std::deque<std::pair<Symbol, Symbol>> queue;

  for (Symbol s = 0; s < n; ++s) {
    auto succ = t.x().successors(s).members();
    for (std::size_t i = 0; i < succ.size(); ++i)
      for (std::size_t j = i + 1; j < succ.size(); ++j) {
        Symbol a = succ[i], b = succ[j];
        if (t.label(a) != t.label(b) || seen[id(a, b)]) continue;
        seen[id(a, b)] = true;
        origin[id(a, b)] = s;
        queue.emplace_back(a, b);
      }
  }

  auto rebuild = [&](Symbol a, Symbol b, Symbol end) {
    Diamond d;
    d.u.push_back(end);
    d.v.push_back(end);
    std::size_t cur = id(a, b);
    while (true) {
      d.u.push_back(static_cast<Symbol>(cur / n));
      d.v.push_back(static_cast<Symbol>(cur % n));
      if (parent[cur] == none) {
        d.u.push_back(origin[cur]);
        d.v.push_back(origin[cur]);
        break;
      }
      cur = parent[cur];
    }
    std::reverse(d.u.begin(), d.u.end());
    std::reverse(d.v.begin(), d.v.end());
    d.label = t.project(d.u);
    return d;
  };

  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    auto sa = t.x().successors(a).members();
    auto sb = t.x().successors(b).members();
    for (Symbol x : sa)
      for (Symbol y : sb) {
        if (t.label(x) != t.label(y)) continue;
        if (x == y) return rebuild(a, b, x);
        if (seen[id(x, y)]) continue;
        seen[id(x, y)] = true;
        parent[id(x, y)] = id(a, b);
        queue.emplace_back(x, y);
      }
  }
  return std::nullopt;
}

std::size_t degree(const FactorTriple& t) {
  if (!is_irreducible(t.x())) throw Error(ErrorKind::NotIrreducible, t.name() + " has a reducible domain");
  if (auto d = find_diamond(t))
    throw Error(ErrorKind::InfiniteToOne,
                t.name() + " has a diamond (" + t.x().symbols().format_word(d->u) + " / " +
                    t.x().symbols().format_word(d->v) + ")");
  return magic_search(t).d_min;
}

}  // namespace shiftlab
