#include "shiftlab/hitting_set.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

// Drops duplicates and supersets; what remains is sorted by size.
std::vector<SymbolSet> reduce_family(std::vector<SymbolSet> family) {
  std::stable_sort(family.begin(), family.end(),
                   [](const SymbolSet& a, const SymbolSet& b) { return a.count() < b.count(); });
  std::vector<SymbolSet> kept;
  for (auto& s : family) {
    bool implied = std::any_of(kept.begin(), kept.end(), [&](const SymbolSet& k) { return k.is_subset_of(s); });
    if (!implied) kept.push_back(std::move(s));
  }
  return kept;
}

std::vector<SymbolSet> unhit_by(const std::vector<SymbolSet>& family, Symbol e) {
  std::vector<SymbolSet> out;
  for (const auto& s : family)
    if (!s.test(e)) out.push_back(s);
  return out;
}

SymbolSet greedy_cover(std::vector<SymbolSet> family, std::size_t universe) {
  SymbolSet chosen(universe);
  while (!family.empty()) {
    Symbol best = 0;
    std::size_t best_hits = 0;
    for (Symbol e = 0; e < universe; ++e) {
      std::size_t hits = 0;
      for (const auto& s : family) hits += s.test(e) ? 1 : 0;
      if (hits > best_hits) {
        best_hits = hits;
        best = e;
      }
    }
    chosen.set(best);
    family = unhit_by(family, best);
  }
  return chosen;
}

// Is there a hitting set of size <= budget using only `allowed` elements?
bool feasible(const std::vector<SymbolSet>& family, const SymbolSet& allowed, std::size_t budget) {
  if (family.empty()) return true;
  if (budget == 0) return false;
  std::vector<SymbolSet> restricted;
  restricted.reserve(family.size());
  for (const auto& s : family) {
    auto r = s & allowed;
    if (r.none()) return false;
    restricted.push_back(std::move(r));
  }
  if (disjoint_lower_bound(restricted) > budget) return false;
  auto pivot = std::min_element(restricted.begin(), restricted.end(),
                                [](const SymbolSet& a, const SymbolSet& b) { return a.count() < b.count(); });
  bool ok = false;
  pivot->for_each([&](Symbol e) {
    if (!ok && feasible(unhit_by(restricted, e), allowed, budget - 1)) ok = true;
  });
  return ok;
}

}  // namespace

std::size_t disjoint_lower_bound(const std::vector<SymbolSet>& family) {
  if (family.empty()) return 0;
  std::vector<const SymbolSet*> order;
  for (const auto& s : family) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->count() < b->count(); });
  SymbolSet used(family.front().universe());
  std::size_t n = 0;
  for (auto* s : order) {
    if (s->intersects(used)) continue;
    used |= *s;
    ++n;
  }
  return n;
}

bool hits_all(const SymbolSet& candidate, const std::vector<SymbolSet>& family) {
  return std::all_of(family.begin(), family.end(), [&](const SymbolSet& s) { return s.intersects(candidate); });
}

std::optional<HittingSetResult> min_hitting_set(const std::vector<SymbolSet>& family, std::size_t universe,
                                                std::optional<std::size_t> limit) {
  for (const auto& s : family)
    if (s.none()) throw Error(ErrorKind::InvalidArgument, "hitting set family contains an empty set");
  auto reduced = reduce_family(family);
  if (reduced.empty()) return HittingSetResult{SymbolSet(universe)};

  const auto all = SymbolSet::full(universe);
  std::size_t upper = greedy_cover(reduced, universe).count();
  std::size_t lower = std::max<std::size_t>(1, disjoint_lower_bound(reduced));
  if (limit) {
    if (*limit < lower) return std::nullopt;
    upper = std::min(upper, *limit);
    if (!feasible(reduced, all, upper)) return std::nullopt;
  }
  std::size_t k = lower;
  while (k < upper && !feasible(reduced, all, k)) ++k;

  // Lexicographically least hitting set of size k: fix members one by one,
  // each time taking the smallest symbol that still admits a completion from
  // larger symbols.
  SymbolSet chosen(universe);
  auto remaining = reduced;
  Symbol next_min = 0;
  for (std::size_t slot = 0; slot < k && !remaining.empty(); ++slot) {
    bool placed = false;
    for (Symbol e = next_min; e < universe && !placed; ++e) {
      SymbolSet allowed(universe);
      for (Symbol f = e + 1; f < universe; ++f) allowed.set(f);
      auto rest = unhit_by(remaining, e);
      if (!feasible(rest, allowed, k - slot - 1)) continue;
      chosen.set(e);
      remaining = std::move(rest);
      next_min = e + 1;
      placed = true;
    }
    if (!placed) throw Error(ErrorKind::InvalidArgument, "hitting set reconstruction failed");
  }
  return HittingSetResult{chosen};
}

}  // namespace shiftlab
