#pragma once

// Exact minimum hitting set by branch and bound. Families are small (sets
// live inside one fiber), so the solver favors exactness and a deterministic
// answer over raw speed.

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftlab/bits.hpp"

namespace shiftlab {

struct HittingSetResult {
  SymbolSet set;  // lexicographically least among the minimum hitting sets
  std::size_t size() const { return set.count(); }
};

// Minimum hitting set of `family` (every set nonempty). When `limit` is given,
// returns nullopt as soon as it is clear that no hitting set of size
// <= *limit exists.
std::optional<HittingSetResult> min_hitting_set(const std::vector<SymbolSet>& family, std::size_t universe,
                                                std::optional<std::size_t> limit = std::nullopt);

// Greedy packing lower bound: number of pairwise disjoint sets picked by
// increasing size.
std::size_t disjoint_lower_bound(const std::vector<SymbolSet>& family);

bool hits_all(const SymbolSet& candidate, const std::vector<SymbolSet>& family);

}  // namespace shiftlab
