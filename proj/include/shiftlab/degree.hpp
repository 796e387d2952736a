#pragma once

// Magic blocks, d(w), the exact minimum d_min over B(Y), diamonds, and the
// degree of a finite-to-one code.

#include <optional>

#include "shiftlab/core.hpp"

namespace shiftlab {

// {a : ∃ u ∈ π^{-1}(w) with u_k = a}
SymbolSet symbol_set_at(const FactorTriple& t, const Word& w, std::size_t k);

struct DValue {
  std::size_t value = 0;
  std::size_t coordinate = 0;  // lowest minimizing coordinate
};

// d(w) = min over 0 <= k < |w| of |symbol_set_at(w, k)|.
DValue d_of_word(const FactorTriple& t, const Word& w);

enum class SearchStatus { Exact, Bounded };

struct MagicReport {
  std::size_t d_min = 0;
  Word witness_word;
  std::size_t witness_coordinate = 0;
  SearchStatus status = SearchStatus::Exact;
  std::size_t explored = 0;  // forward + backward subsets visited
};

// Exact d_min through the junction decomposition: every (w, k) splits into a
// prefix ending at k and a suffix starting at k, and d(w) at k is the size of
// (forward subset of the prefix) ∩ (backward subset of the suffix). Minimizes
// over all reachable subset pairs. Requires X irreducible.
MagicReport magic_search(const FactorTriple& t, std::size_t cap = default_monoid_cap());

struct Diamond {
  Word u;
  Word v;
  Word label;
};

// Checks π(u) = π(v), equal endpoints, u != v, both paths of X.
bool is_diamond(const FactorTriple& t, const Diamond& d);

// Shortest diamond (lexicographically least sequence of symbol pairs, u < v at
// the branching point), or nullopt iff the code is finite-to-one.
std::optional<Diamond> find_diamond(const FactorTriple& t);

// d_π for a finite-to-one code on an irreducible X. Throws InfiniteToOne
// when a diamond exists.
std::size_t degree(const FactorTriple& t);

}  // namespace shiftlab
