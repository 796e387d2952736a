#pragma once

// Routability, transition blocks, minimum depth and the class degree c_π.

#include <optional>
#include <utility>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

struct RoutingProfile {
  Word w;
  std::size_t n = 0;
  // realizable endpoint pairs (i, t), in row-major order
  std::vector<std::pair<Symbol, Symbol>> pairs;
  // routes[k] = symbols a with an i -> a (at n) -> t preimage, for pairs[k]
  std::vector<SymbolSet> routes;
};

// Requires w ∈ B(Y) and 0 < n < |w|-1.
RoutingProfile routing_profile(const FactorTriple& t, const Word& w, std::size_t n);

struct TransitionBlockCert {
  Word w;
  std::size_t n = 0;
  SymbolSet m;
  // parallel to routing_profile(w, n).pairs: least symbol of M each pair
  // routes through
  std::vector<Symbol> routing;

  std::size_t depth() const { return m.count(); }
};

bool is_transition_block(const FactorTriple& t, const Word& w, std::size_t n, const SymbolSet& m);

// Fills in `routing`; throws InvalidArgument if (w, n, M) is not a transition block.
TransitionBlockCert certify(const FactorTriple& t, const Word& w, std::size_t n, const SymbolSet& m);

// Minimum depth over interior coordinates of w. Ties go to the lowest n,
// then the lexicographically least M.
TransitionBlockCert min_depth_at(const FactorTriple& t, const Word& w);

enum class ClassDegreeMode { Exact, UpperBound };

struct ClassDegreeOptions {
  bool exact = true;
  std::size_t max_len = 8;  // bounded mode, and the fallback when capped
  std::size_t cap = default_monoid_cap();
};

struct ClassDegreeReport {
  std::size_t value = 0;
  ClassDegreeMode mode = ClassDegreeMode::Exact;
  std::size_t max_len = 0;  // meaningful for UpperBound
  TransitionBlockCert certificate;
  MonoidStatus monoid_status = MonoidStatus::Exact;
  std::size_t monoid_size = 0;
};

// Exact mode minimizes over pairs of transition monoid elements; bounded mode
// over every word of B(Y) with 3 <= |w| <= max_len. Requires X irreducible.
ClassDegreeReport class_degree(const FactorTriple& t, const ClassDegreeOptions& options = {});

struct RoutabilityViolation {
  Word word;
  std::size_t coordinate = 0;
  std::pair<Symbol, Symbol> endpoints;
  SymbolSet through;  // A ∩ M, of size != 1
};

struct RoutabilityReport {
  std::size_t words_checked = 0;
  std::size_t occurrences_checked = 0;
  std::vector<RoutabilityViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks that every realizable pair of every extension w' ⊇ cert.w with
// |w'| <= max_len routes through exactly one symbol of M.
RoutabilityReport check_unique_routability(const FactorTriple& t, const TransitionBlockCert& cert,
                                           std::size_t max_len);

}  // namespace shiftlab
