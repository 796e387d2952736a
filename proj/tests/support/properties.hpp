#pragma once

// Exhaustive property checks over small word lengths. Each returns the
// number of instances examined and the first failure, if any.

#include <cstddef>
#include <string>

#include "shiftlab/classdeg.hpp"

namespace properties {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

// d(w') <= d(w) for w ⊆ w', |w| <= short_len, |w'| <= long_len.
Outcome d_monotonicity(const shiftlab::FactorTriple& t, std::size_t short_len = 4, std::size_t long_len = 6);

// A minimum-depth block (w, n, M) with min_len <= |w| <= max_len stays a
// transition block inside every extension x w z with |x|+|z| <= extra.
Outcome block_extension_stability(const shiftlab::FactorTriple& t, std::size_t min_len = 3,
                                  std::size_t max_len = 4, std::size_t extra = 3);

// Unique routability of the minimal certificate over extensions up to max_len.
Outcome unique_routability(const shiftlab::FactorTriple& t, std::size_t max_len = 8);

// τ is a bijection of M for every bridge |v| <= max_bridge, and
// τ over v1 w v2 equals τ over v2 after τ over v1.
Outcome tau_bridges(const shiftlab::FactorTriple& t, const shiftlab::TransitionBlockCert& cert,
                    std::size_t max_bridge = 5);

// Reversing twice gives back the classes; reversed classes have the same
// vertex sets with arrows turned around.
Outcome reversed_involution(const shiftlab::FactorTriple& t, std::size_t p_max = 4);

// class_degree (and degree when finite-to-one) agree on t, its 2- and 3-block
// presentations and its transpose.
Outcome recoding_invariance(const shiftlab::FactorTriple& t);

// routing_profile, word_matrix, symbol sets and B_n(Y) against the path
// enumerator for every Y-word of length <= max_len.
Outcome oracle_equivalence(const shiftlab::FactorTriple& t, std::size_t max_len = 6);

// magic_search d_min against the brute-force minimum over words up to max_len.
Outcome magic_against_oracle(const shiftlab::FactorTriple& t, std::size_t max_len = 8);

}  // namespace properties
