#pragma once

// Construction, recoding, composition and transposition of factor triples,
// plus the deterministic subset presentation of the image shift Y = π(X).

#include <map>
#include <string>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

// Builds (X, π(X), π). A(Y) consists of the labels actually used by the
// essentialized graph; `y_order` (optional) fixes their order, otherwise they
// are ordered by first appearance along the symbol order of X.
FactorTriple build_triple(std::string name, const SymbolGraph& g, const std::map<std::string, std::string>& labels,
                          const std::vector<std::string>& y_order = {});

// Sliding block code with memory m and anticipation a: the image symbol at
// coordinate i is block_map(x[i-m .. i+a]).
struct SlidingBlockCode {
  std::size_t memory = 0;
  std::size_t anticipation = 0;
  std::map<Word, std::string> block_map;  // keyed by (m+a+1)-words of X
};

// (m+a+1)-block presentation of X with the induced one-block labels.
FactorTriple recode_one_block(std::string name, const SymbolGraph& g, const SlidingBlockCode& code);

// Higher block presentation of the domain, labelled by the first coordinate.
FactorTriple higher_block_triple(const FactorTriple& t, std::size_t n);

FactorTriple transpose_triple(const FactorTriple& t);

// Deterministic presentation of B(Y): states are nonempty forward subsets of
// A(X) reachable from the full seed; state 0 is the seed itself.
struct SoficPresentation {
  std::vector<SymbolSet> states;
  // transitions[state][b] = target state or -1
  std::vector<std::vector<int>> transitions;
  Alphabet alphabet;

  bool accepts(const Word& w) const;
  std::size_t state_count() const { return states.size(); }
};

SoficPresentation image_presentation(const FactorTriple& t);

// B_n(Y) in lexicographic order.
std::vector<Word> image_words(const FactorTriple& t, std::size_t n);

// True iff w ∈ B(Y).
bool in_image(const FactorTriple& t, const Word& w);

// Identity presentation of the domain language B(X) over the symbol names of X.
FactorTriple identity_triple(const SymbolGraph& g, std::string name = "identity");

// True iff every word accepted by `small` (over its alphabet) is accepted by
// `big`, where letters are matched by name. Letters of `small` missing from
// `big`'s alphabet make any word using them a counterexample.
bool language_included(const SoficPresentation& small, const SoficPresentation& big);

struct ComposeResult {
  FactorTriple triple;
  // B(Y1) == B(X2); false means X2's language strictly contains B(Y1)
  bool exact_image = true;
  std::vector<std::string> warnings;
};

// π = π2 ∘ π1. Requires every label of t1 to be a symbol of X2 and
// B(Y1) ⊆ B(X2).
ComposeResult compose(const FactorTriple& t1, const FactorTriple& t2);

}  // namespace shiftlab
