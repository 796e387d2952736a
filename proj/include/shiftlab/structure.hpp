#pragma once

// Structure of minimal transition blocks: the permutation τ_u, block
// partitions of magic words, symbol class tables, the composition
// inequality, and diamonds relative to a proper subshift.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shiftlab/classdeg.hpp"
#include "shiftlab/degree.hpp"
#include "shiftlab/fibers.hpp"

namespace shiftlab {

struct TauPermutation {
  TransitionBlockCert block;
  Word bridge;
  Word u;                                     // w v w
  std::vector<std::pair<Symbol, Symbol>> map;  // a -> τ(a), by a
  bool is_identity() const;
  std::optional<Symbol> apply(Symbol a) const;
};

// τ over u = w·v·w. When `class_degree_value` is omitted it is computed, and
// a certificate of larger depth is rejected with NotMinimal.
TauPermutation tau_permutation(const FactorTriple& t, const TransitionBlockCert& cert, const Word& bridge,
                               std::optional<std::size_t> class_degree_value = std::nullopt);

// One periodic context in which a word occurs: y = q^∞ with the word starting
// at coordinate `offset` (taken modulo the unrolled period).
struct ContextRow {
  Word q;
  std::size_t offset = 0;
  std::size_t class_count = 0;
  bool eligible = false;        // class_count == c_π
  std::vector<SymbolSet> sets;  // per class, symbols at the inspected coordinate
};

struct NoPartitionWitness {
  std::pair<Symbol, Symbol> separated;
  std::size_t separating_row = 0;
  // co-occurrence chain from separated.first to separated.second:
  // (symbol, symbol, row) steps
  std::vector<std::tuple<Symbol, Symbol, std::size_t>> chain;
};

struct SymbolClassTable {
  Symbol label = 0;
  std::size_t class_degree = 0;
  std::vector<ContextRow> rows;
  bool partition_exists = false;
  std::vector<SymbolSet> parts;               // when partition_exists
  std::optional<NoPartitionWitness> witness;  // conflict between merge and separation
  std::string reason;                         // when no partition and no witness
  // some eligible context realizes the whole fiber (periodic analogue of
  // the full-fiber hypothesis)
  bool full_fiber_realized = false;
};

SymbolClassTable symbol_class_table(const FactorTriple& t, Symbol label, std::size_t p_max,
                                    std::optional<std::size_t> class_degree_value = std::nullopt);

struct BlockPartition {
  Word word;
  std::size_t coordinate = 0;              // magic coordinate
  std::vector<SymbolSet> symbol_parts;     // parts of the magic-coordinate fiber
  std::vector<std::vector<Word>> parts;    // preimage blocks, by symbol part
  std::vector<ContextRow> contexts;
};

BlockPartition magic_partition(const FactorTriple& t, const Word& magic_word, std::size_t p_max,
                               std::optional<std::size_t> class_degree_value = std::nullopt);

struct CompositionCheck {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t composed = 0;
  bool holds = false;
  bool strict = false;
  std::vector<std::string> warnings;
  ClassDegreeReport r1, r2, rc;
};

CompositionCheck composition_check(const FactorTriple& t1, const FactorTriple& t2,
                                   const ClassDegreeOptions& options = {});

struct SubshiftDiamond {
  std::optional<Diamond> diamond;
  std::size_t l = 0;      // length of the minimal transition block witness
  std::size_t k = 0;      // connecting gap of X
  std::size_t bound = 0;  // |v| must stay below this
};

// `keep` selects the symbols of the subshift (essentialized); v_bar is a word
// over A(X) that is not a word of the subshift.
SubshiftDiamond subshift_diamond(const FactorTriple& t, const SymbolSet& keep, const Word& v_bar,
                                 std::optional<std::size_t> bound_override = std::nullopt);

bool is_subshift_diamond(const FactorTriple& t, const SymbolSet& keep, const Word& v_bar, const Diamond& d,
                         std::size_t bound);

// All preimage blocks of w, in lexicographic order.
std::vector<Word> preimages(const FactorTriple& t, const Word& w);

}  // namespace shiftlab
