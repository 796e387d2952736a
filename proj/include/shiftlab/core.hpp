#pragma once

// One-step shifts of finite type as symbol graphs, one-block factor triples,
// and the boolean word-matrix / transition-monoid toolkit.
//
// Conventions: every shift is stored in vertex-shift normal form (edge shifts
// are ingested by treating their edges as symbols); words are 0-based, so a
// word of length p+1 occupies coordinates 0..p.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftlab/bits.hpp"

namespace shiftlab {

using Word = std::vector<Symbol>;

// Finite ordered alphabet of string-named symbols. The order is fixed at
// construction and drives every tie-break in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Symbol> find(std::string_view name) const;
  Symbol at(std::string_view name) const;  // throws UnknownLabel

  // Whitespace- or comma-separated tokens, or (without separators) greedy
  // longest-match tokenization against the symbol names.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
  bool compact_ = true;  // all names are single code points
};

struct EssentializeLog {
  std::vector<std::string> removed;
};

class SymbolGraph {
 public:
  SymbolGraph() = default;

  const Alphabet& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool has_edge(Symbol from, Symbol to) const { return succ_[from].test(to); }
  const SymbolSet& successors(Symbol s) const { return succ_[s]; }
  const SymbolSet& predecessors(Symbol s) const { return pred_[s]; }
  std::vector<std::pair<Symbol, Symbol>> edges() const;
  std::size_t edge_count() const;

  // succ(S) and pred(S) as sets
  SymbolSet image(const SymbolSet& from) const;
  SymbolSet preimage(const SymbolSet& to) const;

  bool is_path(const Word& w) const;

  friend bool operator==(const SymbolGraph& a, const SymbolGraph& b) {
    return a.symbols_ == b.symbols_ && a.succ_ == b.succ_;
  }

 private:
  friend SymbolGraph make_graph_unchecked(Alphabet, const std::vector<std::pair<Symbol, Symbol>>&);
  Alphabet symbols_;
  std::vector<SymbolSet> succ_;
  std::vector<SymbolSet> pred_;
};

// Builds the graph and prunes symbols without in- or out-edges until stable.
SymbolGraph build_graph(const std::vector<std::string>& symbols,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        EssentializeLog* log = nullptr);

// Graph over an already-indexed alphabet; no essentialization.
SymbolGraph make_graph_unchecked(Alphabet symbols, const std::vector<std::pair<Symbol, Symbol>>& edges);

// Restricts g to `keep` and essentializes; empty result throws
// EmptyAfterEssentialization.
SymbolGraph induced_subgraph(const SymbolGraph& g, const SymbolSet& keep, EssentializeLog* log = nullptr);

bool is_irreducible(const SymbolGraph& g);

struct HigherBlock {
  SymbolGraph graph;
  std::size_t n = 1;
  std::vector<Word> blocks;  // new symbol -> its n-word over the old alphabet

  // old word of length L >= n -> new word of length L-n+1
  Word encode(const Word& w) const;
  // new word of length L -> old word of length L+n-1
  Word decode(const Word& w) const;
};

HigherBlock higher_block(const SymbolGraph& g, std::size_t n);

SymbolGraph transpose(const SymbolGraph& g);

// Shortest connecting-word lengths: gap(s,t) = (#edges on a shortest path
// s -> t) - 1, so gap is 0 for an edge. Max over all pairs; requires
// irreducibility.
std::size_t connecting_gap(const SymbolGraph& g);

class FactorTriple {
 public:
  FactorTriple() = default;
  FactorTriple(std::string name, SymbolGraph x, Alphabet y, std::vector<Symbol> labels);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const SymbolGraph& x() const { return x_; }
  const Alphabet& y() const { return y_; }
  Symbol label(Symbol s) const { return labels_[s]; }
  const std::vector<Symbol>& labels() const { return labels_; }
  const SymbolSet& fiber(Symbol b) const { return fibers_[b]; }
  std::size_t x_size() const { return x_.size(); }
  std::size_t y_size() const { return y_.size(); }

  Word project(const Word& x_word) const;

  // succ(S) ∩ π^{-1}(b) and pred(S) ∩ π^{-1}(b)
  SymbolSet step_forward(const SymbolSet& s, Symbol b) const { return x_.image(s) & fibers_[b]; }
  SymbolSet step_backward(const SymbolSet& s, Symbol b) const { return x_.preimage(s) & fibers_[b]; }

  friend bool operator==(const FactorTriple& a, const FactorTriple& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.labels_ == b.labels_;
  }

 private:
  std::string name_;
  SymbolGraph x_;
  Alphabet y_;
  std::vector<Symbol> labels_;
  std::vector<SymbolSet> fibers_;
};

struct WordMatrix {
  BoolMatrix bits;
  Symbol first_label = 0;
  Symbol last_label = 0;
  Word witness;

  std::size_t witness_len() const { return witness.size(); }
};

// Endpoint relation of π^{-1}(w); nullopt iff w is not in B(Y).
std::optional<WordMatrix> word_matrix(const FactorTriple& t, const Word& w);

// Right extension of a word matrix by one image symbol.
std::optional<WordMatrix> extend_right(const FactorTriple& t, const WordMatrix& m, Symbol b);

// Forward / backward propagated symbol sets along w: forward[k] is the set of
// symbols at coordinate k over preimages of w[0..k]; backward[k] the same for
// w[k..]. Entries become empty once the word leaves B(Y).
std::vector<SymbolSet> forward_sets(const FactorTriple& t, const Word& w);
std::vector<SymbolSet> backward_sets(const FactorTriple& t, const Word& w);

enum class MonoidStatus { Exact, Capped };

struct Monoid {
  std::vector<WordMatrix> elements;  // BFS order: witness length, then lexicographic witness
  MonoidStatus status = MonoidStatus::Exact;
  std::size_t cap = 0;
  std::size_t min_length = 1;
};

inline constexpr std::size_t kDefaultMonoidCap = 1'000'000;

// Default cap, overridable through the SHIFTLAB_CAP environment variable.
std::size_t default_monoid_cap();

// Closure of the word matrices of all words of length >= min_length under
// right extension, deduplicated on (bits, first_label, last_label).
Monoid monoid_closure(const FactorTriple& t, std::size_t cap, std::size_t min_length = 1);

}  // namespace shiftlab
