#pragma once

// Fibers over periodic points of Y: the layered fiber graph, transition
// classes and their one-way arrows, reversed classes, and point counts.
//
// Classes live on the time-unrolled fiber graph: vertices (j, s) with j taken
// modulo G, where G is the lcm of the periods of the cycle-bearing components
// of the phase graph. A component whose period exceeds |q| carries several
// distinct classes (shifted copies of one another), which the phase graph
// alone cannot separate.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab {

struct PeriodicWord {
  Word q;  // primitive, lexicographically least rotation

  std::size_t period() const { return q.size(); }
  Symbol at(std::size_t i) const { return q[i % q.size()]; }
  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};

// Least rotation of the primitive root of q.
PeriodicWord canonical_periodic(const Word& q);

// q_0 q_{p-1} ... q_1, so that (q^∞)^T corresponds to the reversed word.
Word reversed_periodic(const Word& q);

// All canonical words of period <= p_max whose repetition lies in Y, ordered
// by period then lexicographically.
std::vector<PeriodicWord> periodic_words(const FactorTriple& t, std::size_t p_max);

struct FiberVertex {
  std::size_t phase = 0;
  Symbol symbol = 0;
  friend auto operator<=>(const FiberVertex&, const FiberVertex&) = default;
};

struct FiberGraph {
  Word q;
  std::vector<FiberVertex> vertices;  // sorted by (phase, symbol)
  std::vector<std::vector<std::uint32_t>> adj;

  std::optional<std::uint32_t> index(std::size_t phase, Symbol s) const;
  std::size_t edge_count() const;
};

// Vertices (i, s) with π(s) = q_i over Z_p, essentialized. Throws NotInImage
// when q^∞ has no preimage. The word does not need to be canonical.
FiberGraph fiber_graph(const FactorTriple& t, const Word& q);

struct TransitionClass {
  std::vector<FiberVertex> vertices;  // phase = time modulo the unrolled period
  std::vector<Symbol> cycle;          // one periodic preimage, starting at time 0
};

struct ClassStructure {
  Word q;
  std::size_t unrolled = 1;  // G, a multiple of |q|
  std::vector<TransitionClass> classes;
  // (from, to): from reaches to; transitively closed, irreflexive
  std::vector<std::pair<std::size_t, std::size_t>> arrows;

  bool has_arrow(std::size_t from, std::size_t to) const;
  friend bool operator==(const ClassStructure& a, const ClassStructure& b) {
    return a.q == b.q && a.unrolled == b.unrolled && a.arrows == b.arrows && a.classes.size() == b.classes.size() &&
           std::equal(a.classes.begin(), a.classes.end(), b.classes.begin(),
                      [](const TransitionClass& x, const TransitionClass& y) { return x.vertices == y.vertices; });
  }
};

ClassStructure periodic_classes(const FactorTriple& t, const Word& q);

// Symbols at coordinate i (any integer, reduced modulo G) over the recurrent
// part of each class.
std::vector<SymbolSet> class_restriction(const ClassStructure& cs, std::size_t universe, std::size_t i);

// Same, over every preimage point eventually confined to the class.
std::vector<SymbolSet> class_restriction_all(const FactorTriple& t, const ClassStructure& cs, std::size_t i);

// Classes of the transposed code over the reversed word, with times mapped
// back to coordinates of q^∞.
ClassStructure reversed_classes(const FactorTriple& t, const Word& q);

// Maps times j -> -j (mod G) and reorders canonically; arrows are kept as is.
ClassStructure reflect(const ClassStructure& cs, Word q);

struct SeparationEntry {
  std::size_t time = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  bool intersect = false;
};

struct SeparationReport {
  std::vector<SeparationEntry> entries;
  bool all_disjoint = true;
  // intersections over a periodic point are observations, not failures
  std::string note;
};

SeparationReport separation_diagnostic(const ClassStructure& cs, std::size_t universe);

struct PointCount {
  bool finite = true;
  std::size_t count = 0;
};

PointCount fiber_point_count(const FactorTriple& t, const Word& q);

}  // namespace shiftlab
