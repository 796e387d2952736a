#pragma once

// Brute-force reference for word matrices, symbol sets and routing families.
// Works on a plain adjacency matrix and label vector and enumerates every
// X-path explicitly; nothing here touches the library's bit containers or
// subset propagation.

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Code {
  std::vector<std::vector<bool>> edge;  // edge[s][t]
  std::vector<int> label;               // label[s]
  int image_size = 0;

  std::size_t size() const { return label.size(); }
};

using Path = std::vector<int>;
using Pair = std::pair<int, int>;

// Every X-path u with label sequence w.
std::vector<Path> preimages(const Code& c, const std::vector<int>& w);

// {(u_0, u_last)} over preimages of w.
std::set<Pair> endpoint_pairs(const Code& c, const std::vector<int>& w);

// {u_k} over preimages of w.
std::set<int> symbols_at(const Code& c, const std::vector<int>& w, std::size_t k);

// min over k of |symbols_at(w, k)|; nullopt-like -1 when w has no preimage.
int d_of_word(const Code& c, const std::vector<int>& w);

// (i, t) -> {u_n : u preimage with u_0 = i, u_last = t}
std::map<Pair, std::set<int>> routing(const Code& c, const std::vector<int>& w, std::size_t n);

// Every preimage u can be rerouted, keeping its endpoints, through M at n.
bool is_transition_block(const Code& c, const std::vector<int>& w, std::size_t n, const std::set<int>& m);

// Smallest |M| over interior n by trying subsets of the fiber in size order.
std::size_t min_depth(const Code& c, const std::vector<int>& w);

// All words of length n over the image alphabet that have a preimage.
std::vector<std::vector<int>> image_words(const Code& c, std::size_t n);

// Is there a pair of distinct equal-label paths of length <= max_len with
// common first and last symbols?
bool has_diamond(const Code& c, std::size_t max_len);

}  // namespace oracle
