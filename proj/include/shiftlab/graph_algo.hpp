#pragma once

// Small directed-graph toolkit over dense vertex ids: strongly connected
// components, reachability and the "essential" core (vertices lying on
// bi-infinite paths).

#include <cstdint>
#include <vector>

namespace shiftlab::graph {

using Vertex = std::uint32_t;
using Adjacency = std::vector<std::vector<Vertex>>;

struct Components {
  // component id per vertex; ids are assigned in reverse topological order
  // (a component only reaches components with smaller or equal id)
  std::vector<std::uint32_t> id;
  std::vector<std::vector<Vertex>> members;
  // true iff the component carries a cycle (size > 1 or a self loop)
  std::vector<bool> cyclic;
};

Components strongly_connected(const Adjacency& adj);

// reach[v] = every vertex reachable from v by a path of length >= 0
std::vector<std::vector<bool>> reachability(const Adjacency& adj);

// Vertices with both an incoming and an outgoing edge after iterated pruning.
std::vector<bool> essential_vertices(const Adjacency& adj);

// Period (gcd of cycle lengths) of a strongly connected vertex set.
std::uint64_t component_period(const Adjacency& adj, const std::vector<Vertex>& members,
                               const std::vector<std::uint32_t>& component_id);

Adjacency reversed(const Adjacency& adj);

}  // namespace shiftlab::graph
