#include "shiftlab/graph_algo.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace shiftlab::graph {

Components strongly_connected(const Adjacency& adj) {
  const auto n = static_cast<Vertex>(adj.size());
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, unset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  Components out;
  out.id.assign(n, unset);
  std::uint32_t counter = 0;

  // iterative Tarjan: frames of (vertex, next edge position)
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        Vertex w = adj[v][pos++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        auto cid = static_cast<std::uint32_t>(out.members.size());
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.id[w] = cid;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
      Vertex finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  out.cyclic.assign(out.members.size(), false);
  for (std::size_t c = 0; c < out.members.size(); ++c) {
    if (out.members[c].size() > 1) {
      out.cyclic[c] = true;
      continue;
    }
    Vertex v = out.members[c][0];
    out.cyclic[c] = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
  }
  return out;
}

std::vector<std::vector<bool>> reachability(const Adjacency& adj) {
  const auto n = adj.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    reach[s][s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adj[v]) {
        if (!reach[s][w]) {
          reach[s][w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::vector<bool> essential_vertices(const Adjacency& adj) {
  const auto n = adj.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  auto rev = reversed(adj);
  for (Vertex v = 0; v < n; ++v) {
    out_deg[v] = adj[v].size();
    in_deg[v] = rev[v].size();
  }
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (out_deg[v] == 0 || in_deg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (Vertex w : adj[v])
      if (alive[w] && --in_deg[w] == 0) queue.push_back(w);
    for (Vertex u : rev[v])
      if (alive[u] && --out_deg[u] == 0) queue.push_back(u);
  }
  return alive;
}

std::uint64_t component_period(const Adjacency& adj, const std::vector<Vertex>& members,
                               const std::vector<std::uint32_t>& component_id) {
  if (members.empty()) return 0;
  const std::uint32_t cid = component_id[members.front()];
  constexpr auto unset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> level(adj.size(), unset);
  std::deque<Vertex> queue{members.front()};
  level[members.front()] = 0;
  std::uint64_t g = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (component_id[w] != cid) continue;
      if (level[w] == unset) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      } else {
        auto diff = level[v] + 1 - level[w];
        g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  return g;
}

Adjacency reversed(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (Vertex v = 0; v < adj.size(); ++v)
    for (Vertex w : adj[v]) rev[w].push_back(v);
  return rev;
}

}  // namespace shiftlab::graph
