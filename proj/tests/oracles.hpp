#pragma once

// Independent reference computations. They work on plain image tables and
// edge lists and use none of the library's algorithms, so agreement with the
// library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

// Every element of <gens> by closing {id} under right multiplication.
inline std::set<Images> closure(std::size_t degree, const std::vector<Images>& gens) {
  Images id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Images> seen{id};
  std::deque<Images> todo{id};
  while (!todo.empty()) {
    Images x = std::move(todo.front());
    todo.pop_front();
    for (const Images& g : gens) {
      Images y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline std::vector<std::vector<bool>> matrix(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

// |Aut| by trying all n! bijections.
inline std::uint64_t automorphism_count(std::size_t n, const EdgeList& edges) {
  const auto a = matrix(n, edges);
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!a[p[u]][p[v]]) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::vector<std::vector<std::uint32_t>> adjacency(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Non-backtracking walks of length s, counted by explicit recursion.
inline std::uint64_t s_arcs(std::size_t n, const EdgeList& edges, std::size_t s) {
  const auto adj = adjacency(n, edges);
  std::uint64_t total = 0;
  auto extend = [&](auto&& self, std::uint32_t prev, std::uint32_t cur, std::size_t left) -> void {
    if (left == 0) {
      ++total;
      return;
    }
    for (std::uint32_t w : adj[cur]) {
      if (w != prev || left == s) self(self, cur, w, left - 1);
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    if (s == 0) {
      ++total;
      continue;
    }
    for (std::uint32_t w : adj[v]) extend(extend, v, w, s - 1);
  }
  return total;
}

// Shortest cycle through each edge: remove it, then BFS between its ends.
// Returns 0 for forests.
inline std::size_t girth(std::size_t n, const EdgeList& edges) {
  const auto adj = adjacency(n, edges);
  std::size_t best = 0;
  for (auto [u, v] : edges) {
    std::vector<int> dist(n, -1);
    std::deque<std::uint32_t> q{u};
    dist[u] = 0;
    while (!q.empty()) {
      const std::uint32_t x = q.front();
      q.pop_front();
      for (std::uint32_t y : adj[x]) {
        if ((x == u && y == v) || (x == v && y == u) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    if (dist[v] > 0) {
      const std::size_t len = static_cast<std::size_t>(dist[v]) + 1;
      if (best == 0 || len < best) best = len;
    }
  }
  return best;
}

inline bool is_cycle(std::size_t n, const EdgeList& edges) {
  if (edges.size() != n || n < 3) return false;
  const auto adj = adjacency(n, edges);
  for (const auto& a : adj) {
    if (a.size() != 2) return false;
  }
  std::size_t steps = 0;
  std::uint32_t prev = 0, cur = adj[0][0];
  while (cur != 0) {
    const std::uint32_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps + 1 == n;
}

inline std::size_t components(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n;
  for (auto [u, v] : edges) {
    const std::size_t a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

}  // namespace oracle
