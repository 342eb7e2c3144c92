#include "vnc/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "vnc/graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vnc::kernels {

namespace {

constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

// Shortest closed walk found by BFS from `source` that closes through a
// non-tree edge. The minimum over all sources is the girth.
std::size_t shortest_cycle_from(const Graph& x, Vertex source, std::size_t cutoff,
                                std::vector<std::int64_t>& dist,
                                std::vector<std::int64_t>& parent) {
  std::fill(dist.begin(), dist.end(), -1);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  parent[source] = -1;
  std::size_t best = kNoCycle;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex u = frontier[head];
    if (2 * static_cast<std::size_t>(dist[u]) >= std::min(best, cutoff)) break;
    for (Vertex v : x.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        frontier.push_back(v);
      } else if (static_cast<std::int64_t>(v) != parent[u]) {
        best = std::min(best, static_cast<std::size_t>(dist[u] + dist[v] + 1));
      }
    }
  }
  return best;
}

std::optional<std::size_t> as_girth(std::size_t best) {
  if (best == kNoCycle) return std::nullopt;
  return best;
}

bool preserves_edges(const Graph& x, const std::vector<Edge>& edges,
                     const std::vector<Vertex>& image) {
  for (const auto& [u, v] : edges) {
    if (!x.adjacent(image[u], image[v])) return false;
  }
  return true;
}

// Automorphisms sending vertex 0 to `first`.
std::uint64_t count_with_first_image(const Graph& x, Vertex first) {
  const std::size_t n = x.order();
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (v != first) rest.push_back(v);
  }
  const auto edges = x.edges();
  std::vector<Vertex> image(n);
  image[0] = first;
  std::uint64_t count = 0;
  do {
    std::copy(rest.begin(), rest.end(), image.begin() + 1);
    count += preserves_edges(x, edges, image);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

void check_oracle_size(const Graph& x) {
  if (x.order() > 9) throw std::invalid_argument("brute-force oracle limited to 9 vertices");
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<std::size_t> girth(const Graph& x) {
  const auto n = static_cast<std::int64_t>(x.order());
  std::size_t best = kNoCycle;
#pragma omp parallel reduction(min : best)
  {
    std::vector<std::int64_t> dist(x.order());
    std::vector<std::int64_t> parent(x.order());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) {
      best = std::min(best, shortest_cycle_from(x, static_cast<Vertex>(s), best, dist, parent));
    }
  }
  return as_girth(best);
}

std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep) {
  std::vector<char> flags(count, 0);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    flags[static_cast<std::size_t>(i)] = keep(static_cast<std::size_t>(i)) ? 1 : 0;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < count; ++i) {
    if (flags[i]) kept.push_back(i);
  }
  return kept;
}

std::uint64_t brute_force_automorphism_count(const Graph& x) {
  check_oracle_size(x);
  if (x.order() == 0) return 1;
  const auto n = static_cast<std::int64_t>(x.order());
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
  for (std::int64_t first = 0; first < n; ++first) {
    total += count_with_first_image(x, static_cast<Vertex>(first));
  }
  return total;
}

namespace serial {

std::optional<std::size_t> girth(const Graph& x) {
  std::vector<std::int64_t> dist(x.order());
  std::vector<std::int64_t> parent(x.order());
  std::size_t best = kNoCycle;
  for (Vertex s = 0; s < x.order(); ++s) {
    best = std::min(best, shortest_cycle_from(x, s, kNoCycle, dist, parent));
  }
  return as_girth(best);
}

std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < count; ++i) {
    if (keep(i)) kept.push_back(i);
  }
  return kept;
}

std::uint64_t brute_force_automorphism_count(const Graph& x) {
  check_oracle_size(x);
  std::vector<Vertex> image(x.order());
  std::iota(image.begin(), image.end(), Vertex{0});
  const auto edges = x.edges();
  std::uint64_t count = 0;
  do {
    count += preserves_edges(x, edges, image);
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

}  // namespace serial

}  // namespace vnc::kernels
