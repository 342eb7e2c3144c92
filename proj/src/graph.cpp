#include "vnc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "vnc/kernels.hpp"

namespace vnc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(adj_.size());
  for (const auto& list : adj_) seq.push_back(list.size());
  std::sort(seq.begin(), seq.end());
  return seq;
}

bool Graph::is_regular(std::size_t k) const {
  return std::all_of(adj_.begin(), adj_.end(), [k](const auto& l) { return l.size() == k; });
}

Graph Graph::relabeled(const Permutation& relabel) const {
  if (relabel.degree() != order()) throw std::invalid_argument("relabelling degree mismatch");
  std::vector<Edge> moved;
  moved.reserve(edge_count_);
  for (const auto& [u, v] : edges()) moved.emplace_back(relabel[u], relabel[v]);
  return from_edges(order(), moved);
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != order()) return false;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    if (adj_[p[u]].size() != adj_[u].size()) return false;
    for (Vertex v : adj_[u]) {
      if (!adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& x) {
  if (x.order() == 0) return true;
  std::vector<bool> seen(x.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : x.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == x.order();
}

Girth girth(const Graph& x) { return kernels::girth(x); }

std::string girth_to_string(const Girth& g) { return g ? std::to_string(*g) : "inf"; }

std::size_t diameter(const Graph& x) {
  std::size_t best = 0;
  std::vector<std::int64_t> dist(x.order());
  for (Vertex s = 0; s < x.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    q.push(s);
    dist[s] = 0;
    std::size_t reached = 1;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : x.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          best = std::max(best, static_cast<std::size_t>(dist[v]));
          ++reached;
          q.push(v);
        }
      }
    }
    if (reached != x.order()) throw std::invalid_argument("diameter of a disconnected graph");
  }
  return best;
}

Graph quotient_graph(const Graph& x, const OrbitPartition& partition) {
  if (partition.block_of.size() != x.order()) {
    throw std::invalid_argument("partition does not cover the vertex set");
  }
  std::vector<std::size_t> covered(x.order(), 0);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (Vertex v : partition.blocks[b]) {
      if (v >= x.order() || partition.block_of[v] != b) {
        throw std::invalid_argument("inconsistent partition");
      }
      ++covered[v];
    }
  }
  if (std::any_of(covered.begin(), covered.end(), [](std::size_t c) { return c != 1; })) {
    throw std::invalid_argument("partition does not cover the vertex set exactly once");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : x.edges()) {
    const auto bu = static_cast<Vertex>(partition.block_of[u]);
    const auto bv = static_cast<Vertex>(partition.block_of[v]);
    if (bu != bv) edges.emplace_back(std::min(bu, bv), std::max(bu, bv));
  }
  return Graph::from_edges(partition.blocks.size(), edges);
}

InducedSubgraph induced_subgraph(const Graph& x, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.vertices.assign(vertices.begin(), vertices.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  std::vector<std::int64_t> index(x.order(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    if (out.vertices[i] >= x.order()) throw std::out_of_range("induced vertex out of range");
    index[out.vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (Vertex w : x.neighbors(out.vertices[i])) {
      if (index[w] > static_cast<std::int64_t>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
      }
    }
  }
  out.graph = Graph::from_edges(out.vertices.size(), edges);
  return out;
}

std::uint64_t count_s_arcs(const Graph& x, std::size_t s) {
  if (s == 0) return x.order();
  // ways[a] = number of (k)-arcs ending with the arc a = (u -> v). Arcs are
  // indexed by (u, position of v in adj[u]).
  std::vector<std::size_t> offset(x.order() + 1, 0);
  for (Vertex u = 0; u < x.order(); ++u) offset[u + 1] = offset[u] + x.degree(u);
  std::vector<std::uint64_t> ways(offset.back(), 1);
  std::vector<std::uint64_t> next(offset.back());
  auto arc_index = [&](Vertex u, Vertex v) {
    const auto nb = x.neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  for (std::size_t step = 1; step < s; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (Vertex u = 0; u < x.order(); ++u) {
      for (Vertex v : x.neighbors(u)) {
        const std::uint64_t w = ways[arc_index(u, v)];
        for (Vertex t : x.neighbors(v)) {
          if (t != u) next[arc_index(v, t)] += w;
        }
      }
    }
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total += w;
  return total;
}

Graph lexicographic_cycle_2K1(std::size_t n) {
  if (n < 3) throw std::invalid_argument("C_n[2K_1] needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = static_cast<Vertex>(2 * i);
    const auto yi = static_cast<Vertex>(2 * i + 1);
    const auto xj = static_cast<Vertex>(2 * ((i + 1) % n));
    const auto yj = static_cast<Vertex>(2 * ((i + 1) % n) + 1);
    edges.insert(edges.end(), {{xi, xj}, {yi, yj}, {xi, yj}, {yi, xj}});
  }
  return Graph::from_edges(2 * n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph hypercube_graph(std::size_t dimension) {
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dimension; ++b) {
      const Vertex v = u ^ (Vertex{1} << b);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

std::string to_edge_list(const Graph& x) {
  std::string out = std::to_string(x.order()) + " " + std::to_string(x.size()) + "\n";
  for (const auto& [u, v] : x.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("edge list: missing header line");
  std::size_t n = 0;
  std::size_t m = 0;
  {
    std::istringstream head(line);
    if (!(head >> n >> m)) throw std::invalid_argument("edge list: malformed header");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) throw std::invalid_argument("edge list: fewer edges than declared");
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list: malformed edge line '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw std::invalid_argument("edge list: more edges than declared");
  Graph g = Graph::from_edges(n, edges);
  if (g.size() != m) throw std::invalid_argument("edge list: duplicate edges");
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

std::string to_dot(const Graph& x, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (Vertex v = 0; v < x.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : x.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace vnc
