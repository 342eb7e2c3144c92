#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vnc/perm_group.hpp"
#include "vnc/permutation.hpp"

namespace vnc {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse; loops and out-of-range endpoints throw
  /// std::invalid_argument / std::out_of_range.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // sorted ascending
  bool is_regular(std::size_t k) const;

  /// The graph relabelled so that vertex v becomes relabel[v].
  Graph relabeled(const Permutation& relabel) const;
  bool is_automorphism(const Permutation& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& x);

/// Shortest cycle length; std::nullopt stands for infinite girth (forests).
using Girth = std::optional<std::size_t>;
Girth girth(const Graph& x);
std::string girth_to_string(const Girth& g);

/// Largest eccentricity over all vertices; throws for disconnected graphs.
std::size_t diameter(const Graph& x);

/// Blocks adjacent iff some edge crosses between them; intra-block edges are
/// dropped. Throws std::invalid_argument if `partition` does not cover V(X).
Graph quotient_graph(const Graph& x, const OrbitPartition& partition);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;  // new index -> original vertex
};

/// Induced subgraph on `vertices`, relabelled 0..|B|-1 in ascending order of
/// the original labels.
InducedSubgraph induced_subgraph(const Graph& x, std::span<const Vertex> vertices);

/// Number of s-arcs (walks of length s without immediate backtracking).
std::uint64_t count_s_arcs(const Graph& x, std::size_t s);

/// C_n[2K_1]: x_i -> 2i, y_i -> 2i+1. Requires n >= 3.
Graph lexicographic_cycle_2K1(std::size_t n);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph hypercube_graph(std::size_t dimension);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge-list text: optional '#' comment lines, then "n m", then m lines
/// "u v" with u < v in lexicographic order.
std::string to_edge_list(const Graph& x);
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

std::string to_dot(const Graph& x, const std::string& name = "G");

}  // namespace vnc
