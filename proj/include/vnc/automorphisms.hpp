#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnc/graph.hpp"
#include "vnc/perm_group.hpp"

namespace vnc {

inline constexpr std::size_t kDefaultVertexBound = 1024;

struct AutomorphismResult {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  OrbitPartition orbits;
  PermutationGroup group;
  std::uint64_t search_nodes = 0;
};

/// Full automorphism group by equitable refinement and individualization.
/// Deterministic for a fixed input labelling. Throws BoundExceeded when the
/// graph has more than `bound` vertices.
AutomorphismResult automorphism_group(const Graph& x, std::size_t bound = kDefaultVertexBound);

struct CanonicalForm {
  Permutation labeling;  // vertex -> canonical label
  Graph graph;           // x relabelled by `labeling`
  std::string certificate;
};

/// Canonical labelling: isomorphic inputs give identical `graph` and
/// `certificate`. The certificate is "vnc-cert/1 n m | u-v u-v ..." with the
/// canonical edges in lexicographic order.
CanonicalForm canonical_form(const Graph& x, std::size_t bound = kDefaultVertexBound);

/// An adjacency-preserving bijection x -> y, or nullopt if none exists.
std::optional<Permutation> are_isomorphic(const Graph& x, const Graph& y,
                                          std::size_t bound = kDefaultVertexBound);

}  // namespace vnc
