#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace vnc {
class Graph;
}

/// Data-parallel kernels. Each kernel has an OpenMP implementation (the one
/// the library calls) and a serial reference in `kernels::serial` that the
/// tests compare against. Results never depend on the thread count.
namespace vnc::kernels {

/// Shortest cycle via BFS from every vertex; nullopt for forests.
std::optional<std::size_t> girth(const Graph& x);

/// Indices i in [0, count) with keep(i), ascending. `keep` must be safe to
/// call concurrently.
std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep);

/// Number of vertex permutations preserving adjacency, by enumerating all n!
/// bijections. Only meant as an oracle for n <= 9.
std::uint64_t brute_force_automorphism_count(const Graph& x);

int max_threads();

namespace serial {
std::optional<std::size_t> girth(const Graph& x);
std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep);
std::uint64_t brute_force_automorphism_count(const Graph& x);
}  // namespace serial

}  // namespace vnc::kernels
