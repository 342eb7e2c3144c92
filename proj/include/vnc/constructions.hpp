#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vnc/finite_group.hpp"
#include "vnc/graph.hpp"
#include "vnc/perm_group.hpp"

namespace vnc {

// ---------------------------------------------------------------------------
// Cayley and coset graphs

/// Cay(G, S): vertex i is element(i), edges {g, s g}. S must be
/// inverse-closed and avoid the identity.
Graph cayley_graph(const FiniteGroup& g, std::span<const std::size_t> connection_set);

/// {h1 a h2 : h1, h2 in H} as sorted element indices of g.
std::vector<std::size_t> double_coset(const PermutationGroup& h, const Permutation& a,
                                      const FiniteGroup& g);

/// Right cosets Hx of H in G. Representatives are discovered breadth-first
/// from the identity using G's generator list, which fixes the vertex
/// numbering of coset graphs.
class CosetSpace {
 public:
  CosetSpace(const PermutationGroup& g, const PermutationGroup& h);

  std::size_t size() const { return representatives_.size(); }
  const Permutation& representative(std::size_t i) const { return representatives_[i]; }
  /// Index of the coset H x. Throws std::invalid_argument for x outside G.
  std::size_t coset_of(const Permutation& x) const;
  const std::vector<Permutation>& subgroup_elements() const { return h_elements_; }

 private:
  Permutation key(const Permutation& x) const;

  std::vector<Permutation> h_elements_;
  std::vector<Permutation> representatives_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

struct CosetGraph {
  Graph graph;
  PermutationGroup action;  // right multiplication of G on the cosets
  std::size_t valency = 0;  // |D| / |H|
  bool has_loops = false;   // D meets H; those edges are dropped
};

/// Cos(G, H, D): vertices are right cosets, Hx ~ Hdx for d in D. D must be
/// inverse-closed and a union of (H, H)-double cosets.
CosetGraph coset_graph(const PermutationGroup& g, const PermutationGroup& h,
                       std::span<const Permutation> d);

/// HaH u HbH u ... as a sorted list of permutations.
std::vector<Permutation> double_coset_union(const PermutationGroup& h,
                                            std::span<const Permutation> representatives);

// ---------------------------------------------------------------------------
// Bi-Cayley graphs

/// BiCay(H, R, L, S). Vertex h_0 is index(h), vertex h_1 is |H| + index(h).
struct BiCayleySpec {
  FiniteGroup group;
  std::vector<std::size_t> right;   // R
  std::vector<std::size_t> left;    // L
  std::vector<std::size_t> spokes;  // S

  /// R = R^-1, L = L^-1, identity outside R and L, indices in range.
  void validate() const;
};

Graph bicayley_graph(const BiCayleySpec& spec);

/// R(g): h_i -> (h g)_i.
Permutation bicayley_right_multiplication(const BiCayleySpec& spec, std::size_t g);
PermutationGroup bicayley_right_regular(const BiCayleySpec& spec);

/// delta_alpha swaps the two parts, h_0 -> (h^alpha)_1, h_1 -> (h^alpha)_0.
Permutation delta_map(const BiCayleySpec& spec, const GroupAutomorphism& alpha);
/// sigma_alpha keeps the parts, h_i -> (h^alpha)_i.
Permutation sigma_map(const BiCayleySpec& spec, const GroupAutomorphism& alpha);

struct BiCayleyAutomorphisms {
  std::vector<Permutation> swapping;                 // the set I of delta maps
  std::vector<GroupAutomorphism> swapping_alphas;    // alpha for each entry of I
  PermutationGroup fixing;                           // the group F of sigma maps
  std::vector<GroupAutomorphism> fixing_alphas;
};

/// I = {delta_a : R^a = L, L^a = R, S^a = S^-1} and
/// F = <sigma_a : R^a = R, L^a = L, S^a = S>, with Aut(H) found by exhaustive
/// search. Every returned map is checked to be a graph automorphism.
BiCayleyAutomorphisms compute_I_F(const BiCayleySpec& spec, std::size_t bound = 512);

// ---------------------------------------------------------------------------
// X(n, 2)

/// Cubic graph of order 4n; x_k^r -> 2k + r for k in Z_2n, r in Z_2.
Graph x_n_2(std::size_t n);

/// The automorphisms alpha (k -> k+2), beta (swap superscripts) and gamma
/// (k -> 2n-1-k), which generate a regular dihedral group of order 4n.
PermutationGroup x_n_2_regular_group(std::size_t n);

// ---------------------------------------------------------------------------
// Catalogue

struct CatalogueEntry {
  std::string name;        // "NC0" ... "NC8"
  std::string group_name;  // e.g. "S5", "A5xZ2", "PGL(2,7)"
  std::uint64_t group_order = 0;
  std::size_t degree = 0;
  std::vector<Permutation> subgroup_generators;
  Permutation a;
  Permutation b;
};

/// Table data for NC^i, i in 0..8, converted to 0-based points.
CatalogueEntry nc_catalogue_entry(int i);
/// Cos(G, H, HaH u HbH) with G = <H, a, b>; checks |G| against the table.
CosetGraph nc_coset_graph(int i);
Graph nc_catalogue(int i);

bool is_prime(std::uint64_t p);
/// Smallest integer of multiplicative order 4 modulo p (p prime, p = 1 mod 4).
std::uint64_t order_four_unit(std::uint64_t p);

/// H = S3 x Z_p as a permutation group of degree 3 + p, with a = (0 1),
/// b = (1 2) and c the p-cycle on 3..p+2. Elements are indexed
/// 6-major: index = 6-part * p + exponent of c, with the S3 part listed as
/// e, a, b, ab, ba, aba.
FiniteGroup s3_times_cyclic(std::uint64_t p);

/// BiCay(S3 x Z_p, {ac, ac^-1}, {bc^l, bc^-l}, {1}). The default l is
/// order_four_unit(p). Throws std::invalid_argument unless p is a prime with
/// p = 1 mod 4, or if l does not have order 4.
BiCayleySpec nc9_spec(std::uint64_t p, std::optional<std::uint64_t> lambda = std::nullopt);
Graph nc9(std::uint64_t p, std::optional<std::uint64_t> lambda = std::nullopt);

/// The automorphism a <-> b, c -> c^lambda of S3 x Z_p (order 4).
GroupAutomorphism nc9_swap_automorphism(const BiCayleySpec& spec, std::uint64_t p,
                                        std::uint64_t lambda);

// ---------------------------------------------------------------------------
// Bundled Foster census graphs

/// Data directory: $VNC_DATA_DIR if set, otherwise the installed default.
std::string data_directory();

/// Known bundled names: F024, F060, F084, F204.
const std::vector<std::string>& foster_names();
std::size_t foster_expected_order(const std::string& name);

/// Loads <data_dir>/foster/<name>.edges and checks it is connected, cubic and
/// of the expected order. Throws std::invalid_argument for unknown names and
/// std::runtime_error if the data fails validation.
Graph foster_graph(const std::string& name, const std::string& data_dir = data_directory());

}  // namespace vnc
