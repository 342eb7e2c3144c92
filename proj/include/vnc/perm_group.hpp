#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vnc/permutation.hpp"

namespace vnc {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Disjoint blocks covering {0, ..., n-1}, sorted by least element.
struct OrbitPartition {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t size() const { return blocks.size(); }
  static OrbitPartition singletons(std::size_t n);
  /// Builds the partition from a block label per point; blocks are renumbered
  /// by least element.
  static OrbitPartition from_labels(std::span<const std::size_t> labels);
};

/// Deterministic Schreier-Sims stabilizer chain.
///
/// New base points are the smallest point moved by the generator that forced
/// the new level, unless a base prefix was requested. Each level keeps an
/// explicit transversal (and its inverses) since degrees stay below a few
/// hundred points.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;      // strong generators fixing earlier base points
    std::vector<Point> orbit;                 // orbit of `base`, discovery order
    std::vector<std::int32_t> slot;           // point -> index into orbit, or -1
    std::vector<Permutation> transversal;     // base -> orbit[i]
    std::vector<Permutation> inverse_transversal;
  };

  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {});

  void add_generator(const Permutation& g);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  std::vector<Point> base() const;
  const std::vector<Level>& levels() const { return levels_; }

  /// Calls `visit` once for every group element, in transversal-product
  /// order. Stops early when `visit` returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  void add_to_level(std::size_t level, const Permutation& g);
  void process_pair(std::size_t level, std::size_t orbit_index, std::size_t gen_index);
  void append_orbit_point(std::size_t level, Point point, Permutation transversal);
  /// Sifts from `level` downwards; returns the residue and the level at
  /// which sifting stopped (levels_.size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t level) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with its stabilizer chain built
/// eagerly at construction. Instances are immutable values.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(0) {}
  explicit PermutationGroup(std::size_t degree, std::vector<Permutation> generators = {});
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::span<const Point> base_prefix);

  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return *chain_; }

  std::uint64_t order() const { return chain_->order(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  /// Returns a group with one more generator (shares nothing with *this).
  PermutationGroup with_generator(const Permutation& g) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

std::uint64_t group_order(const PermutationGroup& g);
bool membership(const PermutationGroup& g, const Permutation& p);

OrbitPartition orbits(const PermutationGroup& g);
std::vector<Point> orbit_of(const PermutationGroup& g, Point v);

/// Subgroup fixing v; checks |G| = |orbit(v)| * |G_v|.
PermutationGroup point_stabilizer(const PermutationGroup& g, Point v);

bool is_transitive(const PermutationGroup& g);
bool is_semiregular_group(const PermutationGroup& g);
bool is_regular_action(const PermutationGroup& g);

/// Smallest subgroup of `g` containing `seeds` and closed under conjugation
/// by the generators of `g`.
PermutationGroup normal_closure(const PermutationGroup& g, std::span<const Permutation> seeds);
PermutationGroup derived_subgroup(const PermutationGroup& g);
/// Derived series G, G', G'', ... ending at the first repeated or trivial term.
std::vector<PermutationGroup> derived_series(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);

/// True iff every generator of `h` lies in `g`.
bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g);
/// True iff `n` is a subgroup of `g` normalised by every generator of `g`.
bool is_normal_subgroup(const PermutationGroup& n, const PermutationGroup& g);
/// Equal as sets of permutations.
bool same_group(const PermutationGroup& a, const PermutationGroup& b);

/// Every element exactly once. Throws BoundExceeded when |G| > bound.
std::vector<Permutation> enumerate_elements(const PermutationGroup& g,
                                            std::uint64_t bound = kDefaultEnumerationBound);

/// Subgroup generated by `elements`, adding only elements not yet contained.
PermutationGroup subgroup_generated_by(std::size_t degree, std::span<const Permutation> elements);

/// Brute-force N_G(H) and C_G(H) by filtering the elements of G. H must be a
/// subgroup of G (std::invalid_argument otherwise).
PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h,
                            std::uint64_t bound = kDefaultEnumerationBound);
PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h,
                             std::uint64_t bound = kDefaultEnumerationBound);

/// Generators as image lists, one per line, in the "n: i0 ... " format.
std::string serialize_generators(const PermutationGroup& g);
PermutationGroup parse_generators(std::size_t degree, const std::string& text);

}  // namespace vnc
