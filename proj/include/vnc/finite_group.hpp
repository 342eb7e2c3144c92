#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vnc/perm_group.hpp"

namespace vnc {

/// A permutation group together with an explicit, indexed element list.
/// Index 0 is always the identity. Element products follow the library-wide
/// convention: multiply(a, b) is element(a) followed by element(b).
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Elements listed in breadth-first order from the identity, extending by
  /// right multiplication with each generator in turn.
  static FiniteGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::uint64_t bound = 100'000);

  /// Uses the caller's element order. Throws std::invalid_argument unless
  /// the list is exactly the group, without repeats, starting at the identity.
  static FiniteGroup from_ordered_elements(PermutationGroup group,
                                           std::vector<Permutation> elements);

  const PermutationGroup& group() const { return group_; }
  std::size_t degree() const { return group_.degree(); }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<std::size_t> find(const Permutation& p) const;
  /// Throws std::invalid_argument if p is not an element.
  std::size_t index_of(const Permutation& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::uint64_t element_order(std::size_t a) const;
  std::size_t power(std::size_t a, std::int64_t k) const;

  /// Indices of the generators of group().
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

 private:
  void index_elements();

  PermutationGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generator_indices_;
  std::vector<std::uint32_t> table_;  // Cayley table, filled for small groups
};

/// An automorphism of a FiniteGroup, written as a permutation of element
/// indices.
using GroupAutomorphism = Permutation;

/// True iff alpha is a bijective homomorphism of h.
bool is_group_automorphism(const FiniteGroup& h, const GroupAutomorphism& alpha);

/// Builds the index map of the homomorphism sending generator i of h to
/// images[i]; nullopt if the assignment violates a relation or is not
/// bijective.
std::optional<GroupAutomorphism> extend_to_automorphism(const FiniteGroup& h,
                                                        const std::vector<std::size_t>& images);

/// All of Aut(h), found by trying every assignment of generator images with
/// matching element orders. Throws BoundExceeded when |h| > bound.
std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& h,
                                                   std::size_t bound = 512);

}  // namespace vnc
