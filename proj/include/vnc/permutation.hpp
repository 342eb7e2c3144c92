#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vnc {

using Point = std::uint32_t;

/// Thrown when an operation would exceed one of the configured desk-scale
/// bounds (enumeration size, automorphism search size, ...).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection on {0, ..., n-1} stored as its image table.
///
/// Composition follows a single convention everywhere in the library: in
/// compose(p, q) the left argument acts first, so the result sends i to
/// q[p[i]].
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles. With `one_based` the points
  /// are shifted down by one, which is how cycle notation is usually printed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles,
                                 bool one_based = false);

  /// Parses the one-line image list "n: i0 i1 ... i(n-1)".
  static Permutation parse(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t fixed_point_count() const;
  Point smallest_moved_point() const;  // degree() if identity

  /// Image list "n: i0 i1 ... i(n-1)".
  std::string to_string() const;
  /// Cycle notation, 0-based, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& p, const Permutation& by);

  std::vector<Point> images_;
};

/// p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

/// by^-1 * p * by, i.e. the permutation p relabelled through `by`.
Permutation conjugate(const Permutation& p, const Permutation& by);

Permutation power(const Permutation& p, std::int64_t exponent);

/// Least k >= 1 with p^k = identity (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

/// True iff all cycles of p have the same length.
bool is_semiregular(const Permutation& p);

bool commute(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace vnc
