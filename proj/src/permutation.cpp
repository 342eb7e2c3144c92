#include "vnc/permutation.hpp"

#include <numeric>
#include <sstream>

namespace vnc {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("permutation image table is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles,
                                     bool one_based) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (one_based) {
        if (from == 0 || to == 0) throw std::invalid_argument("point 0 in 1-based cycle");
        --from;
        --to;
      }
      if (from >= degree || to >= degree) {
        throw std::out_of_range("cycle point exceeds permutation degree");
      }
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("permutation text lacks 'n:' prefix");
  }
  std::istringstream head{std::string(text.substr(0, colon))};
  std::size_t degree = 0;
  if (!(head >> degree)) throw std::invalid_argument("bad permutation degree");
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::vector<Point> images;
  images.reserve(degree);
  long long value = 0;
  while (body >> value) {
    if (value < 0) throw std::invalid_argument("negative image in permutation");
    images.push_back(static_cast<Point>(value));
  }
  if (!body.eof()) throw std::invalid_argument("non-numeric token in permutation");
  if (images.size() != degree) {
    throw std::invalid_argument("permutation image count does not match degree");
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Point Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  std::string out = std::to_string(images_.size()) + ":";
  for (Point v : images_) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    Point v = static_cast<Point>(start);
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = images_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[static_cast<Point>(i)]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  if (p.degree() != by.degree()) throw std::invalid_argument("degree mismatch in conjugate");
  // (by^-1 p by) sends by[i] to by[p[i]].
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[by[static_cast<Point>(i)]] = by[p[static_cast<Point>(i)]];
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::int64_t exponent) {
  Permutation base = exponent < 0 ? p.inverse() : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

namespace {

std::vector<std::size_t> cycle_lengths(const Permutation& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point v = static_cast<Point>(start); !seen[v]; v = p[v]) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_lengths(p)) order = std::lcm(order, std::uint64_t{len});
  return order;
}

bool is_semiregular(const Permutation& p) {
  const auto lengths = cycle_lengths(p);
  for (std::size_t len : lengths) {
    if (len != lengths.front()) return false;
  }
  return true;
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in commute");
  for (Point i = 0; i < p.degree(); ++i) {
    if (q[p[i]] != p[q[i]]) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace vnc
