#include "vnc/finite_group.hpp"

#include <stdexcept>

namespace vnc {

namespace {
constexpr std::size_t kTableLimit = 1024;
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                         std::uint64_t bound) {
  FiniteGroup fg;
  fg.group_ = PermutationGroup(degree, generators);
  if (fg.group_.order() > bound) {
    throw BoundExceeded("finite group of order " + std::to_string(fg.group_.order()) +
                        " exceeds element-list bound");
  }
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  fg.elements_.push_back(Permutation::identity(degree));
  seen.emplace(fg.elements_.front(), 0);
  for (std::size_t i = 0; i < fg.elements_.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation next = compose(fg.elements_[i], g);
      if (seen.emplace(next, fg.elements_.size()).second) fg.elements_.push_back(std::move(next));
    }
  }
  fg.index_elements();
  return fg;
}

FiniteGroup FiniteGroup::from_ordered_elements(PermutationGroup group,
                                               std::vector<Permutation> elements) {
  if (elements.size() != group.order()) {
    throw std::invalid_argument("element list size does not match the group order");
  }
  if (elements.empty() || !elements.front().is_identity()) {
    throw std::invalid_argument("element list must start with the identity");
  }
  for (const Permutation& p : elements) {
    if (!group.contains(p)) throw std::invalid_argument("element list contains a non-member");
  }
  FiniteGroup fg;
  fg.group_ = std::move(group);
  fg.elements_ = std::move(elements);
  fg.index_elements();
  return fg;
}

void FiniteGroup::index_elements() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw std::invalid_argument("element list contains repeats");
    }
  }
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
  }
  generator_indices_.clear();
  for (const Permutation& g : group_.generators()) generator_indices_.push_back(index_.at(g));
  table_.clear();
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = static_cast<std::uint32_t>(index_.at(compose(elements_[a], elements_[b])));
      }
    }
  }
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation is not an element of the group");
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(compose(elements_[a], elements_[b]));
}

std::uint64_t FiniteGroup::element_order(std::size_t a) const {
  return vnc::element_order(elements_[a]);
}

std::size_t FiniteGroup::power(std::size_t a, std::int64_t k) const {
  return index_.at(vnc::power(elements_[a], k));
}

bool is_group_automorphism(const FiniteGroup& h, const GroupAutomorphism& alpha) {
  if (alpha.degree() != h.order() || alpha[0] != 0) return false;
  for (std::size_t a = 0; a < h.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) {
      const auto ab = h.multiply(a, b);
      if (alpha[static_cast<Point>(ab)] !=
          h.multiply(alpha[static_cast<Point>(a)], alpha[static_cast<Point>(b)])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<GroupAutomorphism> extend_to_automorphism(const FiniteGroup& h,
                                                        const std::vector<std::size_t>& images) {
  const auto& gens = h.generator_indices();
  if (images.size() != gens.size()) throw std::invalid_argument("one image per generator required");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(h.order(), kUnset);
  map[0] = 0;
  // Breadth-first over the Cayley graph: phi(x g) = phi(x) phi(g). A clash
  // means some relation of h is not respected by the assignment.
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::size_t y = h.multiply(x, gens[j]);
      const std::size_t image = h.multiply(map[x], images[j]);
      if (map[y] == kUnset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(h.order(), false);
  std::vector<Point> table(h.order());
  for (std::size_t x = 0; x < h.order(); ++x) {
    if (map[x] == kUnset || hit[map[x]]) return std::nullopt;
    hit[map[x]] = true;
    table[x] = static_cast<Point>(map[x]);
  }
  return GroupAutomorphism(std::move(table));
}

std::vector<GroupAutomorphism> group_automorphisms(const FiniteGroup& h, std::size_t bound) {
  if (h.order() > bound) {
    throw BoundExceeded("group of order " + std::to_string(h.order()) +
                        " exceeds automorphism search bound " + std::to_string(bound));
  }
  const auto& gens = h.generator_indices();
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto order = h.element_order(gens[j]);
    for (std::size_t x = 0; x < h.order(); ++x) {
      if (h.element_order(x) == order) candidates[j].push_back(x);
    }
  }
  std::vector<GroupAutomorphism> result;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<std::size_t> images(gens.size());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][choice[j]];
    if (auto alpha = extend_to_automorphism(h, images)) result.push_back(std::move(*alpha));
    std::size_t j = 0;
    while (j < gens.size() && ++choice[j] == candidates[j].size()) choice[j++] = 0;
    if (j == gens.size()) break;
  }
  return result;
}

}  // namespace vnc
