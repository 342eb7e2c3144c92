#include "vnc/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vnc/kernels.hpp"

namespace vnc {

// ---------------------------------------------------------------------------
// OrbitPartition

OrbitPartition OrbitPartition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

OrbitPartition OrbitPartition::from_labels(std::span<const std::size_t> labels) {
  OrbitPartition part;
  part.block_of.assign(labels.size(), 0);
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.try_emplace(labels[v], part.blocks.size());
    if (inserted) part.blocks.emplace_back();
    part.blocks[it->second].push_back(static_cast<Point>(v));
    part.block_of[v] = it->second;
  }
  return part;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw std::out_of_range("base point out of range");
    Level level;
    level.base = b;
    level.slot.assign(degree_, -1);
    levels_.push_back(std::move(level));
    append_orbit_point(levels_.size() - 1, b, Permutation::identity(degree_));
  }
}

void StabilizerChain::append_orbit_point(std::size_t level, Point point, Permutation transversal) {
  Level& lv = levels_[level];
  lv.slot[point] = static_cast<std::int32_t>(lv.orbit.size());
  lv.orbit.push_back(point);
  lv.inverse_transversal.push_back(transversal.inverse());
  lv.transversal.push_back(std::move(transversal));
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t level) const {
  for (std::size_t j = level; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    const std::int32_t s = lv.slot[g[lv.base]];
    if (s < 0) return {std::move(g), j};
    g = compose(g, lv.inverse_transversal[static_cast<std::size_t>(s)]);
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::process_pair(std::size_t level, std::size_t orbit_index,
                                   std::size_t gen_index) {
  const Point beta = levels_[level].orbit[orbit_index];
  const Permutation& s = levels_[level].generators[gen_index];
  const Point gamma = s[beta];
  Permutation moved = compose(levels_[level].transversal[orbit_index], s);
  const std::int32_t gamma_slot = levels_[level].slot[gamma];
  if (gamma_slot < 0) {
    append_orbit_point(level, gamma, std::move(moved));
    return;
  }
  Permutation schreier =
      compose(moved, levels_[level].inverse_transversal[static_cast<std::size_t>(gamma_slot)]);
  auto [residue, stop] = sift(std::move(schreier), level + 1);
  if (!residue.is_identity()) add_to_level(level + 1, residue);
}

void StabilizerChain::add_to_level(std::size_t level, const Permutation& g) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    Level lv;
    lv.base = g.smallest_moved_point();
    lv.slot.assign(degree_, -1);
    levels_.push_back(std::move(lv));
    append_orbit_point(level, levels_[level].base, Permutation::identity(degree_));
  }
  levels_[level].generators.push_back(g);
  const std::size_t gen_index = levels_[level].generators.size() - 1;
  const std::size_t old_size = levels_[level].orbit.size();
  for (std::size_t i = 0; i < old_size; ++i) process_pair(level, i, gen_index);
  for (std::size_t i = old_size; i < levels_[level].orbit.size(); ++i) {
    for (std::size_t s = 0; s < levels_[level].generators.size(); ++s) process_pair(level, i, s);
  }
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (contains(g)) return;
  add_to_level(0, g);
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const Level& lv : levels_) {
    if (__builtin_mul_overflow(order, lv.orbit.size(), &order)) {
      throw BoundExceeded("group order does not fit in 64 bits");
    }
  }
  return order;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  return sift(g, 0).first.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const Level& lv : levels_) out.push_back(lv.base);
  return out;
}

void StabilizerChain::for_each_element(
    const std::function<bool(const Permutation&)>& visit) const {
  // Every element factors uniquely as t_{k-1} * ... * t_0 with t_j taken from
  // the transversal of level j.
  std::function<bool(std::size_t, const Permutation&)> walk =
      [&](std::size_t remaining, const Permutation& prefix) -> bool {
    if (remaining == 0) return visit(prefix);
    const Level& lv = levels_[remaining - 1];
    for (const Permutation& t : lv.transversal) {
      if (!walk(remaining - 1, compose(prefix, t))) return false;
    }
    return true;
  };
  walk(levels_.size(), Permutation::identity(degree_));
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermutationGroup(degree, std::move(generators), std::span<const Point>{}) {}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::span<const Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  auto chain = std::make_shared<StabilizerChain>(degree_, base_prefix);
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generators have unequal degrees");
    chain->add_generator(g);
  }
  chain_ = std::move(chain);
}

bool PermutationGroup::contains(const Permutation& p) const { return chain_->contains(p); }

PermutationGroup PermutationGroup::with_generator(const Permutation& g) const {
  auto gens = generators_;
  gens.push_back(g);
  return PermutationGroup(degree_, std::move(gens));
}

std::uint64_t group_order(const PermutationGroup& g) { return g.order(); }

bool membership(const PermutationGroup& g, const Permutation& p) { return g.contains(p); }

OrbitPartition orbits(const PermutationGroup& g) {
  std::vector<std::size_t> parent(g.degree());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& p : g.generators()) {
    for (Point i = 0; i < g.degree(); ++i) {
      const std::size_t a = find(i);
      const std::size_t b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> labels(g.degree());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = find(i);
  return OrbitPartition::from_labels(labels);
}

std::vector<Point> orbit_of(const PermutationGroup& g, Point v) {
  if (v >= g.degree()) throw std::out_of_range("point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orbit{v};
  seen[v] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation& p : g.generators()) {
      const Point w = p[orbit[i]];
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

PermutationGroup point_stabilizer(const PermutationGroup& g, Point v) {
  if (v >= g.degree()) throw std::out_of_range("stabilized point out of range");
  const Point prefix[] = {v};
  PermutationGroup rebased(g.degree(), g.generators(), prefix);
  const auto& levels = rebased.chain().levels();
  std::vector<Permutation> gens;
  if (levels.size() > 1) gens = levels[1].generators;
  PermutationGroup stab(g.degree(), std::move(gens));
  if (stab.order() * orbit_of(g, v).size() != g.order()) {
    throw std::logic_error("orbit-stabilizer identity violated");
  }
  return stab;
}

bool is_transitive(const PermutationGroup& g) { return g.degree() <= 1 || orbits(g).size() == 1; }

bool is_semiregular_group(const PermutationGroup& g) {
  // |orbit| * |stabilizer| = |G|, so all stabilizers are trivial iff every
  // orbit has exactly |G| points.
  const std::uint64_t order = g.order();
  for (const auto& block : orbits(g).blocks) {
    if (block.size() != order) return false;
  }
  return true;
}

bool is_regular_action(const PermutationGroup& g) {
  return is_transitive(g) && g.order() == g.degree();
}

PermutationGroup normal_closure(const PermutationGroup& g, std::span<const Permutation> seeds) {
  StabilizerChain chain(g.degree());
  std::vector<Permutation> gens;
  auto absorb = [&](const Permutation& p) {
    if (!chain.contains(p)) {
      chain.add_generator(p);
      gens.push_back(p);
    }
  };
  for (const Permutation& s : seeds) absorb(s);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Permutation& x : g.generators()) absorb(conjugate(gens[i], x));
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Permutation c =
          compose(compose(gens[i].inverse(), gens[j].inverse()), compose(gens[i], gens[j]));
      if (!c.is_identity()) commutators.push_back(c);
    }
  }
  return normal_closure(g, commutators);
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& g) {
  std::vector<PermutationGroup> series{g};
  while (!series.back().is_trivial()) {
    PermutationGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;  // perfect term
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermutationGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& p) { return g.contains(p); });
}

bool is_normal_subgroup(const PermutationGroup& n, const PermutationGroup& g) {
  if (!is_subgroup(n, g)) return false;
  for (const Permutation& x : g.generators()) {
    for (const Permutation& m : n.generators()) {
      if (!n.contains(conjugate(m, x))) return false;
    }
  }
  return true;
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& g, std::uint64_t bound) {
  if (g.order() > bound) {
    throw BoundExceeded("group order " + std::to_string(g.order()) +
                        " exceeds enumeration bound " + std::to_string(bound));
  }
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  g.chain().for_each_element([&](const Permutation& p) {
    elements.push_back(p);
    return true;
  });
  return elements;
}

PermutationGroup subgroup_generated_by(std::size_t degree, std::span<const Permutation> elements) {
  StabilizerChain chain(degree);
  std::vector<Permutation> gens;
  for (const Permutation& p : elements) {
    if (!chain.contains(p)) {
      chain.add_generator(p);
      gens.push_back(p);
    }
  }
  return PermutationGroup(degree, std::move(gens));
}

namespace {

PermutationGroup filter_group(const PermutationGroup& g, const PermutationGroup& h,
                              std::uint64_t bound,
                              const std::function<bool(const Permutation&)>& keep) {
  if (!is_subgroup(h, g)) throw std::invalid_argument("H is not a subgroup of G");
  const auto elements = enumerate_elements(g, bound);
  const auto kept = kernels::filter_indices(
      elements.size(), [&](std::size_t i) { return keep(elements[i]); });
  std::vector<Permutation> chosen;
  chosen.reserve(kept.size());
  for (std::size_t i : kept) chosen.push_back(elements[i]);
  return subgroup_generated_by(g.degree(), chosen);
}

}  // namespace

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h,
                            std::uint64_t bound) {
  return filter_group(g, h, bound, [&](const Permutation& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Permutation& y) { return h.contains(conjugate(y, x)); });
  });
}

PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h,
                             std::uint64_t bound) {
  return filter_group(g, h, bound, [&](const Permutation& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Permutation& y) { return commute(x, y); });
  });
}

std::string serialize_generators(const PermutationGroup& g) {
  std::string out;
  for (const Permutation& p : g.generators()) {
    out += p.to_string();
    out += '\n';
  }
  return out;
}

PermutationGroup parse_generators(std::size_t degree, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(Permutation::parse(line));
  }
  return PermutationGroup(degree, std::move(gens));
}

}  // namespace vnc
