#include "vnc/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#ifndef VNC_DEFAULT_DATA_DIR
#define VNC_DEFAULT_DATA_DIR "data"
#endif

namespace vnc {

namespace {

bool inverse_closed(const FiniteGroup& g, std::span<const std::size_t> subset) {
  const std::set<std::size_t> members(subset.begin(), subset.end());
  return std::all_of(subset.begin(), subset.end(),
                     [&](std::size_t s) { return members.count(g.inverse(s)) > 0; });
}

void check_indices(const FiniteGroup& g, std::span<const std::size_t> subset, const char* what) {
  for (std::size_t s : subset) {
    if (s >= g.order()) throw std::out_of_range(std::string(what) + " index out of range");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Cayley and coset graphs

Graph cayley_graph(const FiniteGroup& g, std::span<const std::size_t> connection_set) {
  check_indices(g, connection_set, "connection set");
  if (std::find(connection_set.begin(), connection_set.end(), 0) != connection_set.end()) {
    throw std::invalid_argument("connection set contains the identity");
  }
  if (!inverse_closed(g, connection_set)) {
    throw std::invalid_argument("connection set is not inverse-closed");
  }
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t s : connection_set) {
      const std::size_t y = g.multiply(s, x);
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  }
  return Graph::from_edges(g.order(), edges);
}

std::vector<std::size_t> double_coset(const PermutationGroup& h, const Permutation& a,
                                      const FiniteGroup& g) {
  if (!g.find(a)) throw std::invalid_argument("double coset representative is not in G");
  if (!is_subgroup(h, g.group())) throw std::invalid_argument("H is not a subgroup of G");
  const auto h_elements = enumerate_elements(h);
  std::set<std::size_t> out;
  for (const Permutation& left : h_elements) {
    const Permutation la = compose(left, a);
    for (const Permutation& right : h_elements) out.insert(g.index_of(compose(la, right)));
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> double_coset_union(const PermutationGroup& h,
                                            std::span<const Permutation> representatives) {
  const auto h_elements = enumerate_elements(h);
  std::set<Permutation> out;
  for (const Permutation& a : representatives) {
    for (const Permutation& left : h_elements) {
      const Permutation la = compose(left, a);
      for (const Permutation& right : h_elements) out.insert(compose(la, right));
    }
  }
  return {out.begin(), out.end()};
}

CosetSpace::CosetSpace(const PermutationGroup& g, const PermutationGroup& h)
    : h_elements_(enumerate_elements(h)) {
  if (!is_subgroup(h, g)) throw std::invalid_argument("H is not a subgroup of G");
  const Permutation id = Permutation::identity(g.degree());
  representatives_.push_back(id);
  index_.emplace(key(id), 0);
  for (std::size_t i = 0; i < representatives_.size(); ++i) {
    for (const Permutation& x : g.generators()) {
      Permutation next = compose(representatives_[i], x);
      if (index_.emplace(key(next), representatives_.size()).second) {
        representatives_.push_back(std::move(next));
      }
    }
  }
  if (representatives_.size() * h.order() != g.order()) {
    throw std::logic_error("coset count does not match the index [G:H]");
  }
}

Permutation CosetSpace::key(const Permutation& x) const {
  Permutation best = compose(h_elements_.front(), x);
  for (std::size_t i = 1; i < h_elements_.size(); ++i) {
    Permutation candidate = compose(h_elements_[i], x);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::size_t CosetSpace::coset_of(const Permutation& x) const {
  auto it = index_.find(key(x));
  if (it == index_.end()) throw std::invalid_argument("element is not in G");
  return it->second;
}

CosetGraph coset_graph(const PermutationGroup& g, const PermutationGroup& h,
                       std::span<const Permutation> d) {
  const std::set<Permutation> members(d.begin(), d.end());
  for (const Permutation& x : members) {
    if (!g.contains(x)) throw std::invalid_argument("D is not contained in G");
    if (!members.count(x.inverse())) throw std::invalid_argument("D is not inverse-closed");
    for (const Permutation& y : h.generators()) {
      if (!members.count(compose(y, x)) || !members.count(compose(x, y))) {
        throw std::invalid_argument("D is not a union of double cosets of H");
      }
    }
  }
  CosetSpace space(g, h);
  CosetGraph out;
  out.valency = members.size() / h.order();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (const Permutation& x : members) {
      const std::size_t j = space.coset_of(compose(x, space.representative(i)));
      if (j == i) {
        out.has_loops = true;
      } else if (i < j) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  out.graph = Graph::from_edges(space.size(), edges);
  std::vector<Permutation> action;
  for (const Permutation& x : g.generators()) {
    std::vector<Point> images(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      images[i] = static_cast<Point>(space.coset_of(compose(space.representative(i), x)));
    }
    action.emplace_back(std::move(images));
  }
  out.action = PermutationGroup(space.size(), std::move(action));
  return out;
}

// ---------------------------------------------------------------------------
// Bi-Cayley graphs

void BiCayleySpec::validate() const {
  check_indices(group, right, "R");
  check_indices(group, left, "L");
  check_indices(group, spokes, "S");
  if (!inverse_closed(group, right)) throw std::invalid_argument("R is not inverse-closed");
  if (!inverse_closed(group, left)) throw std::invalid_argument("L is not inverse-closed");
  auto has_identity = [](const std::vector<std::size_t>& v) {
    return std::find(v.begin(), v.end(), 0) != v.end();
  };
  if (has_identity(right) || has_identity(left)) {
    throw std::invalid_argument("R or L contains the identity");
  }
}

Graph bicayley_graph(const BiCayleySpec& spec) {
  spec.validate();
  const FiniteGroup& h = spec.group;
  const auto n = static_cast<Vertex>(h.order());
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < h.order(); ++x) {
    const auto v = static_cast<Vertex>(x);
    for (std::size_t r : spec.right) edges.emplace_back(v, static_cast<Vertex>(h.multiply(r, x)));
    for (std::size_t l : spec.left) {
      edges.emplace_back(n + v, n + static_cast<Vertex>(h.multiply(l, x)));
    }
    for (std::size_t s : spec.spokes) {
      edges.emplace_back(v, n + static_cast<Vertex>(h.multiply(s, x)));
    }
  }
  for (auto& [u, w] : edges) {
    if (u > w) std::swap(u, w);
  }
  return Graph::from_edges(2 * h.order(), edges);
}

Permutation bicayley_right_multiplication(const BiCayleySpec& spec, std::size_t g) {
  const FiniteGroup& h = spec.group;
  const std::size_t n = h.order();
  std::vector<Point> images(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xg = static_cast<Point>(h.multiply(x, g));
    images[x] = xg;
    images[n + x] = static_cast<Point>(n) + xg;
  }
  return Permutation(std::move(images));
}

PermutationGroup bicayley_right_regular(const BiCayleySpec& spec) {
  std::vector<Permutation> gens;
  for (std::size_t g : spec.group.generator_indices()) {
    gens.push_back(bicayley_right_multiplication(spec, g));
  }
  return PermutationGroup(2 * spec.group.order(), std::move(gens));
}

namespace {

Permutation part_map(const BiCayleySpec& spec, const GroupAutomorphism& alpha, bool swap) {
  if (!is_group_automorphism(spec.group, alpha)) {
    throw std::invalid_argument("alpha is not an automorphism of H");
  }
  const std::size_t n = spec.group.order();
  std::vector<Point> images(2 * n);
  const auto shift = static_cast<Point>(swap ? n : 0);
  for (std::size_t x = 0; x < n; ++x) {
    const Point ax = alpha[static_cast<Point>(x)];
    images[x] = ax + shift;
    images[n + x] = swap ? ax : ax + static_cast<Point>(n);
  }
  return Permutation(std::move(images));
}

std::set<std::size_t> image_set(const GroupAutomorphism& alpha, std::span<const std::size_t> s) {
  std::set<std::size_t> out;
  for (std::size_t x : s) out.insert(alpha[static_cast<Point>(x)]);
  return out;
}

}  // namespace

Permutation delta_map(const BiCayleySpec& spec, const GroupAutomorphism& alpha) {
  return part_map(spec, alpha, true);
}

Permutation sigma_map(const BiCayleySpec& spec, const GroupAutomorphism& alpha) {
  return part_map(spec, alpha, false);
}

BiCayleyAutomorphisms compute_I_F(const BiCayleySpec& spec, std::size_t bound) {
  spec.validate();
  const Graph graph = bicayley_graph(spec);
  const std::set<std::size_t> r(spec.right.begin(), spec.right.end());
  const std::set<std::size_t> l(spec.left.begin(), spec.left.end());
  const std::set<std::size_t> s(spec.spokes.begin(), spec.spokes.end());
  std::set<std::size_t> s_inv;
  for (std::size_t x : spec.spokes) s_inv.insert(spec.group.inverse(x));

  BiCayleyAutomorphisms out;
  std::vector<Permutation> fixing_gens;
  for (const GroupAutomorphism& alpha : group_automorphisms(spec.group, bound)) {
    const auto ra = image_set(alpha, spec.right);
    const auto la = image_set(alpha, spec.left);
    const auto sa = image_set(alpha, spec.spokes);
    if (ra == l && la == r && sa == s_inv) {
      Permutation delta = delta_map(spec, alpha);
      if (!graph.is_automorphism(delta)) throw std::logic_error("delta map is not a graph automorphism");
      out.swapping.push_back(std::move(delta));
      out.swapping_alphas.push_back(alpha);
    }
    if (ra == r && la == l && sa == s) {
      Permutation sigma = sigma_map(spec, alpha);
      if (!graph.is_automorphism(sigma)) throw std::logic_error("sigma map is not a graph automorphism");
      fixing_gens.push_back(std::move(sigma));
      out.fixing_alphas.push_back(alpha);
    }
  }
  out.fixing = subgroup_generated_by(graph.order(), fixing_gens);
  return out;
}

// ---------------------------------------------------------------------------
// X(n, 2)

Graph x_n_2(std::size_t n) {
  if (n < 2) throw std::invalid_argument("X(n,2) needs n >= 2");
  const std::size_t m = 2 * n;  // k ranges over Z_2n
  auto vertex = [](std::size_t k, std::size_t r) { return static_cast<Vertex>(2 * k + r); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < 2; ++r) {
      edges.emplace_back(vertex(2 * i, r), vertex(2 * i + 1, r));
      for (std::size_t s = 0; s < 2; ++s) {
        edges.emplace_back(vertex(2 * i + 1, r), vertex((2 * i + 2) % m, s));
      }
    }
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph::from_edges(4 * n, edges);
}

PermutationGroup x_n_2_regular_group(std::size_t n) {
  if (n < 2) throw std::invalid_argument("X(n,2) needs n >= 2");
  const std::size_t m = 2 * n;
  std::vector<Point> alpha(4 * n);
  std::vector<Point> beta(4 * n);
  std::vector<Point> gamma(4 * n);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < 2; ++r) {
      const std::size_t v = 2 * k + r;
      alpha[v] = static_cast<Point>(2 * ((k + 2) % m) + r);
      beta[v] = static_cast<Point>(2 * k + (1 - r));
      gamma[v] = static_cast<Point>(2 * (m - 1 - k) + r);
    }
  }
  return PermutationGroup(4 * n, {Permutation(std::move(alpha)), Permutation(std::move(beta)),
                                  Permutation(std::move(gamma))});
}

// ---------------------------------------------------------------------------
// Catalogue

namespace {

using Cycles = std::vector<std::vector<Point>>;

struct RawEntry {
  const char* group_name;
  std::uint64_t group_order;
  std::size_t degree;
  std::vector<Cycles> subgroup;
  Cycles a;
  Cycles b;
};

// Generators as printed in the published table (1-based points).
const std::vector<RawEntry>& raw_table() {
  static const std::vector<RawEntry> table = {
      {"S5", 120, 7, {{{1, 3}, {2, 5}}}, {{1, 2, 4, 5, 3}}, {{2, 5}}},
      {"A5xZ2", 120, 7, {{{2, 3}, {4, 5}}}, {{2, 5}, {3, 4}, {6, 7}}, {{1, 2}, {3, 4}, {6, 7}}},
      {"A5xZ2", 120, 7, {{{2, 3}, {4, 5}}}, {{1, 2, 4, 5, 3}}, {{2, 4}, {3, 5}, {6, 7}}},
      {"A5xZ2", 120, 7, {{{2, 3}, {4, 5}}}, {{1, 3, 5, 4, 2}, {6, 7}}, {{2, 4}, {3, 5}}},
      {"S5xZ2", 240, 7, {{{1, 3}}, {{4, 5}}}, {{1, 3, 2}, {4, 5}}, {{1, 5, 3, 4}, {6, 7}}},
      {"S5xZ2", 240, 7, {{{1, 3}, {6, 7}}, {{4, 5}, {6, 7}}}, {{2, 5}}, {{1, 4, 3, 5}, {6, 7}}},
      {"S5xZ2", 240, 7, {{{1, 3}, {6, 7}}, {{4, 5}, {6, 7}}}, {{2, 4}}, {{1, 4}, {3, 5}, {6, 7}}},
      {"PGL(2,7)", 336, 8,
       {{{1, 7}, {2, 4}, {3, 8}}, {{1, 4}, {2, 7}, {5, 6}}},
       {{1, 8, 4}, {2, 7, 3}},
       {{1, 4, 2, 7}, {3, 6, 8, 5}}},
      {"PGL(2,7)", 336, 8,
       {{{1, 6}, {2, 4}, {3, 7}, {5, 8}}, {{1, 4}, {2, 6}, {3, 8}, {5, 7}}},
       {{1, 3, 5, 2, 6, 7, 8, 4}},
       {{1, 5, 2, 3}, {4, 8, 6, 7}}},
  };
  return table;
}

}  // namespace

CatalogueEntry nc_catalogue_entry(int i) {
  if (i < 0 || i > 8) throw std::out_of_range("catalogue index must be in 0..8");
  const RawEntry& raw = raw_table()[static_cast<std::size_t>(i)];
  CatalogueEntry entry;
  entry.name = "NC" + std::to_string(i);
  entry.group_name = raw.group_name;
  entry.group_order = raw.group_order;
  entry.degree = raw.degree;
  for (const Cycles& c : raw.subgroup) {
    entry.subgroup_generators.push_back(Permutation::from_cycles(raw.degree, c, true));
  }
  entry.a = Permutation::from_cycles(raw.degree, raw.a, true);
  entry.b = Permutation::from_cycles(raw.degree, raw.b, true);
  return entry;
}

CosetGraph nc_coset_graph(int i) {
  const CatalogueEntry entry = nc_catalogue_entry(i);
  std::vector<Permutation> gens = entry.subgroup_generators;
  gens.push_back(entry.a);
  gens.push_back(entry.b);
  PermutationGroup g(entry.degree, std::move(gens));
  if (g.order() != entry.group_order) {
    throw std::logic_error(entry.name + ": generated group has order " + std::to_string(g.order()) +
                           ", expected " + std::to_string(entry.group_order));
  }
  PermutationGroup h(entry.degree, entry.subgroup_generators);
  const Permutation reps[] = {entry.a, entry.b};
  const auto d = double_coset_union(h, reps);
  return coset_graph(g, h, d);
}

Graph nc_catalogue(int i) { return nc_coset_graph(i).graph; }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t p) {
  x %= p;
  if (x == 0) return 0;
  std::uint64_t k = 1;
  for (std::uint64_t y = x; y != 1; y = y * x % p) ++k;
  return k;
}

void require_nc9_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p % 4 != 1) {
    throw std::invalid_argument("no NC9 graph for p = " + std::to_string(p) +
                                ": the family exists only for p = 1 (mod 4)");
  }
}

}  // namespace

std::uint64_t order_four_unit(std::uint64_t p) {
  require_nc9_prime(p);
  for (std::uint64_t x = 2; x < p; ++x) {
    if (multiplicative_order(x, p) == 4) return x;
  }
  throw std::logic_error("no element of order 4 modulo " + std::to_string(p));
}

FiniteGroup s3_times_cyclic(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("cyclic factor needs p >= 2");
  const std::size_t degree = 3 + p;
  const Permutation a = Permutation::from_cycles(degree, {{0, 1}});
  const Permutation b = Permutation::from_cycles(degree, {{1, 2}});
  std::vector<Point> cycle;
  for (std::size_t k = 0; k < p; ++k) cycle.push_back(static_cast<Point>(3 + k));
  const Permutation c = Permutation::from_cycles(degree, {cycle});
  const Permutation ab = compose(a, b);
  const std::vector<Permutation> s3 = {Permutation::identity(degree), a, b, ab, compose(b, a),
                                       compose(ab, a)};
  std::vector<Permutation> elements;
  elements.reserve(6 * p);
  for (const Permutation& s : s3) {
    Permutation x = s;
    for (std::size_t j = 0; j < p; ++j) {
      elements.push_back(x);
      x = compose(x, c);
    }
  }
  return FiniteGroup::from_ordered_elements(PermutationGroup(degree, {a, b, c}),
                                            std::move(elements));
}

BiCayleySpec nc9_spec(std::uint64_t p, std::optional<std::uint64_t> lambda) {
  require_nc9_prime(p);
  const std::uint64_t l = lambda.value_or(order_four_unit(p));
  if (multiplicative_order(l, p) != 4) {
    throw std::invalid_argument("lambda must have multiplicative order 4 modulo p");
  }
  BiCayleySpec spec;
  spec.group = s3_times_cyclic(p);
  const FiniteGroup& h = spec.group;
  const std::size_t a = h.generator_indices()[0];
  const std::size_t b = h.generator_indices()[1];
  const std::size_t c = h.generator_indices()[2];
  const auto cl = static_cast<std::int64_t>(l % p);
  spec.right = {h.multiply(a, c), h.multiply(a, h.power(c, -1))};
  spec.left = {h.multiply(b, h.power(c, cl)), h.multiply(b, h.power(c, -cl))};
  spec.spokes = {0};
  spec.validate();
  return spec;
}

Graph nc9(std::uint64_t p, std::optional<std::uint64_t> lambda) {
  return bicayley_graph(nc9_spec(p, lambda));
}

GroupAutomorphism nc9_swap_automorphism(const BiCayleySpec& spec, std::uint64_t p,
                                        std::uint64_t lambda) {
  const FiniteGroup& h = spec.group;
  const auto& gens = h.generator_indices();
  if (gens.size() != 3 || h.order() != 6 * p) {
    throw std::invalid_argument("spec is not over S3 x Z_p");
  }
  const std::vector<std::size_t> images = {gens[1], gens[0],
                                           h.power(gens[2], static_cast<std::int64_t>(lambda % p))};
  auto alpha = extend_to_automorphism(h, images);
  if (!alpha) throw std::invalid_argument("a <-> b, c -> c^lambda does not extend to Aut(H)");
  return *alpha;
}

// ---------------------------------------------------------------------------
// Foster census data

std::string data_directory() {
  if (const char* env = std::getenv("VNC_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return VNC_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& foster_names() {
  static const std::vector<std::string> names = {"F024", "F060", "F084", "F204"};
  return names;
}

std::size_t foster_expected_order(const std::string& name) {
  if (name == "F024") return 24;
  if (name == "F060") return 60;
  if (name == "F084") return 84;
  if (name == "F204") return 204;
  throw std::invalid_argument("unknown Foster graph '" + name + "'");
}

Graph foster_graph(const std::string& name, const std::string& data_dir) {
  const std::size_t expected = foster_expected_order(name);
  const std::string path = data_dir + "/foster/" + name + ".edges";
  Graph g = read_edge_list_file(path);
  if (g.order() != expected) {
    throw std::runtime_error(path + ": expected " + std::to_string(expected) + " vertices, found " +
                             std::to_string(g.order()));
  }
  if (!g.is_regular(3)) throw std::runtime_error(path + ": graph is not cubic");
  if (!is_connected(g)) throw std::runtime_error(path + ": graph is not connected");
  return g;
}

}  // namespace vnc
