// Regenerates data/foster/*.edges. Each graph is built from a small group
// construction, then checked (order, cubic, connected, s-regularity, |Aut|)
// before it is written. Usage: make_foster_data <output-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "vnc/analysis.hpp"
#include "vnc/constructions.hpp"

namespace {

using namespace vnc;

// Projective line over a field with `q` elements: points 0..q-1 and q for
// infinity. Field operations are supplied as tables.
struct Field {
  std::size_t q;
  std::function<std::size_t(std::size_t, std::size_t)> add;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
  std::function<std::size_t(std::size_t)> inv;  // of a nonzero element
};

Permutation mobius(const Field& f, const std::function<std::size_t(std::size_t)>& map_finite,
                   std::size_t image_of_infinity, std::size_t preimage_of_infinity) {
  std::vector<Point> images(f.q + 1);
  for (std::size_t x = 0; x < f.q; ++x) {
    images[x] = static_cast<Point>(x == preimage_of_infinity ? f.q : map_finite(x));
  }
  images[f.q] = static_cast<Point>(image_of_infinity);
  return Permutation(std::move(images));
}

// <x -> x+1, x -> r x, x -> 1/x> with r a multiplicative generator.
PermutationGroup projective_group(const Field& f, std::size_t r) {
  const std::size_t none = f.q + 1;
  const Permutation shift = mobius(f, [&](std::size_t x) { return f.add(x, 1); }, f.q, none);
  const Permutation scale = mobius(f, [&](std::size_t x) { return f.mul(x, r); }, f.q, none);
  const Permutation invert = mobius(f, [&](std::size_t x) { return f.inv(x); }, 0, 0);
  return PermutationGroup(f.q + 1, {shift, scale, invert});
}

Field prime_field(std::size_t p) {
  Field f;
  f.q = p;
  f.add = [p](std::size_t a, std::size_t b) { return (a + b) % p; };
  f.mul = [p](std::size_t a, std::size_t b) { return (a * b) % p; };
  f.inv = [p](std::size_t a) {
    for (std::size_t b = 1; b < p; ++b) {
      if (a * b % p == 1) return b;
    }
    throw std::logic_error("zero has no inverse");
  };
  return f;
}

// GF(8) as bit vectors modulo t^3 + t + 1.
Field gf8() {
  Field f;
  f.q = 8;
  f.add = [](std::size_t a, std::size_t b) { return a ^ b; };
  f.mul = [](std::size_t a, std::size_t b) {
    std::size_t r = 0;
    for (int i = 0; i < 3; ++i) {
      if (b >> i & 1) r ^= a << i;
    }
    for (int i = 4; i >= 3; --i) {
      if (r >> i & 1) r ^= 0b1011u << (i - 3);
    }
    return r;
  };
  f.inv = [mul = f.mul](std::size_t a) {
    for (std::size_t b = 1; b < 8; ++b) {
      if (mul(a, b) == 1) return b;
    }
    throw std::logic_error("zero has no inverse");
  };
  return f;
}

// PSL(2,p) x Z2 for an odd prime p: <x -> x+1, x -> r^2 x, x -> -1/x> on
// the projective line, times a transposition of two extra points.
PermutationGroup psl2_times_z2(std::size_t p, std::size_t r) {
  const std::size_t n = p + 3;
  auto extend = [&](const Permutation& m) {
    std::vector<Point> images(m.images().begin(), m.images().end());
    images.push_back(static_cast<Point>(p + 1));
    images.push_back(static_cast<Point>(p + 2));
    return Permutation(std::move(images));
  };
  const Field f = prime_field(p);
  const std::size_t none = p + 1;
  const Permutation shift = mobius(f, [&](std::size_t x) { return f.add(x, 1); }, p, none);
  const Permutation scale = mobius(f, [&](std::size_t x) { return f.mul(x, r * r % p); }, p, none);
  const Permutation flip = mobius(f, [&](std::size_t x) { return (p - f.inv(x)) % p; }, 0, 0);
  std::vector<Point> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<Point>(i);
  std::swap(swap[p + 1], swap[p + 2]);
  return PermutationGroup(n, {extend(shift), extend(scale), extend(flip), Permutation(std::move(swap))});
}

struct Built {
  Graph graph;
  std::string construction;
};

bool matches(const Graph& x, std::size_t order, std::size_t s, std::uint64_t aut) {
  if (x.order() != order || !x.is_regular(3) || !is_connected(x)) return false;
  const AutomorphismResult a = automorphism_group(x);
  if (a.order != aut) return false;
  return s_regularity(x, a.group) == s;
}

// First Cos(G, H, HaH) with H generated by a pair (x, y) of the given orders
// satisfying (xy)^k = 1 and |H| = h_order, a an involution, that passes
// `matches`.
std::optional<Built> search_coset_graph(const PermutationGroup& g, const std::string& group_name,
                                        std::uint64_t x_order, std::uint64_t y_order, std::uint64_t xy_order,
                                        std::uint64_t h_order, std::size_t n, std::size_t s,
                                        std::uint64_t aut) {
  const std::vector<Permutation> elements = enumerate_elements(g);
  std::vector<const Permutation*> xs, ys, involutions;
  for (const Permutation& e : elements) {
    const auto o = element_order(e);
    if (o == x_order) xs.push_back(&e);
    if (o == y_order) ys.push_back(&e);
    if (o == 2) involutions.push_back(&e);
  }
  for (const Permutation* x : xs) {
    for (const Permutation* y : ys) {
      if (element_order(compose(*x, *y)) != xy_order) continue;
      const PermutationGroup h(g.degree(), {*x, *y});
      if (h.order() != h_order) continue;
      for (const Permutation* a : involutions) {
        if (h.contains(*a)) continue;
        const Permutation reps[] = {*a};
        const auto d = double_coset_union(h, reps);
        if (d.size() != 3 * h_order) continue;
        if (h.with_generator(*a).order() != g.order()) continue;
        const CosetGraph c = coset_graph(g, h, d);
        if (c.has_loops || !matches(c.graph, n, s, aut)) continue;
        return Built{c.graph, "coset graph Cos(" + group_name + ", H, HaH) with |H| = " +
                                  std::to_string(h_order) + ", a an involution"};
      }
    }
  }
  return std::nullopt;
}

Built nauru() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 12; ++i) {
    edges.emplace_back(i, (i + 1) % 12);
    edges.emplace_back(i, 12 + i);
    edges.emplace_back(12 + i, 12 + (i + 5) % 12);
  }
  Graph x = Graph::from_edges(24, edges);
  if (!matches(x, 24, 2, 144)) throw std::runtime_error("GP(12,5) failed verification");
  return {x, "generalized Petersen graph GP(12,5)"};
}

Built f060() {
  const FiniteGroup a5 = FiniteGroup::from_generators(
      5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{2, 3, 4}})});
  std::vector<std::size_t> involutions;
  for (std::size_t t = 1; t < a5.order(); ++t) {
    if (a5.element_order(t) == 2) involutions.push_back(t);
  }
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    for (std::size_t j = i + 1; j < involutions.size(); ++j) {
      for (std::size_t k = j + 1; k < involutions.size(); ++k) {
        const std::size_t s[] = {involutions[i], involutions[j], involutions[k]};
        const Graph x = cayley_graph(a5, s);
        if (matches(x, 60, 2, 360)) return {x, "Cayley graph Cay(A5, {t1, t2, t3}) on three involutions"};
      }
    }
  }
  throw std::runtime_error("no arc-transitive cubic Cayley graph of A5 found");
}

void write(const std::filesystem::path& dir, const std::string& name, const Built& b, std::size_t s,
           std::uint64_t aut) {
  std::ofstream out(dir / (name + ".edges"));
  if (!out) throw std::runtime_error("cannot write " + (dir / (name + ".edges")).string());
  out << "# " << name << ": connected cubic symmetric graph on " << b.graph.order()
      << " vertices, " << s << "-regular, |Aut| = " << aut << "\n";
  out << "# construction: " << b.construction << "\n";
  out << "# regenerate with tools/make_foster_data\n";
  out << to_edge_list(b.graph);
  std::cout << name << ": " << b.construction << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_foster_data <output-dir>\n";
    return 2;
  }
  try {
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    write(dir, "F024", nauru(), 2, 144);
    write(dir, "F060", f060(), 2, 360);

    const Field f8 = gf8();
    const PermutationGroup psl28 = projective_group(f8, 2);
    if (psl28.order() != 504) throw std::logic_error("PSL(2,8) has wrong order");
    auto f084 = search_coset_graph(psl28, "PSL(2,8)", 2, 3, 2, 6, 84, 2, 504);
    if (!f084) throw std::runtime_error("F084 construction not found");
    write(dir, "F084", *f084, 2, 504);

    const PermutationGroup g204 = psl2_times_z2(17, 3);
    if (g204.order() != 4896) throw std::logic_error("PSL(2,17) x Z2 has wrong order");
    auto f204 = search_coset_graph(g204, "PSL(2,17) x Z2", 4, 3, 2, 24, 204, 4, 4896);
    if (!f204) throw std::runtime_error("F204 construction not found");
    write(dir, "F204", *f204, 4, 4896);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
