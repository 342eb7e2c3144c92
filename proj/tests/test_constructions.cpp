#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "vnc/analysis.hpp"
#include "vnc/automorphisms.hpp"
#include "vnc/constructions.hpp"

using namespace vnc;
using testing_support::cycles;
using testing_support::edges_of;

namespace {

FiniteGroup cyclic(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Point(i);
  return FiniteGroup::from_generators(n, {Permutation::from_cycles(n, {c})});
}

bool preserves(const Graph& x, const PermutationGroup& g) {
  for (const Permutation& s : g.generators()) {
    if (!x.is_automorphism(s)) return false;
  }
  return true;
}

}  // namespace

TEST(FiniteGroup, IndexTable) {
  const FiniteGroup h = s3_times_cyclic(5);
  EXPECT_EQ(h.order(), 30u);
  EXPECT_TRUE(h.element(0).is_identity());
  for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(h.index_of(h.element(i)), i);
  EXPECT_EQ(h.element(5), cycles(8, {{0, 1}}));           // a
  EXPECT_EQ(h.element(10), cycles(8, {{1, 2}}));          // b
  EXPECT_EQ(element_order(h.element(1)), 5u);             // c
  EXPECT_THROW(h.index_of(cycles(8, {{0, 3}})), std::invalid_argument);
}

TEST(FiniteGroup, AutomorphismsOfSmallGroups) {
  EXPECT_EQ(group_automorphisms(cyclic(5)).size(), 4u);
  EXPECT_EQ(group_automorphisms(cyclic(8)).size(), 4u);
  // Aut(S3 x Z5) = S3 x Z4.
  EXPECT_EQ(group_automorphisms(s3_times_cyclic(5)).size(), 24u);
  EXPECT_THROW(group_automorphisms(s3_times_cyclic(101)), BoundExceeded);
}

TEST(Cayley, CycleAndDisconnected) {
  const FiniteGroup z6 = cyclic(6);
  const std::size_t pm1[] = {1, 5};
  EXPECT_TRUE(oracle::is_cycle(6, edges_of(cayley_graph(z6, pm1))));
  const std::size_t evens[] = {2, 4};
  EXPECT_FALSE(is_connected(cayley_graph(z6, evens)));
}

TEST(Cayley, Errors) {
  const FiniteGroup z6 = cyclic(6);
  const std::size_t with_id[] = {0, 1, 5};
  EXPECT_THROW(cayley_graph(z6, with_id), std::invalid_argument);
  const std::size_t one_sided[] = {1};
  EXPECT_THROW(cayley_graph(z6, one_sided), std::invalid_argument);
}

TEST(Cayley, DihedralPresentationGivesXN2) {
  for (std::size_t n : {3u, 15u}) {
    const Graph x = x_n_2(n);
    const PermutationGroup d = x_n_2_regular_group(n);
    const FiniteGroup fg = FiniteGroup::from_generators(d.degree(), d.generators());
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < fg.order(); ++i) {
      if (x.adjacent(0, fg.element(i)[0])) s.push_back(i);
    }
    ASSERT_EQ(s.size(), 3u);
    const Graph cay = cayley_graph(fg, s);
    EXPECT_TRUE(are_isomorphic(cay, x).has_value()) << "n = " << n;
  }
}

TEST(Cayley, RightRegularActionIsAutomorphic) {
  const FiniteGroup a4 = FiniteGroup::from_generators(4, {cycles(4, {{0, 1, 2}}), cycles(4, {{1, 2, 3}})});
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i < a4.order(); ++i) {
    if (a4.element_order(i) == 2) s.push_back(i);
  }
  const Graph x = cayley_graph(a4, s);
  for (std::size_t g = 0; g < a4.order(); ++g) {
    std::vector<Point> images(a4.order());
    for (std::size_t v = 0; v < a4.order(); ++v) images[v] = Point(a4.multiply(v, g));
    EXPECT_TRUE(x.is_automorphism(Permutation(images)));
  }
}

TEST(CosetGraph, DoubleCosets) {
  const CatalogueEntry e = nc_catalogue_entry(0);
  std::vector<Permutation> gens = e.subgroup_generators;
  gens.push_back(e.a);
  gens.push_back(e.b);
  const FiniteGroup g = FiniteGroup::from_generators(e.degree, gens);
  const PermutationGroup h(e.degree, e.subgroup_generators);
  const auto hh = double_coset(h, Permutation::identity(e.degree), g);
  EXPECT_EQ(hh.size(), h.order());
  const PermutationGroup trivial = PermutationGroup::trivial(e.degree);
  EXPECT_EQ(double_coset(trivial, e.a, g), std::vector<std::size_t>{g.index_of(e.a)});
  const std::size_t valency = (double_coset(h, e.a, g).size() + double_coset(h, e.b, g).size()) / h.order();
  EXPECT_EQ(valency, 3u);
  EXPECT_THROW(double_coset(h, cycles(e.degree, {{5, 6}}), g), std::invalid_argument);
}

TEST(CosetGraph, CosetSpace) {
  const CatalogueEntry e = nc_catalogue_entry(0);
  const PermutationGroup g = nc_coset_graph(0).action;
  std::vector<Permutation> gens = e.subgroup_generators;
  gens.push_back(e.a);
  gens.push_back(e.b);
  const PermutationGroup full(e.degree, gens);
  const PermutationGroup h(e.degree, e.subgroup_generators);
  const CosetSpace space(full, h);
  EXPECT_EQ(space.size(), full.order() / h.order());
  std::vector<std::size_t> hits(space.size(), 0);
  for (const Permutation& x : enumerate_elements(full)) ++hits[space.coset_of(x)];
  for (std::size_t c : hits) EXPECT_EQ(c, h.order());
  EXPECT_EQ(g.degree(), 60u);
}

TEST(CosetGraph, ErrorsAndDegenerateD) {
  const CatalogueEntry e = nc_catalogue_entry(0);
  std::vector<Permutation> gens = e.subgroup_generators;
  gens.push_back(e.a);
  gens.push_back(e.b);
  const PermutationGroup g(e.degree, gens);
  const PermutationGroup h(e.degree, e.subgroup_generators);
  // Some double coset HxH misses x^-1.
  bool found = false;
  for (const Permutation& x : enumerate_elements(g)) {
    const Permutation rep[] = {x};
    const auto hxh = double_coset_union(h, rep);
    if (std::find(hxh.begin(), hxh.end(), x.inverse()) != hxh.end()) continue;
    EXPECT_THROW(coset_graph(g, h, hxh), std::invalid_argument);
    found = true;
    break;
  }
  EXPECT_TRUE(found);
  // b is an involution but HbH = {b, hb}, so {b} alone is not H-closed.
  const std::vector<Permutation> partial = {e.b};
  EXPECT_THROW(coset_graph(g, h, partial), std::invalid_argument);
  const Permutation id[] = {Permutation::identity(e.degree)};
  const CosetGraph degenerate = coset_graph(g, h, double_coset_union(h, id));
  EXPECT_EQ(degenerate.valency, 1u);
  EXPECT_TRUE(degenerate.has_loops);
}

TEST(Catalogue, OrdersAndSubgroups) {
  for (int i = 0; i <= 8; ++i) {
    const CatalogueEntry e = nc_catalogue_entry(i);
    const CosetGraph c = nc_coset_graph(i);
    const PermutationGroup h(e.degree, e.subgroup_generators);
    EXPECT_EQ(c.graph.order(), e.group_order / h.order()) << e.name;
    EXPECT_EQ(c.graph.order(), i <= 6 ? 60u : 84u) << e.name;
    EXPECT_EQ(e.degree, i <= 6 ? 7u : 8u);
    EXPECT_EQ(c.valency, 3u);
    EXPECT_FALSE(c.has_loops);
    EXPECT_TRUE(is_connected(c.graph));
    EXPECT_TRUE(c.graph.is_regular(3));
  }
  EXPECT_EQ(PermutationGroup(7, nc_catalogue_entry(4).subgroup_generators).order(), 4u);
  EXPECT_EQ(nc_catalogue_entry(7).group_name, "PGL(2,7)");
  EXPECT_THROW(nc_catalogue(9), std::out_of_range);
  EXPECT_THROW(nc_catalogue(-1), std::out_of_range);
}

TEST(Catalogue, ActionIsVertexTransitiveInsideAut) {
  for (int i = 0; i <= 8; ++i) {
    const CosetGraph c = nc_coset_graph(i);
    EXPECT_TRUE(preserves(c.graph, c.action)) << i;
    EXPECT_TRUE(is_transitive(c.action)) << i;
    const AutomorphismResult aut = automorphism_group(c.graph);
    EXPECT_TRUE(is_subgroup(c.action, aut.group)) << i;
  }
}

TEST(BiCayley, Small) {
  BiCayleySpec k2{FiniteGroup::from_generators(1, {}), {}, {}, {0}};
  const Graph x = bicayley_graph(k2);
  EXPECT_EQ(x.order(), 2u);
  EXPECT_EQ(x.size(), 1u);
  EXPECT_TRUE(bicayley_right_regular(k2).is_trivial());
  EXPECT_EQ(bicayley_right_regular(k2).degree(), 2u);

  for (std::size_t n : {3u, 4u, 7u}) {
    BiCayleySpec spec{cyclic(n), {}, {}, {0, 1}};
    const Graph c = bicayley_graph(spec);
    EXPECT_TRUE(oracle::is_cycle(2 * n, edges_of(c))) << n;
  }
}

TEST(BiCayley, SpecValidation) {
  BiCayleySpec bad{cyclic(6), {1}, {}, {0}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(bicayley_graph(bad), std::invalid_argument);
  BiCayleySpec with_id{cyclic(6), {0}, {}, {0}};
  EXPECT_THROW(with_id.validate(), std::invalid_argument);
}

TEST(BiCayley, Nc9Spec) {
  const BiCayleySpec spec = nc9_spec(5);
  const Graph x = bicayley_graph(spec);
  EXPECT_EQ(x.order(), 60u);
  EXPECT_TRUE(x.is_regular(3));
  EXPECT_TRUE(is_connected(x));
  const PermutationGroup r = bicayley_right_regular(spec);
  EXPECT_EQ(r.order(), 30u);
  EXPECT_TRUE(is_semiregular_group(r));
  EXPECT_TRUE(preserves(x, r));
  const OrbitPartition o = orbits(r);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o.blocks[0].size(), 30u);
  EXPECT_EQ(o.blocks[0].back(), 29u);
}

TEST(BiCayley, DeltaAndSigma) {
  const BiCayleySpec spec = nc9_spec(5);
  const Graph x = bicayley_graph(spec);
  const GroupAutomorphism id = Permutation::identity(spec.group.order());
  EXPECT_TRUE(sigma_map(spec, id).is_identity());
  for (const GroupAutomorphism& a : group_automorphisms(spec.group)) {
    EXPECT_EQ(compose(delta_map(spec, a), delta_map(spec, a)), sigma_map(spec, compose(a, a)));
  }
  const GroupAutomorphism alpha = nc9_swap_automorphism(spec, 5, 2);
  const Permutation delta = delta_map(spec, alpha);
  EXPECT_EQ(element_order(delta), 4u);
  EXPECT_TRUE(x.is_automorphism(delta));
  EXPECT_TRUE(delta[0] >= 30u);
  const GroupAutomorphism not_hom = cycles(30, {{1, 2}});
  EXPECT_THROW(delta_map(spec, not_hom), std::invalid_argument);
}

TEST(BiCayley, ComputeIFSymmetricSpec) {
  // Prism over C6: R = L, S = {1}.
  BiCayleySpec spec{cyclic(6), {1, 5}, {1, 5}, {0}};
  const BiCayleyAutomorphisms i_f = compute_I_F(spec);
  const GroupAutomorphism id = Permutation::identity(6);
  EXPECT_NE(std::find(i_f.swapping_alphas.begin(), i_f.swapping_alphas.end(), id), i_f.swapping_alphas.end());
  // alpha = id has order dividing 2, so the graph is Cayley.
  EXPECT_TRUE(find_regular_subgroup(automorphism_group(bicayley_graph(spec)).group, 12).has_value());
}

TEST(BiCayley, ComputeIFNc9) {
  const BiCayleySpec spec = nc9_spec(5);
  const Graph x = bicayley_graph(spec);
  const BiCayleyAutomorphisms i_f = compute_I_F(spec);
  ASSERT_FALSE(i_f.swapping.empty());
  const Permutation delta = delta_map(spec, nc9_swap_automorphism(spec, 5, 2));
  EXPECT_NE(std::find(i_f.swapping.begin(), i_f.swapping.end(), delta), i_f.swapping.end());
  const PermutationGroup r = bicayley_right_regular(spec);
  for (const Permutation& d : i_f.swapping) {
    EXPECT_TRUE(x.is_automorphism(d));
    EXPECT_TRUE(is_transitive(r.with_generator(d)));
  }
  // No alpha of order <= 2 qualifies; otherwise the graph would be Cayley.
  for (const GroupAutomorphism& a : i_f.swapping_alphas) EXPECT_GT(element_order(a), 2u);

  std::vector<Permutation> gens = r.generators();
  for (const Permutation& s : i_f.fixing.generators()) gens.push_back(s);
  gens.push_back(delta);
  const PermutationGroup semidirect(x.order(), gens);
  const PermutationGroup aut = automorphism_group(x).group;
  EXPECT_TRUE(same_group(normalizer(aut, r), semidirect));
}

TEST(BiCayleyProperty, RelabelByGroupAutomorphism) {
  const BiCayleySpec spec = nc9_spec(5);
  const Graph x = bicayley_graph(spec);
  const auto auts = group_automorphisms(spec.group);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 6; ++t) {
    const GroupAutomorphism& a = auts[rng() % auts.size()];
    BiCayleySpec image = spec;
    for (auto* set : {&image.right, &image.left, &image.spokes}) {
      for (std::size_t& s : *set) s = a[Point(s)];
      std::sort(set->begin(), set->end());
    }
    EXPECT_TRUE(are_isomorphic(x, bicayley_graph(image)).has_value());
  }
}

TEST(XN2, Generators) {
  for (std::size_t n : {2u, 3u, 4u, 15u, 21u}) {
    const Graph x = x_n_2(n);
    const PermutationGroup d = x_n_2_regular_group(n);
    EXPECT_EQ(d.order(), 4 * n);
    EXPECT_TRUE(preserves(x, d));
    EXPECT_TRUE(is_regular_action(d));
    EXPECT_EQ(element_order(d.generators()[1]), 2u);
    EXPECT_EQ(element_order(d.generators()[2]), 2u);
    if (n >= 3) {
      EXPECT_FALSE(commute(d.generators()[0], d.generators()[2]));
      EXPECT_EQ(girth(x), Girth(4));
    }
  }
  EXPECT_THROW(x_n_2(1), std::invalid_argument);
}

TEST(Nc9, Parameters) {
  EXPECT_EQ(order_four_unit(5), 2u);
  EXPECT_EQ(order_four_unit(13), 5u);
  EXPECT_EQ(nc9(5).order(), 60u);
  EXPECT_EQ(nc9(13).order(), 156u);
  EXPECT_THROW(nc9(7), std::invalid_argument);
  EXPECT_THROW(nc9(9), std::invalid_argument);
  EXPECT_THROW(nc9(5, 4), std::invalid_argument);
}

TEST(Nc9, LambdaChoiceDoesNotMatter) {
  for (std::uint64_t p : {5u, 13u}) {
    const std::uint64_t l = order_four_unit(p);
    EXPECT_TRUE(are_isomorphic(nc9(p, l), nc9(p, p - l)).has_value()) << p;
  }
}

TEST(Nc9Property, NoFourCycles) {
  for (std::uint64_t p : {5u, 13u, 17u, 29u, 37u}) EXPECT_GT(*girth(nc9(p)), 4u) << p;
}

TEST(Foster, Loading) {
  for (const std::string& name : foster_names()) {
    const Graph x = foster_graph(name);
    EXPECT_EQ(x.order(), foster_expected_order(name));
    EXPECT_TRUE(x.is_regular(3));
    EXPECT_TRUE(is_connected(x));
  }
  EXPECT_THROW(foster_graph("F010"), std::invalid_argument);
}

TEST(Foster, RejectsBadData) {
  const auto dir = std::filesystem::temp_directory_path() / "vnc_bad_foster";
  std::filesystem::create_directories(dir / "foster");
  {
    std::ofstream out(dir / "foster" / "F024.edges");
    out << to_edge_list(cycle_graph(24));
  }
  EXPECT_THROW(foster_graph("F024", dir.string()), std::runtime_error);
  {
    std::ofstream out(dir / "foster" / "F024.edges");
    out << to_edge_list(x_n_2(5));
  }
  EXPECT_THROW(foster_graph("F024", dir.string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}
