#include <gtest/gtest.h>

#include <omp.h>

#include "helpers.hpp"
#include "vnc/constructions.hpp"
#include "vnc/kernels.hpp"

using namespace vnc;

namespace {

std::vector<Graph> graphs() {
  return {complete_graph(4), cycle_graph(9),    path_graph(6),  hypercube_graph(4),
          petersen_graph(),  x_n_2(2),          x_n_2(9),       nc_catalogue(2),
          nc9(13),           foster_graph("F204"), disjoint_union(cycle_graph(5), path_graph(3))};
}

}  // namespace

TEST(Kernels, GirthParallelMatchesSerial) {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (const Graph& x : graphs()) EXPECT_EQ(kernels::girth(x), kernels::serial::girth(x));
  }
}

TEST(Kernels, FilterParallelMatchesSerial) {
  auto keep = [](std::size_t i) { return (i * 2654435761u) % 7 < 3; };
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (std::size_t count : {0u, 1u, 17u, 10000u}) {
      EXPECT_EQ(kernels::filter_indices(count, keep), kernels::serial::filter_indices(count, keep));
    }
  }
}

TEST(Kernels, BruteForceMatchesSerialAndOracle) {
  for (const Graph& x : {complete_graph(4), cycle_graph(6), hypercube_graph(3), path_graph(4), x_n_2(2)}) {
    const std::uint64_t expected = oracle::automorphism_count(x.order(), testing_support::edges_of(x));
    EXPECT_EQ(kernels::brute_force_automorphism_count(x), expected);
    EXPECT_EQ(kernels::serial::brute_force_automorphism_count(x), expected);
  }
}
