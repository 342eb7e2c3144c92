#pragma once

#include <random>

#include "oracles.hpp"
#include "vnc/graph.hpp"
#include "vnc/permutation.hpp"

namespace testing_support {

inline oracle::EdgeList edges_of(const vnc::Graph& x) {
  oracle::EdgeList out;
  for (auto [u, v] : x.edges()) out.emplace_back(u, v);
  return out;
}

inline oracle::Images images_of(const vnc::Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

inline std::vector<oracle::Images> images_of(const std::vector<vnc::Permutation>& ps) {
  std::vector<oracle::Images> out;
  for (const auto& p : ps) out.push_back(images_of(p));
  return out;
}

inline vnc::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<vnc::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<vnc::Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return vnc::Permutation(std::move(images));
}

inline vnc::Permutation cycles(std::size_t n, std::vector<std::vector<vnc::Point>> c) {
  return vnc::Permutation::from_cycles(n, c);
}

}  // namespace testing_support
