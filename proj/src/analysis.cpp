#include "vnc/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace vnc {

bool is_vertex_transitive(const AutomorphismResult& aut) { return aut.orbits.size() <= 1; }

bool is_vertex_transitive(const Graph& x) { return is_vertex_transitive(automorphism_group(x)); }

std::size_t arc_orbit_size(const Graph& x, const PermutationGroup& g, Vertex u, Vertex v) {
  if (!x.adjacent(u, v)) throw std::invalid_argument("arc endpoints are not adjacent");
  const std::size_t n = x.order();
  std::vector<char> seen(n * n, 0);
  std::vector<std::pair<Vertex, Vertex>> queue{{u, v}};
  seen[u * n + v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [a, b] = queue[head];
    for (const Permutation& p : g.generators()) {
      const Vertex c = p[a];
      const Vertex d = p[b];
      if (!seen[c * n + d]) {
        seen[c * n + d] = 1;
        queue.emplace_back(c, d);
      }
    }
  }
  return queue.size();
}

bool is_arc_transitive(const Graph& x, const PermutationGroup& g) {
  if (x.size() == 0) return false;
  const Vertex u = x.edges().front().first;
  return arc_orbit_size(x, g, u, x.neighbors(u).front()) == 2 * x.size();
}

bool is_arc_transitive(const Graph& x) { return is_arc_transitive(x, automorphism_group(x).group); }

std::size_t s_arc_orbit_size(const Graph& x, const PermutationGroup& g, std::size_t s) {
  if (x.order() == 0 || x.degree(0) == 0) return 0;
  std::vector<Vertex> arc{0, x.neighbors(0).front()};
  while (arc.size() < s + 1) {
    const auto nb = x.neighbors(arc.back());
    const Vertex back = arc[arc.size() - 2];
    auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return w != back; });
    if (it == nb.end()) return 0;
    arc.push_back(*it);
  }
  std::set<std::vector<Vertex>> seen{arc};
  std::vector<std::vector<Vertex>> queue{arc};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Permutation& p : g.generators()) {
      std::vector<Vertex> image(queue[head].size());
      for (std::size_t i = 0; i < image.size(); ++i) image[i] = p[queue[head][i]];
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return queue.size();
}

std::optional<std::size_t> s_regularity(const Graph& x, const PermutationGroup& g) {
  if (x.order() == 0 || !x.is_regular(3)) {
    throw std::invalid_argument("s-regularity requires a cubic graph");
  }
  if (!is_connected(x)) throw std::invalid_argument("s-regularity requires a connected graph");
  if (!is_arc_transitive(x, g)) return std::nullopt;
  for (std::size_t s = 1; s <= kTutteBound; ++s) {
    const std::uint64_t arcs = count_s_arcs(x, s);
    if (s_arc_orbit_size(x, g, s) != arcs) {
      throw std::logic_error("group is transitive on " + std::to_string(s - 1) +
                             "-arcs but neither regular on them nor transitive on " +
                             std::to_string(s) + "-arcs");
    }
    if (g.order() == arcs) return s;
  }
  throw std::logic_error("s-regularity search reached s = 6");
}

std::optional<std::size_t> s_regularity(const Graph& x) {
  return s_regularity(x, automorphism_group(x).group);
}

// ---------------------------------------------------------------------------

namespace {

struct Candidates {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

Candidates regular_candidates(const PermutationGroup& a, std::size_t n) {
  std::vector<std::pair<std::uint64_t, Permutation>> keyed;
  a.chain().for_each_element([&](const Permutation& g) {
    if (g.fixed_point_count() != 0) return true;
    const std::uint64_t order = element_order(g);
    if (order > 1 && n % order == 0) keyed.emplace_back(order, g);
    return true;
  });
  // Order descending, then lexicographic image list.
  std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first > q.first;
    return p.second < q.second;
  });
  Candidates c;
  c.elements.reserve(keyed.size());
  for (auto& [order, g] : keyed) c.elements.push_back(std::move(g));
  for (std::size_t i = 0; i < c.elements.size(); ++i) c.index.emplace(c.elements[i], i);
  return c;
}

struct Partial {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // identity first
};

// <U, g> if it is semiregular with order dividing n. Built as a union of
// right cosets U w: the union is closed once w s lies in it for every
// representative w and generator s. In a semiregular group an element is
// determined by the image of point 0, so that image indexes membership.
std::optional<Partial> extend(const Partial& u, const Permutation& g, std::size_t n) {
  Partial next;
  next.generators = u.generators;
  next.generators.push_back(g);
  next.elements = u.elements;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> by_image(g.degree(), kNone);
  for (std::size_t k = 0; k < u.elements.size(); ++k) by_image[u.elements[k][0]] = k;
  std::vector<Permutation> reps{u.elements.front()};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const Permutation& s : next.generators) {
      Permutation w = compose(reps[head], s);
      const std::size_t at = by_image[w[0]];
      if (at != kNone) {
        if (next.elements[at] == w) continue;
        return std::nullopt;  // two elements agree on 0
      }
      if (next.elements.size() + u.elements.size() > n) return std::nullopt;
      for (const Permutation& v : u.elements) {
        Permutation y = compose(v, w);
        if (by_image[y[0]] != kNone || y.fixed_point_count() != 0) return std::nullopt;
        by_image[y[0]] = next.elements.size();
        next.elements.push_back(std::move(y));
      }
      reps.push_back(std::move(w));
    }
  }
  if (n % next.elements.size() != 0) return std::nullopt;
  return next;
}

class RegularSearch {
 public:
  RegularSearch(const Candidates& c, std::size_t n, std::size_t degree)
      : c_(c), n_(n), degree_(degree) {}

  std::optional<Partial> run(std::uint64_t& explored) {
    Partial root;
    root.elements.push_back(Permutation::identity(degree_));
    auto r = dfs(root, 0);
    explored = explored_;
    return r;
  }

 private:
  std::optional<Partial> dfs(const Partial& u, std::size_t start) {
    ++explored_;
    if (u.elements.size() == n_) return u;
    std::unordered_set<std::size_t> members;
    for (std::size_t k = 1; k < u.elements.size(); ++k) members.insert(c_.index.at(u.elements[k]));
    // If g maps y into y's U-orbit, say g(y) = v(y), then g v^-1 fixes y.
    std::vector<std::size_t> orbit_label(degree_, degree_);
    for (Point y = 0; y < degree_; ++y) {
      if (orbit_label[y] != degree_) continue;
      for (const Permutation& v : u.elements) orbit_label[v[y]] = y;
    }
    for (std::size_t i = start; i < c_.elements.size(); ++i) {
      if (members.count(i)) continue;
      const Permutation& g = c_.elements[i];
      bool clash = false;
      for (Point y = 0; y < degree_ && !clash; ++y) clash = orbit_label[g[y]] == orbit_label[y];
      if (clash) continue;
      auto next = extend(u, c_.elements[i], n_);
      if (!next) continue;
      if (next->elements.size() == n_) return next;
      std::vector<std::size_t> key;
      for (std::size_t k = 1; k < next->elements.size(); ++k) key.push_back(c_.index.at(next->elements[k]));
      std::sort(key.begin(), key.end());
      auto [it, fresh] = visited_.emplace(std::move(key), i + 1);
      if (!fresh) {
        if (it->second <= i + 1) continue;
        it->second = i + 1;
      }
      if (auto found = dfs(*next, i + 1)) return found;
    }
    return std::nullopt;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : v) h = (h ^ x) * 1099511628211ULL;
      return h;
    }
  };

  const Candidates& c_;
  std::size_t n_;
  std::size_t degree_;
  std::uint64_t explored_ = 0;
  std::unordered_map<std::vector<std::size_t>, std::size_t, KeyHash> visited_;
};

}  // namespace

RegularSubgroupSearch search_regular_subgroup(const PermutationGroup& a, std::size_t n,
                                              std::uint64_t bound) {
  if (a.order() > bound) {
    throw BoundExceeded("group of order " + std::to_string(a.order()) +
                        " exceeds regular-subgroup search bound " + std::to_string(bound));
  }
  RegularSubgroupSearch result;
  if (n == 0 || a.order() % n != 0) return result;
  const Candidates c = regular_candidates(a, n);
  result.candidates = c.elements.size();
  RegularSearch search(c, n, a.degree());
  if (auto found = search.run(result.explored)) {
    PermutationGroup w = subgroup_generated_by(a.degree(), found->generators);
    if (!is_regular_witness(w, a, n)) throw std::logic_error("regular subgroup search returned a bad witness");
    result.witness = std::move(w);
  }
  return result;
}

std::optional<PermutationGroup> find_regular_subgroup(const PermutationGroup& a, std::size_t n,
                                                      std::uint64_t bound) {
  return search_regular_subgroup(a, n, bound).witness;
}

bool is_regular_witness(const PermutationGroup& w, const PermutationGroup& within, std::size_t n) {
  return w.degree() == n && w.order() == n && is_transitive(w) && is_semiregular_group(w) &&
         is_subgroup(w, within);
}

// ---------------------------------------------------------------------------

CertificationReport certify(const Graph& x, const std::string& id, const CertifyOptions& options) {
  CertificationReport r;
  r.id = id;
  r.order = x.order();
  if (x.order() > 0 && x.is_regular(x.degree(0))) r.valency = x.degree(0);
  r.girth = girth(x);
  r.connected = is_connected(x);
  const AutomorphismResult aut = automorphism_group(x, options.vertex_bound);
  r.aut_order = aut.order;
  r.aut_solvable = is_solvable(aut.group);
  r.vertex_transitive = is_vertex_transitive(aut);
  r.arc_transitive = is_arc_transitive(x, aut.group);
  if (r.arc_transitive && r.connected && r.valency == std::size_t{3}) {
    r.s_regularity = s_regularity(x, aut.group);
  }
  CayleyVerdict& v = r.cayley_verdict;
  if (!r.vertex_transitive) {
    v.method = "not-vertex-transitive";
  } else if (options.regular_hint) {
    if (!is_regular_witness(*options.regular_hint, aut.group, x.order())) {
      throw std::invalid_argument("supplied subgroup is not regular inside Aut");
    }
    v.cayley = true;
    v.method = "supplied";
    v.witness_generators = options.regular_hint->generators();
  } else {
    const RegularSubgroupSearch s = search_regular_subgroup(aut.group, x.order(), options.enumeration_bound);
    v.method = "search";
    v.explored = s.explored;
    if (s.witness) {
      v.cayley = true;
      v.witness_generators = s.witness->generators();
    }
  }
  return r;
}

nlohmann::json to_json(const CertificationReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["id"] = r.id;
  j["order"] = r.order;
  j["valency"] = r.valency ? nlohmann::json(*r.valency) : nlohmann::json(nullptr);
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json("inf");
  j["connected"] = r.connected;
  j["vertex_transitive"] = r.vertex_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["s_regularity"] = r.s_regularity ? nlohmann::json(*r.s_regularity) : nlohmann::json(nullptr);
  j["aut_order"] = r.aut_order;
  j["aut_solvable"] = r.aut_solvable;
  nlohmann::json v;
  v["kind"] = r.cayley_verdict.cayley ? "Cayley" : "NonCayley";
  v["method"] = r.cayley_verdict.method;
  v["explored"] = r.cayley_verdict.explored;
  v["witness_generators"] = nlohmann::json::array();
  for (const Permutation& g : r.cayley_verdict.witness_generators) v["witness_generators"].push_back(g.to_string());
  j["cayley_verdict"] = v;
  j["vnc"] = r.is_vnc();
  return j;
}

// ---------------------------------------------------------------------------

bool QuotientCheck::passed() const {
  return hypotheses_hold &&
         std::all_of(conclusions.begin(), conclusions.end(), [](const CheckItem& c) { return c.holds; });
}

const CheckItem* QuotientCheck::find(const std::string& name) const {
  for (const auto* list : {&hypotheses, &conclusions}) {
    for (const CheckItem& c : *list) {
      if (c.name == name) return &c;
    }
  }
  return nullptr;
}

QuotientCheck check_quotient_theorem(const Graph& x, const PermutationGroup& g, const PermutationGroup& n) {
  QuotientCheck q;
  const bool cubic = x.order() > 0 && x.is_regular(3) && is_connected(x);
  q.hypotheses.push_back({"graph-cubic-connected", cubic, ""});
  const bool in_aut = std::all_of(g.generators().begin(), g.generators().end(),
                                  [&](const Permutation& p) { return x.is_automorphism(p); });
  q.hypotheses.push_back({"G-in-Aut", in_aut, "|G| = " + std::to_string(g.order())});
  const bool normal = is_normal_subgroup(n, g);
  q.hypotheses.push_back({"N-normal-in-G", normal, "|N| = " + std::to_string(n.order())});
  const bool arc_transitive = in_aut && is_arc_transitive(x, g);
  q.hypotheses.push_back({"G-arc-transitive", arc_transitive, ""});
  const OrbitPartition blocks = orbits(n);
  q.orbit_count = blocks.size();
  q.hypotheses.push_back({"N-has-more-than-2-orbits", blocks.size() > 2,
                          std::to_string(blocks.size()) + " orbits"});
  q.hypotheses_hold = std::all_of(q.hypotheses.begin(), q.hypotheses.end(),
                                  [](const CheckItem& c) { return c.holds; });

  q.conclusions.push_back({"N-semiregular", is_semiregular_group(n), ""});

  const Graph quotient = quotient_graph(x, blocks);
  q.quotient = quotient;
  if (normal) {
    std::vector<Permutation> induced;
    for (const Permutation& p : g.generators()) {
      std::vector<Point> images(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        images[b] = static_cast<Point>(blocks.block_of[p[blocks.blocks[b].front()]]);
      }
      induced.emplace_back(std::move(images));
    }
    const PermutationGroup image(blocks.size(), induced);
    const std::uint64_t kernel = g.order() / image.order();
    q.conclusions.push_back({"N-is-kernel-on-orbits", kernel == n.order(),
                             "kernel order " + std::to_string(kernel)});
    const bool quotient_cubic = quotient.order() > 0 && quotient.is_regular(3);
    q.conclusions.push_back({"quotient-cubic", quotient_cubic,
                             std::to_string(quotient.order()) + " vertices, " +
                                 std::to_string(quotient.size()) + " edges"});
    if (quotient_cubic && cubic && arc_transitive && kernel == n.order() && is_connected(quotient)) {
      const auto s_x = s_regularity(x, g);
      const auto s_q = s_regularity(quotient, image);
      const bool same = s_x && s_q && *s_x == *s_q;
      q.conclusions.push_back({"G/N-s-regular-with-same-s", same,
                               "s(X) = " + (s_x ? std::to_string(*s_x) : std::string("none")) +
                                   ", s(X_N) = " + (s_q ? std::to_string(*s_q) : std::string("none"))});
    } else {
      q.conclusions.push_back({"G/N-s-regular-with-same-s", false, "not applicable"});
    }
  } else {
    q.conclusions.push_back({"N-is-kernel-on-orbits", false, "N not normal in G"});
    q.conclusions.push_back({"quotient-cubic", false, "N not normal in G"});
    q.conclusions.push_back({"G/N-s-regular-with-same-s", false, "N not normal in G"});
  }
  return q;
}

std::vector<PermutationGroup> normal_subgroup_probes(const PermutationGroup& g, std::uint64_t p,
                                                     std::uint64_t bound) {
  std::vector<PermutationGroup> found;
  auto record = [&](PermutationGroup h) {
    if (h.order() == 1 || h.order() == g.order()) return;
    for (const PermutationGroup& f : found) {
      if (same_group(f, h)) return;
    }
    found.push_back(std::move(h));
  };
  const std::vector<Permutation> elements = enumerate_elements(g, bound);
  for (const Permutation& z : elements) {
    if (element_order(z) != 2) continue;
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](const Permutation& s) { return commute(z, s); });
    if (central) record(PermutationGroup(g.degree(), {z}));
  }
  for (const Permutation& y : elements) {
    if (element_order(y) != p) continue;
    if (std::any_of(found.begin(), found.end(), [&](const PermutationGroup& f) { return f.contains(y); })) continue;
    const Permutation seeds[] = {y};
    record(normal_closure(g, seeds));
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PermutationGroup& a, const PermutationGroup& b) { return a.order() < b.order(); });
  return found;
}

nlohmann::json to_json(const QuotientCheck& q) {
  auto items = [](const std::vector<CheckItem>& list) {
    nlohmann::json a = nlohmann::json::array();
    for (const CheckItem& c : list) a.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return a;
  };
  nlohmann::json j;
  j["hypotheses"] = items(q.hypotheses);
  j["conclusions"] = items(q.conclusions);
  j["hypotheses_hold"] = q.hypotheses_hold;
  j["orbit_count"] = q.orbit_count;
  j["quotient_order"] = q.quotient ? q.quotient->order() : 0;
  j["quotient_size"] = q.quotient ? q.quotient->size() : 0;
  j["passed"] = q.passed();
  return j;
}

}  // namespace vnc
