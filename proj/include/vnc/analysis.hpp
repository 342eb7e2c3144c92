#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vnc/automorphisms.hpp"
#include "vnc/graph.hpp"
#include "vnc/perm_group.hpp"

namespace vnc {

// ---------------------------------------------------------------------------
// Transitivity

bool is_vertex_transitive(const AutomorphismResult& aut);
bool is_vertex_transitive(const Graph& x);

/// Size of the orbit of the arc (u, v) under g.
std::size_t arc_orbit_size(const Graph& x, const PermutationGroup& g, Vertex u, Vertex v);

/// g is transitive on the 2|E| arcs of x.
bool is_arc_transitive(const Graph& x, const PermutationGroup& g);
bool is_arc_transitive(const Graph& x);

/// Size of the orbit of the s-arc starting 0, first neighbour, then the
/// first non-backtracking neighbour at every step.
std::size_t s_arc_orbit_size(const Graph& x, const PermutationGroup& g, std::size_t s);

// ---------------------------------------------------------------------------
// s-regularity

inline constexpr std::size_t kTutteBound = 5;

/// The s for which g acts regularly on the s-arcs of the cubic graph x, or
/// nullopt if g is not transitive on arcs. Throws std::invalid_argument for
/// non-cubic input and std::logic_error if no s <= 5 fits.
std::optional<std::size_t> s_regularity(const Graph& x, const PermutationGroup& g);
std::optional<std::size_t> s_regularity(const Graph& x);

// ---------------------------------------------------------------------------
// Regular subgroups

struct RegularSubgroupSearch {
  std::optional<PermutationGroup> witness;
  std::uint64_t candidates = 0;          // fixed-point-free elements of order dividing n
  std::uint64_t explored = 0;            // partial subgroups expanded
};

/// Backtracking search for a subgroup of `a` acting regularly on n points.
/// Partial subgroups are closures of fixed-point-free candidates, pruned when
/// their order does not divide n or they stop being semiregular. A negative
/// answer is definitive. Throws BoundExceeded if |a| exceeds `bound`.
RegularSubgroupSearch search_regular_subgroup(const PermutationGroup& a, std::size_t n,
                                              std::uint64_t bound = kDefaultEnumerationBound);
std::optional<PermutationGroup> find_regular_subgroup(const PermutationGroup& a, std::size_t n,
                                                      std::uint64_t bound = kDefaultEnumerationBound);

/// Order n, transitive, trivial point stabilizers, and contained in `within`.
bool is_regular_witness(const PermutationGroup& w, const PermutationGroup& within, std::size_t n);

// ---------------------------------------------------------------------------
// Certification

struct CayleyVerdict {
  bool cayley = false;
  std::vector<Permutation> witness_generators;  // Cayley only
  std::string method;                           // "search", "supplied", "not-vertex-transitive"
  std::uint64_t explored = 0;
};

struct CertificationReport {
  std::string id;
  std::size_t order = 0;
  std::optional<std::size_t> valency;  // set for regular graphs
  Girth girth;
  bool connected = false;
  bool vertex_transitive = false;
  bool arc_transitive = false;
  std::optional<std::size_t> s_regularity;
  std::uint64_t aut_order = 0;
  bool aut_solvable = false;
  CayleyVerdict cayley_verdict;

  bool is_vnc() const { return vertex_transitive && !cayley_verdict.cayley; }
};

struct CertifyOptions {
  /// A known regular subgroup; validated and used instead of searching.
  std::optional<PermutationGroup> regular_hint;
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::size_t vertex_bound = kDefaultVertexBound;
};

CertificationReport certify(const Graph& x, const std::string& id, const CertifyOptions& options = {});

inline constexpr const char* kReportSchema = "vnc-report/1";

nlohmann::json to_json(const CertificationReport& r);

// ---------------------------------------------------------------------------
// Quotients by normal subgroups

struct CheckItem {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct QuotientCheck {
  std::vector<CheckItem> hypotheses;
  std::vector<CheckItem> conclusions;  // verified when hypotheses hold, observed otherwise
  bool hypotheses_hold = false;
  std::size_t orbit_count = 0;
  std::optional<Graph> quotient;

  bool passed() const;  // hypotheses hold and every conclusion holds
  const CheckItem* find(const std::string& name) const;
};

/// Checks, for N normal in G <= Aut(x) with G arc-transitive and N having
/// more than two orbits, that N is semiregular, N is the kernel of G on the
/// N-orbits, and the quotient is cubic with G/N acting s-regularly for the
/// same s as G on x. Failed hypotheses are reported, not thrown.
QuotientCheck check_quotient_theorem(const Graph& x, const PermutationGroup& g,
                                     const PermutationGroup& n);

/// Distinct nontrivial proper normal subgroups of g obtained as normal
/// closures of central involutions and of elements of order p.
std::vector<PermutationGroup> normal_subgroup_probes(const PermutationGroup& g, std::uint64_t p,
                                                     std::uint64_t bound = kDefaultEnumerationBound);

nlohmann::json to_json(const QuotientCheck& q);

}  // namespace vnc
