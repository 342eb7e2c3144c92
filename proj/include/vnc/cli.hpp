#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "vnc/graph.hpp"

namespace vnc::cli {

enum class Check { Certify, SRegularity, IsomorphismClass, Quotient };

std::string to_string(Check c);
/// "certify", "s-regularity", "isomorphism-class", "quotient".
std::optional<Check> parse_check(const std::string& text);

struct Target {
  enum class Kind { Catalogue, Nc9, Foster, XN2, Petersen, EdgeFile };
  Kind kind = Kind::Catalogue;
  int index = 0;            // NC index
  std::uint64_t param = 0;  // p for nc9, n for X(n,2)
  std::string name;         // Foster name or edge-list path

  std::string id() const;
  Graph build() const;
};

/// Resolves --graph/--p/--n style arguments. Names: NC0..NC8, nc9, F024,
/// F060, F084, F204, X (or x_n_2), petersen. Throws std::invalid_argument.
Target parse_target(const std::string& name, std::optional<std::uint64_t> p,
                    std::optional<std::uint64_t> n);
Target edge_file_target(const std::string& path);

struct Expectations {
  std::optional<std::size_t> order;
  std::optional<bool> cubic_connected;
  std::optional<bool> vertex_transitive;
  std::optional<bool> arc_transitive;
  std::optional<bool> cayley;
  std::optional<bool> aut_solvable;
  std::optional<std::uint64_t> aut_order;
  std::optional<std::optional<std::size_t>> s_regularity;  // inner nullopt: not symmetric
  std::optional<std::size_t> girth;
  std::optional<std::size_t> min_girth;  // girth strictly greater than this
  std::optional<std::size_t> classes;    // isomorphism classes among targets
};

/// Facts established for the named graph families; empty for edge files.
Expectations known_expectations(const Target& t);

struct Job {
  std::string name;
  std::vector<Target> targets;
  std::set<Check> checks;
  Expectations expect;
  std::string skip_reason;  // non-empty: recorded but not run
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct JobReport {
  std::string name;
  nlohmann::json body;  // deterministic content
  std::vector<Assertion> assertions;
  std::string error;
  std::string skip_reason;
  double wall_ms = 0;

  bool passed() const;
};

enum class ExportFormat { Edges, Dot };

struct RunOptions {
  int threads = 1;
  std::string export_dir;
  ExportFormat format = ExportFormat::Edges;
};

struct RunSummary {
  std::vector<JobReport> jobs;
  bool passed = true;

  /// Full report; timing goes into a separate "timing_ms" object so the
  /// "jobs" array is reproducible byte for byte.
  nlohmann::json to_json(bool include_timing = true) const;
  std::string table() const;
};

/// Runs jobs concurrently (job-level only). Failures of any kind are
/// captured in the job's report.
RunSummary run(const std::vector<Job>& jobs, const RunOptions& options = {});

/// The full verification battery restricted to graphs of order 12p for the
/// given primes, plus the cross-family isomorphism counts.
std::vector<Job> theorem_suite(const std::vector<std::uint64_t>& primes);

}  // namespace vnc::cli
