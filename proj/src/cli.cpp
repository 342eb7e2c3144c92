#include "vnc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vnc/analysis.hpp"
#include "vnc/automorphisms.hpp"
#include "vnc/constructions.hpp"

namespace vnc::cli {

std::string to_string(Check c) {
  switch (c) {
    case Check::Certify: return "certify";
    case Check::SRegularity: return "s-regularity";
    case Check::IsomorphismClass: return "isomorphism-class";
    case Check::Quotient: return "quotient";
  }
  return "?";
}

std::optional<Check> parse_check(const std::string& text) {
  for (Check c : {Check::Certify, Check::SRegularity, Check::IsomorphismClass, Check::Quotient}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string Target::id() const {
  switch (kind) {
    case Kind::Catalogue: return "NC" + std::to_string(index);
    case Kind::Nc9: return "nc9(p=" + std::to_string(param) + ")";
    case Kind::Foster: return name;
    case Kind::XN2: return "X(" + std::to_string(param) + ",2)";
    case Kind::Petersen: return "petersen";
    case Kind::EdgeFile: return "file:" + name;
  }
  return "?";
}

Graph Target::build() const {
  switch (kind) {
    case Kind::Catalogue: return nc_catalogue(index);
    case Kind::Nc9: return nc9(param);
    case Kind::Foster: return foster_graph(name);
    case Kind::XN2: return x_n_2(param);
    case Kind::Petersen: return petersen_graph();
    case Kind::EdgeFile: return read_edge_list_file(name);
  }
  throw std::logic_error("unknown target kind");
}

Target parse_target(const std::string& name, std::optional<std::uint64_t> p, std::optional<std::uint64_t> n) {
  Target t;
  if (name.size() == 3 && name.rfind("NC", 0) == 0 && name[2] >= '0' && name[2] <= '8') {
    t.kind = Target::Kind::Catalogue;
    t.index = name[2] - '0';
  } else if (name == "nc9" || name == "NC9") {
    if (!p) throw std::invalid_argument("nc9 needs --p");
    t.kind = Target::Kind::Nc9;
    t.param = *p;
  } else if (name == "X" || name == "x_n_2") {
    if (!n) throw std::invalid_argument("X(n,2) needs --n");
    t.kind = Target::Kind::XN2;
    t.param = *n;
  } else if (name == "petersen") {
    t.kind = Target::Kind::Petersen;
  } else if (std::find(foster_names().begin(), foster_names().end(), name) != foster_names().end()) {
    t.kind = Target::Kind::Foster;
    t.name = name;
  } else {
    throw std::invalid_argument("unknown graph '" + name + "'");
  }
  return t;
}

Target edge_file_target(const std::string& path) {
  Target t;
  t.kind = Target::Kind::EdgeFile;
  t.name = path;
  return t;
}

Expectations known_expectations(const Target& t) {
  Expectations e;
  switch (t.kind) {
    case Target::Kind::Catalogue:
      e.order = t.index <= 6 ? 60 : 84;
      e.cubic_connected = true;
      e.vertex_transitive = true;
      e.arc_transitive = false;
      e.cayley = false;
      e.aut_solvable = false;
      e.s_regularity = std::optional<std::size_t>{};
      break;
    case Target::Kind::Nc9:
      e.order = 12 * t.param;
      e.cubic_connected = true;
      e.vertex_transitive = true;
      e.arc_transitive = false;
      e.cayley = false;
      e.aut_solvable = true;
      e.aut_order = 24 * t.param;
      e.s_regularity = std::optional<std::size_t>{};
      e.min_girth = 4;
      break;
    case Target::Kind::Foster: {
      static const std::map<std::string, std::tuple<std::size_t, std::uint64_t, bool>> facts = {
          {"F024", {2, 144, true}}, {"F060", {2, 360, true}}, {"F084", {2, 504, false}}, {"F204", {4, 4896, false}}};
      const auto& [s, aut, cayley] = facts.at(t.name);
      e.order = foster_expected_order(t.name);
      e.cubic_connected = true;
      e.vertex_transitive = true;
      e.arc_transitive = true;
      e.s_regularity = std::optional<std::size_t>{s};
      e.aut_order = aut;
      e.cayley = cayley;
      break;
    }
    case Target::Kind::XN2:
      e.order = 4 * t.param;
      e.cubic_connected = true;
      e.vertex_transitive = true;
      e.cayley = true;
      e.girth = 4;
      break;
    case Target::Kind::Petersen:
      e.order = 10;
      e.vertex_transitive = true;
      e.arc_transitive = true;
      e.cayley = false;
      e.s_regularity = std::optional<std::size_t>{3};
      break;
    case Target::Kind::EdgeFile:
      break;
  }
  return e;
}

bool JobReport::passed() const {
  if (!skip_reason.empty()) return true;
  if (!error.empty()) return false;
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

namespace {

std::string sanitize(const std::string& id) {
  std::string out;
  for (char c : id) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') ? c : '_';
  return out;
}

template <typename T>
void expect_eq(std::vector<Assertion>& out, const std::string& name, const std::optional<T>& expected,
               const T& actual) {
  if (!expected) return;
  std::ostringstream detail;
  detail << "expected " << *expected << ", got " << actual;
  out.push_back({name, *expected == actual, detail.str()});
}

std::string s_to_string(const std::optional<std::size_t>& s) { return s ? std::to_string(*s) : "none"; }

void certify_target(const Target& t, const Graph& x, const Expectations& e, nlohmann::json& body,
                    std::vector<Assertion>& out) {
  CertifyOptions options;
  if (t.kind == Target::Kind::XN2) options.regular_hint = x_n_2_regular_group(t.param);
  const CertificationReport r = certify(x, t.id(), options);
  body["certify"] = to_json(r);
  const std::string id = t.id() + ": ";
  expect_eq(out, id + "order", e.order, r.order);
  if (e.cubic_connected) {
    const bool cc = r.connected && r.valency == std::size_t{3};
    out.push_back({id + "cubic and connected", cc == *e.cubic_connected, cc ? "yes" : "no"});
  }
  expect_eq(out, id + "vertex-transitive", e.vertex_transitive, r.vertex_transitive);
  expect_eq(out, id + "arc-transitive", e.arc_transitive, r.arc_transitive);
  expect_eq(out, id + "Cayley", e.cayley, r.cayley_verdict.cayley);
  expect_eq(out, id + "Aut solvable", e.aut_solvable, r.aut_solvable);
  expect_eq(out, id + "|Aut|", e.aut_order, r.aut_order);
  if (e.s_regularity) {
    out.push_back({id + "s-regularity", *e.s_regularity == r.s_regularity,
                   "expected " + s_to_string(*e.s_regularity) + ", got " + s_to_string(r.s_regularity)});
  }
  if (e.girth) {
    out.push_back({id + "girth", r.girth == Girth{*e.girth},
                   "expected " + std::to_string(*e.girth) + ", got " + girth_to_string(r.girth)});
  }
  if (e.min_girth) {
    const bool ok = !r.girth || *r.girth > *e.min_girth;
    out.push_back({id + "girth > " + std::to_string(*e.min_girth), ok, "got " + girth_to_string(r.girth)});
  }
  out.push_back({id + "arc-transitive implies vertex-transitive", !r.arc_transitive || r.vertex_transitive, ""});
}

void s_regularity_target(const Target& t, const Graph& x, const Expectations& e, nlohmann::json& body,
                         std::vector<Assertion>& out) {
  const AutomorphismResult aut = automorphism_group(x);
  const auto s = s_regularity(x, aut.group);
  body["s_regularity"] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
  body["aut_order"] = aut.order;
  const std::string id = t.id() + ": ";
  if (e.s_regularity) {
    out.push_back({id + "s-regularity", *e.s_regularity == s,
                   "expected " + s_to_string(*e.s_regularity) + ", got " + s_to_string(s)});
  }
  if (s) {
    const std::uint64_t expected = 3ULL << (*s - 1);
    const std::uint64_t stab = point_stabilizer(aut.group, 0).order();
    out.push_back({id + "|Aut_v| = 3*2^(s-1)", stab == expected,
                   "|Aut_v| = " + std::to_string(stab)});
  }
}

// nc9(p): G = <R(H), delta_alpha>, N = <R(c)>. Other graphs: G = Aut, N the
// smallest probe with more than two orbits.
void quotient_target(const Target& t, const Graph& x, nlohmann::json& body, std::vector<Assertion>& out) {
  const std::string id = t.id() + ": ";
  if (t.kind == Target::Kind::Nc9) {
    const std::uint64_t lambda = order_four_unit(t.param);
    const BiCayleySpec spec = nc9_spec(t.param, lambda);
    const Permutation delta = delta_map(spec, nc9_swap_automorphism(spec, t.param, lambda));
    const PermutationGroup rh = bicayley_right_regular(spec);
    std::vector<Permutation> gens = rh.generators();
    gens.push_back(delta);
    const PermutationGroup g(x.order(), gens);
    const std::size_t c = spec.group.generator_indices()[2];
    const PermutationGroup n(x.order(), {bicayley_right_multiplication(spec, c)});
    const QuotientCheck q = check_quotient_theorem(x, g, n);
    body["quotient"] = to_json(q);
    for (const char* h : {"G-in-Aut", "N-normal-in-G", "N-has-more-than-2-orbits"}) {
      out.push_back({id + h, q.find(h)->holds, q.find(h)->detail});
    }
    out.push_back({id + "G not arc-transitive (reported)", !q.find("G-arc-transitive")->holds, ""});
    out.push_back({id + "N semiregular", q.find("N-semiregular")->holds, ""});
    const bool cycle = q.quotient && are_isomorphic(*q.quotient, cycle_graph(12)).has_value();
    out.push_back({id + "quotient is C12", cycle,
                   q.quotient ? std::to_string(q.quotient->order()) + " vertices" : "none"});
    return;
  }
  const AutomorphismResult aut = automorphism_group(x);
  std::uint64_t p = x.order();
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    while (p % f == 0 && p / f > 1) p /= f;
  }
  std::optional<PermutationGroup> chosen;
  for (const PermutationGroup& n : normal_subgroup_probes(aut.group, p)) {
    if (orbits(n).size() > 2) {
      chosen = n;
      break;
    }
  }
  if (!chosen) {
    body["quotient"] = {{"probe", "no qualifying N"}};
    return;
  }
  const QuotientCheck q = check_quotient_theorem(x, aut.group, *chosen);
  body["quotient"] = to_json(q);
  body["quotient"]["probe_order"] = chosen->order();
  if (q.hypotheses_hold) out.push_back({id + "quotient conclusions", q.passed(), ""});
}

void isomorphism_job(const std::vector<Target>& targets, const std::vector<Graph>& graphs,
                     const Expectations& e, nlohmann::json& body, std::vector<Assertion>& out) {
  std::vector<std::string> certificates;
  nlohmann::json class_of = nlohmann::json::object();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string cert = canonical_form(graphs[i]).certificate;
    auto it = std::find(certificates.begin(), certificates.end(), cert);
    class_of[targets[i].id()] = static_cast<std::size_t>(it - certificates.begin());
    if (it == certificates.end()) certificates.push_back(cert);
  }
  body["classes"] = certificates.size();
  body["class_of"] = class_of;
  if (e.classes) {
    out.push_back({"distinct isomorphism classes", certificates.size() == *e.classes,
                   "expected " + std::to_string(*e.classes) + ", got " + std::to_string(certificates.size())});
  }
}

void export_graph(const RunOptions& options, const Target& t, const Graph& x) {
  namespace fs = std::filesystem;
  fs::create_directories(options.export_dir);
  const bool dot = options.format == ExportFormat::Dot;
  const fs::path path = fs::path(options.export_dir) / (sanitize(t.id()) + (dot ? ".dot" : ".edges"));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (dot ? to_dot(x, sanitize(t.id())) : to_edge_list(x));
}

JobReport run_job(const Job& job, const RunOptions& options) {
  JobReport r;
  r.name = job.name;
  r.skip_reason = job.skip_reason;
  r.body["job"] = job.name;
  if (!job.skip_reason.empty()) {
    r.body["skipped"] = job.skip_reason;
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    if (job.targets.empty()) throw std::invalid_argument("job has no targets");
    if (job.checks.empty()) throw std::invalid_argument("job has no checks");
    std::vector<Graph> graphs;
    for (const Target& t : job.targets) graphs.push_back(t.build());
    nlohmann::json per_target = nlohmann::json::array();
    for (std::size_t i = 0; i < job.targets.size(); ++i) {
      const Target& t = job.targets[i];
      nlohmann::json tb;
      tb["id"] = t.id();
      tb["order"] = graphs[i].order();
      tb["size"] = graphs[i].size();
      if (job.checks.count(Check::Certify)) certify_target(t, graphs[i], job.expect, tb, r.assertions);
      if (job.checks.count(Check::SRegularity)) s_regularity_target(t, graphs[i], job.expect, tb, r.assertions);
      if (job.checks.count(Check::Quotient)) quotient_target(t, graphs[i], tb, r.assertions);
      if (!options.export_dir.empty()) export_graph(options, t, graphs[i]);
      per_target.push_back(tb);
    }
    r.body["targets"] = per_target;
    if (job.checks.count(Check::IsomorphismClass)) {
      isomorphism_job(job.targets, graphs, job.expect, r.body, r.assertions);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.body["error"] = r.error;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  nlohmann::json assertions = nlohmann::json::array();
  for (const Assertion& a : r.assertions) {
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  r.body["assertions"] = assertions;
  r.body["passed"] = r.passed();
  return r;
}

}  // namespace

RunSummary run(const std::vector<Job>& jobs, const RunOptions& options) {
  RunSummary summary;
  summary.jobs.resize(jobs.size());
  const int threads = std::max(1, options.threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    summary.jobs[i] = run_job(jobs[i], options);
  }
  for (const JobReport& r : summary.jobs) summary.passed = summary.passed && r.passed();
  return summary;
}

nlohmann::json RunSummary::to_json(bool include_timing) const {
  nlohmann::json j;
  j["schema"] = "vnc-run/1";
  j["passed"] = passed;
  j["jobs"] = nlohmann::json::array();
  for (const JobReport& r : jobs) j["jobs"].push_back(r.body);
  if (include_timing) {
    j["timing_ms"] = nlohmann::json::object();
    for (const JobReport& r : jobs) j["timing_ms"][r.name] = r.wall_ms;
  }
  return j;
}

std::string RunSummary::table() const {
  std::ostringstream out;
  std::size_t width = 4;
  for (const JobReport& r : jobs) width = std::max(width, r.name.size());
  for (const JobReport& r : jobs) {
    std::string status = r.passed() ? "PASS" : "FAIL";
    if (!r.skip_reason.empty()) status = "SKIP";
    const auto ok = std::count_if(r.assertions.begin(), r.assertions.end(), [](const Assertion& a) { return a.passed; });
    out << status << "  " << r.name << std::string(width - r.name.size() + 2, ' ');
    if (!r.skip_reason.empty()) {
      out << r.skip_reason;
    } else if (!r.error.empty()) {
      out << "error: " << r.error;
    } else {
      out << ok << "/" << r.assertions.size() << " assertions";
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "  (%.0f ms)", r.wall_ms);
    out << ms << "\n";
    for (const Assertion& a : r.assertions) {
      if (!a.passed) out << "      failed: " << a.name << " (" << a.detail << ")\n";
    }
  }
  out << (passed ? "all jobs passed" : "some jobs FAILED") << "\n";
  return out.str();
}

std::vector<Job> theorem_suite(const std::vector<std::uint64_t>& primes) {
  std::vector<Job> jobs;
  auto single = [&](Target t, std::set<Check> checks) {
    Job j;
    j.name = to_string(*checks.begin()) + " " + t.id();
    j.expect = known_expectations(t);
    j.targets = {std::move(t)};
    j.checks = std::move(checks);
    jobs.push_back(std::move(j));
  };
  auto foster = [&](const std::string& name) {
    single(parse_target(name, {}, {}), {Check::Certify, Check::SRegularity});
  };
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::vector<Target> same_order;
    if (p == 2) foster("F024");
    if (p == 5) {
      for (int i = 0; i <= 6; ++i) {
        single(parse_target("NC" + std::to_string(i), {}, {}), {Check::Certify});
        same_order.push_back(parse_target("NC" + std::to_string(i), {}, {}));
      }
      foster("F060");
    }
    if (p == 7) {
      for (int i = 7; i <= 8; ++i) {
        single(parse_target("NC" + std::to_string(i), {}, {}), {Check::Certify});
        same_order.push_back(parse_target("NC" + std::to_string(i), {}, {}));
      }
      foster("F084");
      same_order.push_back(parse_target("F084", {}, {}));
    }
    if (p == 17) foster("F204");
    if (p % 4 == 1) {
      single(parse_target("nc9", p, {}), {Check::Certify, Check::Quotient});
      if (p == 5) same_order.push_back(parse_target("nc9", p, {}));
    } else {
      Job j;
      j.name = "certify nc9(p=" + std::to_string(p) + ")";
      j.skip_reason = "p = " + std::to_string(p) + " is not 1 mod 4; nc9(p) does not exist";
      jobs.push_back(std::move(j));
    }
    // |Aut X(n,2)| = 2^(n+1) n must fit the 64-bit order arithmetic.
    if (3 * p <= 57) {
      single(parse_target("X", {}, 3 * p), {Check::Certify});
    } else {
      Job j;
      j.name = "certify X(" + std::to_string(3 * p) + ",2)";
      j.skip_reason = "automorphism group order exceeds 64 bits";
      jobs.push_back(std::move(j));
    }
    if (same_order.size() > 1) {
      Job j;
      j.name = "isomorphism-class order " + std::to_string(12 * p);
      j.targets = same_order;
      j.checks = {Check::IsomorphismClass};
      j.expect.classes = same_order.size();
      jobs.push_back(std::move(j));
    }
  }
  return jobs;
}

}  // namespace vnc::cli
