// Batch verification driver.
//
//   vnc_verify --graph NC3 --check certify
//   vnc_verify --graph nc9 --p 13 --check certify,quotient
//   vnc_verify --suite theorem61 --p 5 --p 7 --jobs 4 --report run.json
//   vnc_verify --edges my.edges --check certify,s-regularity

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "vnc/cli.hpp"

int main(int argc, char** argv) {
  using namespace vnc::cli;
  CLI::App app{"Verify vertex-transitive non-Cayley graph claims"};

  std::vector<std::string> graphs;
  std::vector<std::string> edge_files;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> n;
  std::string suite;
  std::vector<std::string> checks_text;
  std::string export_dir;
  std::string format = "edges";
  int threads = 1;
  std::string report_path;
  bool no_timing = false;

  app.add_option("--graph", graphs, "NC0..NC8, nc9, F024, F060, F084, F204, X, petersen");
  app.add_option("--edges", edge_files, "Edge-list file to analyse")->check(CLI::ExistingFile);
  app.add_option("--p", primes, "Prime parameter (nc9, suite)");
  app.add_option("--n", n, "Parameter n of X(n,2)");
  app.add_option("--suite", suite, "Named battery")->check(CLI::IsMember({"theorem61"}));
  app.add_option("--check", checks_text, "certify, s-regularity, isomorphism-class, quotient")->delimiter(',');
  app.add_option("--export", export_dir, "Write each graph into this directory");
  app.add_option("--format", format, "Export format")->check(CLI::IsMember({"edges", "dot"}));
  app.add_option("--jobs", threads, "Jobs run concurrently")->check(CLI::PositiveNumber);
  app.add_option("--report", report_path, "Write the JSON report here");
  app.add_flag("--no-timing", no_timing, "Omit wall times from the JSON report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::vector<Job> jobs;
  try {
    std::set<Check> checks;
    for (const std::string& c : checks_text) {
      auto parsed = parse_check(c);
      if (!parsed) throw std::invalid_argument("unknown check '" + c + "'");
      checks.insert(*parsed);
    }
    if (checks.empty()) checks.insert(Check::Certify);

    if (!suite.empty()) {
      if (primes.empty()) throw std::invalid_argument("--suite needs at least one --p");
      jobs = theorem_suite(primes);
    }
    std::vector<Target> targets;
    for (const std::string& g : graphs) {
      if (g == "nc9" || g == "NC9") {
        if (primes.empty()) throw std::invalid_argument("nc9 needs --p");
        for (std::uint64_t p : primes) targets.push_back(parse_target(g, p, n));
      } else {
        targets.push_back(parse_target(g, std::nullopt, n));
      }
    }
    for (const std::string& f : edge_files) targets.push_back(edge_file_target(f));

    std::set<Check> per_graph = checks;
    per_graph.erase(Check::IsomorphismClass);
    if (!per_graph.empty()) {
      for (const Target& t : targets) {
        Job j;
        j.name = t.id();
        j.targets = {t};
        j.checks = per_graph;
        j.expect = known_expectations(t);
        jobs.push_back(std::move(j));
      }
    }
    if (checks.count(Check::IsomorphismClass) && !targets.empty()) {
      Job j;
      j.name = "isomorphism-class";
      j.targets = targets;
      j.checks = {Check::IsomorphismClass};
      jobs.push_back(std::move(j));
    }
    if (jobs.empty()) throw std::invalid_argument("nothing to do; give --graph, --edges or --suite");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  RunOptions options;
  options.threads = threads;
  options.export_dir = export_dir;
  options.format = format == "dot" ? ExportFormat::Dot : ExportFormat::Edges;
  const RunSummary summary = run(jobs, options);
  std::cout << summary.table();

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 1;
    }
    out << summary.to_json(!no_timing).dump(2) << "\n";
  }
  return summary.passed ? 0 : 1;
}
