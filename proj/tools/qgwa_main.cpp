// qgwa analyze <file>... [--verify] [--probe] [--format json|text]
//
// Exit codes: 0 ok, 2 hypothesis violation, 3 parse error, 4 cross-check or
// verification failure (a bug if it ever happens). With several files the
// most severe code wins.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qgwa/report.hpp"

namespace {

struct Outcome {
  std::string text;
  std::string diagnostics;
  int code = 0;
};

struct Overrides {
  std::optional<int> grade_bound;
  std::optional<int> h_bound;
  std::optional<long> k_bound;
  bool verify = false;
  bool probe = false;
  qgwa::ReportFormat format = qgwa::ReportFormat::Text;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qgwa::Error(qgwa::ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome analyze_file(const std::string& path, const Overrides& o) {
  Outcome out;
  try {
    qgwa::AnalysisRequest req = qgwa::parse_request(slurp(path));
    if (o.grade_bound) req.options.bounds.grade_bound = *o.grade_bound;
    if (o.h_bound) req.options.bounds.h_degree_bound = *o.h_bound;
    if (o.k_bound) req.options.k_bound = *o.k_bound;
    req.options.verify = req.options.verify || o.verify;
    req.options.probe = req.options.probe || o.probe;
    const qgwa::AnalysisReport rep = qgwa::run_analysis(req);
    out.text = qgwa::emit_report(rep, o.format);
    out.code = rep.exit_code();
  } catch (const qgwa::Error& e) {
    out.diagnostics = path + ": " + e.what() + "\n";
    const bool parse = e.code() == qgwa::ErrorCode::ParseError || e.code() == qgwa::ErrorCode::SemanticError;
    out.code = parse ? 3 : 2;
  }
  return out;
}

int severity(int code) {
  switch (code) {
    case 4: return 3;
    case 3: return 2;
    case 2: return 1;
    default: return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed rings of quantum generalized Weyl algebras"};
  app.require_subcommand(1);

  Overrides o;
  std::vector<std::string> files;
  std::string format = "text";
  unsigned jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "analyze input documents");
  analyze->add_option("files", files, "input documents")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--verify", o.verify, "brute-force check of the fixed-ring presentation");
  analyze->add_flag("--probe", o.probe, "search for extra fixed generators (experimental)");
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--grade-bound", o.grade_bound, "truncation bound on |grade|")->check(CLI::NonNegativeNumber);
  analyze->add_option("--h-bound", o.h_bound, "truncation bound on h-degree")->check(CLI::NonNegativeNumber);
  analyze->add_option("--k-bound", o.k_bound, "bound for congruence searches without a magnitude test")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--jobs", jobs, "files processed concurrently")->check(CLI::Range(1u, 256u));

  std::string canonical_file;
  auto* canonical = app.add_subcommand("canonical", "print the canonical form of an input document");
  canonical->add_option("file", canonical_file)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*canonical) {
    try {
      std::cout << qgwa::emit_request(qgwa::parse_request(slurp(canonical_file)));
      return 0;
    } catch (const qgwa::Error& e) {
      std::cerr << canonical_file << ": " << e.what() << "\n";
      return 3;
    }
  }

  o.format = format == "json" ? qgwa::ReportFormat::Json : qgwa::ReportFormat::Text;
  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) outcomes[i] = analyze_file(files[i], o);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, files.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1 && o.format == qgwa::ReportFormat::Text) std::cout << "== " << files[i] << " ==\n";
    std::cout << outcomes[i].text;
    std::cerr << outcomes[i].diagnostics;
    if (severity(outcomes[i].code) > severity(code)) code = outcomes[i].code;
  }
  return code;
}
