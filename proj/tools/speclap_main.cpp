// speclap command-line interface: audit, enumerate, spectrum, resistance,
// family. Exit codes: 0 all checks pass, 1 some check failed, 2 usage or
// input errors.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "speclap/certificates.hpp"
#include "speclap/enumeration.hpp"
#include "speclap/families.hpp"
#include "speclap/graph.hpp"
#include "speclap/io.hpp"
#include "speclap/resistance.hpp"
#include "speclap/spectra.hpp"

namespace {

using namespace speclap;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
  std::vector<Graph> graphs;
  const std::string text = read_file(path);
  if (format == "edges") {
    graphs.push_back(parse_edge_list(text));
    return graphs;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  if (graphs.empty()) throw std::runtime_error("no graphs in " + path);
  return graphs;
}

struct AuditOutcome {
  std::string text;
  nlohmann::json doc;
  bool ok = true;
};

AuditOutcome audit_one(const Graph& g, std::size_t index, const std::string& format, double tol) {
  const Certificate cert = audit_theorem1(g, tol);
  const Theorem2Report t2 = audit_theorem2(g, tol);
  AuditOutcome out;
  out.ok = cert.all_pass() && t2.all_pass();
  out.doc = certificate_document(g, format, cert, t2);

  int pass = 0, fail = 0, na = 0;
  for (const Check& c : cert.checks) {
    pass += c.status == CheckStatus::Pass;
    fail += c.status == CheckStatus::Fail;
    na += c.status == CheckStatus::NotApplicable;
  }
  for (const Check& c : t2.checks) {
    pass += c.status == CheckStatus::Pass;
    fail += c.status == CheckStatus::Fail;
    na += c.status == CheckStatus::NotApplicable;
  }
  std::ostringstream line;
  line << "graph " << (index + 1) << " [" << emit_graph6(g) << "]: case=" << case_tag_name(cert.tag)
       << " lambda=" << fmt(cert.lambda) << " lambda_bar=" << fmt(cert.lambda_bar)
       << " sum=" << fmt(cert.sum) << " checks=" << pass << " pass/" << fail << " fail/" << na << " n-a";
  if (cert.equality.flag) line << " equality";
  if (!out.ok) {
    line << " FAILED:";
    for (const Check& c : cert.checks)
      if (c.status == CheckStatus::Fail) line << ' ' << c.name;
    for (const Check& c : t2.checks)
      if (c.status == CheckStatus::Fail) line << " t2:" << c.name;
  }
  out.text = line.str();
  return out;
}

int run_audit(const std::string& path, const std::string& format, const std::string& json_path,
              double tol, int threads) {
  const std::vector<Graph> graphs = load_graphs(path, format);
  std::vector<AuditOutcome> results(graphs.size());

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < graphs.size(); i += step) results[i] = audit_one(graphs[i], i, format, tol);
  };
  if (threads <= 1 || graphs.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }

  bool all_ok = true;
  for (const AuditOutcome& r : results) {
    std::cout << r.text << "\n";
    all_ok = all_ok && r.ok;
  }
  std::cout << (all_ok ? "all " : "FAIL: ") << results.size() << " graph(s) audited" << (all_ok ? ", all checks pass" : ", some checks failed")
            << "\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + json_path);
    for (const AuditOutcome& r : results) out << r.doc.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_enumerate(int order, bool allow_long, const std::string& equality_out, double tol, int threads) {
  const EnumReport report = exhaustive_audit(order, tol, threads, allow_long);
  std::cout << "order " << report.n << ": " << report.graph_count << " graphs, " << report.violations.size()
            << " violations\n";
  std::cout << "min sum = " << fmt(report.min_sum) << "\n";
  std::cout << "equality cases = " << report.equality_codes.size() << "\n";
  std::cout << "c_" << report.n << " = " << fmt(report.c_n) << "\n";
  std::cout << "generator = " << report.generator << "\n";
  for (const std::string& v : report.violations) std::cout << "violation: " << v << "\n";
  std::cerr << "wall seconds: " << report.wall_seconds << "\n";
  if (!equality_out.empty()) {
    std::ofstream out(equality_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + equality_out);
    for (const std::string& code : report.equality_codes) out << code << "\n";
  }
  return report.violations.empty() ? 0 : 1;
}

int run_spectrum(const std::string& path, const std::string& format) {
  const std::vector<Graph> graphs = load_graphs(path, format);
  const Spectrum spec = eigen_symmetric(laplacian(graphs.front()));
  std::cout << "index,eigenvalue\n";
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
    std::cout << i << "," << fmt(spec.eigenvalues[i]) << "\n";
  return 0;
}

int run_resistance(const std::string& path, const std::string& format, const std::string& pair_text) {
  const std::vector<Graph> graphs = load_graphs(path, format);
  const Graph& g = graphs.front();
  int r = -1, s = -1;
  if (std::sscanf(pair_text.c_str(), "%d,%d", &r, &s) != 2)
    throw std::runtime_error("--pair expects \"r,s\"");
  const ResistanceMatrix rm = resistance_matrix(g);
  const double oracle = resistance_variational_oracle(g, r, s);
  std::cout << "R(" << r << "," << s << ") = " << fmt(rm.at(r, s)) << "\n";
  std::cout << "variational = " << fmt(oracle) << "\n";
  std::cout << "difference = " << fmt(std::abs(rm.at(r, s) - oracle)) << "\n";
  return 0;
}

int run_family(const std::string& name, int order, bool audit, double tol) {
  const FamilySpec spec{family_from_name(name), order};
  const Graph g = make(spec);
  std::cout << family_name(spec.family) << "(" << order << "): " << emit_graph6(g) << " edges=" << g.edge_count()
            << "\n";
  const FiedlerData f = algebraic_connectivity(g);
  const FiedlerData fb = algebraic_connectivity(complement(g));
  std::cout << "lambda = " << fmt(f.lambda2) << ", lambda_bar = " << fmt(fb.lambda2)
            << ", max = " << fmt(std::max(f.lambda2, fb.lambda2)) << "\n";
  if (spec.family == Family::Remark)
    std::cout << "closed form = " << fmt(remark_lambda(order)) << "\n";
  if (!audit) return 0;
  const AuditOutcome out = audit_one(g, 0, "family", tol);
  std::cout << out.text << "\n";
  return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral audits of the algebraic connectivity of a graph and its complement"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  double tol = kAuditTol;
  int threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol, "audit tolerance")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (results are thread-count invariant)")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized helpers")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "audit graphs from a file");
  std::string audit_file, audit_format = "graph6", audit_json;
  audit->add_option("file", audit_file, "input file")->required();
  audit->add_option("--format", audit_format, "graph6|edges")->check(CLI::IsMember({"graph6", "edges"}));
  audit->add_option("--json", audit_json, "write one JSON document per graph");

  auto* enumerate = app.add_subcommand("enumerate", "audit every isomorphism class of one order");
  int order = 0;
  bool allow_long = false;
  std::string equality_out;
  enumerate->add_option("--order", order, "graph order")->required();
  enumerate->add_flag("--long", allow_long, "permit long-running orders 9 and 10");
  enumerate->add_option("--equality-out", equality_out, "write equality-case graph6 lines");

  auto* spectrum = app.add_subcommand("spectrum", "print Laplacian eigenvalues as CSV");
  std::string spectrum_file, spectrum_format = "graph6";
  spectrum->add_option("file", spectrum_file, "input file")->required();
  spectrum->add_option("--format", spectrum_format, "graph6|edges")->check(CLI::IsMember({"graph6", "edges"}));

  auto* resistance = app.add_subcommand("resistance", "effective resistance of a vertex pair");
  std::string resistance_file, resistance_format = "graph6", pair_text;
  resistance->add_option("file", resistance_file, "input file")->required();
  resistance->add_option("--format", resistance_format, "graph6|edges")->check(CLI::IsMember({"graph6", "edges"}));
  resistance->add_option("--pair", pair_text, "vertex pair r,s")->required();

  auto* family = app.add_subcommand("family", "construct a named family member");
  std::string family_name_text;
  int family_order = 0;
  bool family_audit = false;
  family->add_option("--name", family_name_text, "path|cycle|complete|star|empty|remark")->required();
  family->add_option("--order", family_order, "graph order")->required();
  family->add_flag("--audit", family_audit, "audit the constructed graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*audit) return run_audit(audit_file, audit_format, audit_json, tol, threads);
    if (*enumerate) return run_enumerate(order, allow_long, equality_out, tol, threads);
    if (*spectrum) return run_spectrum(spectrum_file, spectrum_format);
    if (*resistance) return run_resistance(resistance_file, resistance_format, pair_text);
    if (*family) return run_family(family_name_text, family_order, family_audit, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
