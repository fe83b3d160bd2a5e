// Acceptance suite. Runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion; exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "speclap/certificates.hpp"
#include "speclap/enumeration.hpp"
#include "speclap/families.hpp"
#include "speclap/io.hpp"
#include "speclap/resistance.hpp"
#include "speclap/spectra.hpp"

using namespace speclap;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", number, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SPECLAP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

}  // namespace

int main() {
  constexpr double kTol = 1e-7;
  const std::map<int, std::uint64_t> known_counts{{2, 2},   {3, 4},    {4, 11},   {5, 34},
                                                  {6, 156}, {7, 1044}, {8, 12346}};

  // ---- criterion 1 (and inputs for 4, 5): exhaustive audits, orders 2..8
  std::map<int, EnumReport> reports;
  bool c1 = true;
  std::string c1_detail;
  double small_orders_seconds = 0.0;
  for (int n = 2; n <= 8; ++n) {
    reports[n] = exhaustive_audit(n, kTol, 2);
    const EnumReport& r = reports[n];
    if (n <= 7) small_orders_seconds += r.wall_seconds;
    const bool ok = r.violations.empty() && r.min_sum >= 1.0 - 1e-7 && r.graph_count == known_counts.at(n);
    if (!ok) {
      c1 = false;
      c1_detail += "order " + std::to_string(n) + " violated; ";
    }
  }
  c1 = c1 && small_orders_seconds < 10.0 && reports[8].wall_seconds < 300.0;
  {
    std::ostringstream d;
    d << "orders 2..8 exhaustive, zero violations, equality set structural; orders<=7 in "
      << fmt(small_orders_seconds) << "s, order 8 in " << fmt(reports[8].wall_seconds) << "s; " << c1_detail;
    report(1, c1, d.str());
  }

  // ---- criterion 2: stars hit the equality case
  bool c2 = true;
  double worst_star = 0.0;
  for (int n = 3; n <= 32; ++n) {
    const Certificate cert = audit_theorem1(make({Family::Star, n}), kTol);
    worst_star = std::max(worst_star, std::abs(cert.sum - 1.0));
    c2 = c2 && cert.all_pass() && cert.equality.flag && cert.equality.structural &&
         std::abs(cert.sum - 1.0) <= 1e-8;
  }
  report(2, c2, "stars n=3..32 give sum 1 within 1e-8 (worst |sum-1| = " + fmt(worst_star) + ")");

  // ---- criterion 3: the extremal family matches its closed form
  bool c3 = true;
  double worst_formula = 0.0, worst_pair = 0.0, largest_max = 0.0;
  for (int n = 4; n <= 64; ++n) {
    const Graph g = make({Family::Remark, n});
    const double lam = algebraic_connectivity(g).lambda2;
    const double lam_bar = algebraic_connectivity(complement(g)).lambda2;
    worst_formula = std::max(worst_formula, std::abs(lam - remark_lambda(n)));
    worst_pair = std::max(worst_pair, std::abs(lam - lam_bar));
    largest_max = std::max(largest_max, std::max(lam, lam_bar));
    c3 = c3 && std::abs(lam - remark_lambda(n)) <= 1e-8 && std::abs(lam_bar - remark_lambda(n)) <= 1e-8 &&
         std::max(lam, lam_bar) < 1.0;
  }
  c3 = c3 && std::abs(remark_lambda(4) - (2.0 - std::sqrt(2.0))) <= 1e-12;
  report(3, c3,
         "remark family n=4..64: |lambda - closed form| <= " + fmt(worst_formula) +
             ", |lambda - lambda_bar| <= " + fmt(worst_pair) + ", max < 1 (largest " + fmt(largest_max) + ")");

  // ---- criterion 4: empirical minima against the prior constant
  bool c4 = true;
  std::ostringstream c4_detail;
  for (int n = 2; n <= 8; ++n) {
    c4 = c4 && reports[n].c_n >= 0.4 - 1e-9;
    c4_detail << "c_" << n << "=" << fmt(reports[n].c_n) << " ";
  }
  c4 = c4 && std::abs(reports[4].c_n - (2.0 - std::sqrt(2.0))) <= 1e-8;
  report(4, c4, "all c_n >= 2/5 and c_4 = 2-sqrt(2): " + c4_detail.str());

  // ---- criterion 5: certificate soundness, exhaustive plus random
  bool c5 = true;
  std::size_t exhaustive_violations = 0;
  for (const auto& [n, r] : reports) exhaustive_violations += r.violations.size();
  c5 = exhaustive_violations == 0;
  int random_audited = 0;
  const double probs[3] = {0.2, 0.5, 0.8};
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + i % 31;
    const Graph g = random_graph(n, probs[i % 3], 424200 + i);
    const Certificate cert = audit_theorem1(g, kTol);
    const Theorem2Report t2 = audit_theorem2(g, kTol);
    c5 = c5 && cert.all_pass() && t2.all_pass() && cert.sum >= 1.0 - 1e-7;
    ++random_audited;
  }
  report(5, c5,
         "zero failed checks over " + std::to_string(reports[8].graph_count) +
             " order-8 classes (and orders 2..7) plus " + std::to_string(random_audited) + " random graphs");

  // ---- criterion 6a: eigensolver vs characteristic polynomial roots
  bool c6a = true;
  double worst_root = 0.0;
  for (int n = 1; n <= 5; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      const std::vector<long long> flat = oracles::laplacian_int(g);
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = flat[static_cast<std::size_t>(i) * n + j];
      const std::vector<double> roots = oracles::real_roots(oracles::char_poly(m));
      const Spectrum s = eigen_symmetric(laplacian(g));
      if (roots.size() != s.eigenvalues.size()) {
        c6a = false;
        return;
      }
      for (std::size_t k = 0; k < roots.size(); ++k) {
        worst_root = std::max(worst_root, std::abs(roots[k] - s.eigenvalues[k]));
        if (std::abs(roots[k] - s.eigenvalues[k]) > 1e-7) c6a = false;
      }
    });
  }

  // ---- criterion 6b: resistance, spectral formula vs variational solve
  bool c6b = true;
  double worst_res = 0.0;
  int connected7 = 0;
  for (int n = 2; n <= 7; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      ++connected7;
      const ResistanceMatrix rm = resistance_matrix(g);
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
          const double d = std::abs(rm.at(r, s) - resistance_variational_oracle(g, r, s));
          worst_res = std::max(worst_res, d);
          if (d > 1e-8) c6b = false;
        }
    });
  }

  // ---- criterion 6c: matching-based s vs exhaustive packing
  bool c6c = true;
  int distance3_cases = 0;
  for (int n = 2; n <= 7; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      const FiedlerData f = algebraic_connectivity(g);
      if (distances(g, f.v_max)[f.v_min] != 3) return;
      ++distance3_cases;
      if (disjoint_length3_paths(g, f.v_max, f.v_min).first !=
          oracles::brute_force_disjoint_path_count(g, f.v_max, f.v_min))
        c6c = false;
    });
  }
  report(6, c6a && c6b && c6c,
         "oracles: roots within " + fmt(worst_root) + " (n<=5); resistance within " + fmt(worst_res) + " over " +
             std::to_string(connected7) + " connected graphs (n<=7); s exact on " +
             std::to_string(distance3_cases) + " distance-3 extreme pairs");

  // ---- criterion 7: identity lemma at scale
  bool c7 = true;
  double worst_slack = 0.0, worst_rel = 0.0;
  std::mt19937_64 rng(777);
  for (int i = 0; i < 10000; ++i) {
    const int n = 2 + i % 63;
    const std::vector<double> x = oracles::random_zero_sum(n, rng);
    const std::vector<double> y = oracles::random_zero_sum(n, rng);
    const IdentityCheckResult r = lemma_identity_check(x, y);
    worst_slack = std::min(worst_slack, r.slack);
    worst_rel = std::max(worst_rel, r.expansion_rel_err);
    c7 = c7 && r.slack >= -1e-9 && r.expansion_rel_err <= 1e-8;
  }
  report(7, c7,
         "10000 zero-sum pairs: min slack " + fmt(worst_slack) + ", worst expansion error " + fmt(worst_rel));

  // ---- criterion 8: substituted asymptotic acceptance
  const bool c8 = c5 && c3;
  report(8, c8,
         "in-case intermediate inequalities (criterion 5) plus the witness family max < 1 for n=4..64 "
         "(criterion 3); the 1 - 110 n^(-1/3) floor itself is vacuous at these orders, e.g. floor(64) = " +
             fmt(theorem2_floor(64)));

  // ---- criterion 9: format fidelity and exit codes
  bool c9 = true;
  std::uint64_t order8 = 0;
  enumerate_graphs(8, [&](const Graph& g) {
    ++order8;
    const std::string line = emit_graph6(g);
    if (parse_graph6(line) != g || emit_graph6(parse_graph6(line)) != line) c9 = false;
  });
  c9 = c9 && order8 == 12346;

  {
    std::ofstream star_file("/tmp/speclap_acc_star.g6", std::ios::binary);
    star_file << emit_graph6(make({Family::Star, 5})) << "\n";
  }
  const int code_pass = run_cli("audit /tmp/speclap_acc_star.g6");
  const int code_fail = run_cli("audit /tmp/speclap_acc_star.g6 --tol -0.001");
  const int code_usage = run_cli("audit /tmp/speclap_acc_star.g6 --no-such-flag");
  const int code_missing = run_cli("audit /tmp/speclap_acc_missing.g6");
  c9 = c9 && code_pass == 0 && code_fail == 1 && code_usage == 2 && code_missing == 2;
  report(9, c9,
         "graph6 round-trip byte-identical on " + std::to_string(order8) +
             " order-8 classes; cli exit codes pass/fail/usage = " + std::to_string(code_pass) + "/" +
             std::to_string(code_fail) + "/" + std::to_string(code_usage) + "," +
             std::to_string(code_missing));

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
