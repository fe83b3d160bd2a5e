#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/spectra.hpp"

namespace speclap {

inline constexpr double kAuditTol = 1e-7;

enum class CaseTag {
  TrivialN2,
  Disconnected,
  ComplementDisconnected,
  Step1GapBelowOne,
  LambdaAtLeastOne,
  DistanceAtMost2,
  DistanceAbove3,
  Distance3,
};

const char* case_tag_name(CaseTag tag);

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* check_status_name(CheckStatus s);

// One verified inequality: measured >= bound, slack = measured - bound.
struct Check {
  std::string name;
  double bound = 0.0;
  double measured = 0.0;
  double slack = 0.0;
  CheckStatus status = CheckStatus::NotApplicable;
};

Check make_check(std::string name, double bound, double measured, double tol);
Check not_applicable(std::string name);

// Combinatorial state of the distance-3 case: the extreme pair, the
// matched system of three-edge paths, and the induced vertex partition
// {A, B, C, S1, S2, {v1, v2}}. S2 holds the matched neighbors of v1 and
// S1 the matched neighbors of v2; A are the remaining neighbors of v1, B
// those of v2. Labels are swapped when needed so that |A| <= |B|.
struct CaseData {
  int v1 = 0;
  int v2 = 0;
  double gap = 0.0;
  int distance = 0;
  int s = 0;
  std::vector<std::pair<int, int>> matching;  // (u in N(v1), w in N(v2))
  std::vector<int> S1, S2, A, B, C;
  int a = 0, b = 0, c = 0;
  int l = 0;
  bool labels_swapped = false;
};

struct EqualityWitness {
  bool flag = false;          // |lambda + lambda_bar - 1| <= tol
  bool structural = false;    // the cone-over-disconnected shape is present
  int vertex = -1;            // dominating vertex of the witness, if any
  bool on_complement = false; // witness found in the complement
};

struct Certificate {
  CaseTag tag = CaseTag::TrivialN2;
  int n = 0;
  bool oriented_to_complement = false;  // complement carried the wider Fiedler gap
  double lambda = 0.0;      // lambda2 of the input graph
  double lambda_bar = 0.0;  // lambda2 of its complement
  double sum = 0.0;
  std::optional<CaseData> case_data;
  std::vector<Check> checks;
  EqualityWitness equality;

  bool all_pass() const;
};

// Star covers and pair sums of the distance-3 analysis evaluated on the
// complement's Fiedler vector.
struct DeepCheckReport {
  int center1 = 0;                 // H1 center (v1); H2 and H3 share center v2
  std::vector<int> h1_leaves, h2_leaves, h3_leaves;
  std::size_t x_pair_count = 0;    // pairs kept in the cover inequality
  double cover_lhs = 0.0, cover_rhs = 0.0;          // weighted stars vs X pairs
  double paths_lhs = 0.0, paths_rhs = 0.0;          // S1 x S2 pairs vs path splits
  double fan_a_lhs = 0.0, fan_a_rhs = 0.0;          // S1 against A_i
  double fan_b_lhs = 0.0, fan_b_rhs = 0.0;          // S2 against B_i
  double aggregate_lhs = 0.0, aggregate_rhs = 0.0;  // all pairs vs (n+2+3s^2+6sl) * complement edges
  std::vector<int> a_i_sizes, b_i_sizes;            // all at most l
  double big_m = 0.0;  // max over pairs of max{(x_i-x_j)^2, (y_i-y_j)^2}
};

// (lambda_bar of the complement, equality flag). Requires g disconnected.
std::pair<double, bool> lemma_disconnected_check(const Graph& g);

struct IdentityCheckResult {
  double lhs = 0.0;    // sum (x_i-x_j)^2 (y_i-y_j)^2 over pairs
  double rhs = 0.0;    // |x|^2 |y|^2
  double slack = 0.0;
  double expansion_rel_err = 0.0;  // against n*sum x^2y^2 + |x|^2|y|^2 + 2(x.y)^2
};

// Requires zero-sum inputs of equal length.
IdentityCheckResult lemma_identity_check(std::span<const double> x, std::span<const double> y);

struct DiameterLemmaResult {
  int extreme_distance = 0;
  double lambda = 0.0;
  bool implication_holds = false;  // extreme distance <= 2 implies lambda >= 1 - tol
  bool corollary_holds = false;    // diameter < 3 implies lambda >= 1 - tol
};

DiameterLemmaResult lemma_diameter_check(const Graph& g, double tol = kAuditTol);

// Worst slack of the neighbor value bounds x_i >= (1-lambda) x[v_max] over
// i ~ v_max and x_j <= (1-lambda) x[v_min] over j ~ v_min.
double neighbor_bound_check(const Graph& g, const FiedlerData& f);

struct Step1Bound {
  double minsum = 0.0;  // sum of pairwise min squared gaps
  double big_m = 0.0;   // squared max gap over both vectors
  double inv_m = 0.0;
};

Step1Bound step1_bound(const FiedlerData& x, const FiedlerData& y);

// Maximum family of internally-vertex-disjoint three-edge paths between
// v1 and v2, realized as a maximum bipartite matching between N(v1) and
// N(v2). Requires distance(v1, v2) == 3. Deterministic: augmenting paths
// in ascending vertex order over sorted adjacency.
std::pair<int, std::vector<std::pair<int, int>>> disjoint_length3_paths(const Graph& g, int v1, int v2);

// Requires the extreme pair of f at distance 3 in g.
CaseData build_case_data(const Graph& g, const FiedlerData& f);

double eq8_bound(int n, int s, int l);   // n / (n + 2 + 3s^2 + 6sl)
double eq10_bound(int n, int s, int l);  // eq8 + conductance lower bound

DeepCheckReport deep_check_step22(const Graph& g, const FiedlerData& f, const FiedlerData& f_comp,
                                  const CaseData& cd);

struct JoinWitness {
  bool flag = false;
  int vertex = -1;
};

// True iff some vertex is adjacent to all others and its removal leaves a
// disconnected graph.
JoinWitness is_join_of_cone_and_disconnected(const Graph& g);

// Routes g through the case analysis and verifies every inequality along
// the chosen route. Requires n >= 2.
Certificate audit_theorem1(const Graph& g, double tol = kAuditTol);

struct Theorem2Report {
  bool in_case = false;
  std::string out_of_case_reason;  // empty when in case
  double lambda_max = 0.0;         // max{lambda, lambda_bar}
  double floor = 0.0;              // 1 - 110 n^{-1/3}, may be vacuous
  std::vector<Check> checks;
  std::optional<CaseData> case_data;

  bool all_pass() const;
};

Theorem2Report audit_theorem2(const Graph& g, double tol = kAuditTol);

double theorem2_floor(int n);

// Minimum over the collection of max{lambda, lambda_bar}; all graphs must
// share one order. Throws on an empty collection.
double minmax_report(std::span<const Graph> graphs);

}  // namespace speclap
