#include "speclap/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "speclap/kernels.hpp"
#include "speclap/resistance.hpp"

namespace speclap {

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::TrivialN2: return "Trivial-n2";
    case CaseTag::Disconnected: return "Disconnected";
    case CaseTag::ComplementDisconnected: return "ComplementDisconnected";
    case CaseTag::Step1GapBelowOne: return "Step1-GapBelowOne";
    case CaseTag::LambdaAtLeastOne: return "LambdaAtLeastOne";
    case CaseTag::DistanceAtMost2: return "DistanceAtMost2";
    case CaseTag::DistanceAbove3: return "DistanceAbove3";
    case CaseTag::Distance3: return "Distance3";
  }
  return "?";
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

Check make_check(std::string name, double bound, double measured, double tol) {
  Check c;
  c.name = std::move(name);
  c.bound = bound;
  c.measured = measured;
  c.slack = measured - bound;
  c.status = c.slack >= -tol ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

Check not_applicable(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

bool Certificate::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

bool Theorem2Report::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::pair<double, bool> lemma_disconnected_check(const Graph& g) {
  if (is_connected(g)) throw std::invalid_argument("lemma requires a disconnected graph");
  const double lambda_bar = algebraic_connectivity(complement(g)).lambda2;
  return {lambda_bar, std::abs(lambda_bar - 1.0) <= kAuditTol};
}

IdentityCheckResult lemma_identity_check(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    scale = std::max({scale, std::abs(x[i]), std::abs(y[i])});
  }
  if (std::abs(sx) > 1e-8 * scale * static_cast<double>(n) || std::abs(sy) > 1e-8 * scale * static_cast<double>(n))
    throw std::invalid_argument("inputs must have zero sum");

  IdentityCheckResult out;
  out.lhs = kernels::product_pair_energy(x.data(), y.data(), n);
  const double nx = kernels::dot(x.data(), x.data(), n);
  const double ny = kernels::dot(y.data(), y.data(), n);
  out.rhs = nx * ny;
  out.slack = out.lhs - out.rhs;

  // exact expansion for zero-sum inputs:
  // sum_{i<j} (x_i-x_j)^2 (y_i-y_j)^2
  //   = n * sum_i x_i^2 y_i^2 + |x|^2 |y|^2 + 2 (sum_i x_i y_i)^2
  double sxxyy = 0.0;
  for (std::size_t i = 0; i < n; ++i) sxxyy += x[i] * x[i] * y[i] * y[i];
  const double sxy = kernels::dot(x.data(), y.data(), n);
  const double expansion = static_cast<double>(n) * sxxyy + nx * ny + 2.0 * sxy * sxy;
  out.expansion_rel_err = std::abs(out.lhs - expansion) / std::max(1.0, std::abs(expansion));
  return out;
}

DiameterLemmaResult lemma_diameter_check(const Graph& g, double tol) {
  if (!is_connected(g)) throw std::invalid_argument("lemma requires a connected graph");
  const FiedlerData f = algebraic_connectivity(g);
  DiameterLemmaResult out;
  out.lambda = f.lambda2;
  out.extreme_distance = distances(g, f.v_max)[f.v_min];
  out.implication_holds = out.extreme_distance > 2 || f.lambda2 >= 1.0 - tol;
  const std::optional<int> diam = diameter(g);
  out.corollary_holds = (diam && *diam >= 3) || f.lambda2 >= 1.0 - tol;
  return out;
}

double neighbor_bound_check(const Graph& g, const FiedlerData& f) {
  const double lambda = f.lambda2;
  double worst = std::numeric_limits<double>::infinity();
  for (int i : g.neighbors(f.v_max)) worst = std::min(worst, f.vector[i] - (1.0 - lambda) * f.vector[f.v_max]);
  for (int j : g.neighbors(f.v_min)) worst = std::min(worst, (1.0 - lambda) * f.vector[f.v_min] - f.vector[j]);
  return worst;
}

Step1Bound step1_bound(const FiedlerData& x, const FiedlerData& y) {
  Step1Bound out;
  out.minsum = kernels::min_pair_energy(x.vector.data(), y.vector.data(), x.vector.size());
  const double widest = std::max(x.gap, y.gap);
  out.big_m = widest * widest;
  out.inv_m = 1.0 / out.big_m;
  return out;
}

std::pair<int, std::vector<std::pair<int, int>>> disjoint_length3_paths(const Graph& g, int v1, int v2) {
  if (v1 < 0 || v2 < 0 || v1 >= g.order() || v2 >= g.order())
    throw std::invalid_argument("vertex out of range");
  if (distances(g, v1)[v2] != 3) throw std::invalid_argument("extreme pair must be at distance 3");

  const std::vector<int> left = g.neighbors(v1);
  const std::vector<int> right = g.neighbors(v2);
  std::vector<int> match_at_right(right.size(), -1);  // index into left

  std::vector<char> visited;
  auto augment = [&](auto&& self, int li) -> bool {
    for (std::size_t rj = 0; rj < right.size(); ++rj) {
      if (visited[rj] || !g.adjacent(left[li], right[rj])) continue;
      visited[rj] = 1;
      if (match_at_right[rj] < 0 || self(self, match_at_right[rj])) {
        match_at_right[rj] = li;
        return true;
      }
    }
    return false;
  };

  int s = 0;
  for (std::size_t li = 0; li < left.size(); ++li) {
    visited.assign(right.size(), 0);
    if (augment(augment, static_cast<int>(li))) ++s;
  }

  std::vector<std::pair<int, int>> matching;
  for (std::size_t rj = 0; rj < right.size(); ++rj)
    if (match_at_right[rj] >= 0) matching.emplace_back(left[match_at_right[rj]], right[rj]);
  std::sort(matching.begin(), matching.end());
  return {s, matching};
}

CaseData build_case_data(const Graph& g, const FiedlerData& f) {
  const int n = g.order();
  CaseData cd;
  cd.v1 = f.v_max;
  cd.v2 = f.v_min;
  cd.gap = f.gap;
  cd.distance = distances(g, cd.v1)[cd.v2];
  if (cd.distance != 3) throw std::invalid_argument("case data requires extreme distance 3");

  auto [s, matching] = disjoint_length3_paths(g, cd.v1, cd.v2);
  cd.s = s;
  cd.matching = std::move(matching);

  std::vector<char> in_s(n, 0);
  for (const auto& [u, w] : cd.matching) {
    cd.S2.push_back(u);
    cd.S1.push_back(w);
    in_s[u] = 1;
    in_s[w] = 1;
  }
  std::sort(cd.S1.begin(), cd.S1.end());
  std::sort(cd.S2.begin(), cd.S2.end());
  in_s[cd.v1] = 1;
  in_s[cd.v2] = 1;

  for (int u : g.neighbors(cd.v1))
    if (!in_s[u]) cd.A.push_back(u);
  for (int w : g.neighbors(cd.v2))
    if (!in_s[w]) cd.B.push_back(w);

  std::vector<char> in_ab(n, 0);
  for (int u : cd.A) in_ab[u] = 1;
  for (int w : cd.B) in_ab[w] = 1;
  for (int v = 0; v < n; ++v)
    if (!in_s[v] && !in_ab[v]) cd.C.push_back(v);

  cd.a = static_cast<int>(cd.A.size());
  cd.b = static_cast<int>(cd.B.size());
  cd.c = static_cast<int>(cd.C.size());
  if (n != cd.a + cd.b + cd.c + 2 * cd.s + 2)
    throw std::logic_error("partition counts do not cover the vertex set");

  if (cd.a > cd.b) {
    std::swap(cd.v1, cd.v2);
    std::swap(cd.S1, cd.S2);
    std::swap(cd.A, cd.B);
    std::swap(cd.a, cd.b);
    for (auto& [u, w] : cd.matching) std::swap(u, w);
    std::sort(cd.matching.begin(), cd.matching.end());
    cd.labels_swapped = true;
  }

  // validity of the maximal path system: no edge may leave A u {v1}
  // toward B u {v2}
  auto side_a = cd.A;
  side_a.push_back(cd.v1);
  auto side_b = cd.B;
  side_b.push_back(cd.v2);
  for (int u : side_a)
    for (int w : side_b)
      if (g.adjacent(u, w)) throw std::logic_error("A-side vertex adjacent to B-side vertex");

  cd.l = 0;
  for (int w : cd.S1) {
    int count = 0;
    for (int u : cd.A)
      if (g.adjacent(w, u)) ++count;
    cd.l = std::max(cd.l, count);
  }
  for (int u : cd.S2) {
    int count = 0;
    for (int w : cd.B)
      if (g.adjacent(u, w)) ++count;
    cd.l = std::max(cd.l, count);
  }
  return cd;
}

double eq8_bound(int n, int s, int l) {
  if (n < 2 || s < 1 || l < 0) throw std::invalid_argument("need n >= 2, s >= 1, l >= 0");
  return static_cast<double>(n) / (n + 2 + 3 * s * s + 6 * s * l);
}

double eq10_bound(int n, int s, int l) { return eq8_bound(n, s, l) + conductance_lower_bound(s, l); }

namespace {

double star_energy(std::span<const double> y, int center, const std::vector<int>& leaves) {
  double acc = 0.0;
  for (int leaf : leaves) {
    const double d = y[center] - y[leaf];
    acc += d * d;
  }
  return acc;
}

}  // namespace

DeepCheckReport deep_check_step22(const Graph& g, const FiedlerData& f, const FiedlerData& f_comp,
                                  const CaseData& cd) {
  const int n = g.order();
  const std::vector<double>& y = f_comp.vector;
  DeepCheckReport rep;

  enum Cls : int { kV1, kV2, kS1, kS2, kA, kB, kC };
  std::vector<int> cls(n, kC);
  cls[cd.v1] = kV1;
  cls[cd.v2] = kV2;
  for (int v : cd.S1) cls[v] = kS1;
  for (int v : cd.S2) cls[v] = kS2;
  for (int v : cd.A) cls[v] = kA;
  for (int v : cd.B) cls[v] = kB;

  rep.center1 = cd.v1;
  rep.h1_leaves.push_back(cd.v2);
  for (int v : cd.B) rep.h1_leaves.push_back(v);
  for (int v : cd.C) rep.h1_leaves.push_back(v);
  for (int v : cd.S1) rep.h1_leaves.push_back(v);
  std::sort(rep.h1_leaves.begin(), rep.h1_leaves.end());

  for (int v : cd.A) rep.h2_leaves.push_back(v);
  for (int v : cd.C) rep.h2_leaves.push_back(v);
  for (int v : cd.S2) rep.h2_leaves.push_back(v);
  std::sort(rep.h2_leaves.begin(), rep.h2_leaves.end());

  rep.h3_leaves.push_back(cd.v1);
  for (int v : cd.A) rep.h3_leaves.push_back(v);
  for (int v : cd.S2) rep.h3_leaves.push_back(v);
  std::sort(rep.h3_leaves.begin(), rep.h3_leaves.end());

  for (int leaf : rep.h1_leaves)
    if (g.adjacent(cd.v1, leaf)) throw std::logic_error("H1 leaf adjacent to v1 in the graph");
  for (int leaf : rep.h2_leaves)
    if (g.adjacent(cd.v2, leaf)) throw std::logic_error("H2 leaf adjacent to v2 in the graph");
  for (int leaf : rep.h3_leaves)
    if (g.adjacent(cd.v2, leaf)) throw std::logic_error("H3 leaf adjacent to v2 in the graph");

  const double e1 = star_energy(y, cd.v1, rep.h1_leaves);
  const double e2 = star_energy(y, cd.v2, rep.h2_leaves);
  const double e3 = star_energy(y, cd.v2, rep.h3_leaves);
  const double s = cd.s;
  rep.cover_lhs = (cd.c + cd.b + cd.s + 2) * e1 + (cd.c + cd.a + cd.s + 1) * e2 + (cd.a + cd.s + 2) * e3;

  auto excluded = [](int ci, int cj) {
    if (ci > cj) std::swap(ci, cj);
    return (ci == kS1 && cj == kS2) || (ci == kS1 && cj == kA) || (ci == kS2 && cj == kB) ||
           (ci == kA && cj == kB);
  };
  rep.cover_rhs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (excluded(cls[i], cls[j])) continue;
      const double d = y[i] - y[j];
      rep.cover_rhs += d * d;
      ++rep.x_pair_count;
    }
  }

  const double gap12 = y[cd.v1] - y[cd.v2];
  double s1_to_v1 = 0.0;
  for (int w : cd.S1) {
    const double d = y[cd.v1] - y[w];
    s1_to_v1 += d * d;
  }
  double s2_to_v2 = 0.0;
  for (int u : cd.S2) {
    const double d = y[cd.v2] - y[u];
    s2_to_v2 += d * d;
  }
  rep.paths_lhs = 0.0;
  for (int w : cd.S1)
    for (int u : cd.S2) {
      const double d = y[w] - y[u];
      rep.paths_lhs += d * d;
    }
  rep.paths_rhs = 3.0 * s * s1_to_v1 + 3.0 * s * s2_to_v2 + 3.0 * s * s * gap12 * gap12;

  double a_to_v2 = 0.0;
  for (int v : cd.A) {
    const double d = y[cd.v2] - y[v];
    a_to_v2 += d * d;
  }
  double b_to_v1 = 0.0;
  for (int v : cd.B) {
    const double d = y[cd.v1] - y[v];
    b_to_v1 += d * d;
  }

  rep.fan_a_lhs = 0.0;
  for (int w : cd.S1) {
    int size = 0;
    for (int v : cd.A) {
      if (!g.adjacent(w, v)) continue;
      ++size;
      const double d = y[w] - y[v];
      rep.fan_a_lhs += d * d;
    }
    if (size > cd.l) throw std::logic_error("A_i larger than l");
    rep.a_i_sizes.push_back(size);
  }
  rep.fan_a_rhs = 3.0 * s * cd.l * (s1_to_v1 + a_to_v2 + gap12 * gap12);

  rep.fan_b_lhs = 0.0;
  for (int u : cd.S2) {
    int size = 0;
    for (int v : cd.B) {
      if (!g.adjacent(u, v)) continue;
      ++size;
      const double d = y[u] - y[v];
      rep.fan_b_lhs += d * d;
    }
    if (size > cd.l) throw std::logic_error("B_i larger than l");
    rep.b_i_sizes.push_back(size);
  }
  rep.fan_b_rhs = 3.0 * s * cd.l * (s2_to_v2 + b_to_v1 + gap12 * gap12);

  rep.aggregate_lhs = pair_energy(y);
  rep.aggregate_rhs =
      (n + 2 + 3 * cd.s * cd.s + 6 * cd.s * cd.l) * edge_energy(complement(g), y);

  const double widest = std::max(f.gap, f_comp.gap);
  rep.big_m = widest * widest;
  return rep;
}

JoinWitness is_join_of_cone_and_disconnected(const Graph& g) {
  const int n = g.order();
  if (n < 2) return {};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) continue;
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < n; ++i) {
      if (i == v) continue;
      for (int j = i + 1; j < n; ++j) {
        if (j == v) continue;
        if (g.adjacent(i, j)) rest.emplace_back(i - (i > v), j - (j > v));
      }
    }
    if (!is_connected(Graph::from_edges(n - 1, rest))) return {true, v};
  }
  return {};
}

namespace {

void append_chain_checks(Certificate& cert, const FiedlerData& fx, const FiedlerData& fy, double tol) {
  const IdentityCheckResult id = lemma_identity_check(fx.vector, fy.vector);
  const Step1Bound sb = step1_bound(fx, fy);
  cert.checks.push_back(make_check("identity_pair_product_ge_norms", id.rhs, id.lhs, tol));
  cert.checks.push_back(make_check("minsum_times_M_ge_pair_product", id.lhs, sb.minsum * sb.big_m, tol));
  cert.checks.push_back(make_check("sum_ge_minsum", sb.minsum, cert.sum, tol));
  cert.checks.push_back(make_check("sum_ge_inv_M", sb.inv_m, cert.sum, tol));
}

void append_equality_checks(Certificate& cert, const Graph& g, const Graph& gbar, double tol) {
  cert.checks.push_back(make_check("sum_ge_one", 1.0, cert.sum, tol));
  cert.equality.flag = std::abs(cert.sum - 1.0) <= tol;
  const JoinWitness wg = is_join_of_cone_and_disconnected(g);
  const JoinWitness wb = is_join_of_cone_and_disconnected(gbar);
  cert.equality.structural = wg.flag || wb.flag;
  if (wg.flag) {
    cert.equality.vertex = wg.vertex;
    cert.equality.on_complement = false;
  } else if (wb.flag) {
    cert.equality.vertex = wb.vertex;
    cert.equality.on_complement = true;
  }
  Check agree;
  agree.name = "equality_iff_cone_structure";
  agree.bound = 1.0;
  agree.measured = cert.equality.flag == cert.equality.structural ? 1.0 : 0.0;
  agree.slack = agree.measured - agree.bound;
  agree.status = cert.equality.flag == cert.equality.structural ? CheckStatus::Pass : CheckStatus::Fail;
  cert.checks.push_back(agree);
}

}  // namespace

Certificate audit_theorem1(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("theorem audit needs order >= 2");

  const Graph gbar = complement(g);
  const Spectrum spec_g = eigen_symmetric(laplacian(g));
  const Spectrum spec_b = eigen_symmetric(laplacian(gbar));
  const FiedlerData f_g = fiedler_from_spectrum(g, spec_g);
  const FiedlerData f_b = fiedler_from_spectrum(gbar, spec_b);

  Certificate cert;
  cert.n = n;
  cert.lambda = f_g.lambda2;
  cert.lambda_bar = f_b.lambda2;
  cert.sum = cert.lambda + cert.lambda_bar;

  const bool conn_g = is_connected(g);
  const bool conn_b = is_connected(gbar);

  if (n == 2) {
    cert.tag = CaseTag::TrivialN2;
  } else if (!conn_g) {
    cert.tag = CaseTag::Disconnected;
    cert.checks.push_back(make_check("complement_lambda_ge_one", 1.0, cert.lambda_bar, tol));
  } else if (!conn_b) {
    cert.tag = CaseTag::ComplementDisconnected;
    cert.checks.push_back(make_check("lambda_ge_one", 1.0, cert.lambda, tol));
  } else {
    cert.oriented_to_complement = f_b.gap > f_g.gap;
    const Graph& carrier = cert.oriented_to_complement ? gbar : g;
    const Graph& other = cert.oriented_to_complement ? g : gbar;
    const Spectrum& spec_carrier = cert.oriented_to_complement ? spec_b : spec_g;
    const FiedlerData& fx = cert.oriented_to_complement ? f_b : f_g;
    const FiedlerData& fy = cert.oriented_to_complement ? f_g : f_b;

    if (fx.gap < 1.0) {
      cert.tag = CaseTag::Step1GapBelowOne;
      const Step1Bound sb = step1_bound(fx, fy);
      cert.checks.push_back(make_check("inv_M_gt_one", 1.0, sb.inv_m, tol));
    } else if (fx.lambda2 >= 1.0 || fy.lambda2 >= 1.0) {
      cert.tag = CaseTag::LambdaAtLeastOne;
      cert.checks.push_back(make_check("max_lambda_ge_one", 1.0, std::max(fx.lambda2, fy.lambda2), tol));
    } else {
      const int d = distances(carrier, fx.v_max)[fx.v_min];
      if (d <= 2) {
        cert.tag = CaseTag::DistanceAtMost2;
        cert.checks.push_back(make_check("extreme_distance_le_2_implies_lambda_ge_one", 1.0, fx.lambda2, tol));
        cert.checks.push_back(make_check("neighbor_value_bound", 0.0, neighbor_bound_check(carrier, fx), tol));
      } else if (d > 3) {
        cert.tag = CaseTag::DistanceAbove3;
        const std::optional<int> dia = diameter(other);
        cert.checks.push_back(make_check("complement_diameter_le_two", 0.0, dia ? 2.0 - *dia : -1.0, tol));
        cert.checks.push_back(make_check("complement_lambda_ge_one", 1.0, fy.lambda2, tol));
      } else {
        cert.tag = CaseTag::Distance3;
        CaseData cd = build_case_data(carrier, fx);
        const double resistance = resistance_entry(spec_carrier, cd.v1, cd.v2);
        const double gap2 = fx.gap * fx.gap;
        cert.checks.push_back(make_check("lambda_ge_gap2_over_R", gap2 / resistance, fx.lambda2, tol));
        cert.checks.push_back(
            make_check("inv_R_ge_conductance_bound", conductance_lower_bound(cd.s, cd.l), 1.0 / resistance, tol));
        cert.checks.push_back(make_check("eq8_complement_floor", eq8_bound(n, cd.s, cd.l), fy.lambda2, tol));
        cert.checks.push_back(make_check("eq10_sum_floor", eq10_bound(n, cd.s, cd.l), cert.sum, tol));
        if (cd.s >= 3) {
          cert.checks.push_back(make_check("s_ge_3_implies_lambda_ge_one", 1.0, fx.lambda2, tol));
        } else {
          cert.checks.push_back(not_applicable("s_ge_3_implies_lambda_ge_one"));
        }
        cert.checks.push_back(make_check("neighbor_value_bound", 0.0, neighbor_bound_check(carrier, fx), tol));

        const DeepCheckReport deep = deep_check_step22(carrier, fx, fy, cd);
        cert.checks.push_back(make_check("star_cover_dominates_x_pairs", deep.cover_rhs, deep.cover_lhs, tol));
        cert.checks.push_back(make_check("path_split_bounds_s1xs2", deep.paths_lhs, deep.paths_rhs, tol));
        cert.checks.push_back(make_check("fan_split_bounds_s1xA", deep.fan_a_lhs, deep.fan_a_rhs, tol));
        cert.checks.push_back(make_check("fan_split_bounds_s2xB", deep.fan_b_lhs, deep.fan_b_rhs, tol));
        cert.checks.push_back(make_check("aggregate_pair_bound", deep.aggregate_lhs, deep.aggregate_rhs, tol));
        cert.case_data = std::move(cd);
      }
    }
    append_chain_checks(cert, fx, fy, tol);
  }

  append_equality_checks(cert, g, gbar, tol);
  return cert;
}

double theorem2_floor(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  return 1.0 - 110.0 / std::cbrt(static_cast<double>(n));
}

Theorem2Report audit_theorem2(const Graph& g, double tol) {
  const int n = g.order();
  Theorem2Report rep;
  rep.floor = n >= 1 ? theorem2_floor(n) : 0.0;
  if (n < 2) {
    rep.out_of_case_reason = "order_below_2";
    return rep;
  }

  const Graph gbar = complement(g);
  const FiedlerData f_g = algebraic_connectivity(g);
  const FiedlerData f_b = algebraic_connectivity(gbar);
  rep.lambda_max = std::max(f_g.lambda2, f_b.lambda2);

  if (!is_connected(g) || !is_connected(gbar)) {
    rep.out_of_case_reason = "graph_or_complement_disconnected";
    return rep;
  }
  const bool to_comp = f_b.gap > f_g.gap;
  const Graph& carrier = to_comp ? gbar : g;
  const FiedlerData& fx = to_comp ? f_b : f_g;
  const FiedlerData& fy = to_comp ? f_g : f_b;
  if (fx.gap * fx.gap < 0.5) {
    rep.out_of_case_reason = "gap_squared_below_half";
    return rep;
  }
  if (fx.lambda2 >= 1.0 || fy.lambda2 >= 1.0) {
    rep.out_of_case_reason = "some_lambda_at_least_one";
    return rep;
  }
  if (distances(carrier, fx.v_max)[fx.v_min] != 3) {
    rep.out_of_case_reason = "extreme_distance_not_3";
    return rep;
  }

  rep.in_case = true;
  CaseData cd = build_case_data(carrier, fx);
  rep.checks.push_back(make_check("s_le_5", 0.0, 5.0 - cd.s, tol));
  rep.checks.push_back(
      make_check("lambda_ge_one_minus_2_over_sqrt_l_plus_1", 1.0 - 2.0 / std::sqrt(cd.l + 1.0), fx.lambda2, tol));
  rep.checks.push_back(
      make_check("complement_floor_n_over_n_plus_80_plus_30l", static_cast<double>(n) / (n + 80 + 30 * cd.l),
                 fy.lambda2, tol));
  rep.case_data = std::move(cd);
  return rep;
}

double minmax_report(std::span<const Graph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("empty collection");
  const int n = graphs.front().order();
  double best = std::numeric_limits<double>::infinity();
  for (const Graph& g : graphs) {
    if (g.order() != n) throw std::invalid_argument("graphs must share one order");
    const double lam = algebraic_connectivity(g).lambda2;
    const double lam_bar = algebraic_connectivity(complement(g)).lambda2;
    best = std::min(best, std::max(lam, lam_bar));
  }
  return best;
}

}  // namespace speclap
