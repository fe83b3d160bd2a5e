#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace speclap::oracles {

namespace {

using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_add(Poly& a, const Poly& b, long long scale) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

// determinant of a matrix of polynomials by first-row expansion
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det{0};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Poly term = poly_mul(m[0][col], poly_det(minor));
    poly_add(det, term, (col % 2 == 0) ? 1 : -1);
  }
  return det;
}

int degree(const Poly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d > 0 && p[d] == 0) --d;
  return d;
}

double eval(const Poly& p, double x) {
  double acc = 0.0;
  for (int k = degree(p); k >= 0; --k) acc = acc * x + static_cast<double>(p[k]);
  return acc;
}

double eval_scale(const Poly& p, double x) {
  double acc = 0.0;
  const double ax = std::max(1.0, std::abs(x));
  double pw = 1.0;
  for (int k = 0; k <= degree(p); ++k) {
    acc += std::abs(static_cast<double>(p[k])) * pw;
    pw *= ax;
  }
  return std::max(acc, 1.0);
}

double bisect(const Poly& p, double lo, double hi) {
  double flo = eval(p, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = eval(p, mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<long long> laplacian_int(const Graph& g) {
  const int n = g.order();
  std::vector<long long> out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i) * n + i] = g.degree(i);
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j)) out[static_cast<std::size_t>(i) * n + j] = -1;
  }
  return out;
}

std::vector<long long> char_poly(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pm[i][j] = Poly{m[i][j]};
      if (i == j) pm[i][j].push_back(-1);  // entry - lambda on the diagonal
    }
  return poly_det(pm);
}

std::vector<double> real_roots(const Poly& poly) {
  const int deg = degree(poly);
  if (deg <= 0) return {};
  if (deg == 1) return {-static_cast<double>(poly[0]) / static_cast<double>(poly[1])};

  Poly dp(deg);
  for (int k = 1; k <= deg; ++k) dp[k - 1] = poly[k] * k;
  const std::vector<double> crit_all = real_roots(dp);

  // group equal critical points, keeping multiplicities
  std::vector<std::pair<double, int>> crit;
  for (double c : crit_all) {
    if (!crit.empty() && std::abs(c - crit.back().first) <= 1e-9) {
      ++crit.back().second;
    } else {
      crit.emplace_back(c, 1);
    }
  }

  double bound = 1.0;
  for (int k = 0; k < deg; ++k)
    bound = std::max(bound, std::abs(static_cast<double>(poly[k]) / static_cast<double>(poly[deg])));
  bound += 1.0;

  std::vector<double> roots;
  std::vector<double> pts{-bound};
  for (const auto& [c, mult] : crit) {
    if (std::abs(eval(poly, c)) <= 1e-8 * eval_scale(poly, c)) {
      for (int k = 0; k <= mult; ++k) roots.push_back(c);  // multiplicity in p' plus one
    }
    pts.push_back(c);
  }
  pts.push_back(bound);

  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double flo = eval(poly, pts[k]);
    const double fhi = eval(poly, pts[k + 1]);
    const double slo = std::abs(flo) <= 1e-8 * eval_scale(poly, pts[k]) ? 0.0 : flo;
    const double shi = std::abs(fhi) <= 1e-8 * eval_scale(poly, pts[k + 1]) ? 0.0 : fhi;
    if (slo == 0.0 || shi == 0.0) continue;  // endpoint roots already recorded
    if ((slo < 0.0) != (shi < 0.0)) roots.push_back(bisect(poly, pts[k], pts[k + 1]));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::uint64_t brute_force_canonical_bits(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int total = n * (n - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << (total - 1 - bit);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int brute_force_disjoint_path_count(const Graph& g, int v1, int v2) {
  const int n = g.order();
  struct PathPair {
    std::uint32_t mask;
  };
  std::vector<PathPair> paths;
  for (int a = 0; a < n; ++a) {
    if (a == v1 || a == v2 || !g.adjacent(v1, a)) continue;
    for (int b = 0; b < n; ++b) {
      if (b == v1 || b == v2 || b == a || !g.adjacent(a, b) || !g.adjacent(b, v2)) continue;
      paths.push_back({(1u << a) | (1u << b)});
    }
  }
  auto pack = [&](auto&& self, std::size_t idx, std::uint32_t used) -> int {
    int best = 0;
    for (std::size_t i = idx; i < paths.size(); ++i)
      if ((paths[i].mask & used) == 0)
        best = std::max(best, 1 + self(self, i + 1, used | paths[i].mask));
    return best;
  };
  return pack(pack, 0, 0);
}

std::vector<double> random_zero_sum(int n, std::mt19937_64& rng) {
  std::vector<double> x(n);
  while (true) {
    double sum = 0.0;
    for (double& e : x) {
      e = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;  // uniform [-1, 1)
      sum += e;
    }
    const double mean = sum / n;
    double norm2 = 0.0;
    for (double& e : x) {
      e -= mean;
      norm2 += e * e;
    }
    if (norm2 > 1e-12) return x;
  }
}

std::vector<double> random_unit_zero_sum(int n, std::mt19937_64& rng) {
  std::vector<double> x = random_zero_sum(n, rng);
  double norm2 = 0.0;
  for (double e : x) norm2 += e * e;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& e : x) e *= inv;
  return x;
}

}  // namespace speclap::oracles
