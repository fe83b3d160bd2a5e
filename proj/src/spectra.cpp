#include "speclap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "speclap/kernels.hpp"

namespace speclap {

SymMatrix laplacian(const Graph& g) {
  const int n = g.order();
  SymMatrix L(n);
  for (int i = 0; i < n; ++i) {
    L.set(i, i, static_cast<double>(g.degree(i)));
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) L.set(i, j, -1.0);
  }
  return L;
}

Spectrum eigen_symmetric(const SymMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("eigen tolerance must be positive");
  const int n = m.order();
  std::vector<double> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
  // vtr holds eigenvector candidates as rows (the transpose of the usual
  // accumulated V), so plane rotations touch contiguous memory.
  std::vector<double> vtr(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vtr[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto off_max = [&]() {
    double worst = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(a[static_cast<std::size_t>(p) * n + q]));
    return worst;
  };

  const double skip = tol * 0.01;
  constexpr int kMaxSweeps = 64;
  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_max() <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<std::size_t>(p) * n + q];
        if (std::abs(apq) <= skip) continue;
        const double app = a[static_cast<std::size_t>(p) * n + p];
        const double aqq = a[static_cast<std::size_t>(q) * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        double* rp = a.data() + static_cast<std::size_t>(p) * n;
        double* rq = a.data() + static_cast<std::size_t>(q) * n;
        kernels::rotate_pair(rp, rq, static_cast<std::size_t>(n), c, s);
        // restore the 2x2 block analytically, then mirror rows into columns
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0.0;
        rq[p] = 0.0;
        for (int k = 0; k < n; ++k) {
          a[static_cast<std::size_t>(k) * n + p] = rp[k];
          a[static_cast<std::size_t>(k) * n + q] = rq[k];
        }
        kernels::rotate_pair(vtr.data() + static_cast<std::size_t>(p) * n,
                             vtr.data() + static_cast<std::size_t>(q) * n, static_cast<std::size_t>(n), c, s);
      }
    }
  }
  if (!converged && off_max() > tol)
    throw EigenConvergenceError("jacobi sweep limit reached with off-diagonal " + std::to_string(off_max()));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[static_cast<std::size_t>(i) * n + i] < a[static_cast<std::size_t>(j) * n + j];
  });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    out.eigenvalues[k] = a[static_cast<std::size_t>(src) * n + src];
    std::copy_n(vtr.data() + static_cast<std::size_t>(src) * n, n, out.eigenvectors[k].begin());
  }

  double residual = 0.0;
  std::vector<double> r(n);
  for (int k = 0; k < n; ++k) {
    const std::vector<double>& v = out.eigenvectors[k];
    for (int i = 0; i < n; ++i)
      r[i] = kernels::dot(m.data() + static_cast<std::size_t>(i) * n, v.data(), static_cast<std::size_t>(n)) -
             out.eigenvalues[k] * v[i];
    residual = std::max(residual, std::sqrt(kernels::dot(r.data(), r.data(), static_cast<std::size_t>(n))));
  }
  out.residual_bound = residual;
  return out;
}

namespace {

// Zero-eigenspace vector for a disconnected graph: indicator of the
// component containing vertex 0, shifted to zero sum and normalized. An
// exact Laplacian kernel vector, so it is a valid eigenvector for
// lambda2 = 0 that stays orthogonal to the all-ones vector.
std::vector<double> component_fiedler(const Graph& g) {
  const int n = g.order();
  const std::vector<int> comp = component_of(g, 0);
  const double m = static_cast<double>(comp.size());
  std::vector<double> x(n, -m / n);
  for (int v : comp) x[v] = 1.0 - m / n;
  const double norm = std::sqrt(m * (n - m) / n);
  for (double& e : x) e /= norm;
  return x;
}

}  // namespace

FiedlerData algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs order >= 2");
  return fiedler_from_spectrum(g, eigen_symmetric(laplacian(g)));
}

FiedlerData fiedler_from_spectrum(const Graph& g, const Spectrum& spec) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("algebraic connectivity needs order >= 2");

  FiedlerData f;
  f.lambda2 = spec.eigenvalues[1];

  constexpr double kZeroEig = 1e-9;
  if (spec.eigenvalues[1] <= kZeroEig) {
    f.vector = component_fiedler(g);
  } else {
    f.vector = spec.eigenvectors[1];
    // remove any residual all-ones component and renormalize
    const double mean = std::accumulate(f.vector.begin(), f.vector.end(), 0.0) / n;
    for (double& e : f.vector) e -= mean;
    const double norm = std::sqrt(kernels::dot(f.vector.data(), f.vector.data(), f.vector.size()));
    for (double& e : f.vector) e /= norm;
  }

  f.v_max = 0;
  f.v_min = 0;
  for (int i = 1; i < n; ++i) {
    if (f.vector[i] > f.vector[f.v_max]) f.v_max = i;
    if (f.vector[i] < f.vector[f.v_min]) f.v_min = i;
  }
  f.gap = f.vector[f.v_max] - f.vector[f.v_min];
  return f;
}

double check_complement_duality(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("duality check needs order >= 2");
  const Spectrum sg = eigen_symmetric(laplacian(g));
  const Spectrum sc = eigen_symmetric(laplacian(complement(g)));
  double worst = 0.0;
  for (int k = 1; k < n; ++k)
    worst = std::max(worst, std::abs(sg.eigenvalues[k] + sc.eigenvalues[n - k] - n));
  return worst;
}

double edge_energy(const Graph& g, std::span<const double> z) {
  if (static_cast<int>(z.size()) != g.order()) throw std::invalid_argument("vector length must match order");
  double acc = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    for (int j : g.neighbors(i)) {
      if (j <= i) continue;
      const double d = z[i] - z[j];
      acc += d * d;
    }
  }
  return acc;
}

double pair_energy(std::span<const double> z) { return kernels::pair_energy(z.data(), z.size()); }

double fiedler_quotient_slack(const Graph& g, std::span<const double> z) {
  const FiedlerData f = algebraic_connectivity(g);
  return edge_energy(g, z) - f.lambda2 / g.order() * pair_energy(z);
}

}  // namespace speclap
