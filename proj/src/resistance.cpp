#include "speclap/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace speclap {

namespace {

constexpr double kZeroEig = 1e-9;

void require_connected_spectrum(const Spectrum& s) {
  int zeros = 0;
  for (double ev : s.eigenvalues)
    if (ev <= kZeroEig) ++zeros;
  if (zeros != 1) throw std::invalid_argument("effective resistance requires a connected graph");
}

}  // namespace

ResistanceMatrix resistance_matrix(const Graph& g, const Spectrum& spectrum) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("effective resistance needs order >= 2");
  require_connected_spectrum(spectrum);
  ResistanceMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        if (spectrum.eigenvalues[k] <= kZeroEig) continue;
        const double d = spectrum.eigenvectors[k][r] - spectrum.eigenvectors[k][s];
        acc += d * d / spectrum.eigenvalues[k];
      }
      out.set(r, s, acc);
    }
  }
  return out;
}

ResistanceMatrix resistance_matrix(const Graph& g) {
  return resistance_matrix(g, eigen_symmetric(laplacian(g)));
}

double resistance_entry(const Spectrum& spectrum, int r, int s) {
  require_connected_spectrum(spectrum);
  const int n = static_cast<int>(spectrum.eigenvalues.size());
  if (r < 0 || s < 0 || r >= n || s >= n || r == s) throw std::invalid_argument("bad vertex pair");
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    if (spectrum.eigenvalues[k] <= kZeroEig) continue;
    const double d = spectrum.eigenvectors[k][r] - spectrum.eigenvectors[k][s];
    acc += d * d / spectrum.eigenvalues[k];
  }
  return acc;
}

double resistance_variational_oracle(const Graph& g, int r, int s) {
  const int n = g.order();
  if (r < 0 || s < 0 || r >= n || s >= n || r == s) throw std::invalid_argument("bad vertex pair");
  if (!is_connected(g)) throw std::invalid_argument("effective resistance requires a connected graph");

  // Ground s: delete its row and column, solve L' w = e_r, read w at r.
  const SymMatrix L = laplacian(g);
  const int m = n - 1;
  auto reduced = [&](int i) { return i < s ? i : i + 1; };
  std::vector<double> a(static_cast<std::size_t>(m) * (m + 1), 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(i) * (m + 1) + j] = L.at(reduced(i), reduced(j));
    a[static_cast<std::size_t>(i) * (m + 1) + m] = (reduced(i) == r) ? 1.0 : 0.0;
  }

  // Gaussian elimination with partial pivoting on the augmented system.
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int i = col + 1; i < m; ++i)
      if (std::abs(a[static_cast<std::size_t>(i) * (m + 1) + col]) >
          std::abs(a[static_cast<std::size_t>(piv) * (m + 1) + col]))
        piv = i;
    if (std::abs(a[static_cast<std::size_t>(piv) * (m + 1) + col]) < 1e-12)
      throw std::runtime_error("grounded laplacian solve hit a vanishing pivot");
    if (piv != col)
      for (int j = col; j <= m; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * (m + 1) + j], a[static_cast<std::size_t>(col) * (m + 1) + j]);
    const double diag = a[static_cast<std::size_t>(col) * (m + 1) + col];
    for (int i = col + 1; i < m; ++i) {
      const double f = a[static_cast<std::size_t>(i) * (m + 1) + col] / diag;
      if (f == 0.0) continue;
      for (int j = col; j <= m; ++j)
        a[static_cast<std::size_t>(i) * (m + 1) + j] -= f * a[static_cast<std::size_t>(col) * (m + 1) + j];
    }
  }
  std::vector<double> w(m);
  for (int i = m - 1; i >= 0; --i) {
    double v = a[static_cast<std::size_t>(i) * (m + 1) + m];
    for (int j = i + 1; j < m; ++j) v -= a[static_cast<std::size_t>(i) * (m + 1) + j] * w[j];
    w[i] = v / a[static_cast<std::size_t>(i) * (m + 1) + i];
  }
  return w[r < s ? r : r - 1];
}

double check_rayleigh_monotonicity(const Graph& g, std::pair<int, int> edge) {
  const auto [u, v] = edge;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw std::invalid_argument("bad edge");
  if (g.adjacent(u, v)) throw std::invalid_argument("edge already present");

  const ResistanceMatrix before = resistance_matrix(g);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) edges.emplace_back(i, j);
  edges.emplace_back(u, v);
  const ResistanceMatrix after = resistance_matrix(Graph::from_edges(g.order(), edges));

  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) worst = std::max(worst, after.at(i, j) - before.at(i, j));
  return worst;
}

double conductance_lower_bound(int s, int l) {
  if (s < 1 || l < 0) throw std::invalid_argument("need s >= 1 and l >= 0");
  return (s - 1) / 3.0 + (l + 1.0) / (l + 3.0);
}

}  // namespace speclap
