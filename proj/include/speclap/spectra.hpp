#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "speclap/graph.hpp"

namespace speclap {

// Dense symmetric matrix, row-major. Constructed symmetric; set() writes
// both mirror entries.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  const double* data() const { return a_.data(); }
  std::span<const double> row(int i) const { return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }

 private:
  int n_;
  std::vector<double> a_;
};

struct EigenConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Spectrum {
  std::vector<double> eigenvalues;             // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
  double residual_bound = 0.0;                 // max_k ||A v_k - lambda_k v_k||_2
};

// Laplacian L = D - A of g.
SymMatrix laplacian(const Graph& g);

// Cyclic Jacobi with fixed row-major sweep order (deterministic for a
// fixed input). Converges when every off-diagonal magnitude is at most
// tol; throws EigenConvergenceError after 64 sweeps without convergence.
Spectrum eigen_symmetric(const SymMatrix& m, double tol = 1e-11);

struct FiedlerData {
  double lambda2 = 0.0;
  std::vector<double> vector;  // unit norm, zero sum
  int v_max = 0;               // argmax entry, ties to lowest index
  int v_min = 0;               // argmin entry, ties to lowest index
  double gap = 0.0;            // vector[v_max] - vector[v_min]
};

// Second-smallest Laplacian eigenvalue with a unit eigenvector orthogonal
// to the all-ones vector. Requires n >= 2.
FiedlerData algebraic_connectivity(const Graph& g);

// Same, reusing an already computed Laplacian spectrum of g.
FiedlerData fiedler_from_spectrum(const Graph& g, const Spectrum& spectrum);

// max_i |lambda_{i+1}(G) + lambda_{n+1-i}(comp G) - n| over i = 1..n-1.
double check_complement_duality(const Graph& g);

// sum over edges (z_i - z_j)^2; length must equal the order.
double edge_energy(const Graph& g, std::span<const double> z);

// sum over all pairs i<j of (z_i - z_j)^2.
double pair_energy(std::span<const double> z);

// edge_energy(g, z) - lambda(g)/n * pair_energy(z); nonnegative for every z
// (up to tolerance) and zero at the Fiedler vector.
double fiedler_quotient_slack(const Graph& g, std::span<const double> z);

}  // namespace speclap
