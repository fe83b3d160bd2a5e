#pragma once

#include <utility>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/spectra.hpp"

namespace speclap {

// All-pairs effective resistances of a connected graph, unit resistance
// per edge. Symmetric with zero diagonal; a metric.
class ResistanceMatrix {
 public:
  explicit ResistanceMatrix(int n) : n_(n), r_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double at(int i, int j) const { return r_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    r_[static_cast<std::size_t>(i) * n_ + j] = v;
    r_[static_cast<std::size_t>(j) * n_ + i] = v;
  }

 private:
  int n_;
  std::vector<double> r_;
};

// R_{r,s} = sum over nonzero eigenvalues of (v_k[r] - v_k[s])^2 / lambda_k.
// Eigenvalues at most 1e-9 count as the zero eigenvalue; more than one of
// those means the graph is disconnected and the input is rejected.
ResistanceMatrix resistance_matrix(const Graph& g);
ResistanceMatrix resistance_matrix(const Graph& g, const Spectrum& spectrum);

// Single entry from an already computed Laplacian spectrum.
double resistance_entry(const Spectrum& spectrum, int r, int s);

// Independent route: minimize the edge energy subject to a unit potential
// difference, realized as one grounded linear solve on the Laplacian by
// Gaussian elimination. Requires g connected and r != s.
double resistance_variational_oracle(const Graph& g, int r, int s);

// Adds the given absent edge and returns the largest increase of any
// effective resistance (nonpositive up to tolerance).
double check_rayleigh_monotonicity(const Graph& g, std::pair<int, int> edge);

// (s-1)/3 + (l+1)/(l+3): conductance of s-1 disjoint three-edge paths in
// parallel with the fan gadget of width l+1.
double conductance_lower_bound(int s, int l);

}  // namespace speclap
