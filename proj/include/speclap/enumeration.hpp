#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "speclap/certificates.hpp"
#include "speclap/graph.hpp"

namespace speclap {

inline constexpr int kEnumGuaranteedLimit = 8;
inline constexpr int kEnumExtendedLimit = 10;

// Streams one representative per isomorphism class of order n, in a
// deterministic order, each emitted in its canonical labeling. Canonical
// augmentation: every (n-1)-vertex class is extended by all neighborhood
// masks of a new vertex and children are deduplicated by canonical code.
// Orders 9 and 10 are long-running and gated behind allow_long.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& sink, bool allow_long = false);

struct EnumReport {
  int n = 0;
  std::uint64_t graph_count = 0;
  double min_sum = 0.0;
  double c_n = 0.0;  // min over classes of max{lambda, lambda_bar}
  std::vector<std::string> equality_codes;  // graph6 of equality classes, discovery order
  std::vector<std::string> violations;      // must stay empty
  double wall_seconds = 0.0;
  std::string generator = "canonical-augmentation";
};

// Runs audit_theorem1 and audit_theorem2 on every class representative of
// order n. Aggregation is a deterministic reduction: results are merged
// in emission order whatever the worker count.
EnumReport exhaustive_audit(int n, double tol = kAuditTol, int threads = 1, bool allow_long = false);

// G(n, p) with one edge decision per pair in row-major order, driven by
// std::mt19937_64 (the 64-bit Mersenne twister; identical output for
// identical arguments on every platform).
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace speclap
