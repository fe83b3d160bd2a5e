#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace speclap {

// Simple undirected graph on vertices 0..n-1, adjacency stored as
// bit-packed rows. Immutable after construction; all free functions
// below are pure.
class Graph {
 public:
  explicit Graph(int n);

  // Duplicate pairs collapse to one edge. Throws std::invalid_argument on
  // out-of-range indices or self-loops.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  int degree(int v) const;

  bool adjacent(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
  }

  std::vector<int> neighbors(int v) const;

  // Copy with one extra vertex whose neighborhood among the old vertices
  // is given by the low n bits of mask (used by the enumerator; n <= 63).
  Graph extended(std::uint64_t neighbor_mask) const;

  bool operator==(const Graph& other) const = default;

 private:
  void set_edge(int i, int j);

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;

  friend Graph complement(const Graph&);
  friend Graph join(const Graph&, const Graph&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph canonical_form(const Graph&);
};

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// BFS hop counts from v; unreachable vertices get -1.
std::vector<int> distances(const Graph& g, int v);

// nullopt iff g is disconnected (or n == 0).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);
int count_components(const Graph& g);

// Vertices of the connected component containing v, ascending.
std::vector<int> component_of(const Graph& g, int v);

// Isomorphism-invariant code: the lexicographically smallest upper-triangle
// bit string over all vertex relabelings, bits in column order
// (0,1),(0,2),(1,2),(0,3),... packed most-significant-first. Two graphs of
// equal order are isomorphic iff their codes are equal. Exact up to
// kCanonicalLimit vertices; larger inputs are rejected.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;

  std::uint64_t key() const { return bits | (static_cast<std::uint64_t>(n) << 48); }
  auto operator<=>(const CanonicalCode&) const = default;
};

inline constexpr int kCanonicalLimit = 10;

CanonicalCode canonical_code(const Graph& g);

// The relabeled graph realizing canonical_code(g).
Graph canonical_form(const Graph& g);

}  // namespace speclap
