#include "speclap/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace speclap {

namespace {

int words_for(int n) { return n <= 0 ? 1 : (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(std::max(n, 1)) * words_, 0) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

void Graph::set_edge(int i, int j) {
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i == j) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(i));
    g.set_edge(i, j);
  }
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bitsw = bits_[static_cast<std::size_t>(v) * words_ + w];
    while (bitsw) {
      const int b = std::countr_zero(bitsw);
      out.push_back(w * 64 + b);
      bitsw &= bitsw - 1;
    }
  }
  return out;
}

Graph Graph::extended(std::uint64_t neighbor_mask) const {
  if (n_ >= 63) throw std::invalid_argument("extended() supports orders below 63");
  Graph g(n_ + 1);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) g.set_edge(i, j);
  for (int i = 0; i < n_; ++i)
    if ((neighbor_mask >> i) & 1u) g.set_edge(i, n_);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) c.set_edge(i, j);
  return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  Graph u(ng + h.order());
  for (int i = 0; i < ng; ++i)
    for (int j = i + 1; j < ng; ++j)
      if (g.adjacent(i, j)) u.set_edge(i, j);
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.adjacent(i, j)) u.set_edge(ng + i, ng + j);
  return u;
}

Graph join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < h.order(); ++j) u.set_edge(i, g.order() + j);
  return u;
}

std::vector<int> distances(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(n, -1);
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  int best = 0;
  for (int v = 0; v < n; ++v) {
    for (int d : distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

int count_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++comps;
    std::vector<int> dist = distances(g, v);
    for (int u = 0; u < n; ++u)
      if (dist[u] >= 0) seen[u] = 1;
  }
  return comps;
}

std::vector<int> component_of(const Graph& g, int v) {
  std::vector<int> dist = distances(g, v);
  std::vector<int> comp;
  for (int u = 0; u < g.order(); ++u)
    if (dist[u] >= 0) comp.push_back(u);
  return comp;
}

namespace {

// Minimum-code search. Positions are filled left to right; filling
// position k appends the k adjacency bits (place[0],v),...,(place[k-1],v),
// which is exactly column k of the upper triangle. Candidate branches are
// tried in ascending chunk order against the best code so far. Unused
// vertices that are twins (identical rows outside the pair) generate
// isomorphic subtrees, so only the lowest-indexed one is expanded.
struct CanonicalSearch {
  int n;
  int total_bits;
  std::array<std::uint16_t, kCanonicalLimit> adj{};  // 16-bit rows, n <= 10
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, kCanonicalLimit> place{};
  std::array<int, kCanonicalLimit> best_place{};

  explicit CanonicalSearch(const Graph& g) : n(g.order()), total_bits(n * (n - 1) / 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && g.adjacent(i, j)) adj[i] |= static_cast<std::uint16_t>(1u << j);
  }

  void run() {
    std::uint32_t unused = (n >= 32) ? ~0u : ((1u << n) - 1u);
    descend(0, 0, 0, unused);
  }

  void descend(int k, int bits_used, std::uint64_t prefix, std::uint32_t unused) {
    if (k == n) {
      if (prefix < best) {
        best = prefix;
        best_place = place;
      }
      return;
    }
    struct Cand {
      std::uint32_t chunk;
      int v;
    };
    std::array<Cand, kCanonicalLimit> cands;
    int count = 0;
    for (std::uint32_t m = unused; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      // twin check: some lower-indexed unused u with an identical row
      // outside {u, v} covers this branch
      bool dominated = false;
      for (std::uint32_t m2 = unused & ((1u << v) - 1u); m2;) {
        const int u = std::countr_zero(m2);
        m2 &= m2 - 1;
        const std::uint16_t outside = static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
        if ((adj[u] & outside) == (adj[v] & outside)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      std::uint32_t chunk = 0;
      for (int i = 0; i < k; ++i) chunk = (chunk << 1) | ((adj[v] >> place[i]) & 1u);
      cands[count++] = {chunk, v};
    }
    std::sort(cands.begin(), cands.begin() + count,
              [](const Cand& a, const Cand& b) { return a.chunk != b.chunk ? a.chunk < b.chunk : a.v < b.v; });
    const int new_bits = bits_used + k;
    const int shift = total_bits - new_bits;
    for (int idx = 0; idx < count; ++idx) {
      const std::uint64_t new_prefix =
          (k == 0) ? prefix : (prefix | (static_cast<std::uint64_t>(cands[idx].chunk) << shift));
      // best may have tightened inside the previous branch
      if (new_prefix > (best >> shift) << shift) break;  // sorted by chunk: the rest are no better
      place[k] = cands[idx].v;
      descend(k + 1, new_bits, new_prefix, unused & ~(1u << cands[idx].v));
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalLimit)
    throw std::invalid_argument("canonical form supported only up to order " + std::to_string(kCanonicalLimit));
  if (n <= 1) return {n, 0};
  CanonicalSearch search(g);
  search.run();
  return {n, search.best};
}

Graph canonical_form(const Graph& g) {
  const CanonicalCode code = canonical_code(g);
  const int n = code.n;
  Graph out(n);
  const int total = n * (n - 1) / 2;
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if ((code.bits >> (total - 1 - b)) & 1u) out.set_edge(i, j);
    }
  }
  return out;
}

}  // namespace speclap
