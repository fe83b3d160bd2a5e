#include "speclap/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "speclap/io.hpp"

namespace speclap {

namespace {

// Open-addressing set of nonzero uint64 keys; node-based hash sets are too
// heavy for the ~12M codes of order 10.
class FlatSet64 {
 public:
  explicit FlatSet64(std::size_t expected) {
    std::size_t cap = 64;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, 0);
  }

  bool insert(std::uint64_t key) {
    if (key == 0) key = 0x9e3779b97f4a7c15ull;  // keys carry the order in high bits, 0 never occurs
    if ((size_ + 1) * 2 > slots_.size()) grow();
    return insert_slot(key);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return x;
  }

  bool insert_slot(std::uint64_t key) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = mix(key) & mask;
    while (slots_[i] != 0) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask;
    }
    slots_[i] = key;
    ++size_;
    return true;
  }

  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    size_ = 0;
    for (std::uint64_t k : old)
      if (k != 0) insert_slot(k);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace

void enumerate_graphs(int n, const std::function<void(const Graph&)>& sink, bool allow_long) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  const int limit = allow_long ? kEnumExtendedLimit : kEnumGuaranteedLimit;
  if (n > limit)
    throw std::invalid_argument("order " + std::to_string(n) + " above the supported limit " +
                                std::to_string(limit));

  std::vector<Graph> level;
  level.emplace_back(1);
  if (n == 1) {
    sink(level.front());
    return;
  }

  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    FlatSet64 seen(level.size() * 4 + 64);
    const std::uint64_t mask_count = std::uint64_t{1} << (m - 1);
    for (const Graph& parent : level) {
      for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
        const Graph child = parent.extended(mask);
        const CanonicalCode code = canonical_code(child);
        if (!seen.insert(code.key())) continue;
        Graph rep = canonical_form(child);
        if (m == n)
          sink(rep);
        else
          next.push_back(std::move(rep));
      }
    }
    level = std::move(next);
  }
}

EnumReport exhaustive_audit(int n, double tol, int threads, bool allow_long) {
  if (n < 2) throw std::invalid_argument("exhaustive audit needs order >= 2");
  if (threads < 1) threads = 1;

  const auto t0 = std::chrono::steady_clock::now();

  EnumReport report;
  report.n = n;
  report.min_sum = std::numeric_limits<double>::infinity();
  report.c_n = std::numeric_limits<double>::infinity();

  struct Audited {
    double sum;
    double lambda_max;
    bool equality;
    bool ok;
    std::string code;
    std::string failure;
  };

  // audit in batches: parallel map over the batch, then an in-order merge
  std::vector<Graph> batch;
  constexpr std::size_t kBatch = 512;

  auto flush = [&](std::vector<Graph>& graphs) {
    if (graphs.empty()) return;
    std::vector<Audited> results(graphs.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < graphs.size(); i += step) {
        const Graph& g = graphs[i];
        const Certificate cert = audit_theorem1(g, tol);
        const Theorem2Report t2 = audit_theorem2(g, tol);
        Audited& out = results[i];
        out.sum = cert.sum;
        out.lambda_max = t2.lambda_max;
        out.equality = cert.equality.flag;
        out.ok = cert.all_pass() && t2.all_pass();
        out.code = emit_graph6(g);
        if (!out.ok) {
          for (const Check& c : cert.checks)
            if (c.status == CheckStatus::Fail) out.failure += c.name + " ";
          for (const Check& c : t2.checks)
            if (c.status == CheckStatus::Fail) out.failure += "t2:" + c.name + " ";
        }
      }
    };
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
      for (auto& th : pool) th.join();
    }
    for (const Audited& r : results) {
      ++report.graph_count;
      report.min_sum = std::min(report.min_sum, r.sum);
      report.c_n = std::min(report.c_n, r.lambda_max);
      if (r.equality) report.equality_codes.push_back(r.code);
      if (!r.ok) report.violations.push_back(r.code + ": " + r.failure);
    }
    graphs.clear();
  };

  enumerate_graphs(
      n,
      [&](const Graph& g) {
        batch.push_back(g);
        if (batch.size() >= kBatch) flush(batch);
      },
      allow_long);
  flush(batch);

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("order must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // top 53 bits as a uniform double in [0, 1); independent of any
      // library distribution implementation
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace speclap
