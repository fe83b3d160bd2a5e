#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "speclap/enumeration.hpp"
#include "speclap/families.hpp"
#include "speclap/graph.hpp"

using namespace speclap;

TEST_CASE("class counts match the permutation oracle") {
  const std::vector<std::uint64_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    std::set<std::uint64_t> brute_codes;
    enumerate_graphs(n, [&](const Graph& g) {
      ++count;
      brute_codes.insert(oracles::brute_force_canonical_bits(g));
    });
    CHECK(count == expected[n - 1]);
    CHECK(brute_codes.size() == expected[n - 1]);  // all emitted classes distinct
  }
}

TEST_CASE("emitted representatives are canonical and closed under complement") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> emitted;
    std::vector<Graph> graphs;
    enumerate_graphs(n, [&](const Graph& g) {
      CHECK(canonical_form(g) == g);  // idempotent representative
      emitted.insert(canonical_code(g).key());
      graphs.push_back(g);
    });
    for (const Graph& g : graphs) CHECK(emitted.count(canonical_code(complement(g)).key()) == 1);
  }
}

TEST_CASE("enumeration order limits") {
  CHECK_THROWS_AS(enumerate_graphs(9, [](const Graph&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(0, [](const Graph&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(11, [](const Graph&) {}, true), std::invalid_argument);
}

TEST_CASE("exhaustive audit reports") {
  const EnumReport r3 = exhaustive_audit(3);
  CHECK(r3.graph_count == 4);
  CHECK(r3.violations.empty());
  CHECK(r3.min_sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r3.equality_codes.size() == 2);  // the 2-edge path and its complement
  CHECK(r3.c_n == doctest::Approx(1.0).epsilon(1e-9));

  const EnumReport r4 = exhaustive_audit(4);
  CHECK(r4.graph_count == 11);
  CHECK(r4.violations.empty());
  CHECK(r4.c_n == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r4.min_sum >= 1.0 - 1e-7);

  CHECK_THROWS_AS((void)exhaustive_audit(1), std::invalid_argument);
}

TEST_CASE("exhaustive audit is thread-count invariant") {
  const EnumReport a = exhaustive_audit(5, kAuditTol, 1);
  const EnumReport b = exhaustive_audit(5, kAuditTol, 3);
  CHECK(a.graph_count == b.graph_count);
  CHECK(a.min_sum == b.min_sum);
  CHECK(a.c_n == b.c_n);
  CHECK(a.equality_codes == b.equality_codes);
  CHECK(a.violations == b.violations);
}

TEST_CASE("random graphs") {
  CHECK(random_graph(7, 0.0, 5).edge_count() == 0);
  CHECK(random_graph(7, 1.0, 5).edge_count() == 21);
  CHECK(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42));
  CHECK(random_graph(8, 0.5, 42) != random_graph(8, 0.5, 43));
  CHECK_THROWS_AS((void)random_graph(4, 1.5, 0), std::invalid_argument);

  // loose frequency sanity: ~50% of pairs present
  const Graph g = random_graph(32, 0.5, 77);
  CHECK(g.edge_count() > 150);
  CHECK(g.edge_count() < 350);
}
