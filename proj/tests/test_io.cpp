#include <doctest.h>

#include <nlohmann/json.hpp>

#include "speclap/certificates.hpp"
#include "speclap/enumeration.hpp"
#include "speclap/families.hpp"
#include "speclap/io.hpp"

using namespace speclap;

TEST_CASE("graph6 parsing") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));

  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph e3 = parse_graph6("B?");
  CHECK(e3.order() == 3);
  CHECK(e3.edge_count() == 0);

  CHECK_THROWS_AS((void)parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_graph6("A"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS((void)parse_graph6("A_\n"), std::invalid_argument);  // stray control byte
  CHECK_THROWS_AS((void)parse_graph6("A_~"), std::invalid_argument);   // overlong
  CHECK_THROWS_AS((void)parse_graph6("~??"), std::invalid_argument);   // long form
  CHECK_THROWS_AS((void)parse_graph6("Ao"), std::invalid_argument);    // nonzero padding
}

TEST_CASE("graph6 emission round-trips") {
  CHECK(emit_graph6(make({Family::Complete, 2})) == "A_");
  CHECK(emit_graph6(make({Family::Complete, 4})) == "C~");
  CHECK(emit_graph6(Graph(3)) == "B?");

  for (int n = 1; n <= 7; ++n) {
    enumerate_graphs(n, [](const Graph& g) {
      const std::string line = emit_graph6(g);
      const Graph back = parse_graph6(line);
      CHECK(back == g);
      CHECK(emit_graph6(back) == line);
    });
  }

  CHECK_THROWS_AS((void)emit_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
  const Graph k2 = parse_edge_list("2 1\n0 1\n");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);

  const Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(canonical_code(p4) == canonical_code(make({Family::Path, 4})));

  CHECK(parse_edge_list("3 0").edge_count() == 0);

  CHECK_THROWS_AS((void)parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_edge_list("2 2\n0 1\n"), std::invalid_argument);      // truncated
  CHECK_THROWS_AS((void)parse_edge_list("2 1\n0 1\n1 0\n"), std::invalid_argument); // trailing
  CHECK_THROWS_AS((void)parse_edge_list("3 1\n0 5\n"), std::invalid_argument);      // range
}

TEST_CASE("certificate document structure") {
  const Graph g = make({Family::Star, 5});
  const Certificate cert = audit_theorem1(g);
  const Theorem2Report t2 = audit_theorem2(g);
  const nlohmann::json doc = certificate_document(g, "graph6", cert, t2);

  CHECK(doc.at("schema") == "1");
  CHECK(doc.at("case") == "ComplementDisconnected");
  CHECK(doc.at("input").at("graph6") == emit_graph6(g));
  CHECK(doc.at("equality").at("flag") == true);
  CHECK(doc.at("checks").is_array());
  CHECK(doc.at("checks").size() == cert.checks.size());
  CHECK(doc.at("theorem2").at("in_case") == false);

  // serialized numbers survive a round trip at full precision
  const nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
  CHECK(reparsed.at("lambda").get<double>() == cert.lambda);
  CHECK(reparsed.at("sum").get<double>() == cert.sum);
  for (std::size_t i = 0; i < cert.checks.size(); ++i)
    CHECK(reparsed.at("checks")[i].at("slack").get<double>() == cert.checks[i].slack);

  const Certificate p4cert = audit_theorem1(make({Family::Path, 4}));
  const nlohmann::json p4doc =
      certificate_document(make({Family::Path, 4}), "graph6", p4cert, audit_theorem2(make({Family::Path, 4})));
  CHECK(p4doc.at("case") == "Distance3");
  CHECK(p4doc.at("case_data").at("s") == 1);
  CHECK(p4doc.contains("theorem2"));
  CHECK(p4doc.at("theorem2").at("in_case") == true);
}
