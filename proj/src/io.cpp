#include "speclap/io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace speclap {

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("empty graph6 line");
  for (char ch : line)
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6 character out of range");
  if (line[0] == 126) throw std::invalid_argument("long-form graph6 not supported (order > 62)");

  const int n = line[0] - 63;
  const int total_bits = n * (n - 1) / 2;
  const std::size_t expected = 1 + (total_bits + 5) / 6;
  if (line.size() != expected)
    throw std::invalid_argument("graph6 length mismatch: expected " + std::to_string(expected) + " bytes");

  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = line[1 + bit / 6] - 63;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (int pad = total_bits; pad < 6 * static_cast<int>(expected - 1); ++pad) {
    const int group = line[1 + pad / 6] - 63;
    if ((group >> (5 - pad % 6)) & 1) throw std::invalid_argument("graph6 padding bits must be zero");
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("short-form graph6 supports orders up to 62");
  const int total_bits = n * (n - 1) / 2;
  std::string out(1 + (total_bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list header must be \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long i = 0, j = 0;
    if (!(in >> i >> j)) throw std::invalid_argument("edge list truncated at line " + std::to_string(k + 2));
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  long long extra;
  if (in >> extra) throw std::invalid_argument("edge list has trailing entries");
  return Graph::from_edges(static_cast<int>(n), edges);
}

namespace {

nlohmann::json check_to_json(const Check& c) {
  return {
      {"name", c.name},
      {"bound", c.bound},
      {"measured", c.measured},
      {"slack", c.slack},
      {"status", check_status_name(c.status)},
  };
}

nlohmann::json case_data_to_json(const CaseData& cd) {
  nlohmann::json matching = nlohmann::json::array();
  for (const auto& [u, w] : cd.matching) matching.push_back({u, w});
  return {
      {"v1", cd.v1},
      {"v2", cd.v2},
      {"gap", cd.gap},
      {"distance", cd.distance},
      {"s", cd.s},
      {"l", cd.l},
      {"a", cd.a},
      {"b", cd.b},
      {"c", cd.c},
      {"matching", matching},
      {"labels_swapped", cd.labels_swapped},
  };
}

}  // namespace

nlohmann::json certificate_document(const Graph& g, std::string_view input_format,
                                    const Certificate& cert, const Theorem2Report& t2) {
  nlohmann::json doc;
  doc["schema"] = "1";
  doc["input"] = {
      {"format", std::string(input_format)},
      {"graph6", emit_graph6(g)},
      {"canonical",
       g.order() <= kCanonicalLimit ? nlohmann::json(emit_graph6(canonical_form(g))) : nlohmann::json(nullptr)},
      {"order", g.order()},
      {"edges", g.edge_count()},
  };
  doc["case"] = case_tag_name(cert.tag);
  doc["oriented_to_complement"] = cert.oriented_to_complement;
  doc["lambda"] = cert.lambda;
  doc["lambda_bar"] = cert.lambda_bar;
  doc["sum"] = cert.sum;
  if (cert.case_data) doc["case_data"] = case_data_to_json(*cert.case_data);
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : cert.checks) checks.push_back(check_to_json(c));
  doc["checks"] = checks;
  doc["equality"] = {
      {"flag", cert.equality.flag},
      {"structural", cert.equality.structural},
      {"witness_vertex", cert.equality.vertex},
      {"witness_on_complement", cert.equality.on_complement},
  };

  nlohmann::json t2doc;
  t2doc["in_case"] = t2.in_case;
  if (!t2.in_case) t2doc["out_of_case_reason"] = t2.out_of_case_reason;
  t2doc["lambda_max"] = t2.lambda_max;
  t2doc["floor"] = t2.floor;
  nlohmann::json t2checks = nlohmann::json::array();
  for (const Check& c : t2.checks) t2checks.push_back(check_to_json(c));
  t2doc["checks"] = t2checks;
  if (t2.case_data) t2doc["case_data"] = case_data_to_json(*t2.case_data);
  doc["theorem2"] = t2doc;
  return doc;
}

}  // namespace speclap
