#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "speclap/certificates.hpp"
#include "speclap/graph.hpp"

namespace speclap {

// Short-form graph6 (n <= 62): first byte n+63, then the upper triangle
// column by column in 6-bit groups, each group biased by 63, zero padded.
// Long forms are rejected.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// First line "n m", then m lines "i j" with 0-based endpoints.
Graph parse_edge_list(std::string_view text);

// Machine-readable audit record, schema version "1".
nlohmann::json certificate_document(const Graph& g, std::string_view input_format,
                                    const Certificate& cert, const Theorem2Report& t2);

}  // namespace speclap
