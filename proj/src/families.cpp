#include "speclap/families.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace speclap {

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  if (name == "empty") return Family::Empty;
  if (name == "remark") return Family::Remark;
  throw std::invalid_argument("unknown family: " + name);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::Empty: return "empty";
    case Family::Remark: return "remark";
  }
  return "?";
}

Graph make(FamilySpec spec) {
  const int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::Empty:
      if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
      break;
    case Family::Path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::Complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::Star:
      if (n < 2) throw std::invalid_argument("star needs n >= 2");
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::Remark:
      if (n < 4) throw std::invalid_argument("remark family needs n >= 4");
      for (int i = 2; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      break;
  }
  return Graph::from_edges(n, edges);
}

double remark_lambda(int n) {
  if (n < 4) throw std::invalid_argument("remark family needs n >= 4");
  const double nn = static_cast<double>(n);
  return (nn - std::sqrt(nn * nn - 4.0 * nn + 8.0)) / 2.0;
}

}  // namespace speclap
