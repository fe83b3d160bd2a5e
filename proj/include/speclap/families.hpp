#pragma once

#include <string>

#include "speclap/graph.hpp"

namespace speclap {

enum class Family { Path, Cycle, Complete, Star, Empty, Remark };

struct FamilySpec {
  Family family;
  int n;
};

Family family_from_name(const std::string& name);  // throws on unknown name
const char* family_name(Family f);

// Standard constructors plus the extremal family: remark(n) is the
// complete graph on vertices 2..n-1 with two pendant-style vertices,
// vertex 0 attached to vertex 2 and vertex 1 attached to vertex 3.
// Requires n >= 4 for Remark, n >= 3 for Cycle, n >= 1 otherwise.
Graph make(FamilySpec spec);

// Closed form for the algebraic connectivity of remark(n):
// (n - sqrt(n^2 - 4n + 8)) / 2, shared by the graph and its complement.
double remark_lambda(int n);

}  // namespace speclap
