#pragma once

#include <string>

#include "tubings/graph.hpp"
#include "tubings/poset.hpp"

namespace tubings {

/// Poset builder expressions: "chain:k", "antichain:k", "broom:n,k"
/// (chain of n+1 elements with k tops), and "osum(a,b,...)" nesting any of
/// these. Throws std::invalid_argument on malformed input.
Poset build_poset(const std::string& expr);

/// Graph specs: "cycle:k", "path:k", "perm-cycles:<one-line permutation>"
/// (the union of directed cycles of the permutation), and
/// "union:<spec>+<spec>+...".
DiGraph build_graph(const std::string& spec);

}  // namespace tubings
