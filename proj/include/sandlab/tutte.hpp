#pragma once

#include "sandlab/graph.hpp"
#include "sandlab/polynomial.hpp"

namespace sandlab {

enum class EdgeOrder { Lowest, Highest };

inline constexpr int kTutteEdgeCap = 20;

/// Full Tutte polynomial T_G(x, y) by deletion-contraction on multigraphs:
/// loops contribute y, bridges x, and any other edge splits into G-e + G/e.
/// The branching edge is the lowest (or highest) indexed remaining edge.
BivariatePolynomial tutte_polynomial(const Graph& g, EdgeOrder order = EdgeOrder::Lowest,
                                     int edge_cap = kTutteEdgeCap);

/// T_G(1, x).
Polynomial tutte_T1x(const Graph& g, EdgeOrder order = EdgeOrder::Lowest, int edge_cap = kTutteEdgeCap);

}  // namespace sandlab
