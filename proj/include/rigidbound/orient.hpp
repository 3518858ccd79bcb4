#pragma once

#include <vector>

#include "rigidbound/bound_value.hpp"
#include "rigidbound/graph.hpp"

namespace rigidbound {

/// Orient every edge so that vertex v receives exactly indeg[v-1] heads.
struct OrientationProblem {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> indeg;
};

/// E' = E minus the base clique edges; target d at free vertices, 0 at fixed.
OrientationProblem orientation_problem(const DimensionedGraph& g, const FixedBase& base);

/// Exact number of orientations meeting every indegree target. Forced
/// orientations are propagated to a fixed point before each branch.
BigInt count_orientations(const OrientationProblem& p);

/// mB(G, K_d) = 2^(n-d) * |H_{K_d}|. Same value for the spherical system.
BoundValue mbezout_via_orientations(const DimensionedGraph& g, const FixedBase& base);

struct BaseBound {
  FixedBase base;
  BoundValue bound;
};

/// One entry per d-clique, in enumerate_fixed_bases order.
std::vector<BaseBound> mbezout_all_bases(const DimensionedGraph& g);

/// Minimum over all fixed bases (first minimizing base is the witness).
/// Throws NoFixedBaseError when g has no K_d.
BaseBound min_mbezout(const DimensionedGraph& g);

}  // namespace rigidbound
