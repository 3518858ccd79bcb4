#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "rigidbound/graph.hpp"

namespace rigidbound {

bool is_planar(const Graph& g) {
  const int n = g.vertex_count();
  // Euler bound short-circuit; Boyer-Myrvold handles everything else.
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const Edge& e : g.edges()) boost::add_edge(e.u - 1, e.v - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace rigidbound
