#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidbound/graph.hpp"

namespace rigidbound {

enum class HennebergMove { H1, H2 };

struct MoveSet {
  bool h1 = true;
  bool h2 = true;
};

/// One level of generated graphs (fixed vertex count), deduplicated up to
/// isomorphism and listed in discovery order.
using GraphLevel = std::vector<Graph>;

/// All non-isomorphic graphs on exactly n vertices reachable from K_d by the
/// allowed moves. H1 joins a new vertex to d existing ones; H2 joins it to
/// d+1 existing ones, two of which lose the edge between them.
/// Supports d in {2, 3}; throws UnsupportedDimensionError otherwise.
GraphLevel henneberg_generate(int d, int n, MoveSet moves = {});

/// Levels d..n_max; result[k] holds the graphs with d + k vertices.
std::vector<GraphLevel> henneberg_levels(int d, int n_max, MoveSet moves = {});

/// Children of `g` under one move, before deduplication.
std::vector<Graph> henneberg_children(const Graph& g, int d, MoveSet moves);

/// Classification used by the generator tallies: the last Henneberg move is
/// read off the minimum degree (d means H1, d+1 means H2).
enum class LastMove { H1, H2, Other };
LastMove classify_last_move(const Graph& g, int d);

struct TallyRow {
  int n = 0;
  int h1_planar = 0;
  int h1_nonplanar = 0;
  int h2_planar = 0;
  int h2_nonplanar = 0;
  int other = 0;

  int total() const { return h1_planar + h1_nonplanar + h2_planar + h2_nonplanar + other; }
};

TallyRow tally_level(const GraphLevel& level, int n, int d);

}  // namespace rigidbound
