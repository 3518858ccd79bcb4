#pragma once

#include <string>
#include <vector>

#include "rigidbound/graph.hpp"

namespace rigidbound {

/// A reference graph with the fixed base used in the literature examples.
struct NamedGraph {
  std::string name;
  DimensionedGraph graph;
  FixedBase base;
  std::string description;
};

/// Names accepted by named_graph(), in catalog order.
std::vector<std::string> named_graph_names();

/// Throws std::invalid_argument for an unknown name.
NamedGraph named_graph(const std::string& name);

}  // namespace rigidbound
