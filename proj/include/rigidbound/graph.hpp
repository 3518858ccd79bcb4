#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rigidbound {

/// Vertex ids are 1-based throughout, including serialized forms.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Stores the pair canonically with u < v.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphFormatError on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v - 1]; }
  int min_degree() const;

  /// Adds vertex n+1 joined to `nbrs`, optionally deleting `removed`.
  Graph with_new_vertex(const std::vector<Vertex>& nbrs,
                        std::optional<Edge> removed = std::nullopt) const;
  /// Relabels vertex v as perm[v-1] (perm is a permutation of 1..n).
  Graph relabeled(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A graph together with the embedding dimension d >= 2.
struct DimensionedGraph {
  Graph graph;
  int d = 2;

  int n() const { return graph.vertex_count(); }
  /// d*n - d(d+1)/2
  int maxwell_edge_count() const { return d * n() - d * (d + 1) / 2; }
};

/// An ordered d-clique pinned to remove rigid motions.
struct FixedBase {
  std::vector<Vertex> vertices;

  bool contains(Vertex v) const;
  friend bool operator==(const FixedBase&, const FixedBase&) = default;
};

/// Throws InvalidBaseError unless `base` is d distinct vertices inducing K_d.
void validate_base(const DimensionedGraph& g, const FixedBase& base);

/// Every d-clique of g, each listed once with ascending vertices, in
/// lexicographic order. Empty when g has no K_d.
std::vector<FixedBase> enumerate_fixed_bases(const DimensionedGraph& g);

struct MaxwellResult {
  bool ok = false;
  bool global_count_ok = false;
  /// First vertex subset (|S| >= d) whose induced edge count exceeds
  /// d|S| - d(d+1)/2, when one exists.
  std::optional<std::vector<Vertex>> violating_subset;
  std::optional<int> violating_edge_count;
};

/// Global Maxwell count plus subgraph sparsity. Subsets are enumerated
/// exhaustively for n <= kExhaustiveMaxwellLimit; larger graphs use a
/// (2,3)-pebble game in the plane and a forced-subset flow bound otherwise.
MaxwellResult maxwell_check(const DimensionedGraph& g);
inline constexpr int kExhaustiveMaxwellLimit = 20;

/// Boyer-Myrvold planarity.
bool is_planar(const Graph& g);

/// Byte-string certificate; equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

// Serialization -------------------------------------------------------------

/// First line "n d", then one "u v" per line. '#' starts a comment.
DimensionedGraph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const DimensionedGraph& g);

/// {"n": int, "d": int, "edges": [[u, v], ...]}
DimensionedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const DimensionedGraph& g);

/// Detects JSON vs edge-list by the first non-space character.
DimensionedGraph read_graph_file(const std::string& path);

std::string format_base(const FixedBase& base);
/// Parses "v1,v2,...".
FixedBase parse_base(const std::string& text);

}  // namespace rigidbound
