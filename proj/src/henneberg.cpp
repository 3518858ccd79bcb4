#include "rigidbound/henneberg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rigidbound/errors.hpp"

namespace rigidbound {

namespace {

void check_dimension(int d) {
  if (d != 2 && d != 3) {
    throw UnsupportedDimensionError("Henneberg generation supports d in {2, 3}, got " +
                                    std::to_string(d));
  }
}

Graph complete_graph(int d) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= d; ++a) {
    for (Vertex b = a + 1; b <= d; ++b) edges.emplace_back(a, b);
  }
  return Graph(d, std::move(edges));
}

/// Calls f on every k-subset of {1..n} \ excluded, in lexicographic order.
template <class F>
void for_each_subset(int n, int k, const std::vector<Vertex>& excluded, F&& f) {
  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= n; ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) pool.push_back(v);
  }
  if (k > static_cast<int>(pool.size())) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> chosen(k);
  for (;;) {
    for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    f(chosen);
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Graph> henneberg_children(const Graph& g, int d, MoveSet moves) {
  std::vector<Graph> out;
  const int n = g.vertex_count();
  if (moves.h1) {
    for_each_subset(n, d, {}, [&](const std::vector<Vertex>& nbrs) {
      out.push_back(g.with_new_vertex(nbrs));
    });
  }
  if (moves.h2) {
    for (const Edge& e : g.edges()) {
      for_each_subset(n, d - 1, {e.u, e.v}, [&](const std::vector<Vertex>& others) {
        std::vector<Vertex> nbrs = others;
        nbrs.push_back(e.u);
        nbrs.push_back(e.v);
        out.push_back(g.with_new_vertex(nbrs, e));
      });
    }
  }
  return out;
}

std::vector<GraphLevel> henneberg_levels(int d, int n_max, MoveSet moves) {
  check_dimension(d);
  if (n_max < d) throw std::invalid_argument("target vertex count must be >= d");
  std::vector<GraphLevel> levels;
  levels.push_back({complete_graph(d)});
  for (int n = d + 1; n <= n_max; ++n) {
    GraphLevel next;
    std::unordered_set<std::string> seen;
    for (const Graph& parent : levels.back()) {
      for (Graph& child : henneberg_children(parent, d, moves)) {
        if (seen.insert(canonical_form(child)).second) next.push_back(std::move(child));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

GraphLevel henneberg_generate(int d, int n, MoveSet moves) {
  return std::move(henneberg_levels(d, n, moves).back());
}

LastMove classify_last_move(const Graph& g, int d) {
  int md = g.min_degree();
  // K_d itself has minimum degree d-1; it is the common root.
  if (md <= d) return LastMove::H1;
  if (md == d + 1) return LastMove::H2;
  return LastMove::Other;
}

TallyRow tally_level(const GraphLevel& level, int n, int d) {
  TallyRow row;
  row.n = n;
  for (const Graph& g : level) {
    bool planar = is_planar(g);
    switch (classify_last_move(g, d)) {
      case LastMove::H1:
        (planar ? row.h1_planar : row.h1_nonplanar)++;
        break;
      case LastMove::H2:
        (planar ? row.h2_planar : row.h2_nonplanar)++;
        break;
      case LastMove::Other:
        row.other++;
        break;
    }
  }
  return row;
}

}  // namespace rigidbound
