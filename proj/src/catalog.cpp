#include "rigidbound/catalog.hpp"

#include <stdexcept>

namespace rigidbound {

namespace {

Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph icosahedron() {
  // 1 top, 2..6 upper ring, 7..11 lower ring, 12 bottom.
  std::vector<Edge> e;
  for (int k = 0; k < 5; ++k) {
    int up = 2 + k, up_next = 2 + (k + 1) % 5;
    int lo = 7 + k, lo_next = 7 + (k + 1) % 5;
    e.emplace_back(1, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up, lo_next);
    e.emplace_back(lo, lo_next);
    e.emplace_back(12, lo);
  }
  return Graph(12, std::move(e));
}

std::vector<NamedGraph> catalog() {
  return {
      {"k3", {make(3, {{1, 2}, {1, 3}, {2, 3}}), 2}, {{1, 2}}, "triangle, the smallest Laman graph"},
      {"desargues",
       {make(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}}), 2},
       {{1, 2}},
       "double prism: triangles 123 and 456 joined by 14, 25, 36"},
      {"l56",
       {make(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 7}, {3, 5}, {3, 7}, {4, 6}, {5, 6}, {6, 7}}), 2},
       {{1, 2}},
       "7-vertex Laman graph with 56 complex planar embeddings"},
      {"l136",
       {make(8, {{1, 2}, {1, 4}, {1, 8}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 6}, {4, 8}, {5, 6},
                 {6, 7}, {7, 8}}),
        2},
       {{1, 2}},
       "8-vertex Laman graph with 136 complex planar embeddings"},
      {"jackson-owen",
       {make(8, {{1, 2}, {1, 3}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {3, 4}, {3, 8}, {4, 7}, {5, 6}, {5, 8},
                 {6, 7}, {7, 8}}),
        2},
       {{1, 2}},
       "cube plus the long diagonal 1-7; cube corners 000=1 001=2 010=3 011=4 100=5 101=6 111=7 110=8"},
      {"g48",
       {make(7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4},
                 {3, 5}, {4, 6}, {5, 7}, {6, 7}}),
        3},
       {{1, 3, 4}},
       "7-vertex planar Geiringer graph with 48 complex spatial embeddings"},
      {"icosahedron", {icosahedron(), 3}, {{1, 2, 3}}, "icosahedron skeleton, a planar Geiringer graph"},
      {"double-banana",
       {make(8, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 6}, {1, 7},
                 {1, 8}, {2, 6}, {2, 7}, {2, 8}, {6, 7}, {6, 8}, {7, 8}}),
        3},
       {{1, 3, 4}},
       "two triangular bipyramids sharing the poles 1 and 2; Maxwell count holds, not rigid"},
  };
}

}  // namespace

std::vector<std::string> named_graph_names() {
  std::vector<std::string> out;
  for (const auto& g : catalog()) out.push_back(g.name);
  return out;
}

NamedGraph named_graph(const std::string& name) {
  for (auto& g : catalog()) {
    if (g.name == name) return g;
  }
  throw std::invalid_argument("unknown named graph '" + name + "'");
}

}  // namespace rigidbound
