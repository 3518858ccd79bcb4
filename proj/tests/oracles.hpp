#pragma once
// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rigidbound/bigint.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/permanent.hpp"

namespace oracle {

using rigidbound::BigInt;
using rigidbound::DimensionedGraph;
using rigidbound::Edge;
using rigidbound::FixedBase;
using rigidbound::Vertex;

/// Edges of G outside the base clique.
inline std::vector<Edge> free_edges(const DimensionedGraph& g, const FixedBase& base) {
  std::vector<Edge> out;
  for (const Edge& e : g.graph.edges()) {
    if (!(base.contains(e.u) && base.contains(e.v))) out.push_back(e);
  }
  return out;
}

/// Tries all 2^|E'| orientations.
inline std::uint64_t brute_orientations(const DimensionedGraph& g, const FixedBase& base) {
  std::vector<Edge> es = free_edges(g, base);
  const int m = static_cast<int>(es.size());
  const int n = g.n();
  std::uint64_t count = 0;
  std::vector<int> indeg(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int i = 0; i < m; ++i) indeg[(mask >> i) & 1 ? es[i].v : es[i].u]++;
    bool ok = true;
    for (Vertex v = 1; v <= n && ok; ++v) ok = indeg[v] == (base.contains(v) ? 0 : g.d);
    count += ok;
  }
  return count;
}

/// Row-by-row subset DP: f[S] = ways to match the first |S| rows onto the
/// column set S.
inline BigInt dp_permanent(const rigidbound::BinaryMatrix& a) {
  const int m = a.size();
  std::vector<unsigned __int128> f(std::size_t{1} << m, 0);
  f[0] = 1;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (!f[s]) continue;
    int row = __builtin_popcount(s);
    if (row == m) continue;
    for (int c = 0; c < m; ++c) {
      if (!(s >> c & 1) && a.at(row, c)) f[s | (1u << c)] += f[s];
    }
  }
  unsigned __int128 v = f[(std::size_t{1} << m) - 1];
  BigInt out = 0;
  for (int shift = 96; shift >= 0; shift -= 32) {
    out <<= 32;
    out += static_cast<std::uint32_t>(v >> shift);
  }
  return out;
}

/// Rows: d copies per free vertex; columns: edges of E'; 1 on incidence.
inline rigidbound::BinaryMatrix incidence_matrix(const DimensionedGraph& g, const FixedBase& base) {
  std::vector<Edge> es = free_edges(g, base);
  std::vector<Vertex> rows;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!base.contains(v)) rows.insert(rows.end(), g.d, v);
  }
  const int m = static_cast<int>(rows.size());
  rigidbound::BinaryMatrix a(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < static_cast<int>(es.size()) && c < m; ++c) a.set(r, c, es[c].contains(rows[r]));
  }
  return a;
}

/// All d-subsets that are cliques.
inline std::vector<std::vector<Vertex>> cliques(const DimensionedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.n(), d = g.d;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      for (int j = i + 1; j < d && ok; ++j) ok = g.graph.has_edge(pick[i], pick[j]);
    }
    if (ok) out.push_back(pick);
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + 1 + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline BigInt pow_int(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace oracle
