#include "rigidbound/orient.hpp"

#include <algorithm>
#include <limits>

#include "rigidbound/errors.hpp"

namespace rigidbound {

namespace {

class OrientationCounter {
 public:
  explicit OrientationCounter(const OrientationProblem& p)
      : n_(p.n), edges_(p.edges), incident_(p.n) {
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      incident_[edges_[i].u - 1].push_back(i);
      incident_[edges_[i].v - 1].push_back(i);
    }
  }

  BigInt count(std::vector<int> target) {
    State s;
    s.alive.assign(edges_.size(), 1);
    s.target = std::move(target);
    s.degree.assign(n_, 0);
    for (int v = 0; v < n_; ++v) s.degree[v] = static_cast<int>(incident_[v].size());
    s.remaining = static_cast<int>(edges_.size());
    return recurse(std::move(s));
  }

 private:
  struct State {
    std::vector<char> alive;
    std::vector<int> target;  // residual indegree still needed
    std::vector<int> degree;  // residual degree
    int remaining = 0;
  };

  /// Orient edge i towards `head`.
  void orient(State& s, int i, Vertex head) const {
    const Edge& e = edges_[i];
    s.alive[i] = 0;
    s.remaining--;
    s.degree[e.u - 1]--;
    s.degree[e.v - 1]--;
    s.target[head - 1]--;
  }

  /// Applies forced orientations until none remain. False on infeasibility.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (s.target[v] < 0 || s.target[v] > s.degree[v]) return false;
        if (s.degree[v] == 0) continue;
        bool all_out = s.target[v] == 0;
        bool all_in = s.target[v] == s.degree[v];
        if (!all_out && !all_in) continue;
        for (int i : incident_[v]) {
          if (!s.alive[i]) continue;
          orient(s, i, all_in ? v + 1 : edges_[i].other(v + 1));
        }
        changed = true;
      }
    }
    return true;
  }

  BigInt recurse(State s) const {
    if (!propagate(s)) return 0;
    if (s.remaining == 0) {
      for (int t : s.target) {
        if (t != 0) return 0;
      }
      return 1;
    }
    // Branch on an edge at the vertex closest to being forced.
    int best = -1;
    int best_slack = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) {
      if (s.degree[v] == 0) continue;
      int slack = std::min(s.target[v], s.degree[v] - s.target[v]);
      if (slack < best_slack) {
        best_slack = slack;
        best = v;
      }
    }
    int edge = -1;
    for (int i : incident_[best]) {
      if (s.alive[i]) {
        edge = i;
        break;
      }
    }
    State other = s;
    orient(s, edge, edges_[edge].u);
    orient(other, edge, edges_[edge].v);
    return recurse(std::move(s)) + recurse(std::move(other));
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace

OrientationProblem orientation_problem(const DimensionedGraph& g, const FixedBase& base) {
  validate_base(g, base);
  OrientationProblem p;
  p.n = g.n();
  for (const Edge& e : g.graph.edges()) {
    if (base.contains(e.u) && base.contains(e.v)) continue;
    p.edges.push_back(e);
  }
  p.indeg.assign(p.n, g.d);
  for (Vertex v : base.vertices) p.indeg[v - 1] = 0;
  return p;
}

BigInt count_orientations(const OrientationProblem& p) {
  if (static_cast<int>(p.indeg.size()) != p.n) {
    throw std::invalid_argument("indegree target list must have one entry per vertex");
  }
  long long sum = 0;
  for (int t : p.indeg) sum += t;
  if (sum != static_cast<long long>(p.edges.size())) return 0;
  return OrientationCounter(p).count(p.indeg);
}

BoundValue mbezout_via_orientations(const DimensionedGraph& g, const FixedBase& base) {
  BigInt h = count_orientations(orientation_problem(g, base));
  return {pow2(static_cast<unsigned>(g.n() - g.d)) * h, Provenance::Orientation};
}

std::vector<BaseBound> mbezout_all_bases(const DimensionedGraph& g) {
  std::vector<BaseBound> out;
  for (FixedBase& base : enumerate_fixed_bases(g)) {
    BoundValue b = mbezout_via_orientations(g, base);
    out.push_back({std::move(base), std::move(b)});
  }
  return out;
}

BaseBound min_mbezout(const DimensionedGraph& g) {
  auto all = mbezout_all_bases(g);
  if (all.empty()) {
    throw NoFixedBaseError("graph has no K_" + std::to_string(g.d) + " to fix");
  }
  auto best = std::min_element(all.begin(), all.end(), [](const BaseBound& a, const BaseBound& b) {
    return a.bound.value < b.bound.value;
  });
  return *best;
}

}  // namespace rigidbound
