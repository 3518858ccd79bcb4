// Canonical labeling by individualization-refinement. Colors are refined to
// an equitable partition with label-independent cell ordering; each discrete
// leaf gives a relabeling and the lexicographically smallest relabeled
// adjacency string is the certificate. No automorphism pruning, so the leaf
// count grows with |Aut(G)|, which is fine at the sizes this tool targets.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rigidbound/errors.hpp"
#include "rigidbound/graph.hpp"

namespace rigidbound {

namespace {

constexpr int kMaxCanonicalVertices = 64;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
      adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
  }

  std::string run() {
    std::vector<int> colors(n_, 0);
    for (int v = 0; v < n_; ++v) colors[v] = __builtin_popcountll(adj_[v]);
    refine(colors);
    search(colors);
    return best_;
  }

 private:
  /// Re-rank by (color, sorted neighbor colors) until the color count is stable.
  void refine(std::vector<int>& colors) const {
    normalize(colors);
    std::vector<std::pair<std::vector<int>, int>> sig(n_);
    for (;;) {
      int before = count_colors(colors);
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v].first;
        s.clear();
        s.push_back(colors[v]);
        for (std::uint64_t m = adj_[v]; m; m &= m - 1) s.push_back(colors[__builtin_ctzll(m)]);
        std::sort(s.begin() + 1, s.end());
        sig[v].second = v;
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a].first < sig[b].first; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++rank;
        colors[order[i]] = rank;
      }
      if (count_colors(colors) == before) return;
    }
  }

  static void normalize(std::vector<int>& colors) {
    std::vector<int> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }

  int count_colors(const std::vector<int>& colors) const {
    int mx = -1;
    for (int c : colors) mx = std::max(mx, c);
    return mx + 1;
  }

  void search(const std::vector<int>& colors) {
    // Target cell: the smallest color class with more than one vertex.
    std::vector<int> size(n_, 0);
    for (int c : colors) size[c]++;
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      visit_leaf(colors);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w) next[w] = 2 * colors[w] + 1;
      next[v] = 2 * colors[v];
      refine(next);
      search(next);
    }
  }

  void visit_leaf(const std::vector<int>& colors) {
    // Vertex v goes to position colors[v].
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[colors[v]] = v;
    std::string cert;
    cert.reserve(2 + n_ * (n_ - 1) / 16 + 1);
    cert.push_back(static_cast<char>(n_));
    unsigned char byte = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = adj_[at[i]];
      for (int j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) | ((row >> at[j]) & 1));
        if (++bits == 8) {
          cert.push_back(static_cast<char>(byte));
          byte = 0;
          bits = 0;
        }
      }
    }
    if (bits) cert.push_back(static_cast<char>(byte << (8 - bits)));
    if (best_.empty() || cert < best_) best_ = std::move(cert);
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw SizeLimitError("canonical_form supports at most 64 vertices");
  }
  if (g.vertex_count() == 0) return std::string(1, '\0');
  return Canonizer(g).run();
}

}  // namespace rigidbound
