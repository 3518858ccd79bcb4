#include "rigidbound/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rigidbound/errors.hpp"

namespace rigidbound {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphFormatError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > n) {
      throw GraphFormatError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw GraphFormatError("loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphFormatError("duplicate edge (" + std::to_string(dup->u) + "," +
                           std::to_string(dup->v) + ")");
  }
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u - 1].push_back(e.v);
    adj_[e.v - 1].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) return false;
  const auto& list = adj_[a - 1];
  return std::binary_search(list.begin(), list.end(), b);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(1);
  for (Vertex v = 2; v <= n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph Graph::with_new_vertex(const std::vector<Vertex>& nbrs, std::optional<Edge> removed) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size() + nbrs.size());
  for (const Edge& e : edges_) {
    if (removed && e == *removed) continue;
    edges.push_back(e);
  }
  for (Vertex w : nbrs) edges.emplace_back(w, n_ + 1);
  return Graph(n_ + 1, std::move(edges));
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  return Graph(n_, std::move(edges));
}

bool FixedBase::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void validate_base(const DimensionedGraph& g, const FixedBase& base) {
  const auto& vs = base.vertices;
  if (static_cast<int>(vs.size()) != g.d) {
    throw InvalidBaseError("fixed base must have exactly d = " + std::to_string(g.d) +
                           " vertices, got " + std::to_string(vs.size()));
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 1 || vs[i] > g.n()) {
      throw InvalidBaseError("fixed base vertex " + std::to_string(vs[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vs[i] == vs[j]) throw InvalidBaseError("fixed base repeats a vertex");
      if (!g.graph.has_edge(vs[i], vs[j])) {
        throw InvalidBaseError("fixed base " + format_base(base) + " is not a clique: missing (" +
                               std::to_string(vs[j]) + "," + std::to_string(vs[i]) + ")");
      }
    }
  }
}

namespace {

void extend_cliques(const Graph& g, int d, std::vector<Vertex>& current,
                    std::vector<FixedBase>& out) {
  if (static_cast<int>(current.size()) == d) {
    out.push_back(FixedBase{current});
    return;
  }
  Vertex start = current.empty() ? 1 : current.back() + 1;
  for (Vertex v = start; v <= g.vertex_count(); ++v) {
    bool ok = std::all_of(current.begin(), current.end(),
                          [&](Vertex w) { return g.has_edge(v, w); });
    if (!ok) continue;
    current.push_back(v);
    extend_cliques(g, d, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FixedBase> enumerate_fixed_bases(const DimensionedGraph& g) {
  std::vector<FixedBase> out;
  std::vector<Vertex> current;
  extend_cliques(g.graph, g.d, current, out);
  return out;
}

// Maxwell sparsity -----------------------------------------------------------

namespace {

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i + 1);
  }
  return out;
}

void exhaustive_sparsity(const DimensionedGraph& g, MaxwellResult& result) {
  const int n = g.n();
  const int d = g.d;
  const int slack = d * (d + 1) / 2;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.graph.edges()) {
    adj[e.u - 1] |= 1u << (e.v - 1);
    adj[e.v - 1] |= 1u << (e.u - 1);
  }
  const std::uint32_t total = 1u << n;
  // edges[S] = edges[S minus its lowest vertex] + edges from that vertex into S.
  std::vector<std::uint16_t> edges(total, 0);
  for (std::uint32_t s = 1; s < total; ++s) {
    int low = __builtin_ctz(s);
    std::uint32_t rest = s & (s - 1);
    edges[s] = static_cast<std::uint16_t>(edges[rest] + __builtin_popcount(adj[low] & rest));
    int size = __builtin_popcount(s);
    if (size < d) continue;
    if (static_cast<int>(edges[s]) > d * size - slack) {
      result.violating_subset = mask_to_vertices(s);
      result.violating_edge_count = edges[s];
      return;
    }
  }
}

/// (k, l)-pebble game for 0 <= l < 2k. Returns the vertex set spanned by the
/// first rejected edge, or nullopt if every edge is independent.
std::optional<std::vector<Vertex>> pebble_game(const Graph& g, int k, int l) {
  const int n = g.vertex_count();
  std::vector<int> pebbles(n, k);
  std::vector<std::vector<int>> out(n);  // directed pebble graph, 0-based

  auto find_pebble = [&](int root, int avoid_a, int avoid_b) -> bool {
    // DFS from root for a vertex (not an endpoint) with a free pebble, then
    // reverse the path to bring the pebble to root.
    std::vector<int> parent(n, -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        if (y != avoid_a && y != avoid_b && pebbles[y] > 0) {
          pebbles[y]--;
          pebbles[root]++;
          int cur = y;
          while (parent[cur] != -1) {
            int p = parent[cur];
            auto& lst = out[p];
            lst.erase(std::find(lst.begin(), lst.end(), cur));
            out[cur].push_back(p);
            cur = p;
          }
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  };

  for (const Edge& e : g.edges()) {
    int a = e.u - 1;
    int b = e.v - 1;
    while (pebbles[a] + pebbles[b] < l + 1) {
      if (pebbles[a] < k && find_pebble(a, a, b)) continue;
      if (pebbles[b] < k && find_pebble(b, a, b)) continue;
      break;
    }
    if (pebbles[a] + pebbles[b] >= l + 1) {
      if (pebbles[a] > 0) {
        pebbles[a]--;
        out[a].push_back(b);
      } else {
        pebbles[b]--;
        out[b].push_back(a);
      }
      continue;
    }
    // Reach set of {a, b}: a tight subgraph which the new edge overloads.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{a, b};
    seen[a] = seen[b] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<Vertex> span;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) span.push_back(i + 1);
    }
    return span;
  }
  return std::nullopt;
}

/// Dinic max-flow on a small network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : graph_(nodes), level_(nodes), iter_(nodes) {}

  void add_edge(int from, int to, long long cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (long long f = dfs(s, t, kInf)) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  static constexpr long long kInf = 1LL << 60;

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (const Arc& a : graph_[x]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int x, int t, long long f) {
    if (x == t) return f;
    for (int& i = iter_[x]; i < static_cast<int>(graph_[x].size()); ++i) {
      Arc& a = graph_[x][i];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      long long got = dfs(a.to, t, std::min(f, a.cap));
      if (got > 0) {
        a.cap -= got;
        graph_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

/// max over S containing `forced` of |E(S)| - d|S|, as a max-weight closure.
long long forced_density(const Graph& g, int d, const std::vector<Vertex>& forced) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int source = m + n;
  const int sink = source + 1;
  FlowNetwork net(m + n + 2);
  std::vector<char> is_forced(n + 1, 0);
  for (Vertex v : forced) is_forced[v] = 1;
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    net.add_edge(source, i, 1);
    net.add_edge(i, m + e.u - 1, 1LL << 40);
    net.add_edge(i, m + e.v - 1, 1LL << 40);
  }
  for (Vertex v = 1; v <= n; ++v) {
    net.add_edge(m + v - 1, sink, is_forced[v] ? 0 : d);
  }
  return static_cast<long long>(m) - net.max_flow(source, sink) -
         static_cast<long long>(d) * static_cast<long long>(forced.size());
}

std::optional<std::vector<Vertex>> flow_sparsity(const DimensionedGraph& g) {
  const int d = g.d;
  const int slack = d * (d + 1) / 2;
  std::vector<Vertex> forced;
  std::optional<std::vector<Vertex>> hit;
  auto recurse = [&](auto&& self, Vertex start) -> void {
    if (hit) return;
    if (static_cast<int>(forced.size()) == d) {
      if (forced_density(g.graph, d, forced) > -slack) hit = forced;
      return;
    }
    for (Vertex v = start; v <= g.n(); ++v) {
      forced.push_back(v);
      self(self, v + 1);
      forced.pop_back();
    }
  };
  recurse(recurse, 1);
  return hit;
}

}  // namespace

MaxwellResult maxwell_check(const DimensionedGraph& g) {
  MaxwellResult result;
  result.global_count_ok = g.graph.edge_count() == g.maxwell_edge_count();
  if (g.n() <= kExhaustiveMaxwellLimit) {
    exhaustive_sparsity(g, result);
  } else if (g.d == 2) {
    if (auto span = pebble_game(g.graph, 2, 3)) result.violating_subset = std::move(span);
  } else {
    // The pebble game needs l < 2k, which fails for d >= 3.
    if (auto seed = flow_sparsity(g)) result.violating_subset = std::move(seed);
  }
  result.ok = result.global_count_ok && !result.violating_subset;
  return result;
}

// Serialization --------------------------------------------------------------

namespace {

DimensionedGraph make_dimensioned(int n, int d, std::vector<Edge> edges) {
  if (d < 2) throw GraphFormatError("dimension must be >= 2, got " + std::to_string(d));
  return DimensionedGraph{Graph(n, std::move(edges)), d};
}

}  // namespace

DimensionedGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b)) {
      throw GraphFormatError("line " + std::to_string(line_no) + ": expected two integers");
    }
    std::string trailing;
    if (ls >> trailing) {
      throw GraphFormatError("line " + std::to_string(line_no) + ": unexpected '" + trailing + "'");
    }
    if (!header) {
      header = {static_cast<int>(a), static_cast<int>(b)};
    } else {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!header) throw GraphFormatError("missing \"n d\" header line");
  return make_dimensioned(header->first, header->second, std::move(edges));
}

void write_edge_list(std::ostream& out, const DimensionedGraph& g) {
  out << g.n() << ' ' << g.d << '\n';
  for (const Edge& e : g.graph.edges()) out << e.u << ' ' << e.v << '\n';
}

DimensionedGraph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw GraphFormatError("each edge must be a [u, v] pair");
      }
      edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return make_dimensioned(n, d, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError(std::string("bad graph JSON: ") + e.what());
  }
}

nlohmann::json graph_to_json(const DimensionedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.graph.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"d", g.d}, {"edges", std::move(edges)}};
}

DimensionedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open graph file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw GraphFormatError("'" + path + "': " + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

std::string format_base(const FixedBase& base) {
  std::string out;
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(base.vertices[i]);
  }
  return out;
}

FixedBase parse_base(const std::string& text) {
  FixedBase base;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      base.vertices.push_back(v);
    } catch (const std::exception&) {
      throw InvalidBaseError("cannot parse fixed base '" + text + "'");
    }
  }
  if (base.vertices.empty()) throw InvalidBaseError("empty fixed base");
  return base;
}

}  // namespace rigidbound
