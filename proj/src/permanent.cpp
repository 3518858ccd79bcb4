#include "rigidbound/permanent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rigidbound/errors.hpp"

namespace rigidbound {

BinaryMatrix::BinaryMatrix(int size, std::vector<std::uint8_t> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(size) * size) {
    throw std::invalid_argument("BinaryMatrix: entry count does not match size");
  }
  for (auto& e : entries_) {
    if (e > 1) throw std::invalid_argument("BinaryMatrix: entries must be 0 or 1");
  }
}

int BinaryMatrix::row_sum(int r) const {
  int s = 0;
  for (int c = 0; c < size_; ++c) s += at(r, c);
  return s;
}

int BinaryMatrix::column_sum(int c) const {
  int s = 0;
  for (int r = 0; r < size_; ++r) s += at(r, c);
  return s;
}

BinaryMatrix BinaryMatrix::permuted(const std::vector<int>& row_perm,
                                    const std::vector<int>& col_perm) const {
  BinaryMatrix out(size_);
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) out.set(row_perm[r], col_perm[c], at(r, c));
  }
  return out;
}

MBezoutMatrix build_mbezout_matrix(const DimensionedGraph& g, const FixedBase& base) {
  validate_base(g, base);
  MBezoutMatrix out;
  out.d = g.d;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (base.contains(v)) continue;
    for (int k = 0; k < g.d; ++k) out.row_vertex.push_back(v);
  }
  for (const Edge& e : g.graph.edges()) {
    if (base.contains(e.u) && base.contains(e.v)) continue;
    out.column_edges.push_back(e);
  }
  if (out.row_vertex.size() != out.column_edges.size()) {
    throw NonSquareMatrixError("m-Bezout matrix is " + std::to_string(out.row_vertex.size()) +
                               " x " + std::to_string(out.column_edges.size()) +
                               "; the graph violates the Maxwell count");
  }
  const int m = static_cast<int>(out.row_vertex.size());
  out.matrix = BinaryMatrix(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) out.matrix.set(r, c, out.column_edges[c].contains(out.row_vertex[r]));
  }
  return out;
}

namespace {

using i128 = __int128;

/// Rows grouped by content: product over groups of (running sum)^multiplicity.
struct RowGroups {
  std::vector<int> multiplicity;
  std::vector<int> full_sum;
  std::vector<std::vector<int>> column_groups;  // groups where column c has a 1
};

RowGroups group_rows(const BinaryMatrix& a) {
  const int m = a.size();
  std::map<std::vector<std::uint8_t>, int> index;
  RowGroups g;
  g.column_groups.assign(m, {});
  for (int r = 0; r < m; ++r) {
    std::vector<std::uint8_t> row(m);
    for (int c = 0; c < m; ++c) row[c] = a.at(r, c);
    auto [it, fresh] = index.emplace(row, static_cast<int>(g.multiplicity.size()));
    if (fresh) {
      g.multiplicity.push_back(0);
      g.full_sum.push_back(a.row_sum(r));
      for (int c = 0; c < m; ++c) {
        if (row[c]) g.column_groups[c].push_back(it->second);
      }
    }
    g.multiplicity[it->second]++;
  }
  return g;
}

template <class T>
T ipow(T base, int e) {
  T r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Signed Ryser partial sum over Gray-code indices [begin, end), i >= 1.
/// Sum of (-1)^{|S|} prod_rows rowsum_S, accumulated in Acc.
template <class Acc>
Acc ryser_block(const RowGroups& g, int m, std::uint64_t begin, std::uint64_t end) {
  const int groups = static_cast<int>(g.multiplicity.size());
  std::vector<int> sums(groups, 0);
  std::uint64_t gray = (begin - 1) ^ ((begin - 1) >> 1);
  int zero_groups = groups;
  for (int c = 0; c < m; ++c) {
    if (!((gray >> c) & 1)) continue;
    for (int k : g.column_groups[c]) {
      if (sums[k]++ == 0) zero_groups--;
    }
  }
  Acc acc = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    int c = __builtin_ctzll(i);
    gray ^= std::uint64_t{1} << c;
    if ((gray >> c) & 1) {
      for (int k : g.column_groups[c]) {
        if (sums[k]++ == 0) zero_groups--;
      }
    } else {
      for (int k : g.column_groups[c]) {
        if (--sums[k] == 0) zero_groups++;
      }
    }
    if (zero_groups) continue;
    Acc term = 1;
    for (int k = 0; k < groups; ++k) term *= ipow<Acc>(Acc(sums[k]), g.multiplicity[k]);
    if (__builtin_popcountll(gray) & 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

BigInt to_bigint(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

BigInt permanent(const BinaryMatrix& a, const PermanentOptions& options) {
  const int m = a.size();
  if (m == 0) return 1;
  if (m > options.max_size && !options.allow_oversize) {
    throw SizeLimitError("permanent: matrix size " + std::to_string(m) + " exceeds limit " +
                         std::to_string(options.max_size));
  }
  if (m > 62) throw SizeLimitError("permanent: matrix size beyond 62 is not supported");
  RowGroups g = group_rows(a);
  for (int s : g.full_sum) {
    if (s == 0) return 0;
  }
  // Every term is at most prod (full row sum)^mult; the partial sums are
  // bounded by 2^m times that.
  double log2_max = m + 1;
  for (std::size_t k = 0; k < g.full_sum.size(); ++k) {
    log2_max += g.multiplicity[k] * std::log2(static_cast<double>(g.full_sum[k]));
  }
  const bool fast = log2_max < 125.0;

  const std::uint64_t total = std::uint64_t{1} << m;
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (m < 16) threads = 1;
  const std::uint64_t chunk = (total - 1 + threads - 1) / threads;

  BigInt sum = 0;
  if (threads == 1) {
    sum = fast ? to_bigint(ryser_block<i128>(g, m, 1, total)) : ryser_block<BigInt>(g, m, 1, total);
  } else {
    std::vector<BigInt> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = 1 + t * chunk;
      std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) continue;
      pool.emplace_back([&, t, begin, end] {
        partial[t] = fast ? to_bigint(ryser_block<i128>(g, m, begin, end))
                          : ryser_block<BigInt>(g, m, begin, end);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial) sum += p;
  }
  // per(A) = (-1)^m * sum_S (-1)^{|S|} prod_i rowsum_S(i)
  return (m & 1) ? BigInt(-sum) : sum;
}

BigInt permanent_by_permutations(const BinaryMatrix& a) {
  const int m = a.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) ok = a.at(r, perm[r]) != 0;
    if (ok) total += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BoundValue mbezout_via_permanent(const DimensionedGraph& g, const FixedBase& base,
                                 const PermanentOptions& options) {
  MBezoutMatrix mat = build_mbezout_matrix(g, base);
  BigInt per = permanent(mat.matrix, options);
  const unsigned free = static_cast<unsigned>(g.n() - g.d);
  BigInt num = pow2(free) * per;
  BigInt den = boost::multiprecision::pow(factorial(static_cast<unsigned>(g.d)), free);
  if (num % den != 0) {
    throw std::logic_error("m-Bezout bound from the permanent is not integral");
  }
  return {num / den, Provenance::Permanent};
}

nlohmann::json matrix_to_json(const MBezoutMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(static_cast<int>(m.matrix.at(r, c)));
    rows.push_back(std::move(row));
  }
  nlohmann::json row_labels = nlohmann::json::array();
  for (Vertex v : m.row_vertex) row_labels.push_back(v);
  nlohmann::json col_labels = nlohmann::json::array();
  for (const Edge& e : m.column_edges) col_labels.push_back({e.u, e.v});
  return {{"size", m.size()}, {"d", m.d}, {"row_vertices", row_labels},
          {"column_edges", col_labels}, {"rows", rows}};
}

}  // namespace rigidbound
