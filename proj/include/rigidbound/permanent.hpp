#pragma once

#include <cstdint>
#include <vector>

#include "rigidbound/bigint.hpp"
#include "rigidbound/bound_value.hpp"
#include "rigidbound/graph.hpp"

#include <json.hpp>

namespace rigidbound {

/// Square (0,1) matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size, 0) {}
  BinaryMatrix(int size, std::vector<std::uint8_t> entries);

  int size() const { return size_; }
  std::uint8_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * size_ + c]; }
  void set(int r, int c, bool v) { entries_[static_cast<std::size_t>(r) * size_ + c] = v ? 1 : 0; }

  int row_sum(int r) const;
  int column_sum(int c) const;
  BinaryMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

 private:
  int size_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// The m-Bezout matrix of the sphere system for (G, K_d): one block of d
/// identical rows per free vertex (ascending), one column per non-fixed edge
/// (lexicographic). Entry is 1 iff the row's vertex is an endpoint.
struct MBezoutMatrix {
  int d = 0;
  BinaryMatrix matrix;
  std::vector<Vertex> row_vertex;   // vertex owning each row
  std::vector<Edge> column_edges;   // edge owning each column

  int size() const { return matrix.size(); }
};

/// Throws NonSquareMatrixError when |E'| != d(n-d).
MBezoutMatrix build_mbezout_matrix(const DimensionedGraph& g, const FixedBase& base);

struct PermanentOptions {
  /// Hard limit on the matrix size; 2^m subsets are visited.
  int max_size = 30;
  bool allow_oversize = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Ryser's formula with Gray-code subset order. Identical rows are grouped so
/// each step updates one running sum per distinct row touched by the flipped
/// column. Throws SizeLimitError past options.max_size unless allowed.
BigInt permanent(const BinaryMatrix& a, const PermanentOptions& options = {});

/// Reference definition: sum over all m! permutations. For tests and tiny
/// inputs only.
BigInt permanent_by_permutations(const BinaryMatrix& a);

/// mB(G, K_d) = (2/d!)^(n-d) * per(A). Throws std::logic_error if the
/// quotient is not integral, which would mean a malformed matrix.
BoundValue mbezout_via_permanent(const DimensionedGraph& g, const FixedBase& base,
                                 const PermanentOptions& options = {});

/// Row-major 0/1 rows with block (vertex) and edge labels.
nlohmann::json matrix_to_json(const MBezoutMatrix& m);

}  // namespace rigidbound
