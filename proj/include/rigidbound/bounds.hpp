#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidbound/bigint.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/orient.hpp"
#include "rigidbound/permanent.hpp"

namespace rigidbound {

/// 2^(nd - d^2): product of the degrees of the nd - d^2 edge equations.
BigInt bezout_bound(int n, int d);

/// Bregman-Minc applied to the m-Bezout matrix, scaled to a bound on mB:
/// (2/d!)^(n-d) * prod_j (r_j!)^(1/r_j) over column sums r_j.
struct BregmanMincBound {
  int n = 0;
  int d = 0;
  /// column sum -> number of columns with that sum
  std::map<int, int> column_sums;

  /// e.g. "(2/2!)^6 * (2!)^(4/2) * (4!)^(8/4)"
  std::string symbolic() const;
  /// Upper-rounded to six significant digits; always >= the exact value.
  std::string decimal() const;
  /// log of the exact value (natural log), for tables.
  double log_value() const;
  /// Exact test of per(A) <= prod (r_j!)^(1/r_j), done by raising both
  /// sides to the lcm of the column sums.
  bool dominates_permanent(const BigInt& per) const;
};

BregmanMincBound bregman_minc_bound(const MBezoutMatrix& m, int n, int d);

/// Smallest decimal with `digits` significant digits that is >= v (v > 0):
/// plain notation for 1e-3 <= v < 1e6, otherwise "m.mmmmme+k".
std::string upper_decimal(const BigRational& v, int digits = 6);

/// 2^(n-4) * prod_{u in I} 2^(1 - deg u) * C(deg u, indeg u) evaluated on the
/// orientation problem of (G, K_d): degrees within E', targets d / 0.
BigRational felsner_zickfeld_value(const OrientationProblem& p, const std::vector<Vertex>& independent_set);

struct FelsnerZickfeldBound {
  /// Value at the minimizing independent set.
  BigRational value;
  std::vector<Vertex> independent_set;
  /// Value with I empty, i.e. 2^(n-4).
  BigRational empty_set_value;
  /// False when the greedy search was used (n > 12).
  bool exhaustive = true;
};

/// Minimum of felsner_zickfeld_value over independent sets of (V, E'):
/// every set for n <= 12, a greedy one otherwise. Throws NonPlanarError.
FelsnerZickfeldBound felsner_zickfeld_bound(const DimensionedGraph& g, const FixedBase& base);

/// Per-vertex growth constants: indegree-3 planar orientations, and twice
/// that for planar Geiringer embeddings.
inline constexpr double kFelsnerZickfeldBase = 3.5565;
inline constexpr double kPlanarGeiringerBase = 2 * kFelsnerZickfeldBase;

struct AsymptoticRow {
  int d = 0;
  BigInt bezout_base;     // 2^d
  double permanent_base;  // 2 * sqrt((2d)!) / d!
};

std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& dims);

/// 2^(2d-2) * (d!)^2 > (2d)!, exactly.
bool bezout_exceeds_permanent_route(int d);

}  // namespace rigidbound
