#include "rigidbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rigidbound/errors.hpp"

namespace rigidbound {

using Float = boost::multiprecision::cpp_bin_float_50;

namespace {

BigRational rpow(const BigRational& b, long e) {
  BigRational r = 1;
  BigRational base = e < 0 ? BigRational(1 / b) : b;
  for (long k = std::labs(e); k; k >>= 1) {
    if (k & 1) r *= base;
    base *= base;
  }
  return r;
}

BigRational pow10(int k) { return rpow(BigRational(10), k); }

Float to_float(const BigRational& q) {
  return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
}

std::string trim_fraction(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

/// Renders m * 10^(k - digits + 1), where m has exactly `digits` digits.
std::string render(const BigInt& m, int k, int digits) {
  std::string s = m.str();
  if (k >= 6 || k < -3) {
    std::string mant = s.substr(0, 1) + "." + s.substr(1);
    std::ostringstream out;
    out << trim_fraction(mant) << "e" << (k < 0 ? "-" : "+") << std::abs(k);
    return out.str();
  }
  if (k >= 0) {
    if (k + 1 >= digits) return s + std::string(k + 1 - digits, '0');
    return trim_fraction(s.substr(0, k + 1) + "." + s.substr(k + 1));
  }
  return trim_fraction("0." + std::string(-k - 1, '0') + s);
}

/// Decimal upper value checked exactly against a rational test.
template <class AtLeast>
std::string upper_decimal_checked(const Float& estimate, int digits, AtLeast at_least) {
  if (estimate <= 0) return "0";
  int k = static_cast<int>(boost::multiprecision::floor(boost::multiprecision::log10(estimate)));
  const BigInt top = boost::multiprecision::pow(BigInt(10), digits);
  Float scaled = estimate / boost::multiprecision::pow(Float(10), k - digits + 1);
  if (scaled >= Float(top)) {
    ++k;
    scaled /= 10;
  } else if (scaled < Float(top / 10)) {
    --k;
    scaled *= 10;
  }
  BigInt m = static_cast<BigInt>(boost::multiprecision::ceil(scaled * (1 - Float("1e-35"))));
  for (;;) {
    if (m >= top) {
      m = top / 10;
      ++k;
    }
    BigRational cand = BigRational(m) * pow10(k - digits + 1);
    if (at_least(cand)) return render(m, k, digits);
    m += 1;
  }
}

}  // namespace

BigInt bezout_bound(int n, int d) {
  long e = static_cast<long>(n) * d - static_cast<long>(d) * d;
  if (e < 0) throw std::invalid_argument("bezout_bound: n must be at least d");
  return pow2(static_cast<unsigned>(e));
}

BregmanMincBound bregman_minc_bound(const MBezoutMatrix& m, int n, int d) {
  BregmanMincBound b;
  b.n = n;
  b.d = d;
  for (int c = 0; c < m.size(); ++c) b.column_sums[m.matrix.column_sum(c)]++;
  return b;
}

std::string BregmanMincBound::symbolic() const {
  std::ostringstream out;
  out << "(2/" << d << "!)^" << (n - d);
  for (const auto& [r, c] : column_sums) out << " * (" << r << "!)^(" << c << "/" << r << ")";
  return out.str();
}

double BregmanMincBound::log_value() const {
  double v = (n - d) * (std::log(2.0) - std::lgamma(d + 1.0));
  for (const auto& [r, c] : column_sums) v += static_cast<double>(c) / r * std::lgamma(r + 1.0);
  return v;
}

namespace {

int lcm_of_sums(const std::map<int, int>& sums) {
  int l = 1;
  for (const auto& [r, c] : sums) {
    if (r > 0) l = std::lcm(l, r);
  }
  return l;
}

/// (prod_j (r_j!)^(1/r_j))^L as an exact integer.
BigInt permanent_bound_power(const std::map<int, int>& sums, int L) {
  BigInt p = 1;
  for (const auto& [r, c] : sums) {
    if (r == 0) return 0;
    p *= boost::multiprecision::pow(factorial(static_cast<unsigned>(r)), static_cast<unsigned>(c * (L / r)));
  }
  return p;
}

}  // namespace

bool BregmanMincBound::dominates_permanent(const BigInt& per) const {
  int L = lcm_of_sums(column_sums);
  return boost::multiprecision::pow(per, static_cast<unsigned>(L)) <= permanent_bound_power(column_sums, L);
}

std::string BregmanMincBound::decimal() const {
  const int L = lcm_of_sums(column_sums);
  const BigRational scale_L = rpow(BigRational(2) / BigRational(factorial(static_cast<unsigned>(d))),
                                   static_cast<long>(n - d) * L);
  const BigRational exact_L = scale_L * BigRational(permanent_bound_power(column_sums, L));
  Float est = boost::multiprecision::exp(Float(log_value()));
  // Refine the double-precision log with the exact L-th power.
  if (exact_L > 0) est = boost::multiprecision::exp(boost::multiprecision::log(to_float(exact_L)) / L);
  return upper_decimal_checked(est, 6, [&](const BigRational& c) { return rpow(c, L) >= exact_L; });
}

std::string upper_decimal(const BigRational& v, int digits) {
  if (v <= 0) throw std::invalid_argument("upper_decimal: value must be positive");
  return upper_decimal_checked(to_float(v), digits, [&](const BigRational& c) { return c >= v; });
}

BigRational felsner_zickfeld_value(const OrientationProblem& p, const std::vector<Vertex>& independent_set) {
  std::vector<int> deg(p.n, 0);
  for (const Edge& e : p.edges) {
    deg[e.u - 1]++;
    deg[e.v - 1]++;
  }
  BigRational v = rpow(BigRational(2), p.n - 4);
  for (Vertex u : independent_set) {
    int dg = deg[u - 1];
    int in = p.indeg[u - 1];
    if (in < 0 || in > dg) return 0;
    BigInt binom = factorial(dg) / (factorial(in) * factorial(dg - in));
    v *= rpow(BigRational(2), 1 - dg) * BigRational(binom);
  }
  return v;
}

FelsnerZickfeldBound felsner_zickfeld_bound(const DimensionedGraph& g, const FixedBase& base) {
  if (!is_planar(g.graph)) throw NonPlanarError("Felsner-Zickfeld bound needs a planar graph");
  OrientationProblem p = orientation_problem(g, base);
  const int n = p.n;
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : p.edges) {
    adj[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
    adj[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
  }
  FelsnerZickfeldBound out;
  out.empty_set_value = felsner_zickfeld_value(p, {});
  out.value = out.empty_set_value;
  auto members = [&](std::uint64_t mask) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) s.push_back(v + 1);
    }
    return s;
  };
  if (n <= 12) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool independent = true;
      for (int v = 0; v < n && independent; ++v) {
        if (((mask >> v) & 1) && (adj[v] & mask)) independent = false;
      }
      if (!independent) continue;
      auto s = members(mask);
      BigRational val = felsner_zickfeld_value(p, s);
      if (val < out.value) {
        out.value = val;
        out.independent_set = s;
      }
    }
    return out;
  }
  out.exhaustive = false;
  if (n > 64) throw SizeLimitError("Felsner-Zickfeld search supports at most 64 vertices");
  std::uint64_t chosen = 0, blocked = 0;
  for (;;) {
    int best = -1;
    BigRational best_val = out.value;
    for (int v = 0; v < n; ++v) {
      if (((chosen | blocked) >> v) & 1) continue;
      BigRational val = felsner_zickfeld_value(p, members(chosen | (std::uint64_t{1} << v)));
      if (val < best_val) {
        best_val = val;
        best = v;
      }
    }
    if (best < 0) break;
    chosen |= std::uint64_t{1} << best;
    blocked |= adj[best];
    out.value = best_val;
  }
  out.independent_set = members(chosen);
  return out;
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& dims) {
  std::vector<AsymptoticRow> rows;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("asymptotic_table: d must be positive");
    AsymptoticRow r;
    r.d = d;
    r.bezout_base = pow2(static_cast<unsigned>(d));
    r.permanent_base = 2.0 * std::exp(0.5 * std::lgamma(2.0 * d + 1) - std::lgamma(d + 1.0));
    rows.push_back(r);
  }
  return rows;
}

bool bezout_exceeds_permanent_route(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  BigInt f = factorial(static_cast<unsigned>(d));
  return pow2(static_cast<unsigned>(2 * d - 2)) * f * f > factorial(static_cast<unsigned>(2 * d));
}

}  // namespace rigidbound
