#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rigidbound/bounds.hpp"
#include "rigidbound/catalog.hpp"
#include "rigidbound/errors.hpp"
#include "rigidbound/henneberg.hpp"
#include "rigidbound/orient.hpp"
#include "rigidbound/permanent.hpp"

using namespace rigidbound;

namespace {

/// Rounds to the number of significant digits shown in `printed`.
bool matches_printed(double v, const std::string& printed) {
  double p = std::stod(printed);
  int digits = 0;
  bool seen = false;
  for (char ch : printed) {
    if (ch == 'e') break;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (ch != '0') seen = true;
      if (seen) ++digits;
    }
  }
  int mag = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  double scale = std::pow(10.0, mag - digits + 1);
  return std::fabs(std::round(v / scale) * scale - p) < 0.5 * scale;
}

}  // namespace

TEST_CASE("Bezout bound") {
  CHECK(bezout_bound(6, 2) == 256);
  CHECK(bezout_bound(12, 3) == oracle::pow_int(2, 27));
  CHECK(bezout_bound(3, 3) == 1);
}

TEST_CASE("asymptotic table to the printed precision") {
  const std::vector<std::pair<int, std::string>> printed = {
      {2, "4.9"},   {3, "8.9"},   {4, "16.7"}, {5, "31.7"}, {6, "60.8"},
      {7, "117.2"}, {8, "226.9"}, {9, "441"},  {10, "860"}, {30, "6.88e8"}};
  std::vector<int> dims;
  for (const auto& p : printed) dims.push_back(p.first);
  auto rows = asymptotic_table(dims);
  REQUIRE(rows.size() == printed.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int d = printed[i].first;
    CHECK(rows[i].bezout_base == oracle::pow_int(2, d));
    // Direct evaluation, independent of the library's log-gamma route.
    long double direct = 2.0L;
    for (int k = d + 1; k <= 2 * d; ++k) direct *= std::sqrt(static_cast<long double>(k));
    for (int k = 1; k <= d; ++k) direct /= std::sqrt(static_cast<long double>(k));
    CHECK(rows[i].permanent_base == doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
    CHECK_MESSAGE(matches_printed(rows[i].permanent_base, printed[i].second), "d=" << d);
  }
  CHECK(matches_printed(static_cast<double>(rows.back().bezout_base), "1.07e9"));
}

TEST_CASE("Bezout exceeds the permanent route exactly from d = 5 on") {
  for (int d = 2; d <= 64; ++d) {
    BigInt lhs = oracle::pow_int(2, 2 * d - 2) * oracle::factorial(d) * oracle::factorial(d);
    bool expected = lhs > oracle::factorial(2 * d);
    CHECK(bezout_exceeds_permanent_route(d) == expected);
    CHECK(expected == (d >= 5));
  }
}

TEST_CASE("Bregman-Minc values") {
  auto k3 = named_graph("k3");
  auto b = bregman_minc_bound(build_mbezout_matrix(k3.graph, k3.base), 3, 2);
  CHECK(b.symbolic() == "(2/2!)^1 * (2!)^(2/2)");
  CHECK(b.decimal() == "2");
  auto l56 = named_graph("l56");
  auto bl = bregman_minc_bound(build_mbezout_matrix(l56.graph, l56.base), 7, 2);
  CHECK(bl.symbolic() == "(2/2!)^5 * (2!)^(5/2) * (4!)^(5/4)");
  // 2^(5/2) * 24^(5/4) = 300.4966...
  CHECK(bl.decimal() == "300.497");
  CHECK(std::exp(bl.log_value()) == doctest::Approx(std::pow(2.0, 2.5) * std::pow(24.0, 1.25)));
  auto ico = named_graph("icosahedron");
  CHECK(bregman_minc_bound(build_mbezout_matrix(ico.graph, ico.base), 12, 3).decimal() == "4.096e+6");
}

TEST_CASE("Bregman-Minc dominates the permanent on generated graphs") {
  for (int d : {2, 3}) {
    for (const auto& level : henneberg_levels(d, d == 2 ? 8 : 7)) {
      for (const auto& g : level) {
        DimensionedGraph dg{g, d};
        for (const auto& base : enumerate_fixed_bases(dg)) {
          MBezoutMatrix m = build_mbezout_matrix(dg, base);
          BigInt per = permanent(m.matrix);
          auto bm = bregman_minc_bound(m, dg.n(), d);
          CHECK(bm.dominates_permanent(per));
          // Log-space cross-check with an independent product.
          double lhs = 0;
          for (int c = 0; c < m.size(); ++c) {
            int r = m.matrix.column_sum(c);
            lhs += std::lgamma(r + 1.0) / r;
          }
          CHECK(lhs + 1e-9 >= std::log(static_cast<double>(per)));
        }
      }
    }
  }
}

TEST_CASE("upper decimals never round down") {
  CHECK(upper_decimal(BigRational(1, 3)) == "0.333334");
  CHECK(upper_decimal(BigRational(2)) == "2");
  CHECK(upper_decimal(BigRational(123456789)) == "1.23457e+8");
  CHECK(upper_decimal(BigRational(1, 100000)) == "1e-5");
  CHECK(upper_decimal(BigRational(999999999, 1000)) == "1e+6");
}

TEST_CASE("Felsner-Zickfeld expression") {
  auto g48 = named_graph("g48");
  auto p = orientation_problem(g48.graph, g48.base);
  CHECK(felsner_zickfeld_value(p, {}) == BigRational(8));  // 2^(7-4)
  auto fz = felsner_zickfeld_bound(g48.graph, g48.base);
  CHECK(fz.empty_set_value == 8);
  CHECK(fz.exhaustive);

  // The minimum over independent sets of (V, E') by brute force.
  const int n = p.n;
  BigRational best = felsner_zickfeld_value(p, {});
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> set;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v + 1);
    bool independent = true;
    for (const Edge& e : p.edges)
      if ((mask >> (e.u - 1) & 1) && (mask >> (e.v - 1) & 1)) independent = false;
    if (independent) best = std::min(best, felsner_zickfeld_value(p, set));
  }
  CHECK(fz.value == best);

  // A free vertex of E'-degree 5 with target 3 contributes 2^-4 * C(5,3).
  auto ico = named_graph("icosahedron");
  auto q = orientation_problem(ico.graph, ico.base);
  CHECK(felsner_zickfeld_value(q, {12}) == BigRational(256) * BigRational(10, 16));
  CHECK(felsner_zickfeld_bound(ico.graph, ico.base).empty_set_value >= 106);

  CHECK_THROWS_AS(felsner_zickfeld_bound(named_graph("jackson-owen").graph, FixedBase{{1, 2}}), NonPlanarError);
  CHECK(kPlanarGeiringerBase == doctest::Approx(7.113));
}
