#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidbound/bigint.hpp"

#include <json.hpp>

namespace rigidbound {

/// Exponent vector over the ambient variables. Entries may be negative only
/// inside the delta transformation, where Laurent terms appear transiently.
using Exponents = std::vector<int>;

/// Graded lexicographic, larger first: higher total degree, then the first
/// differing exponent.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, BigRational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const BigRational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(const Exponents& e, const BigRational& c);

  int variable_count() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given exponent vector (zero when absent).
  BigRational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const BigRational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const BigRational& c) const;
  Polynomial pow(unsigned k) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Largest and smallest exponent of `var` over the terms (0 for zero poly).
  int max_degree_in(int var) const;
  int min_degree_in(int var) const;
  int total_degree() const;
  bool has_negative_exponents() const;
  bool depends_on(int var) const;

  /// Replaces `var` by `value`; exponents of `var` must be non-negative.
  Polynomial substitute(int var, const Polynomial& value) const;
  Polynomial evaluate(int var, const BigRational& value) const;
  /// Terms whose exponent minimizes <alpha, w>.
  Polynomial initial_form(const std::vector<long>& w) const;
  /// Same polynomial in a space with variables selected by `keep` (old
  /// indices, new order); every dropped variable must be absent.
  Polynomial restricted(const std::vector<int>& keep) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

/// Parses sums of terms like "2*x1^2 - 3/4*y1*s1 + 5". Names must match
/// `names` exactly; whitespace is ignored. Throws std::invalid_argument.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

/// A named list of polynomials sharing one variable space.
struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;

  int variable_count() const { return static_cast<int>(variables.size()); }
  /// One polynomial per line.
  std::string to_text() const;
  /// {"variables": [...], "equations": [[{"exponents": [...], "coefficient": "p/q"}, ...], ...]}
  nlohmann::json to_json() const;
};

}  // namespace rigidbound
