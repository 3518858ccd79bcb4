#include "rigidbound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rigidbound {

namespace {

int total(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

void check_space(const Polynomial& a, const Polynomial& b) {
  if (a.variable_count() != b.variable_count()) {
    throw std::invalid_argument("polynomials live in different variable spaces");
  }
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(int nvars, const BigRational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const BigRational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

BigRational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const BigRational& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_space(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_space(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_space(*this, o);
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

int Polynomial::max_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

int Polynomial::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

bool Polynomial::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

bool Polynomial::depends_on(int var) const {
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) return true;
  }
  return false;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  check_space(*this, value);
  if (min_degree_in(var) < 0) throw std::invalid_argument("substitute: negative exponent");
  std::vector<Polynomial> powers{constant(nvars_, 1)};
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = e[var];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    r = r + monomial(rest, c) * powers[k];
  }
  return r;
}

Polynomial Polynomial::evaluate(int var, const BigRational& value) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < 0 && value == 0) throw std::invalid_argument("evaluate: division by zero");
    BigRational f = 1;
    int k = e[var];
    for (int i = 0; i < std::abs(k); ++i) f *= value;
    if (k < 0) f = 1 / f;
    Exponents rest = e;
    rest[var] = 0;
    r.add_term(rest, c * f);
  }
  return r;
}

Polynomial Polynomial::initial_form(const std::vector<long>& w) const {
  if (static_cast<int>(w.size()) != nvars_) throw std::invalid_argument("initial_form: weight length");
  Polynomial r(nvars_);
  if (terms_.empty()) return r;
  auto weight = [&](const Exponents& e) {
    long s = 0;
    for (int i = 0; i < nvars_; ++i) s += w[i] * e[i];
    return s;
  };
  long best = weight(terms_.begin()->first);
  for (const auto& [e, c] : terms_) best = std::min(best, weight(e));
  for (const auto& [e, c] : terms_) {
    if (weight(e) == best) r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::restricted(const std::vector<int>& keep) const {
  Polynomial r(static_cast<int>(keep.size()));
  std::vector<bool> kept(nvars_, false);
  for (int k : keep) kept.at(k) = true;
  for (const auto& [e, c] : terms_) {
    Exponents ne(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
    for (int v = 0; v < nvars_; ++v) {
      if (!kept[v] && e[v] != 0) throw std::invalid_argument("restricted: dropped variable still occurs");
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    BigRational a = neg ? BigRational(-c) : c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      std::string f = names.at(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    bool unit = a == 1;
    if (!unit || factors.empty()) {
      out << a.str();
      if (!factors.empty()) out << "*";
    }
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names) : names_(names) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  Polynomial run() {
    const int n = static_cast<int>(names_.size());
    Polynomial p(n);
    if (s_.empty()) fail("empty input");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (pos_ != 0) {
        fail("expected + or -");
      }
      BigRational coeff = sign;
      Exponents e(n, 0);
      factor(coeff, e);
      while (peek() == '*') {
        ++pos_;
        factor(coeff, e);
      }
      p.add_term(e, coeff);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  void factor(BigRational& coeff, Exponents& e) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigRational v = BigRational(integer());
      if (peek() == '/') {
        ++pos_;
        BigInt den = integer();
        if (den == 0) fail("zero denominator");
        v /= BigRational(den);
      }
      coeff *= v;
      return;
    }
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (start == pos_) fail("expected a number or variable");
    std::string name = s_.substr(start, pos_ - start);
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) fail("unknown variable '" + name + "'");
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      power = static_cast<int>(integer());
      if (neg) power = -power;
    }
    e[it - names_.begin()] += power;
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& names_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

std::string PolySystem::to_text() const {
  std::string out;
  for (const auto& f : equations) out += f.to_string(variables) + "\n";
  return out;
}

nlohmann::json PolySystem::to_json() const {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& f : equations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
      terms.push_back({{"exponents", e}, {"coefficient", c.str()}});
    }
    eqs.push_back(std::move(terms));
  }
  return {{"variables", variables}, {"equations", eqs}};
}

}  // namespace rigidbound
