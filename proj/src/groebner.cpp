#include "rigidbound/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <queue>
#include <unordered_map>
#include <stdexcept>

namespace rigidbound {

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::Solvable:
      return "solvable";
    case Solvability::Unsolvable:
      return "unsolvable";
    case Solvability::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

constexpr int kMaxVars = 64;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint64_t mask = 0;

  void finish(int nvars) {
    deg = 0;
    mask = 0;
    for (int i = 0; i < nvars; ++i) {
      deg = static_cast<std::uint16_t>(deg + e[i]);
      if (e[i]) mask |= std::uint64_t{1} << i;
    }
  }
};

/// Thrown internally when an exponent would exceed the packed width.
struct ExponentOverflow {};

class Ring {
 public:
  explicit Ring(int nvars) : n_(nvars) {}
  int n() const { return n_; }

  /// Grevlex: 1 if a > b, -1 if a < b, 0 if equal.
  int cmp(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = n_ - 1; i >= 0; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  static bool divides(const Mono& a, const Mono& b, int n) {
    if (a.mask & ~b.mask) return false;
    if (a.deg > b.deg) return false;
    for (int i = 0; i < n; ++i) {
      if (a.e[i] > b.e[i]) return false;
    }
    return true;
  }
  bool divides(const Mono& a, const Mono& b) const { return divides(a, b, n_); }

  Mono mul(const Mono& a, const Mono& b) const {
    Mono r;
    for (int i = 0; i < n_; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw ExponentOverflow{};
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.finish(n_);
    return r;
  }

  Mono quotient(const Mono& a, const Mono& b) const {
    Mono r;
    for (int i = 0; i < n_; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.finish(n_);
    return r;
  }

  Mono lcm(const Mono& a, const Mono& b) const {
    Mono r;
    for (int i = 0; i < n_; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.finish(n_);
    return r;
  }

  bool coprime(const Mono& a, const Mono& b) const { return (a.mask & b.mask) == 0; }

 private:
  int n_;
};

/// F_p with p < 2^31, so products fit in 64 bits.
struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  bool zero(Elem a) const { return a == 0; }
  Elem inv(Elem a) const {
    Elem r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  /// nullopt when the denominator vanishes mod p.
  std::optional<Elem> from(const BigRational& q) const {
    BigInt num = boost::multiprecision::numerator(q) % p;
    BigInt den = boost::multiprecision::denominator(q) % p;
    if (num < 0) num += p;
    if (den == 0) return std::nullopt;
    return mul(static_cast<Elem>(num), inv(static_cast<Elem>(den)));
  }
};

struct RationalField {
  using Elem = BigRational;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool zero(const Elem& a) const { return a == 0; }
  Elem inv(const Elem& a) const { return 1 / a; }
  std::optional<Elem> from(const BigRational& q) const { return q; }
};

template <class Field>
class Buchberger {
 public:
  using Elem = typename Field::Elem;
  struct Term {
    Mono m;
    Elem c;
  };
  using Poly = std::vector<Term>;  // sorted descending, leading coefficient 1

  Buchberger(Field field, int nvars, std::size_t max_pairs)
      : f_(field), ring_(nvars), max_pairs_(max_pairs) {}

  /// Returns false when the conversion into the field failed.
  bool load(const std::vector<Polynomial>& input, std::vector<Poly>& out) const {
    for (const auto& p : input) {
      Poly q;
      for (const auto& [e, c] : p.terms()) {
        Term t;
        for (int i = 0; i < ring_.n(); ++i) {
          if (e[i] < 0) throw std::invalid_argument("groebner: negative exponent");
          if (e[i] > 255) throw ExponentOverflow{};
          t.m.e[i] = static_cast<std::uint8_t>(e[i]);
        }
        t.m.finish(ring_.n());
        auto v = f_.from(c);
        if (!v) return false;
        if (f_.zero(*v)) continue;
        t.c = *v;
        q.push_back(std::move(t));
      }
      std::sort(q.begin(), q.end(), [&](const Term& a, const Term& b) { return ring_.cmp(a.m, b.m) > 0; });
      out.push_back(std::move(q));
    }
    return true;
  }

  GroebnerResult run(const std::vector<Poly>& input) {
    GroebnerResult result;
    for (const Poly& p : input) {
      Poly h = reduce(p);
      if (h.empty()) continue;
      if (h[0].m.deg == 0) return unsolvable(result);
      insert(std::move(h), p.empty() ? 0 : p[0].m.deg);
    }
    while (!pairs_.empty()) {
      if (processed_ >= max_pairs_) {
        result.status = Solvability::Indeterminate;
        result.pairs_processed = processed_;
        return result;
      }
      // Sugar strategy, ties broken by the smallest lcm.
      std::size_t best = 0;
      for (std::size_t i = 1; i < pairs_.size(); ++i) {
        const Pair& a = pairs_[i];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ring_.cmp(a.lcm, b.lcm) < 0)) best = i;
      }
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++processed_;
      Poly h = reduce(spoly(pr));
      if (h.empty()) continue;
      if (h[0].m.deg == 0) return unsolvable(result);
      insert(std::move(h), pr.sugar);
    }
    result.status = Solvability::Solvable;
    result.pairs_processed = processed_;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      Exponents e(ring_.n());
      for (int k = 0; k < ring_.n(); ++k) e[k] = polys_[i][0].m.e[k];
      result.leading_monomials.push_back(std::move(e));
    }
    return result;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Mono lcm;
    int sugar = 0;
  };

  GroebnerResult& unsolvable(GroebnerResult& r) {
    r.status = Solvability::Unsolvable;
    r.pairs_processed = processed_;
    r.leading_monomials = {Exponents(ring_.n(), 0)};
    return r;
  }

  void make_monic(Poly& p) const {
    if (p.empty()) return;
    Elem inv = f_.inv(p[0].c);
    for (auto& t : p) t.c = f_.mul(t.c, inv);
  }

  /// a[start..] - c * m * g, merged in order.
  Poly sub_mul(const Poly& a, std::size_t start, const Elem& c, const Mono& m, const Poly& g) const {
    Poly out;
    out.reserve(a.size() - start + g.size());
    std::size_t i = start, j = 0;
    while (i < a.size() || j < g.size()) {
      if (j < g.size()) {
        Mono gm = ring_.mul(g[j].m, m);
        int cmp = i < a.size() ? ring_.cmp(a[i].m, gm) : -1;
        if (cmp > 0) {
          out.push_back(a[i++]);
        } else if (cmp < 0) {
          out.push_back({gm, f_.neg(f_.mul(c, g[j].c))});
          ++j;
        } else {
          Elem v = f_.sub(a[i].c, f_.mul(c, g[j].c));
          if (!f_.zero(v)) out.push_back({gm, v});
          ++i;
          ++j;
        }
      } else {
        out.push_back(a[i++]);
      }
    }
    return out;
  }

  struct MonoHash {
    std::size_t operator()(const Mono& m) const {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (std::size_t i = 0; i < kMaxVars; i += 8) {
        std::uint64_t w;
        std::memcpy(&w, m.e.data() + i, 8);
        h = (h ^ w) * 0x100000001b3ull;
        h ^= h >> 29;
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct MonoEq {
    bool operator()(const Mono& a, const Mono& b) const { return a.e == b.e; }
  };

  const Poly* find_divisor(const Mono& m) const {
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k] && ring_.divides(polys_[k][0].m, m)) return &polys_[k];
    }
    return nullptr;
  }

  /// Full reduction by the active basis; result is monic. Terms accumulate
  /// in a hash map with one heap entry per live monomial. Every term pushed
  /// while reducing is below the term being reduced, so the heap drains in
  /// order and each monomial is settled once.
  Poly reduce(const Poly& p) const {
    std::unordered_map<Mono, Elem, MonoHash, MonoEq> acc;
    auto less = [this](const Mono& a, const Mono& b) { return ring_.cmp(a, b) < 0; };
    std::priority_queue<Mono, std::vector<Mono>, decltype(less)> heap(less);
    acc.reserve(p.size() * 4);
    for (const auto& t : p) {
      auto [it, fresh] = acc.emplace(t.m, t.c);
      if (fresh) {
        heap.push(t.m);
      } else {
        it->second = f_.add(it->second, t.c);
      }
    }
    Poly done;
    while (!heap.empty()) {
      Mono m = heap.top();
      heap.pop();
      auto it = acc.find(m);
      Elem c = std::move(it->second);
      acc.erase(it);
      if (f_.zero(c)) continue;
      const Poly* g = find_divisor(m);
      if (!g) {
        done.push_back({m, std::move(c)});
        continue;
      }
      Mono q = ring_.quotient(m, (*g)[0].m);
      for (std::size_t j = 1; j < g->size(); ++j) {
        Mono gm = ring_.mul((*g)[j].m, q);
        Elem v = f_.neg(f_.mul(c, (*g)[j].c));
        auto [jt, fresh] = acc.emplace(gm, v);
        if (fresh) {
          heap.push(gm);
        } else {
          jt->second = f_.add(jt->second, v);
        }
      }
    }
    make_monic(done);
    return done;
  }

  Poly spoly(const Pair& pr) const {
    const Poly& a = polys_[pr.i];
    const Poly& b = polys_[pr.j];
    Mono qa = ring_.quotient(pr.lcm, a[0].m);
    Mono qb = ring_.quotient(pr.lcm, b[0].m);
    Poly sa;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back({ring_.mul(t.m, qa), t.c});
    Elem one = f_.inv(b[0].c);  // b is monic, so this is 1
    return sub_mul(sa, 0, one, qb, b);
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(Poly h, int sugar) {
    const std::size_t hi = polys_.size();
    const Mono hm = h[0].m;
    sugar = std::max<int>(sugar, hm.deg);
    polys_.push_back(std::move(h));
    active_.push_back(false);
    sugar_.push_back(sugar);

    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Mono l = ring_.lcm(polys_[g][0].m, hm);
      int s = std::max(sugar_[g] + l.deg - polys_[g][0].m.deg, sugar + l.deg - hm.deg);
      c.push_back({g, hi, l, s});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = ring_.coprime(polys_[p.i][0].m, hm);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (ring_.divides(c[l].lcm, p.lcm)) keep = false;
        }
        for (const Pair& q : d) {
          if (!keep) break;
          if (ring_.divides(q.lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = ring_.divides(hm, p.lcm) && !equal(ring_.lcm(polys_[p.i][0].m, hm), p.lcm) &&
                  !equal(ring_.lcm(polys_[p.j][0].m, hm), p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : d) {
      if (!ring_.coprime(polys_[p.i][0].m, hm)) next.push_back(p);
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && ring_.divides(hm, polys_[g][0].m)) active_[g] = false;
    }
    active_[hi] = true;
  }

  bool equal(const Mono& a, const Mono& b) const { return ring_.cmp(a, b) == 0; }

  Field f_;
  Ring ring_;
  std::size_t max_pairs_;
  std::size_t processed_ = 0;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<int> sugar_;
  std::vector<Pair> pairs_;
};

template <class Field>
GroebnerResult run_with(Field field, const std::vector<Polynomial>& eqs, int nvars, std::size_t max_pairs) {
  Buchberger<Field> engine(field, nvars, max_pairs);
  std::vector<typename Buchberger<Field>::Poly> loaded;
  if (!engine.load(eqs, loaded)) return {};
  return engine.run(loaded);
}

int shared_variable_count(const std::vector<Polynomial>& eqs) {
  int n = eqs.empty() ? 0 : eqs.front().variable_count();
  for (const auto& p : eqs) {
    if (p.variable_count() != n) throw std::invalid_argument("groebner: mixed variable spaces");
  }
  return n;
}

}  // namespace

GroebnerResult groebner_basis(const std::vector<Polynomial>& equations, const GroebnerOptions& options) {
  const int n = shared_variable_count(equations);
  if (n > kMaxVars - 1) throw std::invalid_argument("groebner: at most 63 variables");
  try {
    if (options.prime == 0) return run_with(RationalField{}, equations, n, options.max_pairs);
    if (options.prime >= (std::uint64_t{1} << 31) || !is_prime(options.prime)) {
      throw std::invalid_argument("groebner: modulus must be a prime below 2^31");
    }
    return run_with(PrimeField{options.prime}, equations, n, options.max_pairs);
  } catch (const ExponentOverflow&) {
    return {};
  }
}

Solvability has_solution(const std::vector<Polynomial>& equations, const GroebnerOptions& options) {
  return groebner_basis(equations, options).status;
}

Solvability has_solution_avoiding_zero(const std::vector<Polynomial>& equations,
                                       const std::vector<int>& nonzero, const GroebnerOptions& options) {
  if (nonzero.empty()) return has_solution(equations, options);
  const int n = shared_variable_count(equations);
  std::vector<Polynomial> lifted;
  for (const auto& p : equations) {
    Polynomial q(n + 1);
    for (const auto& [e, c] : p.terms()) {
      Exponents ne = e;
      ne.push_back(0);
      q.add_term(ne, c);
    }
    lifted.push_back(std::move(q));
  }
  Exponents e(n + 1, 0);
  for (int v : nonzero) e.at(v) += 1;
  e[n] = 1;
  Polynomial r = Polynomial::monomial(e, 1) - Polynomial::constant(n + 1, 1);
  lifted.push_back(std::move(r));
  return has_solution(lifted, options);
}

namespace {

/// Standard monomials, counted by extending one variable at a time from the
/// last incremented index so each monomial is visited once.
void count_standard(const std::vector<Exponents>& leads, Exponents& cur, int from, BigInt& count) {
  count += 1;
  const int n = static_cast<int>(cur.size());
  for (int i = from; i < n; ++i) {
    cur[i]++;
    bool reducible = false;
    for (const auto& l : leads) {
      bool div = true;
      for (int k = 0; k < n && div; ++k) div = l[k] <= cur[k];
      if (div) {
        reducible = true;
        break;
      }
    }
    if (!reducible) count_standard(leads, cur, i, count);
    cur[i]--;
  }
}

}  // namespace

std::optional<BigInt> solution_count(const std::vector<Polynomial>& equations, const GroebnerOptions& options) {
  GroebnerResult r = groebner_basis(equations, options);
  if (r.status == Solvability::Indeterminate) return std::nullopt;
  if (r.status == Solvability::Unsolvable) return BigInt(0);
  const int n = shared_variable_count(equations);
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& l : r.leading_monomials) {
      bool only_i = l[i] > 0;
      for (int k = 0; k < n && only_i; ++k) only_i = (k == i) || l[k] == 0;
      if (only_i) pure = true;
    }
    if (!pure) return std::nullopt;
  }
  BigInt count = 0;
  Exponents cur(n, 0);
  count_standard(r.leading_monomials, cur, 0, count);
  return count;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  using u128 = unsigned __int128;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>(u128(r) * b % n);
      b = static_cast<std::uint64_t>(u128(b) * b % n);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(u128(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime31(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 30, (std::uint64_t{1} << 31) - 1);
  for (;;) {
    std::uint64_t c = dist(rng) | 1;
    if (is_prime(c)) return c;
  }
}

}  // namespace rigidbound
