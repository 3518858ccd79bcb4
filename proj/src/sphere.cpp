#include "rigidbound/sphere.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rigidbound/errors.hpp"

namespace rigidbound {

std::string to_string(Flavor f) { return f == Flavor::Euclidean ? "euclidean" : "spherical"; }

Flavor parse_flavor(const std::string& text) {
  if (text == "euclidean") return Flavor::Euclidean;
  if (text == "spherical") return Flavor::Spherical;
  throw std::invalid_argument("unknown flavor '" + text + "' (expected euclidean or spherical)");
}

namespace {

int coordinate_count(Flavor f, int d) { return f == Flavor::Euclidean ? d : d + 1; }

std::vector<BigRational> random_point(Flavor f, int d, int range, std::mt19937_64& rng) {
  if (f == Flavor::Euclidean) {
    std::uniform_int_distribution<int> dist(1, range);
    std::bernoulli_distribution sign(0.5);
    std::vector<BigRational> p(d);
    for (auto& x : p) x = sign(rng) ? dist(rng) : -dist(rng);
    return p;
  }
  // Inverse stereographic projection of a nonzero integer point y:
  // (2y, |y|^2 - 1) / (|y|^2 + 1) has all coordinates nonzero once every
  // y_i != 0 and d >= 2.
  std::uniform_int_distribution<int> dist(1, 6);
  std::bernoulli_distribution sign(0.5);
  std::vector<BigRational> y(d);
  BigRational norm = 0;
  for (auto& v : y) {
    v = sign(rng) ? dist(rng) : -dist(rng);
    norm += v * v;
  }
  std::vector<BigRational> p;
  for (const auto& v : y) p.push_back(2 * v / (norm + 1));
  p.push_back((norm - 1) / (norm + 1));
  return p;
}

BigRational squared_length(Flavor f, const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  BigRational s = 0;
  if (f == Flavor::Euclidean) {
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
  }
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return 2 - 2 * s;
}

}  // namespace

SphereInstance sample_instance(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                               const InstanceOptions& options, std::mt19937_64& rng) {
  validate_base(g, base);
  SphereInstance inst;
  inst.flavor = flavor;
  inst.d = g.d;
  std::set<std::vector<BigRational>> used;
  auto fresh_point = [&] {
    for (;;) {
      auto p = random_point(flavor, g.d, options.coordinate_range, rng);
      if (used.insert(p).second) return p;
    }
  };
  for (Vertex v : base.vertices) inst.fixed_coords[v] = fresh_point();
  if (options.fix_reflection) {
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (base.contains(v)) continue;
      bool all = std::all_of(base.vertices.begin(), base.vertices.end(),
                             [&](Vertex b) { return g.graph.has_edge(v, b); });
      if (all) {
        inst.fixed_coords[v] = fresh_point();
        inst.reflection_vertex = v;
        break;
      }
    }
  }
  std::uniform_int_distribution<std::uint64_t> len =
      options.prime ? std::uniform_int_distribution<std::uint64_t>(1, options.prime - 1)
                    : std::uniform_int_distribution<std::uint64_t>(1000, 1000000);
  for (const Edge& e : g.graph.edges()) {
    auto a = inst.fixed_coords.find(e.u);
    auto b = inst.fixed_coords.find(e.v);
    if (a != inst.fixed_coords.end() && b != inst.fixed_coords.end()) {
      inst.lambda2[e] = squared_length(flavor, a->second, b->second);
    } else {
      inst.lambda2[e] = BigRational(BigInt(len(rng)));
    }
  }
  return inst;
}

std::optional<int> SphereSystem::variable_of(Vertex u, int index) const {
  for (int i = 0; i < variable_count(); ++i) {
    if (slots[i].vertex == u && slots[i].index == index) return i;
  }
  return std::nullopt;
}

std::vector<int> SphereSystem::variables_of(Vertex u) const {
  std::vector<int> out;
  for (int i = 0; i < variable_count(); ++i) {
    if (slots[i].vertex == u) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return slots[a].index < slots[b].index; });
  return out;
}

SphereSystem build_sphere_system(const DimensionedGraph& g, const FixedBase& base, const SphereInstance& inst) {
  validate_base(g, base);
  if (inst.d != g.d) throw std::invalid_argument("instance dimension does not match the graph");
  const int d = g.d;
  const int coords = coordinate_count(inst.flavor, d);
  for (Vertex b : base.vertices) {
    if (!inst.fixed_coords.count(b)) throw std::invalid_argument("missing coordinates for base vertex");
  }
  for (const auto& [v, p] : inst.fixed_coords) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("pinned vertex out of range");
    if (static_cast<int>(p.size()) != coords) throw std::invalid_argument("pinned coordinates have wrong length");
    for (const auto& x : p) {
      if (x == 0) throw std::invalid_argument("pinned coordinates must be nonzero");
    }
    if (inst.flavor == Flavor::Spherical) {
      BigRational s = 0;
      for (const auto& x : p) s += x * x;
      if (s != 1) throw std::invalid_argument("spherical pinned point is not on the unit sphere");
    }
  }

  SphereSystem sys;
  sys.d = d;
  sys.flavor = inst.flavor;
  for (Vertex v = 1; v <= g.n(); ++v) (inst.fixed_coords.count(v) ? sys.fixed : sys.free).push_back(v);
  for (Vertex u : sys.free) {
    for (int k = 1; k <= d + 1; ++k) {
      sys.slots.push_back({u, k});
      if (inst.flavor == Flavor::Euclidean && k == d + 1) {
        sys.names.push_back("s" + std::to_string(u));
      } else {
        sys.names.push_back("x" + std::to_string(u) + "_" + std::to_string(k));
      }
    }
  }
  const int nv = sys.variable_count();
  auto var = [&](Vertex u, int k) { return Polynomial::variable(nv, *sys.variable_of(u, k)); };
  auto cst = [&](const BigRational& c) { return Polynomial::constant(nv, c); };
  // Coordinate k (1-based, k <= coords) of a vertex: unknown or pinned.
  auto coord = [&](Vertex u, int k) {
    auto it = inst.fixed_coords.find(u);
    return it != inst.fixed_coords.end() ? cst(it->second[k - 1]) : var(u, k);
  };
  auto s_term = [&](Vertex u) {
    auto it = inst.fixed_coords.find(u);
    if (it == inst.fixed_coords.end()) return var(u, d + 1);
    BigRational s = 0;
    for (const auto& x : it->second) s += x * x;
    return cst(s);
  };

  for (Vertex u : sys.free) {
    Polynomial f(nv);
    for (int k = 1; k <= coords; ++k) f = f + var(u, k) * var(u, k);
    f = f - (inst.flavor == Flavor::Euclidean ? var(u, d + 1) : cst(1));
    sys.equations.push_back(f);
    sys.labels.push_back("magnitude " + std::to_string(u));
  }
  for (const Edge& e : g.graph.edges()) {
    if (inst.fixed_coords.count(e.u) && inst.fixed_coords.count(e.v)) continue;
    auto it = inst.lambda2.find(e);
    if (it == inst.lambda2.end()) throw std::invalid_argument("missing squared length for an edge");
    Polynomial inner(nv);
    for (int k = 1; k <= coords; ++k) inner = inner + coord(e.u, k) * coord(e.v, k);
    Polynomial f = inst.flavor == Flavor::Euclidean ? s_term(e.u) + s_term(e.v) : cst(2);
    f = f - inner.scaled(2) - cst(it->second);
    sys.equations.push_back(f);
    sys.labels.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return sys;
}

SphereSystem eliminate_linear(const SphereSystem& input) {
  SphereSystem sys = input;
  const int nv = sys.variable_count();
  std::vector<bool> gone(nv, false);
  for (;;) {
    int pick_eq = -1;
    for (int i = 0; i < sys.equation_count(); ++i) {
      const Polynomial& f = sys.equations[i];
      if (!f.is_constant() && f.total_degree() <= 1) {
        pick_eq = i;
        break;
      }
    }
    if (pick_eq < 0) break;
    const Polynomial f = sys.equations[pick_eq];
    int pick_var = -1;
    for (int v = 0; v < nv; ++v) {
      if (!f.depends_on(v)) continue;
      if (pick_var < 0) {
        pick_var = v;
        continue;
      }
      const Slot& a = sys.slots[v];
      const Slot& b = sys.slots[pick_var];
      if (a.index > b.index || (a.index == b.index && a.vertex < b.vertex)) pick_var = v;
    }
    Exponents e(nv, 0);
    e[pick_var] = 1;
    BigRational c = f.coefficient(e);
    // v = -(f - c v) / c
    Polynomial value = (f - Polynomial::monomial(e, c)).scaled(-1 / c);
    sys.eliminated.push_back(sys.names[pick_var] + " = " + value.to_string(sys.names));
    sys.equations.erase(sys.equations.begin() + pick_eq);
    sys.labels.erase(sys.labels.begin() + pick_eq);
    for (auto& g : sys.equations) g = g.substitute(pick_var, value);
    gone[pick_var] = true;
    // Drop equations that became identically zero.
    for (int i = sys.equation_count() - 1; i >= 0; --i) {
      if (sys.equations[i].is_zero()) {
        sys.equations.erase(sys.equations.begin() + i);
        sys.labels.erase(sys.labels.begin() + i);
      }
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < nv; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  SphereSystem out = sys;
  out.slots.clear();
  out.names.clear();
  for (int v : keep) {
    out.slots.push_back(sys.slots[v]);
    out.names.push_back(sys.names[v]);
  }
  for (auto& g : out.equations) g = g.restricted(keep);
  return out;
}

}  // namespace rigidbound
