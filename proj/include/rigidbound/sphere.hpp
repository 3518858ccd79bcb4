#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigidbound/graph.hpp"
#include "rigidbound/polynomial.hpp"

namespace rigidbound {

/// Euclidean: unknowns X_u in C^d plus s_u = |X_u|^2.
/// Spherical: X_u in C^(d+1) on the unit sphere, no s_u.
enum class Flavor { Euclidean, Spherical };
std::string to_string(Flavor f);
/// "euclidean" or "spherical"; throws std::invalid_argument.
Flavor parse_flavor(const std::string& text);

/// Concrete data for one system: coordinates of every pinned vertex and a
/// squared length per edge. Values are exact rationals (integers when sampled).
struct SphereInstance {
  Flavor flavor = Flavor::Euclidean;
  int d = 2;
  std::map<Vertex, std::vector<BigRational>> fixed_coords;
  std::map<Edge, BigRational> lambda2;
  /// Extra vertex pinned to remove the reflection about the base, if any.
  std::optional<Vertex> reflection_vertex;
};

struct InstanceOptions {
  /// 0 draws squared lengths in [1e3, 1e6]; a prime p draws them in [1, p-1].
  std::uint64_t prime = 0;
  bool fix_reflection = false;
  /// Euclidean fixed coordinates are nonzero integers in [-range, range].
  int coordinate_range = 20;
};

/// Random generic instance. Base vertices get random nonzero coordinates
/// (rational points of the unit sphere in the spherical case, by inverse
/// stereographic projection) and the base's internal lengths follow from
/// them. With fix_reflection, the first free vertex adjacent to the whole
/// base is pinned the same way.
SphereInstance sample_instance(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                               const InstanceOptions& options, std::mt19937_64& rng);

/// Variable slot k of vertex u: 1..d are coordinates; d+1 is s_u
/// (Euclidean) or the last coordinate (spherical).
struct Slot {
  Vertex vertex = 0;
  int index = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct SphereSystem {
  int d = 2;
  Flavor flavor = Flavor::Euclidean;
  std::vector<Vertex> fixed;  // ascending, base plus any reflection vertex
  std::vector<Vertex> free;   // ascending
  std::vector<Slot> slots;    // variable i lives in slots[i]
  std::vector<std::string> names;
  std::vector<Polynomial> equations;
  std::vector<std::string> labels;
  /// Substitutions performed by linear elimination, as "name = expr".
  std::vector<std::string> eliminated;

  int variable_count() const { return static_cast<int>(slots.size()); }
  int equation_count() const { return static_cast<int>(equations.size()); }
  std::optional<int> variable_of(Vertex u, int index) const;
  /// Variable indices of vertex u, ascending slot.
  std::vector<int> variables_of(Vertex u) const;
  PolySystem poly_system() const { return {names, equations}; }
};

/// Magnitude equations for free vertices (ascending), then one equation per
/// edge with a free endpoint (lexicographic); edges among pinned vertices are
/// omitted. Euclidean: |X_u|^2 - s_u and s_u + s_v - 2<X_u, X_v> - lambda^2.
/// Spherical: |X_u|^2 - 1 and 2 - 2<X_u, X_v> - lambda^2. Pinned vertices are
/// substituted. Throws InvalidBaseError for a bad base and
/// std::invalid_argument for zero or missing data.
SphereSystem build_sphere_system(const DimensionedGraph& g, const FixedBase& base, const SphereInstance& inst);

/// Repeatedly solves an affine-linear equation for one variable (s_u first,
/// otherwise the highest coordinate slot) and substitutes it everywhere.
SphereSystem eliminate_linear(const SphereSystem& sys);

}  // namespace rigidbound
