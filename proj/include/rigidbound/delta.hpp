#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidbound/polynomial.hpp"
#include "rigidbound/sphere.hpp"

namespace rigidbound {

/// Chosen delta slot l(u) in 1..d for every free vertex that still has
/// variables. Never the s_u slot.
struct DeltaChoice {
  std::map<Vertex, int> slot;

  std::string to_string() const;  // "4:1,5:2,..."
  friend bool operator==(const DeltaChoice&, const DeltaChoice&) = default;
};

/// Conjecture mode: a single choice, slot 1 everywhere (or the smallest
/// surviving coordinate slot). Otherwise every combination over surviving
/// coordinate slots, with the first free vertex held at its first slot.
std::vector<DeltaChoice> delta_choices(const SphereSystem& sys, bool conjecture_mode);

/// Integer vector over the system's variables together with the facet
/// normals it was summed from ("delta_4", "e(t_8_3)", ...).
struct NormalVector {
  std::vector<long> components;
  std::vector<std::string> facets;
};

/// -1 on every variable of vertex u.
std::vector<long> delta_normal(const SphereSystem& sys, Vertex u);

/// Inner facet normals of the m-Bezout polytope, a product of one scaled
/// simplex per free vertex: every e_i, then delta_u per free vertex.
std::vector<NormalVector> facet_normals(const SphereSystem& sys);

/// The transformed system F~(t), variables aligned one-to-one with the
/// sphere system's variables and named t_u_k.
struct DeltaSystem {
  PolySystem system;
  std::vector<Slot> slots;
  DeltaChoice choice;
  std::vector<Vertex> vertices;      // ascending, one per delta variable
  std::vector<int> delta_variables;  // index of t_{u,l(u)}
  std::vector<std::vector<int>> blocks;  // variables of each vertex in `vertices`

  /// delta_u for a delta variable, e_i for any other variable, summed.
  NormalVector normal_for(const std::vector<int>& zeroed) const;
};

/// x_{u,l} -> 1/t_{u,l}, x_{u,k} -> t_{u,k}/t_{u,l}, then multiply by
/// t_{u,l}^{D_u} where D_u is the largest X_u-degree over the terms of f.
/// `blocks[j]` lists the variables of one vertex; `delta_vars[j]` is its
/// delta variable. Coefficients are unchanged.
Polynomial delta_transform(const Polynomial& f, const std::vector<std::vector<int>>& blocks,
                           const std::vector<int>& delta_vars);

/// Throws std::invalid_argument when the choice names a pinned vertex, the
/// s-slot, a slot that no longer exists, or misses a vertex.
DeltaSystem construct_delta_poly(const SphereSystem& sys, const DeltaChoice& choice);

/// Substitutes 0 for each listed variable; the variable space is kept.
PolySystem zero_evaluate(const PolySystem& sys, const std::vector<int>& vars);

}  // namespace rigidbound
