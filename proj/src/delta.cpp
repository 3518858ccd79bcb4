#include "rigidbound/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidbound {

std::string DeltaChoice::to_string() const {
  std::string out;
  for (const auto& [v, k] : slot) {
    if (!out.empty()) out += ",";
    out += std::to_string(v) + ":" + std::to_string(k);
  }
  return out;
}

namespace {

/// Free vertices that still own variables, with their coordinate slots
/// usable as delta slots.
std::vector<std::pair<Vertex, std::vector<int>>> delta_candidates(const SphereSystem& sys) {
  std::vector<std::pair<Vertex, std::vector<int>>> out;
  for (Vertex u : sys.free) {
    auto vars = sys.variables_of(u);
    if (vars.empty()) continue;
    std::vector<int> slots;
    for (int v : vars) {
      int k = sys.slots[v].index;
      if (k <= sys.d) slots.push_back(k);
    }
    if (slots.empty()) {
      throw std::invalid_argument("vertex " + std::to_string(u) + " has no coordinate slot left for a delta variable");
    }
    out.emplace_back(u, std::move(slots));
  }
  return out;
}

}  // namespace

std::vector<DeltaChoice> delta_choices(const SphereSystem& sys, bool conjecture_mode) {
  auto cand = delta_candidates(sys);
  std::vector<DeltaChoice> out;
  if (cand.empty()) return out;
  if (conjecture_mode) {
    DeltaChoice c;
    for (const auto& [u, slots] : cand) c.slot[u] = slots.front();
    out.push_back(c);
    return out;
  }
  // Mixed-radix counter; the first vertex stays at its first slot.
  std::vector<std::size_t> digit(cand.size(), 0);
  for (;;) {
    DeltaChoice c;
    for (std::size_t i = 0; i < cand.size(); ++i) c.slot[cand[i].first] = cand[i].second[digit[i]];
    out.push_back(c);
    bool wrapped = true;
    for (std::size_t i = cand.size(); i-- > 1;) {
      if (++digit[i] < cand[i].second.size()) {
        wrapped = false;
        break;
      }
      digit[i] = 0;
    }
    if (wrapped) return out;
  }
}

std::vector<long> delta_normal(const SphereSystem& sys, Vertex u) {
  std::vector<long> w(sys.variable_count(), 0);
  for (int v : sys.variables_of(u)) w[v] = -1;
  return w;
}

std::vector<NormalVector> facet_normals(const SphereSystem& sys) {
  std::vector<NormalVector> out;
  for (int i = 0; i < sys.variable_count(); ++i) {
    NormalVector e;
    e.components.assign(sys.variable_count(), 0);
    e.components[i] = 1;
    e.facets.push_back("e(" + sys.names[i] + ")");
    out.push_back(std::move(e));
  }
  for (Vertex u : sys.free) {
    if (sys.variables_of(u).empty()) continue;
    out.push_back({delta_normal(sys, u), {"delta_" + std::to_string(u)}});
  }
  return out;
}

Polynomial delta_transform(const Polynomial& f, const std::vector<std::vector<int>>& blocks,
                           const std::vector<int>& delta_vars) {
  std::vector<int> top(blocks.size(), 0);
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      int s = 0;
      for (int v : blocks[j]) s += e[v];
      top[j] = first ? s : std::max(top[j], s);
    }
    first = false;
  }
  Polynomial out(f.variable_count());
  for (const auto& [e, c] : f.terms()) {
    Exponents ne = e;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      int s = 0;
      for (int v : blocks[j]) s += e[v];
      ne[delta_vars[j]] = top[j] - s;
    }
    out.add_term(ne, c);
  }
  return out;
}

DeltaSystem construct_delta_poly(const SphereSystem& sys, const DeltaChoice& choice) {
  auto cand = delta_candidates(sys);
  DeltaSystem out;
  out.choice = choice;
  out.slots = sys.slots;
  for (const auto& [u, k] : choice.slot) {
    if (std::find(sys.free.begin(), sys.free.end(), u) == sys.free.end()) {
      throw std::invalid_argument("delta choice names pinned or unknown vertex " + std::to_string(u));
    }
    if (k < 1 || k > sys.d) throw std::invalid_argument("delta slot must lie in 1..d");
    if (!sys.variable_of(u, k)) throw std::invalid_argument("delta slot was eliminated");
  }
  for (const auto& [u, slots] : cand) {
    auto it = choice.slot.find(u);
    if (it == choice.slot.end()) throw std::invalid_argument("delta choice misses vertex " + std::to_string(u));
    out.vertices.push_back(u);
    out.delta_variables.push_back(*sys.variable_of(u, it->second));
    out.blocks.push_back(sys.variables_of(u));
  }
  for (const Slot& s : sys.slots) {
    out.system.variables.push_back("t_" + std::to_string(s.vertex) + "_" + std::to_string(s.index));
  }
  for (const auto& f : sys.equations) {
    out.system.equations.push_back(delta_transform(f, out.blocks, out.delta_variables));
  }
  return out;
}

NormalVector DeltaSystem::normal_for(const std::vector<int>& zeroed) const {
  NormalVector n;
  n.components.assign(system.variable_count(), 0);
  for (int z : zeroed) {
    auto it = std::find(delta_variables.begin(), delta_variables.end(), z);
    if (it != delta_variables.end()) {
      std::size_t j = it - delta_variables.begin();
      for (int v : blocks[j]) n.components[v] -= 1;
      n.facets.push_back("delta_" + std::to_string(vertices[j]));
    } else {
      n.components[z] += 1;
      n.facets.push_back("e(" + system.variables[z] + ")");
    }
  }
  return n;
}

PolySystem zero_evaluate(const PolySystem& sys, const std::vector<int>& vars) {
  PolySystem out = sys;
  for (auto& f : out.equations) {
    for (int v : vars) f = f.evaluate(v, 0);
  }
  return out;
}

}  // namespace rigidbound
