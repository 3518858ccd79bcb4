#include "rigidbound/exactness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

namespace rigidbound {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exact:
      return "exact";
    case Verdict::Inexact:
      return "inexact";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct OracleCall {
  Solvability result = Solvability::Indeterminate;
  std::uint64_t prime = 0;
  int attempts = 0;
};

class Oracle {
 public:
  Oracle(const OracleConfig& config, std::mt19937_64& rng) : config_(config), rng_(rng) {}

  /// `nonzero` empty: plain solvability; otherwise roots avoiding zero there.
  OracleCall ask(const PolySystem& sys, std::uint64_t prime, const std::vector<int>& nonzero = {}) {
    OracleCall call;
    call.prime = prime;
    const int limit = (config_.rational || prime == 0) ? 1 : 1 + config_.retries;
    while (call.attempts < limit) {
      if (call.attempts > 0) call.prime = random_prime31(rng_);
      ++call.attempts;
      GroebnerOptions opt{call.prime, config_.max_pairs};
      call.result = nonzero.empty() ? has_solution(sys.equations, opt)
                                    : has_solution_avoiding_zero(sys.equations, nonzero, opt);
      if (call.result != Solvability::Indeterminate) break;
    }
    return call;
  }

 private:
  const OracleConfig& config_;
  std::mt19937_64& rng_;
};

void emit_system(const std::string& dir, const std::string& stem, const PolySystem& sys) {
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (stem + ".txt")) << sys.to_text();
  std::ofstream(std::filesystem::path(dir) / (stem + ".json")) << sys.to_json().dump(1) << "\n";
}

struct WitnessSearch {
  std::optional<NormalVector> normal;
  std::vector<std::string> zeroed;
};

/// Adds every variable that no longer occurs in the face system. Its e_i
/// leaves the face system unchanged, so the closed set names the same face
/// by its largest zero set.
void close_zero_set(const PolySystem& sys, std::vector<int>& z) {
  PolySystem face = zero_evaluate(sys, z);
  for (int v = 0; v < sys.variable_count(); ++v) {
    if (std::find(z.begin(), z.end(), v) != z.end()) continue;
    bool used = std::any_of(face.equations.begin(), face.equations.end(),
                            [&](const Polynomial& f) { return f.depends_on(v); });
    if (!used) z.push_back(v);
  }
}

std::vector<int> complement(int nv, const std::vector<int>& z) {
  std::vector<int> rest;
  for (int v = 0; v < nv; ++v) {
    if (std::find(z.begin(), z.end(), v) == z.end()) rest.push_back(v);
  }
  return rest;
}

WitnessSearch make_witness(const DeltaSystem& ds, const std::vector<int>& z) {
  WitnessSearch out;
  out.normal = ds.normal_for(z);
  for (int v : z) out.zeroed.push_back(ds.system.variables[v]);
  return out;
}

/// First all delta variables at once (closed as above); failing that, greedy
/// descent from a solvable zero set toward one with a root whose remaining
/// coordinates are all nonzero.
WitnessSearch find_witness(const DeltaSystem& ds, int start, Oracle& oracle, std::uint64_t prime) {
  const int nv = ds.system.variable_count();
  {
    std::vector<int> z(ds.delta_variables);
    if (oracle.ask(zero_evaluate(ds.system, z), prime).result == Solvability::Solvable) {
      close_zero_set(ds.system, z);
      std::vector<int> rest = complement(nv, z);
      if (rest.empty() || oracle.ask(zero_evaluate(ds.system, z), prime, rest).result == Solvability::Solvable) {
        return make_witness(ds, z);
      }
    }
  }
  std::vector<int> order(ds.delta_variables);
  std::vector<int> others;
  for (int v = 0; v < nv; ++v) {
    if (std::find(order.begin(), order.end(), v) == order.end()) others.push_back(v);
  }
  std::stable_sort(others.begin(), others.end(), [&](int a, int b) {
    if (ds.slots[a].index != ds.slots[b].index) return ds.slots[a].index > ds.slots[b].index;
    return ds.slots[a].vertex < ds.slots[b].vertex;
  });
  order.insert(order.end(), others.begin(), others.end());

  WitnessSearch out;
  std::vector<int> z{start};
  while (static_cast<int>(z.size()) <= nv) {
    std::vector<int> rest = complement(nv, z);
    OracleCall toric = oracle.ask(zero_evaluate(ds.system, z), prime, rest);
    if (toric.result == Solvability::Solvable) return make_witness(ds, z);
    if (toric.result == Solvability::Indeterminate || rest.empty()) return out;
    bool grew = false;
    for (int c : order) {
      if (std::find(z.begin(), z.end(), c) != z.end()) continue;
      std::vector<int> next = z;
      next.push_back(c);
      if (oracle.ask(zero_evaluate(ds.system, next), prime).result == Solvability::Solvable) {
        z = std::move(next);
        grew = true;
        break;
      }
    }
    if (!grew) return out;
  }
  return out;
}

}  // namespace

ExactnessReport is_mbezout_exact(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                                 bool conjecture_mode, const OracleConfig& config, const std::string& graph_id) {
  if (config.trials < 1) throw std::invalid_argument("at least one trial is required");
  ExactnessReport rep;
  rep.graph_id = graph_id;
  rep.base = base;
  rep.flavor = flavor;
  rep.conjecture_mode = conjecture_mode;
  rep.seed = config.seed;

  for (int t = 1; t <= config.trials; ++t) {
    TrialRecord tr;
    tr.trial = t;
    tr.seed = splitmix64(config.seed + static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(tr.seed);
    Oracle oracle(config, rng);
    std::uint64_t prime = config.rational ? 0 : (config.prime ? config.prime : random_prime31(rng));
    InstanceOptions io;
    io.prime = prime;
    io.fix_reflection = config.fix_reflection;
    SphereInstance inst = sample_instance(g, base, flavor, io, rng);
    tr.reflection_vertex = inst.reflection_vertex;
    SphereSystem sys = build_sphere_system(g, base, inst);
    if (config.eliminate_linear) sys = eliminate_linear(sys);
    std::vector<DeltaChoice> choices = delta_choices(sys, conjecture_mode);
    rep.choice_count = choices.size();

    bool solvable = false, indeterminate = false, stop = false;
    std::optional<std::pair<DeltaSystem, int>> first_hit;
    for (std::size_t ci = 0; ci < choices.size() && !stop; ++ci) {
      DeltaSystem ds = construct_delta_poly(sys, choices[ci]);
      if (rep.variables.empty()) {
        rep.variables = ds.system.variables;
        rep.variable_count = ds.system.variable_count();
      }
      for (int dv : ds.delta_variables) {
        PolySystem face = zero_evaluate(ds.system, {dv});
        if (config.emit_dir) {
          emit_system(*config.emit_dir,
                      "trial" + std::to_string(t) + "_choice" + std::to_string(ci + 1) + "_" +
                          ds.system.variables[dv],
                      face);
        }
        OracleCall call = oracle.ask(face, prime);
        EvaluationRecord er;
        er.trial = t;
        er.choice = choices[ci];
        er.zeroed = ds.system.variables[dv];
        er.result = call.result;
        er.prime = call.prime;
        er.attempts = call.attempts;
        rep.evaluations.push_back(er);
        if (call.result == Solvability::Solvable) {
          solvable = true;
          if (!first_hit) first_hit = std::make_pair(ds, dv);
          if (!config.evaluate_all) {
            stop = true;
            break;
          }
        } else if (call.result == Solvability::Indeterminate) {
          indeterminate = true;
        }
      }
    }
    tr.verdict = solvable ? Verdict::Inexact : indeterminate ? Verdict::Indeterminate : Verdict::Exact;
    if (solvable && config.find_witness && !rep.witness_normal && first_hit) {
      WitnessSearch w = find_witness(first_hit->first, first_hit->second, oracle, prime);
      rep.witness_normal = w.normal;
      rep.witness_zeroed = w.zeroed;
    }
    rep.trials.push_back(tr);
  }

  bool any_inexact = false, all_exact = true;
  for (const auto& tr : rep.trials) {
    any_inexact = any_inexact || tr.verdict == Verdict::Inexact;
    all_exact = all_exact && tr.verdict == Verdict::Exact;
  }
  rep.verdict = any_inexact ? Verdict::Inexact : all_exact ? Verdict::Exact : Verdict::Indeterminate;
  rep.trials_agree = std::all_of(rep.trials.begin(), rep.trials.end(),
                                 [&](const TrialRecord& tr) { return tr.verdict == rep.trials.front().verdict; });
  return rep;
}

ConjectureProbe conjecture_consistency(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                                       const OracleConfig& config, const std::string& graph_id) {
  ConjectureProbe probe;
  probe.single_choice = is_mbezout_exact(g, base, flavor, true, config, graph_id);
  probe.all_choices = is_mbezout_exact(g, base, flavor, false, config, graph_id);
  probe.consistent = probe.single_choice.verdict == probe.all_choices.verdict &&
                     probe.single_choice.verdict != Verdict::Indeterminate;
  return probe;
}

nlohmann::json ExactnessReport::to_json() const {
  nlohmann::json evals = nlohmann::json::array();
  for (const auto& e : evaluations) {
    evals.push_back({{"trial", e.trial},
                     {"choice", e.choice.to_string()},
                     {"zeroed", e.zeroed},
                     {"result", to_string(e.result)},
                     {"prime", e.prime},
                     {"attempts", e.attempts}});
  }
  nlohmann::json trs = nlohmann::json::array();
  for (const auto& t : trials) {
    nlohmann::json j = {{"trial", t.trial}, {"seed", t.seed}, {"verdict", to_string(t.verdict)}};
    j["reflection_vertex"] = t.reflection_vertex ? nlohmann::json(*t.reflection_vertex) : nlohmann::json(nullptr);
    trs.push_back(std::move(j));
  }
  nlohmann::json out = {{"graph", graph_id},
                        {"base", base.vertices},
                        {"flavor", to_string(flavor)},
                        {"conjecture_mode", conjecture_mode},
                        {"seed", seed},
                        {"variables", variables},
                        {"delta_choices", choice_count},
                        {"trials", trs},
                        {"evaluations", evals},
                        {"verdict", to_string(verdict)},
                        {"trials_agree", trials_agree},
                        {"mixed_volume_certified", mixed_volume_certified}};
  if (witness_normal) {
    out["witness_normal"] = {{"components", witness_normal->components}, {"facets", witness_normal->facets}};
    out["witness_zeroed"] = witness_zeroed;
  } else {
    out["witness_normal"] = nullptr;
  }
  return out;
}

}  // namespace rigidbound
