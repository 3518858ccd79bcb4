#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidbound/delta.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/groebner.hpp"
#include "rigidbound/sphere.hpp"

#include <json.hpp>

namespace rigidbound {

struct OracleConfig {
  /// Independent (prime, instance) trials.
  int trials = 3;
  /// Fixed prime for every trial; 0 draws a random 31-bit prime per trial.
  std::uint64_t prime = 0;
  /// Work over the rationals instead of a prime field.
  bool rational = false;
  std::uint64_t seed = 1;
  std::size_t max_pairs = 100000;
  /// Fresh primes tried after an indeterminate run.
  int retries = 5;
  bool eliminate_linear = true;
  bool fix_reflection = false;
  /// Keep evaluating after the first solvable face system.
  bool evaluate_all = false;
  bool find_witness = true;
  /// When set, every tested face system is written here (text and JSON).
  std::optional<std::string> emit_dir;
};

enum class Verdict { Exact, Inexact, Indeterminate };
std::string to_string(Verdict v);

struct EvaluationRecord {
  int trial = 0;
  DeltaChoice choice;
  std::string zeroed;  // t-variable name
  Solvability result = Solvability::Indeterminate;
  std::uint64_t prime = 0;  // last prime used; 0 for the rationals
  int attempts = 0;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Indeterminate;
  std::optional<Vertex> reflection_vertex;
};

struct ExactnessReport {
  std::string graph_id;
  FixedBase base;
  Flavor flavor = Flavor::Euclidean;
  bool conjecture_mode = true;
  std::uint64_t seed = 0;
  int variable_count = 0;
  std::vector<std::string> variables;  // t-variables of the tested systems
  std::size_t choice_count = 0;
  std::vector<TrialRecord> trials;
  std::vector<EvaluationRecord> evaluations;
  Verdict verdict = Verdict::Indeterminate;
  bool trials_agree = false;
  std::optional<NormalVector> witness_normal;
  std::vector<std::string> witness_zeroed;
  /// The check runs on the m-Bezout polytopes; the verdict speaks about the
  /// actual root count only where mixed volume equals mB, which is not
  /// certified here.
  bool mixed_volume_certified = false;

  nlohmann::json to_json() const;
};

/// Algorithm: for each trial draw a prime and a generic instance, build the
/// sphere system (optionally linearly reduced), and for every delta choice
/// (one in conjecture mode) zero each delta variable in turn and ask the
/// Groebner oracle for a common root. Any root means inexact; all empty
/// means exact; otherwise indeterminate. Inexact trials also search for a
/// witness normal: starting from the solvable zero set, variables are added
/// while the system stays solvable until a root with all remaining
/// coordinates nonzero exists.
ExactnessReport is_mbezout_exact(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                                 bool conjecture_mode, const OracleConfig& config,
                                 const std::string& graph_id = "");

struct ConjectureProbe {
  bool consistent = false;
  ExactnessReport single_choice;
  ExactnessReport all_choices;
};

/// Runs both modes with the same configuration and compares verdicts.
ConjectureProbe conjecture_consistency(const DimensionedGraph& g, const FixedBase& base, Flavor flavor,
                                       const OracleConfig& config, const std::string& graph_id = "");

}  // namespace rigidbound
