#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "rigidbound/catalog.hpp"
#include "rigidbound/exactness.hpp"
#include "rigidbound/orient.hpp"

using namespace rigidbound;

namespace {

OracleConfig config(std::uint64_t seed, int trials = 3) {
  OracleConfig c;
  c.seed = seed;
  c.trials = trials;
  return c;
}

}  // namespace

TEST_CASE("Desargues in the plane is inexact at every delta variable") {
  auto des = named_graph("desargues");
  OracleConfig c = config(101);
  c.fix_reflection = true;
  c.evaluate_all = true;
  ExactnessReport r = is_mbezout_exact(des.graph, des.base, Flavor::Euclidean, true, c, "desargues");
  CHECK(r.verdict == Verdict::Inexact);
  CHECK(r.trials_agree);
  CHECK(r.choice_count == 1);
  REQUIRE(r.evaluations.size() == 9);
  for (const auto& e : r.evaluations) CHECK(e.result == Solvability::Solvable);
  REQUIRE(r.witness_normal);
  CHECK(r.witness_normal->components == std::vector<long>(6, -1));
  CHECK(r.witness_normal->facets == std::vector<std::string>{"delta_4", "delta_5", "delta_6"});
  CHECK_FALSE(r.mixed_volume_certified);

  // Without the reflection fix and over all choices.
  ExactnessReport full = is_mbezout_exact(des.graph, des.base, Flavor::Euclidean, false, config(102, 1));
  CHECK(full.verdict == Verdict::Inexact);
}

TEST_CASE("Desargues on the sphere is exact for every delta choice") {
  auto des = named_graph("desargues");
  ExactnessReport r = is_mbezout_exact(des.graph, des.base, Flavor::Spherical, false, config(7), "desargues");
  CHECK(r.verdict == Verdict::Exact);
  CHECK(r.trials_agree);
  // d^(n-d-1) choices, n-d zero evaluations each, per trial.
  CHECK(r.choice_count == 8);
  CHECK(r.evaluations.size() == 3 * 8 * 4);
  for (const auto& e : r.evaluations) CHECK(e.result == Solvability::Unsolvable);
  CHECK_FALSE(r.witness_normal);
}

TEST_CASE("Jackson-Owen witness normal") {
  auto jo = named_graph("jackson-owen");
  ExactnessReport r = is_mbezout_exact(jo.graph, jo.base, Flavor::Euclidean, true, config(5, 1), "jackson-owen");
  CHECK(r.verdict == Verdict::Inexact);
  CHECK(r.variable_count == 13);
  REQUIRE(r.witness_normal);
  std::vector<long> expected(12, -1);
  expected.push_back(0);
  CHECK(r.witness_normal->components == expected);
  int deltas = 0, coords = 0;
  for (const auto& f : r.witness_normal->facets) (f.rfind("delta_", 0) == 0 ? deltas : coords) += 1;
  CHECK(deltas == 6);
  CHECK(coords == 1);
}

TEST_CASE("same seed, same report") {
  auto l56 = named_graph("l56");
  OracleConfig c = config(42, 2);
  std::string a = is_mbezout_exact(l56.graph, l56.base, Flavor::Euclidean, true, c, "l56").to_json().dump();
  std::string b = is_mbezout_exact(l56.graph, l56.base, Flavor::Euclidean, true, c, "l56").to_json().dump();
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["verdict"] == "inexact");
  CHECK(j["seed"] == 42);
  CHECK(j["trials"].size() == 2);
  CHECK(j.contains("witness_normal"));
  CHECK(j["mixed_volume_certified"] == false);
}

TEST_CASE("the reflection fix does not change the verdict") {
  for (const char* name : {"desargues", "l56", "g48"}) {
    auto ng = named_graph(name);
    for (Flavor flavor : {Flavor::Euclidean, Flavor::Spherical}) {
      OracleConfig c = config(9, 1);
      Verdict plain = is_mbezout_exact(ng.graph, ng.base, flavor, true, c).verdict;
      c.fix_reflection = true;
      Verdict fixed = is_mbezout_exact(ng.graph, ng.base, flavor, true, c).verdict;
      CHECK_MESSAGE(plain == fixed, name << " " << to_string(flavor));
      CHECK(plain != Verdict::Indeterminate);
    }
  }
}

TEST_CASE("H1-only plane graphs are exact") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g(2, {{1, 2}});
    const int steps = 1 + trial % 4;
    for (int s = 0; s < steps; ++s) {
      auto pick = oracle::random_permutation(g.vertex_count(), rng);
      pick.resize(2);
      g = g.with_new_vertex(pick);
    }
    DimensionedGraph dg{g, 2};
    FixedBase base{{1, 2}};
    CHECK(mbezout_via_orientations(dg, base).value == pow2(static_cast<unsigned>(steps)));
    CHECK(is_mbezout_exact(dg, base, Flavor::Euclidean, false, config(trial + 1, 1)).verdict == Verdict::Exact);
  }
}

TEST_CASE("conjecture probe") {
  auto des = named_graph("desargues");
  ConjectureProbe p = conjecture_consistency(des.graph, des.base, Flavor::Spherical, config(3, 1));
  CHECK(p.consistent);
  CHECK(p.all_choices.verdict == Verdict::Exact);
  auto l56 = named_graph("l56");
  ConjectureProbe q = conjecture_consistency(l56.graph, l56.base, Flavor::Euclidean, config(4, 1));
  CHECK(q.consistent);
  CHECK(q.single_choice.verdict == Verdict::Inexact);
  CHECK(q.all_choices.verdict == Verdict::Inexact);
}

TEST_CASE("an exhausted oracle is indeterminate, never exact") {
  auto des = named_graph("desargues");
  OracleConfig c = config(1, 2);
  c.max_pairs = 1;
  c.retries = 1;
  ExactnessReport r = is_mbezout_exact(des.graph, des.base, Flavor::Spherical, true, c);
  CHECK(r.verdict == Verdict::Indeterminate);
  for (const auto& e : r.evaluations)
    if (e.result == Solvability::Indeterminate) CHECK(e.attempts == 2);
}

TEST_CASE("face systems are written when requested") {
  auto k = named_graph("l56");
  auto dir = std::filesystem::temp_directory_path() / "rigidbound_emit_test";
  std::filesystem::remove_all(dir);
  OracleConfig c = config(2, 1);
  c.emit_dir = dir.string();
  c.find_witness = false;
  ExactnessReport r = is_mbezout_exact(k.graph, k.base, Flavor::Spherical, true, c);
  int txt = 0, json = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    txt += f.path().extension() == ".txt";
    json += f.path().extension() == ".json";
  }
  CHECK(txt == static_cast<int>(r.evaluations.size()));
  CHECK(json == txt);
  std::filesystem::remove_all(dir);
}
