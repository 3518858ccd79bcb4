// rigidbound: generate / bound / compare / exactness.
//
// Exit status: 0 ok, 1 input or runtime error, 2 usage, 3 the two bound
// routes disagree, 4 indeterminate verdict under --strict.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidbound/bounds.hpp"
#include "rigidbound/catalog.hpp"
#include "rigidbound/errors.hpp"
#include "rigidbound/exactness.hpp"
#include "rigidbound/henneberg.hpp"
#include "rigidbound/orient.hpp"
#include "rigidbound/permanent.hpp"

using namespace rigidbound;
using nlohmann::json;

namespace {

constexpr int kExitDisagree = 3;
constexpr int kExitIndeterminate = 4;

struct Input {
  std::string id;
  DimensionedGraph graph;
  std::optional<FixedBase> default_base;
};

Input load_input(const std::string& path, const std::string& name) {
  if (!name.empty()) {
    NamedGraph ng = named_graph(name);
    return {ng.name, ng.graph, ng.base};
  }
  if (path.empty()) throw Error("one of --graph or --named is required");
  return {path, read_graph_file(path), std::nullopt};
}

/// Runs f over items with at most `jobs` in flight; results keep input order.
template <class T, class F>
auto ordered_map(const std::vector<T>& items, unsigned jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  if (jobs <= 1) {
    for (const auto& it : items) out.push_back(f(it));
    return out;
  }
  for (std::size_t i = 0; i < items.size(); i += jobs) {
    std::vector<std::future<R>> batch;
    for (std::size_t k = i; k < std::min(items.size(), i + jobs); ++k) {
      batch.push_back(std::async(std::launch::async, f, std::cref(items[k])));
    }
    for (auto& fu : batch) out.push_back(fu.get());
  }
  return out;
}

std::ostream& output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error("cannot write " + path);
  return file;
}

MoveSet parse_moves(const std::string& text) {
  MoveSet set{false, false};
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::transform(tok.begin(), tok.end(), tok.begin(), ::tolower);
    if (tok == "h1") {
      set.h1 = true;
    } else if (tok == "h2") {
      set.h2 = true;
    } else {
      throw Error("unknown move '" + tok + "' (expected h1,h2)");
    }
  }
  return set;
}

// generate ----------------------------------------------------------------

struct GenerateArgs {
  int d = 2;
  int n = 0;
  std::string moves = "h1,h2";
  bool tally = false;
  std::string format = "json";
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  MoveSet moves = parse_moves(a.moves);
  std::ofstream file;
  std::ostream& os = output(a.out, file);
  if (a.tally) {
    os << "n,h1_planar,h1_nonplanar,h2_planar,h2_nonplanar,other,total\n";
    auto levels = henneberg_levels(a.d, a.n, moves);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      int n = a.d + static_cast<int>(k);
      TallyRow r = tally_level(levels[k], n, a.d);
      os << n << ',' << r.h1_planar << ',' << r.h1_nonplanar << ',' << r.h2_planar << ',' << r.h2_nonplanar << ','
         << r.other << ',' << r.total() << '\n';
    }
    return 0;
  }
  GraphLevel level = henneberg_generate(a.d, a.n, moves);
  if (a.format == "edges") {
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i) os << '\n';
      write_edge_list(os, DimensionedGraph{level[i], a.d});
    }
  } else {
    json arr = json::array();
    for (const Graph& g : level) arr.push_back(graph_to_json(DimensionedGraph{g, a.d}));
    os << arr.dump() << '\n';
  }
  return 0;
}

// bound -------------------------------------------------------------------

struct BoundArgs {
  std::string graph;
  std::string named;
  std::string method = "orient";
  std::string base;
  bool all_bases = false;
  std::string emit_matrix;
  unsigned threads = 0;
  bool allow_oversize = false;
  unsigned jobs = 1;
  std::string out;
};

struct BaseRow {
  FixedBase base;
  std::optional<BigInt> orient;
  std::optional<BigInt> perm;

  const BigInt& value() const { return orient ? *orient : *perm; }
};

int run_bound(const BoundArgs& a) {
  if (a.method != "orient" && a.method != "permanent" && a.method != "both") {
    throw Error("--method must be orient, permanent or both");
  }
  Input in = load_input(a.graph, a.named);
  std::vector<FixedBase> bases;
  if (!a.base.empty()) {
    bases.push_back(parse_base(a.base));
  } else {
    bases = enumerate_fixed_bases(in.graph);
    if (bases.empty()) throw NoFixedBaseError("graph has no K_" + std::to_string(in.graph.d) + " to fix");
  }
  for (const auto& b : bases) validate_base(in.graph, b);

  PermanentOptions popt;
  popt.threads = a.threads;
  popt.allow_oversize = a.allow_oversize;
  const bool use_orient = a.method != "permanent";
  const bool use_perm = a.method != "orient";
  std::vector<BaseRow> rows = ordered_map(bases, a.jobs, [&](const FixedBase& b) {
    BaseRow r{b, std::nullopt, std::nullopt};
    if (use_orient) r.orient = mbezout_via_orientations(in.graph, b).value;
    if (use_perm) r.perm = mbezout_via_permanent(in.graph, b, popt).value;
    return r;
  });

  int status = 0;
  json jb = json::array();
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BaseRow& r = rows[i];
    json j = {{"base", r.base.vertices}};
    if (r.orient) j["mB_orient"] = r.orient->str();
    if (r.perm) j["mB_perm"] = r.perm->str();
    if (r.orient && r.perm && *r.orient != *r.perm) {
      std::cerr << "error: routes disagree on base " << format_base(r.base) << ": orientation " << *r.orient
                << ", permanent " << *r.perm << '\n';
      status = kExitDisagree;
    }
    jb.push_back(j);
    if (r.value() < rows[best].value()) best = i;
  }

  json out = {{"graph", in.id}, {"n", in.graph.n()}, {"d", in.graph.d}, {"method", a.method}};
  if (a.all_bases || bases.size() == 1) out["bases"] = jb;
  const BaseRow& m = rows[best];
  out["min"] = jb[best];
  out["min"]["mB"] = m.value().str();

  std::ofstream file;
  output(a.out, file) << out.dump(2) << '\n';
  if (!a.emit_matrix.empty()) {
    std::ofstream mf(a.emit_matrix);
    if (!mf) throw Error("cannot write " + a.emit_matrix);
    mf << matrix_to_json(build_mbezout_matrix(in.graph, m.base)).dump() << '\n';
  }
  return status;
}

// compare -----------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> graphs;
  std::vector<std::string> named;
  bool catalog = false;
  std::string base;
  std::string format = "csv";
  unsigned threads = 0;
  unsigned jobs = 1;
  std::string out;
};

struct CompareRow {
  std::string id;
  int d = 0;
  FixedBase base;
  BigInt bezout, orient, perm;
  std::string bregman;
  std::optional<BigRational> fz;
  std::optional<FelsnerZickfeldBound> fz_detail;
};

std::string rational_text(const BigRational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

CompareRow compare_one(const Input& in, const std::string& base_text, unsigned threads) {
  CompareRow r;
  r.id = in.id;
  r.d = in.graph.d;
  if (!base_text.empty()) {
    r.base = parse_base(base_text);
    validate_base(in.graph, r.base);
  } else {
    r.base = min_mbezout(in.graph).base;
  }
  const int n = in.graph.n(), d = in.graph.d;
  r.bezout = bezout_bound(n, d);
  r.orient = mbezout_via_orientations(in.graph, r.base).value;
  PermanentOptions popt;
  popt.threads = threads;
  r.perm = mbezout_via_permanent(in.graph, r.base, popt).value;
  r.bregman = bregman_minc_bound(build_mbezout_matrix(in.graph, r.base), n, d).decimal();
  if (is_planar(in.graph.graph)) {
    r.fz_detail = felsner_zickfeld_bound(in.graph, r.base);
    // Scaled from orientations to mB like the orientation count itself.
    r.fz = r.fz_detail->empty_set_value * BigRational(pow2(static_cast<unsigned>(n - d)));
  }
  return r;
}

int run_compare(const CompareArgs& a) {
  std::vector<Input> inputs;
  std::vector<std::string> names = a.named;
  if (a.catalog) {
    auto all = named_graph_names();
    names.insert(names.end(), all.begin(), all.end());
  }
  for (const auto& p : a.graphs) inputs.push_back(load_input(p, ""));
  for (const auto& nm : names) inputs.push_back(load_input("", nm));
  if (inputs.empty()) throw Error("nothing to compare: give --graph, --named or --catalog");

  std::vector<CompareRow> rows = ordered_map(inputs, a.jobs, [&](const Input& in) {
    std::string b = a.base;
    if (b.empty() && in.default_base) b = format_base(*in.default_base);
    return compare_one(in, b, a.threads);
  });

  int status = 0;
  std::ofstream file;
  std::ostream& os = output(a.out, file);
  json arr = json::array();
  if (a.format == "csv") os << "graph,d,base,bezout,mB_orient,mB_perm,bregman_minc,felsner_zickfeld\n";
  for (const auto& r : rows) {
    if (r.orient != r.perm) {
      std::cerr << "error: routes disagree on " << r.id << '\n';
      status = kExitDisagree;
    }
    std::string fz = r.fz ? rational_text(*r.fz) : "NA";
    if (a.format == "csv") {
      os << r.id << ',' << r.d << ",\"" << format_base(r.base) << "\"," << r.bezout << ',' << r.orient << ','
         << r.perm << ',' << r.bregman << ',' << fz << '\n';
    } else {
      json j = {{"graph", r.id},         {"d", r.d},
                {"base", r.base.vertices}, {"bezout", r.bezout.str()},
                {"mB_orient", r.orient.str()}, {"mB_perm", r.perm.str()},
                {"bregman_minc", r.bregman}, {"felsner_zickfeld", r.fz ? json(fz) : json(nullptr)}};
      if (r.fz_detail) {
        j["felsner_zickfeld_min_over_I"] = {{"orientation_value", rational_text(r.fz_detail->value)},
                                            {"independent_set", r.fz_detail->independent_set},
                                            {"exhaustive", r.fz_detail->exhaustive}};
      }
      arr.push_back(j);
    }
  }
  if (a.format != "csv") os << arr.dump(2) << '\n';
  return status;
}

// exactness ---------------------------------------------------------------

struct ExactnessArgs {
  std::string graph;
  std::string named;
  std::string base;
  std::string flavor = "euclidean";
  bool conjecture = false;
  bool strict = false;
  bool probe = false;
  std::string out;
  OracleConfig config;
  std::string emit_dir;
};

int run_exactness(ExactnessArgs a) {
  Input in = load_input(a.graph, a.named);
  FixedBase base;
  if (!a.base.empty()) {
    base = parse_base(a.base);
  } else if (in.default_base) {
    base = *in.default_base;
  } else {
    auto bases = enumerate_fixed_bases(in.graph);
    if (bases.empty()) throw NoFixedBaseError("graph has no K_" + std::to_string(in.graph.d) + " to fix");
    base = bases.front();
  }
  validate_base(in.graph, base);
  if (!a.emit_dir.empty()) a.config.emit_dir = a.emit_dir;
  Flavor flavor = parse_flavor(a.flavor);
  std::cerr << "seed " << a.config.seed << '\n';

  json out;
  bool indeterminate = false;
  if (a.probe) {
    ConjectureProbe p = conjecture_consistency(in.graph, base, flavor, a.config, in.id);
    out = {{"consistent", p.consistent},
           {"single_choice", p.single_choice.to_json()},
           {"all_choices", p.all_choices.to_json()}};
    indeterminate = p.single_choice.verdict == Verdict::Indeterminate ||
                    p.all_choices.verdict == Verdict::Indeterminate;
  } else {
    ExactnessReport r = is_mbezout_exact(in.graph, base, flavor, a.conjecture, a.config, in.id);
    out = r.to_json();
    indeterminate = r.verdict == Verdict::Indeterminate;
  }
  std::ofstream file;
  output(a.out, file) << out.dump(2) << '\n';
  return (a.strict && indeterminate) ? kExitIndeterminate : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-Bezout bounds and exactness checks for minimally rigid graphs"};
  app.require_subcommand(1);

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Henneberg H1/H2 graphs up to isomorphism");
  gen->add_option("-d", ga.d, "dimension (2 or 3)")->required();
  gen->add_option("-n", ga.n, "vertex count")->required();
  gen->add_option("--moves", ga.moves, "comma list of h1,h2");
  gen->add_flag("--tally", ga.tally, "per-level counts split by last move and planarity");
  gen->add_option("--format", ga.format, "json or edges")->check(CLI::IsMember({"json", "edges"}));
  gen->add_option("-o,--out", ga.out, "output file");

  BoundArgs ba;
  auto* bnd = app.add_subcommand("bound", "m-Bezout bound per fixed base");
  auto* bg = bnd->add_option("--graph", ba.graph, "edge-list or JSON graph file");
  bnd->add_option("--named", ba.named, "catalog graph")->excludes(bg);
  bnd->add_option("--method", ba.method, "orient, permanent or both")
      ->check(CLI::IsMember({"orient", "permanent", "both"}));
  auto* bb = bnd->add_option("--base", ba.base, "v1,..,vd (default: search all bases)");
  bnd->add_flag("--all-bases", ba.all_bases, "list every base, not only the minimum")->excludes(bb);
  bnd->add_option("--emit-matrix", ba.emit_matrix, "write the m-Bezout matrix of the minimizing base");
  bnd->add_option("--threads", ba.threads, "permanent worker threads (0: hardware)");
  bnd->add_flag("--allow-oversize", ba.allow_oversize, "lift the permanent size limit");
  bnd->add_option("-j,--jobs", ba.jobs, "bases evaluated concurrently");
  bnd->add_option("-o,--out", ba.out, "output file");

  CompareArgs ca;
  auto* cmp = app.add_subcommand("compare", "Bezout, m-Bezout, Bregman-Minc and Felsner-Zickfeld side by side");
  cmp->add_option("--graph", ca.graphs, "graph files");
  cmp->add_option("--named", ca.named, "catalog graphs");
  cmp->add_flag("--catalog", ca.catalog, "every catalog graph");
  cmp->add_option("--base", ca.base, "v1,..,vd (default: catalog base, else the minimizing one)");
  cmp->add_option("--format", ca.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmp->add_option("--threads", ca.threads, "permanent worker threads (0: hardware)");
  cmp->add_option("-j,--jobs", ca.jobs, "graphs evaluated concurrently");
  cmp->add_option("-o,--out", ca.out, "output file");

  ExactnessArgs ea;
  auto* ex = app.add_subcommand("exactness", "Bernstein check of the m-Bezout bound via delta zero evaluations");
  auto* eg = ex->add_option("--graph", ea.graph, "edge-list or JSON graph file");
  ex->add_option("--named", ea.named, "catalog graph")->excludes(eg);
  ex->add_option("--base", ea.base, "v1,..,vd");
  ex->add_option("--flavor", ea.flavor, "euclidean or spherical")->check(CLI::IsMember({"euclidean", "spherical"}));
  ex->add_flag("--conjecture", ea.conjecture, "test one delta choice only");
  ex->add_flag("--probe", ea.probe, "run both modes and compare verdicts");
  ex->add_option("--trials", ea.config.trials, "independent (prime, lengths) trials");
  ex->add_option("--prime", ea.config.prime, "fixed prime (default: random 31-bit per trial)");
  ex->add_flag("--rational", ea.config.rational, "work over Q instead of a prime field");
  ex->add_option("--seed", ea.config.seed, "master seed");
  ex->add_option("--max-pairs", ea.config.max_pairs, "Buchberger pair cap before giving up");
  ex->add_option("--retries", ea.config.retries, "fresh primes tried after an indeterminate answer");
  ex->add_flag("--eliminate-linear,!--no-eliminate-linear", ea.config.eliminate_linear,
               "drop affine equations and their variables first (default on)");
  ex->add_flag("--fix-reflection", ea.config.fix_reflection, "pin one more vertex up to reflection");
  ex->add_flag("--evaluate-all", ea.config.evaluate_all, "keep going after the first solvable evaluation");
  ex->add_option("--emit-systems", ea.emit_dir, "write every tested face system here");
  ex->add_flag("--strict", ea.strict, "exit 4 on an indeterminate verdict");
  ex->add_option("-o,--out", ea.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_generate(ga);
    if (*bnd) return run_bound(ba);
    if (*cmp) return run_compare(ca);
    if (*ex) return run_exactness(ea);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
