// beireg: regularity bounds and the exact oracle for binomial edge ideals.
//
//   beireg analyze  [FILE]  certificates + classification
//   beireg reg      [FILE]  Betti table + regularity
//   beireg verify           campaign report (CSV or JSON)
//   beireg gen <family>     edge list of a generated instance

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beireg/betti.hpp"
#include "beireg/bound.hpp"
#include "beireg/classify.hpp"
#include "beireg/constructions.hpp"
#include "beireg/graph_io.hpp"
#include "beireg/harness.hpp"
#include "beireg/json_io.hpp"

namespace {

using namespace beireg;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, GraphFormat> kFormats{{"edgelist", GraphFormat::EdgeList}, {"graph6", GraphFormat::Graph6}};
const std::map<std::string, SpinePolicy> kPolicies{
    {"max", SpinePolicy::MaxOverSpines}, {"min", SpinePolicy::MinOverSpines}, {"canonical", SpinePolicy::Canonical}};
const std::map<std::string, E2Variant> kVariants{{"bridges", E2Variant::BridgesOnly}, {"literal", E2Variant::Literal}};
const std::map<std::string, GbRoute> kRoutes{{"buchberger", GbRoute::Buchberger}, {"paths", GbRoute::Paths}};
const std::map<std::string, BettiMethod> kMethods{{"hochster", BettiMethod::Hochster}, {"lcm", BettiMethod::LcmLattice}};

struct InputOptions {
  std::string path = "-";
  GraphFormat format = GraphFormat::EdgeList;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.path, "Graph file ('-' for stdin)");
  cmd->add_option("--input", in.path, "Graph file ('-' for stdin)");
  cmd->add_option("--format", in.format, "edgelist|graph6")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

Graph read_graph(const InputOptions& in) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(in.path);
    if (!f) throw ParseError("cannot open '" + in.path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_graph(text, in.format);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("write to '" + path + "' failed");
}

// analyze ------------------------------------------------------------------

struct AnalyzeOptions {
  InputOptions input;
  SpinePolicy policy = SpinePolicy::MaxOverSpines;
  E2Variant variant = E2Variant::BridgesOnly;
  bool json_only = false;
};

int run_analyze(const AnalyzeOptions& o) {
  const Graph g = read_graph(o.input);
  Json out{{"n", g.vertex_count()}, {"m", g.edge_count()}};
  const GraphClass cls = classify(g);
  out["class"] = to_json(cls);
  if (g.vertex_count() <= kInducedPathLimit) {
    const auto base = baseline_bounds(g);
    out["baseline"] = {{"lower", base.lower}, {"upper", base.upper}};
    out["baseline"]["cliqueBound"] = base.clique_bound ? Json(*base.clique_bound) : Json(nullptr);
  }
  const auto closed = closed_form_reg(g);
  out["closedForm"] = closed ? Json(*closed) : Json(nullptr);

  std::optional<int> bound;
  try {
    const TheoremBound tb = theorem_bound(g, o.variant, o.policy);
    bound = tb.bound;
    out["theorem"] = to_json(tb);
  } catch (const PreconditionError& e) {
    out["theorem"] = nullptr;
    out["theoremError"] = e.what();
  }
  if (cls.is_tree && g.vertex_count() >= 2) out["treeBound"] = tree_bound(g, o.policy).bound;

  if (!o.json_only) {
    std::cout << "class: " << summary(cls) << '\n';
    if (bound) {
      std::cout << "bound " << *bound << " (" << to_string(o.policy) << ", " << to_string(o.variant) << ")\n";
    } else {
      std::cout << "bound n/a: " << out["theoremError"].get<std::string>() << '\n';
    }
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// reg ----------------------------------------------------------------------

struct RegOptions {
  InputOptions input;
  OracleOptions oracle;
  bool json_only = false;
  bool dump_gb = false;
};

int run_reg(RegOptions o) {
  const Graph g = read_graph(o.input);
  o.oracle.budget = budget_from_env(o.oracle.budget);
  const OracleResult r = regularity_oracle(g, o.oracle);
  const Json j = betti_json(r.betti, o.oracle.characteristic, o.oracle.method, o.oracle.route);
  if (o.dump_gb) {
    if (r.gb) std::cout << r.gb->dump();
    else std::cout << r.initial.to_string() << '\n';
  }
  if (!o.json_only) std::cout << r.betti.to_text();
  std::cout << j.dump() << '\n';
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyCli {
  bool trees = false;
  bool blocks = false;
  bool fixtures = false;
  bool flowers = false;
  bool stars = false;
  int max_n = 8;
  std::uint64_t seed = 1;
  int count = 20;
  std::vector<SpinePolicy> policies;
  std::vector<E2Variant> variants;
  std::uint32_t characteristic = kDefaultCharacteristic;
  GbRoute route = GbRoute::Buchberger;
  BettiMethod method = BettiMethod::Hochster;
  bool no_oracle = false;
  bool long_run = false;
  unsigned threads = 1;
  std::string out;
  bool json = false;
};

int run_verify(const VerifyCli& o) {
  std::vector<Corpus> corpora;
  auto add = [&](CorpusKind kind) {
    Corpus c;
    c.kind = kind;
    c.max_n = o.max_n;
    c.seed = o.seed;
    c.count = o.count;
    corpora.push_back(c);
  };
  if (o.trees) add(CorpusKind::Trees);
  if (o.blocks) add(CorpusKind::BlockGraphs);
  if (o.fixtures) add(CorpusKind::Fixtures);
  if (o.flowers) add(CorpusKind::Flowers);
  if (o.stars) add(CorpusKind::StarsOfCliques);
  if (corpora.empty()) add(CorpusKind::Trees);

  VerifyOptions v;
  if (!o.policies.empty()) v.policies = o.policies;
  if (!o.variants.empty()) v.variants = o.variants;
  v.oracle.characteristic = o.characteristic;
  v.oracle.route = o.route;
  v.oracle.method = o.method;
  v.oracle.budget = budget_from_env();
  v.run_oracle = !o.no_oracle;
  v.long_run = o.long_run;
  v.threads = o.threads;

  const auto records = run_verification(corpora, v);
  write_output(o.out, o.json ? records_to_json(records).dump(2) + "\n" : records_to_csv(records));

  std::size_t with_oracle = 0, tight = 0, violations = 0;
  for (const auto& r : records) {
    with_oracle += r.reg.has_value();
    tight += r.tight;
    violations += r.violations.size();
  }
  std::cerr << records.size() << " records, " << with_oracle << " with oracle, " << tight << " tight, " << violations
            << " violations\n";
  return violations > 0 ? kExitViolation : kExitOk;
}

// gen ----------------------------------------------------------------------

struct GenOptions {
  int h = 1;
  int k = 1;
  int spine = 3;
  std::vector<int> legs;
  std::vector<int> sizes;
  std::uint64_t seed = 1;
  int max_n = 8;
  int n = 2;
  GraphFormat format = GraphFormat::EdgeList;
};

void emit(const Graph& g, const GenOptions& o) {
  std::cout << (o.format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity bounds for binomial edge ideals of block graphs"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Bound certificates and classification of a graph");
  add_input_options(a, analyze.input);
  a->add_option("--policy", analyze.policy, "max|min|canonical")->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
  a->add_option("--e2", analyze.variant, "bridges|literal")->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  a->add_flag("--json", analyze.json_only, "JSON only");

  RegOptions reg;
  auto* r = app.add_subcommand("reg", "Exact regularity from the initial ideal's Betti table");
  add_input_options(r, reg.input);
  r->add_option("--char", reg.oracle.characteristic, "Prime characteristic");
  r->add_option("--gb", reg.oracle.route, "buchberger|paths")->transform(CLI::CheckedTransformer(kRoutes, CLI::ignore_case));
  r->add_option("--betti", reg.oracle.method, "hochster|lcm")->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  r->add_flag("--json", reg.json_only, "JSON only");
  r->add_flag("--dump-gb", reg.dump_gb, "Print the reduced Groebner basis first");

  VerifyCli verify;
  auto* v = app.add_subcommand("verify", "Run a verification campaign");
  v->add_flag("--trees", verify.trees, "All trees with 2..max-n vertices");
  v->add_flag("--blocks", verify.blocks, "Seeded random block graphs");
  v->add_flag("--fixtures", verify.fixtures, "The 17-vertex example");
  v->add_flag("--flowers", verify.flowers, "F(1,1), F(2,1), F(1,2)");
  v->add_flag("--stars", verify.stars, "Stars of 2 and 3 triangles");
  v->add_option("--max-n", verify.max_n, "Largest vertex count")->check(CLI::Range(2, kTreeEnumerationLimit));
  v->add_option("--seed", verify.seed, "Random block-graph seed");
  v->add_option("--count", verify.count, "Random block graphs drawn")->check(CLI::NonNegativeNumber);
  v->add_option("--policy", verify.policies, "max|min|canonical (repeatable)")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
  v->add_option("--e2", verify.variants, "bridges|literal (repeatable)")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  v->add_option("--char", verify.characteristic, "Prime characteristic");
  v->add_option("--gb", verify.route, "buchberger|paths")->transform(CLI::CheckedTransformer(kRoutes, CLI::ignore_case));
  v->add_option("--betti", verify.method, "hochster|lcm")->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  v->add_flag("--no-oracle", verify.no_oracle, "Bounds only");
  v->add_flag("--long", verify.long_run, "Also run the oracle on the 17-vertex example");
  v->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--out", verify.out, "Report path (default stdout)");
  v->add_flag("--json", verify.json, "JSON report instead of CSV");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Print a generated graph as an edge list");
  g->require_subcommand(1);
  g->add_option("--format", gen.format, "edgelist|graph6")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  auto* flower = g->add_subcommand("flower", "F(h,k): h triangles and k copies of K(1,3) at one vertex");
  flower->set_help_flag("--help", "Print this help message and exit");
  flower->add_option("--h", gen.h, "Triangles")->check(CLI::NonNegativeNumber);
  flower->add_option("--k", gen.k, "Stars")->check(CLI::PositiveNumber);
  auto* cat = g->add_subcommand("caterpillar", "Path with pendant leaves on interior vertices");
  cat->add_option("--spine", gen.spine, "Spine length")->check(CLI::PositiveNumber);
  cat->add_option("--legs", gen.legs, "Leaves per interior vertex");
  auto* soc = g->add_subcommand("star-of-cliques", "Cliques sharing one vertex");
  soc->add_option("--k", gen.k, "Number of triangles");
  soc->add_option("--sizes", gen.sizes, "Clique sizes (overrides --k)");
  auto* rnd = g->add_subcommand("random", "Random block graph with large blocks as end-blocks");
  rnd->add_option("--seed", gen.seed, "Seed");
  rnd->add_option("--max-n", gen.max_n, "Largest vertex count")->check(CLI::Range(3, 64));
  auto* path = g->add_subcommand("path", "Path graph");
  path->add_option("--n", gen.n, "Vertices")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*a) return run_analyze(analyze);
    if (*r) return run_reg(reg);
    if (*v) return run_verify(verify);
    if (*flower) emit(flower_graph(gen.h, gen.k), gen);
    if (*cat) emit(caterpillar_graph(gen.spine, gen.legs), gen);
    if (*soc) emit(star_of_cliques(gen.sizes.empty() ? std::vector<int>(static_cast<std::size_t>(gen.k), 3) : gen.sizes), gen);
    if (*rnd) {
      SeededRng rng(gen.seed);
      RandomBlockGraphParams params;
      params.max_n = gen.max_n;
      emit(random_block_graph(rng, params), gen);
    }
    if (*path) emit(path_graph(gen.n), gen);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (override with BEI_BUDGET)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
