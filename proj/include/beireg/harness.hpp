#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "beireg/betti.hpp"
#include "beireg/bound.hpp"
#include "beireg/canonical.hpp"
#include "beireg/classify.hpp"
#include "beireg/constructions.hpp"

namespace beireg {

/// The 17-vertex example: spine a1..a5, leaves t1 at a2 and t2 at a4, and
/// three branches at a3 (p with leaf p1, q with leaves q1 q2, r carrying a
/// K4 {r,r1,r2,r3} and leaf r4).
struct PaperFixture {
  static constexpr int a1 = 0, a2 = 1, a3 = 2, a4 = 3, a5 = 4, t1 = 5, t2 = 6, p = 7, p1 = 8, q = 9, q1 = 10,
                       q2 = 11, r = 12, r1 = 13, r2 = 14, r3 = 15, r4 = 16;

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"a1", "a2", "a3", "a4", "a5", "t1", "t2", "p",  "p1",
                                            "q",  "q1", "q2", "r",  "r1", "r2", "r3", "r4"};
    return n;
  }

  static Graph graph() {
    return Graph(17, {{a1, a2}, {a2, a3}, {a3, a4}, {a4, a5}, {a2, t1}, {a4, t2}, {a3, p},   {p, p1},   {a3, q}, {q, q1},
                      {q, q2},  {a3, r},  {r, r1},  {r, r2},  {r, r3},  {r1, r2}, {r1, r3}, {r2, r3}, {r, r4}});
  }

  /// The spine used in the worked example.
  static Spine horizontal_spine() { return Spine{{a1, a2, a3, a4, a5}}; }
};

enum class CorpusKind { Trees, BlockGraphs, Fixtures, Flowers, StarsOfCliques };

struct Corpus {
  CorpusKind kind = CorpusKind::Trees;
  int max_n = 8;
  std::uint64_t seed = 1;
  int count = 20;
  RandomBlockGraphParams random;
};

struct VerifyOptions {
  std::vector<SpinePolicy> policies{SpinePolicy::MaxOverSpines};
  std::vector<E2Variant> variants{E2Variant::BridgesOnly};
  OracleOptions oracle;
  bool run_oracle = true;
  /// Enables the oracle on the 17-vertex fixture.
  bool long_run = false;
  unsigned threads = 1;
};

struct Violation {
  SpinePolicy policy;
  E2Variant variant;
  int spine_index;
  int bound;
  int reg;

  std::string to_string() const {
    return beireg::to_string(policy) + "/" + beireg::to_string(variant) + "/" + std::to_string(spine_index);
  }
};

struct VerificationRecord {
  std::string key;
  std::string name;
  Graph graph;
  int n = 0;
  int m = 0;
  GraphClass cls;
  int ell_induced = 0;
  int n_minus_1 = 0;
  /// Primary policy/variant result (the first of each in the options).
  TheoremBound primary;
  int bound_max = 0;
  int bound_min = 0;
  std::optional<int> closed_form;
  std::optional<int> reg;
  std::string oracle_status;  // "ok", or why the oracle did not run
  bool tight = false;
  std::vector<Violation> violations;
};

/// A named member of a corpus.
struct CorpusGraph {
  std::string name;
  Graph graph;
};

inline std::vector<CorpusGraph> corpus_graphs(const Corpus& c) {
  std::vector<CorpusGraph> out;
  switch (c.kind) {
    case CorpusKind::Trees:
      for (int n = 2; n <= c.max_n; ++n) {
        int i = 0;
        for (auto& t : enumerate_trees(n)) out.push_back({"tree" + std::to_string(n) + "_" + std::to_string(i++), std::move(t)});
      }
      break;
    case CorpusKind::BlockGraphs: {
      SeededRng rng(c.seed);
      RandomBlockGraphParams params = c.random;
      params.max_n = c.max_n;
      params.min_n = std::min(params.min_n, c.max_n);
      std::set<std::string> seen;
      for (int i = 0; i < c.count; ++i) {
        Graph g = random_block_graph(rng, params);
        if (seen.insert(canonical_encode(g)).second)
          out.push_back({"random" + std::to_string(c.seed) + "_" + std::to_string(i), canonical_form(g)});
      }
      break;
    }
    case CorpusKind::Fixtures: out.push_back({"paper_example", PaperFixture::graph()}); break;
    case CorpusKind::Flowers:
      out.push_back({"flower_1_1", flower_graph(1, 1)});
      out.push_back({"flower_2_1", flower_graph(2, 1)});
      out.push_back({"flower_1_2", flower_graph(1, 2)});
      break;
    case CorpusKind::StarsOfCliques:
      out.push_back({"star_of_cliques_2", star_of_cliques({3, 3})});
      out.push_back({"star_of_cliques_3", star_of_cliques({3, 3, 3})});
      break;
  }
  return out;
}

/// Evaluates every bound and (when enabled) the oracle on one graph.
inline VerificationRecord verify_graph(const CorpusGraph& item, const VerifyOptions& options) {
  const Graph& g = item.graph;
  VerificationRecord rec;
  rec.name = item.name;
  rec.graph = g;
  rec.key = canonical_encode(g);
  rec.n = g.vertex_count();
  rec.m = static_cast<int>(g.edge_count());
  rec.cls = classify(g);
  rec.ell_induced = longest_induced_path(g);
  rec.n_minus_1 = rec.n - 1;
  rec.closed_form = closed_form_reg(g);

  const SpinePolicy primary_policy = options.policies.empty() ? SpinePolicy::MaxOverSpines : options.policies.front();
  const E2Variant primary_variant = options.variants.empty() ? E2Variant::BridgesOnly : options.variants.front();
  rec.primary = theorem_bound(g, primary_variant, primary_policy);
  rec.bound_max = rec.primary.max_bound();
  rec.bound_min = rec.primary.min_bound();

  const bool gated = item.name == "paper_example" && !options.long_run;
  if (!options.run_oracle) {
    rec.oracle_status = "disabled";
  } else if (gated) {
    rec.oracle_status = "gated: needs --long";
  } else {
    try {
      rec.reg = regularity_oracle(g, options.oracle).regularity;
      rec.oracle_status = "ok";
    } catch (const BudgetError& e) {
      rec.oracle_status = std::string("skipped: ") + e.what();
    }
  }
  if (rec.reg) {
    rec.tight = *rec.reg == rec.primary.bound;
    for (SpinePolicy policy : options.policies) {
      for (E2Variant variant : options.variants) {
        const TheoremBound tb = theorem_bound(g, variant, policy);
        if (tb.bound < *rec.reg) rec.violations.push_back({policy, variant, tb.selected, tb.bound, *rec.reg});
      }
    }
  }
  return rec;
}

/// Parallel map over the corpus; records come back sorted by canonical key.
inline std::vector<VerificationRecord> run_verification(const std::vector<Corpus>& corpora,
                                                        const VerifyOptions& options) {
  std::vector<CorpusGraph> items;
  for (const auto& c : corpora)
    for (auto& g : corpus_graphs(c)) items.push_back(std::move(g));
  std::vector<VerificationRecord> records(items.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(items.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) records[i] = verify_graph(items[i], options);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < items.size(); i += workers) records[i] = verify_graph(items[i], options);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) { return a.key < b.key; });
  return records;
}

inline bool any_violation(const std::vector<VerificationRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return !r.violations.empty(); });
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "key,n,m,class,ell_induced,spine_len,e2,b,csum,bound_max,bound_min,n_minus_1,reg,tight,violations";

inline std::string records_to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    const BoundCertificate* c =
        r.primary.selected >= 0 ? &r.primary.certificates[static_cast<std::size_t>(r.primary.selected)] : nullptr;
    std::string violations;
    for (const auto& v : r.violations) violations += (violations.empty() ? "" : ";") + v.to_string();
    out << detail::csv_field(r.key) << ',' << r.n << ',' << r.m << ',' << detail::csv_field(summary(r.cls)) << ','
        << r.ell_induced << ',' << (c ? std::to_string(c->ell()) : "") << ',' << (c ? std::to_string(c->e2) : "")
        << ',' << (c ? std::to_string(c->b) : "") << ',' << (c ? std::to_string(c->c_sum()) : "") << ','
        << r.bound_max << ',' << r.bound_min << ',' << r.n_minus_1 << ',' << (r.reg ? std::to_string(*r.reg) : "")
        << ',' << (r.reg ? (r.tight ? "true" : "false") : "") << ',' << violations << '\n';
  }
  return out.str();
}

}  // namespace beireg
