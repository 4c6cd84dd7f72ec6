// Command-line front end: freeness checks, peeling, density-increment
// traces, exact optima, greedy packings, and the closed-form tables.
//
// Exit codes: 0 success, 1 verification or precondition failure, 2 budget
// exhausted, 64 usage error. Data goes to stdout (or --output); diagnostics
// and progress go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsehg/cleanup.hpp"
#include "sparsehg/extremal.hpp"
#include "sparsehg/freeness.hpp"
#include "sparsehg/hypergraph.hpp"
#include "sparsehg/increment.hpp"

using json = nlohmann::json;
using namespace sparsehg;

namespace {

enum class Format { kText, kCsv, kJsonl };

struct Common {
  Format format = Format::kText;
  bool quiet = false;
  int threads = 1;
  std::uint64_t budget = kDefaultSearchBudget;
};

std::string join_ints(const std::vector<int>& xs, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& xs, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

Hypergraph read_graph(const std::string& path) {
  if (path == "-") return parse_hypergraph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return parse_hypergraph(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << text;
}

// stderr progress, rate-limited, silenced by --quiet
struct Progress {
  explicit Progress(bool enabled, std::string label)
      : enabled_(enabled), label_(std::move(label)) {}
  void operator()(std::uint64_t nodes, long long value) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    if (now - last_ < std::chrono::milliseconds(500)) return;
    last_ = now;
    std::cerr << label_ << ": " << nodes << " nodes, best " << value << "\n";
  }
  bool enabled_;
  std::string label_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------- check --

int run_check(const Common& common, const std::string& input,
              std::vector<int> vs, std::vector<int> es,
              int rule_k, int rule_e) {
  auto h = read_graph(input);
  if (vs.size() != es.size() || vs.empty())
    throw CLI::ValidationError("--v and --e must be given the same number of times");
  ConstraintFamily fam;
  for (std::size_t i = 0; i < vs.size(); ++i) fam.constraints.push_back({vs[i], es[i]});
  if (rule_k > 0 || rule_e > 0) {
    if (rule_k <= 0 || rule_e <= 0)
      throw CLI::ValidationError("--codegree-k and --codegree-e go together");
    fam.codegree_rule = CodegreeRule{rule_k, rule_e};
  }

  auto rep = is_family_free(h, fam, common.budget, common.threads);

  if (common.format == Format::kCsv)
    std::cout << "record,v,e,status,nodes,edge_ids,vertices,value\n";
  for (const auto& cv : rep.constraints) {
    if (common.format == Format::kJsonl) {
      json row{{"record", "constraint"},
               {"v", cv.constraint.v},
               {"e", cv.constraint.e},
               {"status", to_string(cv.status)},
               {"nodes", cv.nodes}};
      if (cv.witness) {
        row["edge_ids"] = cv.witness->edge_ids;
        row["union"] = cv.witness->union_vertices;
        row["deficiency"] = cv.witness->deficiency;
      }
      std::cout << row.dump() << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "constraint," << cv.constraint.v << "," << cv.constraint.e << ","
                << to_string(cv.status) << "," << cv.nodes << ","
                << (cv.witness ? join_ints(cv.witness->edge_ids) : "") << ","
                << (cv.witness ? join_ints(cv.witness->union_vertices) : "") << ","
                << (cv.witness ? std::to_string(cv.witness->deficiency) : "") << "\n";
    } else {
      std::cout << "(" << cv.constraint.v << "," << cv.constraint.e
                << "): " << to_string(cv.status);
      if (cv.witness)
        std::cout << "  edges {" << join_ints(cv.witness->edge_ids, ',') << "} span "
                  << cv.witness->union_vertices.size();
      std::cout << "  [" << cv.nodes << " nodes]\n";
    }
  }
  if (rep.codegree.checked) {
    const auto& cg = rep.codegree;
    std::string status = cg.satisfied ? "satisfied" : "violated";
    if (common.format == Format::kJsonl) {
      json row{{"record", "codegree_rule"},
               {"k", rule_k},
               {"e", rule_e},
               {"status", status},
               {"offenders", cg.offender_count}};
      if (cg.offender) {
        row["offender"] = cg.offender->vertices;
        row["degree"] = cg.offender_degree;
      }
      std::cout << row.dump() << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "codegree_rule," << rule_k << "," << rule_e << "," << status
                << ",,," << (cg.offender ? join_ints(cg.offender->vertices) : "") << ","
                << (cg.offender ? std::to_string(cg.offender_degree) : "") << "\n";
    } else {
      std::cout << "codegree rule (k=" << rule_k << ", e=" << rule_e
                << "): " << status;
      if (cg.offender)
        std::cout << "  offender " << cg.offender->str() << " degree "
                  << cg.offender_degree << " (of " << cg.offender_count << ")";
      std::cout << "\n";
    }
  }

  if (rep.budget_exhausted()) return 2;
  return rep.all_free() ? 0 : 1;
}

// ----------------------------------------------------------------- peel --

int run_peel(const Common& common, const std::string& input, int k, int e,
             const std::string& output, const std::string& log_path) {
  auto h = read_graph(input);
  auto res = peel(h, k, e);
  write_text(output, serialize_hypergraph(res.peeled));

  if (!log_path.empty()) {
    std::ostringstream log;
    if (common.format == Format::kJsonl) {
      for (std::size_t i = 0; i < res.log.entries.size(); ++i) {
        const auto& en = res.log.entries[i];
        log << json{{"record", "removal"},
                    {"index", i},
                    {"edge", en.edge},
                    {"subset", en.responsible.vertices}}
                   .dump()
            << "\n";
      }
    } else {
      log << "index,edge,subset\n";
      for (std::size_t i = 0; i < res.log.entries.size(); ++i) {
        const auto& en = res.log.entries[i];
        log << i << "," << join_ints(en.edge) << ","
            << join_ints(en.responsible.vertices) << "\n";
      }
    }
    write_text(log_path, log.str());
  }
  if (!common.quiet)
    std::cerr << "peel: removed " << res.log.entries.size() << " of " << h.edge_count()
              << " edges (bound " << peel_bound(h.vertex_count(), k, e) << ")\n";
  return 0;
}

// -------------------------------------------------------------- extract --

int run_extract(const Common& common, const std::string& input, int t, int e, int k,
                const std::string& output) {
  auto h = read_graph(input);
  auto res = density_increment(h, t, e, k, common.budget);
  const auto& tr = res.trace;

  if (!output.empty()) write_text(output, serialize_hypergraph(res.result));

  if (common.format == Format::kJsonl) {
    for (const auto& st : tr.steps) {
      std::cout << json{{"record", "step"},
                        {"j", st.j},
                        {"x_vertices", st.x_vertices},
                        {"x_vertices_original", st.x_vertices_original},
                        {"config_edge_ids", st.config_edge_ids},
                        {"i_edge_ids", st.i_edge_ids},
                        {"anomalous_edge_ids", st.anomalous_edge_ids},
                        {"e", st.e_before},
                        {"v", st.v_before},
                        {"density", st.density_before.str()},
                        {"density_float", st.density_before.to_double()},
                        {"step_inequality_ok", st.step_inequality_ok},
                        {"cumulative_inequality_ok", st.cumulative_inequality_ok}}
                       .dump()
                << "\n";
    }
    json tail{{"record", "summary"},
              {"status", to_string(tr.status)},
              {"n", tr.n0},
              {"r", tr.r},
              {"t", tr.t},
              {"e", tr.e},
              {"k", tr.k},
              {"x", tr.x},
              {"steps", tr.steps.size()},
              {"e_final", tr.e_final},
              {"v_final", tr.v_final},
              {"property_ok", tr.property_ok},
              {"density_ok", tr.density_ok},
              {"k_is_two", tr.k_is_two},
              {"freeness_ok", tr.freeness_ok},
              {"vertex_bound_ok", tr.vertex_bound_ok},
              {"density_conclusion_ok", tr.density_conclusion_ok},
              {"y_bound_ok", tr.y_bound_ok},
              {"alpha", tr.constants.alpha ? tr.constants.alpha->str() : ""},
              {"alpha_float", tr.constants.alpha_value},
              {"delta", tr.constants.delta.str()},
              {"threshold", tr.constants.density_threshold.str()},
              {"nodes", tr.nodes}};
    std::cout << tail.dump() << "\n";
  } else if (common.format == Format::kCsv) {
    std::cout << "j,e_j,v_j,density\n";
    for (const auto& st : tr.steps)
      std::cout << st.j << "," << st.e_before << "," << st.v_before << ","
                << st.density_before.to_double() << "\n";
    std::cout << tr.steps.size() << "," << tr.e_final << "," << tr.v_final << ","
              << (tr.v_final > 0
                      ? static_cast<double>(tr.e_final) / tr.v_final / tr.v_final
                      : 0.0)
              << "\n";
  } else {
    std::cout << "density increment: n=" << tr.n0 << " r=" << tr.r << " t=" << tr.t
              << " e=" << tr.e << " k=" << tr.k << " x=" << tr.x << "\n";
    std::cout << "hypothesis: property " << (tr.property_ok ? "ok" : "not met")
              << ", density " << (tr.density_ok ? "ok" : "below threshold")
              << (tr.k_is_two ? "" : ", k != 2: density conclusions not guaranteed") << "\n";
    for (const auto& st : tr.steps)
      std::cout << "  step " << st.j << ": e=" << st.e_before << " v=" << st.v_before
                << " |I|=" << st.i_edge_ids.size() << " X={"
                << join_ints(st.x_vertices, ',') << "}\n";
    std::cout << "final: e=" << tr.e_final << " v=" << tr.v_final << " status "
              << to_string(tr.status) << "; freeness "
              << (tr.freeness_ok ? "verified" : "not verified") << ", vertex bound "
              << (tr.vertex_bound_ok ? "holds" : "fails") << ", density conclusion "
              << (tr.density_conclusion_ok ? "holds" : "fails") << "\n";
  }

  switch (tr.status) {
    case IncrementStatus::kCompleted: return 0;
    case IncrementStatus::kAbortedWrongUnionSize: return 1;
    case IncrementStatus::kBudgetExhausted: return 2;
  }
  return 1;
}

// ---------------------------------------------------------------- solve --

int run_solve(const Common& common, int n, int r, std::vector<int> vs,
              std::vector<int> es, int rule_k, int rule_e,
              const std::string& output) {
  if (vs.size() != es.size() || vs.empty())
    throw CLI::ValidationError("--v and --e must be given the same number of times");
  ConstraintFamily fam;
  for (std::size_t i = 0; i < vs.size(); ++i) fam.constraints.push_back({vs[i], es[i]});
  if (rule_k > 0 || rule_e > 0) {
    if (rule_k <= 0 || rule_e <= 0)
      throw CLI::ValidationError("--codegree-k and --codegree-e go together");
    fam.codegree_rule = CodegreeRule{rule_k, rule_e};
  }

  Progress progress(!common.quiet, "solve");
  auto res = exact_max(n, r, fam, common.budget,
                       [&](std::uint64_t nodes, long long best) { progress(nodes, best); });

  if (!output.empty()) write_text(output, serialize_hypergraph(res.witness));

  if (common.format == Format::kJsonl) {
    json row{{"record", "solve"}, {"n", n}, {"r", r},
             {"optimum", res.optimum}, {"nodes", res.nodes},
             {"status", to_string(res.status)},
             {"certificates", res.certificates}};
    json cs = json::array();
    for (const auto& c : fam.constraints) cs.push_back({{"v", c.v}, {"e", c.e}});
    row["constraints"] = cs;
    std::cout << row.dump() << "\n";
  } else if (common.format == Format::kCsv) {
    std::cout << "n,r,v,e,optimum,nodes,status\n";
    std::cout << n << "," << r << "," << join_ints(vs) << "," << join_ints(es) << ","
              << res.optimum << "," << res.nodes << "," << to_string(res.status)
              << "\n";
  } else {
    std::cout << "optimum " << res.optimum << "  [" << res.nodes << " nodes, "
              << to_string(res.status) << "]\n";
  }
  return res.status == SolveStatus::kProvenOptimal ? 0 : 2;
}

// ------------------------------------------------------------ construct --

int run_construct(const Common& common, int n, int r, int e, std::uint64_t seed,
                  const std::string& order, const std::string& output) {
  PackOrder po = order == "lex" ? PackOrder::kLex : PackOrder::kRandom;
  Progress progress(!common.quiet, "construct");
  auto res = greedy_pack(n, r, e, seed, po, /*verify_budget=*/200'000'000,
                         [&](std::uint64_t c, long long m) { progress(c, m); });

  std::ostream* rep = &std::cout;
  bool rep_is_data = true;
  if (output.empty()) {
    std::cout << serialize_hypergraph(res.graph);
    rep = &std::cerr;  // keep the data stream parseable
    rep_is_data = false;
  } else {
    write_text(output, serialize_hypergraph(res.graph));
  }

  bool all_free = true;
  for (const auto& chk : res.checks)
    if (chk.status != SearchStatus::kFree) all_free = false;

  if (common.format == Format::kJsonl && rep_is_data) {
    for (const auto& chk : res.checks)
      *rep << json{{"record", "verify"},
                   {"t", chk.t},
                   {"v", chk.constraint.v},
                   {"e", chk.constraint.e},
                   {"status", to_string(chk.status)},
                   {"nodes", chk.nodes}}
                  .dump()
           << "\n";
    *rep << json{{"record", "packing"},
                 {"n", n},
                 {"r", r},
                 {"e", e},
                 {"seed", seed},
                 {"order", order},
                 {"edges", res.graph.edge_count()},
                 {"target", res.target.str()},
                 {"target_float", res.target.to_double()},
                 {"ratio", res.ratio.str()},
                 {"ratio_float", res.ratio.to_double()},
                 {"maximal", res.maximal}}
                .dump()
         << "\n";
  } else if (common.format == Format::kCsv && rep_is_data) {
    *rep << "record,t,v,e,status,nodes,edges,target,ratio,maximal\n";
    for (const auto& chk : res.checks)
      *rep << "verify," << chk.t << "," << chk.constraint.v << "," << chk.constraint.e
           << "," << to_string(chk.status) << "," << chk.nodes << ",,,,\n";
    *rep << "packing,,," << e << ",,," << res.graph.edge_count() << ","
         << res.target.to_double() << "," << res.ratio.to_double() << ","
         << (res.maximal ? 1 : 0) << "\n";
  } else if (rep_is_data || !common.quiet) {
    for (const auto& chk : res.checks)
      *rep << "t=" << chk.t << " (" << chk.constraint.v << "," << chk.constraint.e
           << "): " << to_string(chk.status) << "  [" << chk.nodes << " nodes]\n";
    *rep << "edges " << res.graph.edge_count() << " of target "
         << res.target.to_double() << " (ratio " << res.ratio.to_double() << "), "
         << (res.maximal ? "maximal" : "NOT maximal") << "\n";
  }

  for (const auto& chk : res.checks)
    if (chk.status == SearchStatus::kBudgetExhausted) return 2;
  return (all_free && res.maximal) ? 0 : 1;
}

// --------------------------------------------------------------- limits --

int run_limits(const Common& common, int r, int k, int e, int v, long long n,
               bool constants_row) {
  bool limit_row = (k > 0 && e > 0);
  bool bes_row = (v > 0 && e > 0);
  if (!limit_row && !bes_row && !constants_row)
    throw CLI::ValidationError(
        "limits: give --k and --e for a limit row, --v and --e (and --n) for the "
        "exponent row, or --constants");

  if (common.format == Format::kCsv)
    std::cout << "record,r,k,e,v,n,value,value_float,source,flags,alpha,alpha_float,"
                 "delta,threshold,lower_exp,upper_exp,n_to_lower,n_to_upper\n";

  if (limit_row) {
    auto rec = known_limit(r, k, e);
    if (common.format == Format::kJsonl) {
      json row{{"record", "limit"}, {"r", r}, {"k", k}, {"e", e},
               {"source", rec.source}, {"flags", rec.flags}};
      if (rec.value) {
        row["value"] = rec.value->str();
        row["value_float"] = rec.value->to_double();
      }
      std::cout << row.dump() << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "limit," << r << "," << k << "," << e << ",,,"
                << (rec.value ? rec.value->str() : "") << ","
                << (rec.value ? std::to_string(rec.value->to_double()) : "") << ","
                << rec.source << "," << join_strings(rec.flags) << ",,,,,,,,\n";
    } else {
      std::cout << "limit f_" << r << "(n," << e * r - (e - 1) * k << "," << e
                << ")/n^" << k << " = " << (rec.value ? rec.value->str() : "open")
                << "  [" << rec.source << "]";
      if (!rec.flags.empty()) std::cout << "  flags: " << join_strings(rec.flags, ' ');
      std::cout << "\n";
    }
  }
  if (bes_row) {
    auto b = exponent_bounds(n > 0 ? n : 0, r, v, e);
    if (common.format == Format::kJsonl) {
      std::cout << json{{"record", "exponents"},
                        {"r", r},
                        {"v", v},
                        {"e", e},
                        {"n", n},
                        {"lower_exponent", b.lower_exponent.str()},
                        {"upper_exponent", b.upper_exponent},
                        {"n_to_lower", b.n_to_lower},
                        {"n_to_upper", b.n_to_upper}}
                       .dump()
                << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "exponents," << r << ",," << e << "," << v << "," << n << ",,,,,,,,,"
                << b.lower_exponent.str() << "," << b.upper_exponent << ","
                << b.n_to_lower << "," << b.n_to_upper << "\n";
    } else {
      std::cout << "exponents for f_" << r << "(n," << v << "," << e << "): between "
                << b.lower_exponent.str() << " and " << b.upper_exponent << "\n";
    }
  }
  if (constants_row) {
    auto c = increment_constants(r);
    if (common.format == Format::kJsonl) {
      std::cout << json{{"record", "constants"},
                        {"r", r},
                        {"alpha", c.alpha ? c.alpha->str() : ""},
                        {"alpha_squared", c.alpha_squared.str()},
                        {"alpha_float", c.alpha_value},
                        {"delta", c.delta.str()},
                        {"threshold", c.density_threshold.str()}}
                       .dump()
                << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "constants," << r << ",,,,,,,,,"
                << (c.alpha ? c.alpha->str() : c.alpha_squared.str() + "^(1/2)") << ","
                << c.alpha_value << "," << c.delta.str() << ","
                << c.density_threshold.str() << ",,,,\n";
    } else {
      std::cout << "r=" << r << ": alpha = "
                << (c.alpha ? c.alpha->str()
                            : "sqrt(" + c.alpha_squared.str() + ") = " +
                                  std::to_string(c.alpha_value))
                << ", delta = " << c.delta.str()
                << ", density threshold = " << c.density_threshold.str() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- chain --

int run_chain(const Common& common, int n, int r, int e, int k) {
  auto rep = chain_check(n, r, e, k, common.budget);
  if (common.format == Format::kCsv)
    std::cout << "record,n,r,e,k,t,optimum,nodes,status,chain_ok,peel_bound_ok,peel_bound_lhs\n";
  for (const auto& en : rep.entries) {
    if (common.format == Format::kJsonl) {
      std::cout << json{{"record", "value"},
                        {"n", n},
                        {"r", r},
                        {"e", e},
                        {"k", k},
                        {"t", en.t},
                        {"optimum", en.result.optimum},
                        {"nodes", en.result.nodes},
                        {"status", to_string(en.result.status)}}
                       .dump()
                << "\n";
    } else if (common.format == Format::kCsv) {
      std::cout << "value," << n << "," << r << "," << e << "," << k << "," << en.t
                << "," << en.result.optimum << "," << en.result.nodes << ","
                << to_string(en.result.status) << ",,,\n";
    } else {
      if (en.t == 0)
        std::cout << "f = " << en.result.optimum;
      else
        std::cout << "f^(" << en.t << ") = " << en.result.optimum;
      std::cout << "  [" << to_string(en.result.status) << "]\n";
    }
  }
  if (common.format == Format::kJsonl) {
    std::cout << json{{"record", "verdict"},
                      {"all_proven", rep.all_proven},
                      {"chain_ok", rep.chain_ok},
                      {"peel_bound_ok", rep.peel_bound_ok},
                      {"peel_bound_lhs", rep.peel_bound_lhs}}
                     .dump()
              << "\n";
  } else if (common.format == Format::kCsv) {
    std::cout << "verdict," << n << "," << r << "," << e << "," << k << ",,,,,"
              << (rep.chain_ok ? 1 : 0) << "," << (rep.peel_bound_ok ? 1 : 0) << ","
              << rep.peel_bound_lhs << "\n";
  } else {
    std::cout << "chain " << (rep.chain_ok ? "holds" : "VIOLATED") << "; peeling bound "
              << (rep.peel_bound_ok ? "holds" : "VIOLATED")
              << (rep.all_proven ? "" : " (poisoned by budget exhaustion)") << "\n";
  }
  if (!rep.all_proven) return 2;
  return (rep.chain_ok && rep.peel_bound_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse r-uniform hypergraph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  Common common;
  std::map<std::string, Format> format_names{
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json-lines", Format::kJsonl}};
  app.add_option("--format", common.format, "output format (text, csv, json-lines)")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  app.add_flag("--quiet", common.quiet, "suppress progress and summaries on stderr");
  app.add_option("--threads", common.threads, "constraint-level parallelism for check")
      ->default_val(1);
  app.add_option("--budget", common.budget, "search node budget")
      ->default_val(kDefaultSearchBudget);

  std::string input = "-", output, log_path;
  std::string peel_output = "-";
  int n = 0, r = 3, v = 0, e = 0, k = 2, t = 0;
  std::vector<int> vs, es;
  int rule_k = 0, rule_e = 0;
  std::uint64_t seed = 0;
  std::string order = "lex";
  bool constants_row = false;

  auto* check = app.add_subcommand("check", "freeness of an input hypergraph");
  check->add_option("--input", input, "hypergraph file ('-' = stdin)");
  check->add_option("--v", vs, "union threshold (repeatable)")->required();
  check->add_option("--e", es, "configuration size (repeatable)")->required();
  check->add_option("--codegree-k", rule_k, "codegree rule subset size + 1");
  check->add_option("--codegree-e", rule_e, "codegree rule threshold");

  auto* peel_cmd = app.add_subcommand("peel", "remove low-codegree edges");
  peel_cmd->add_option("--input", input, "hypergraph file ('-' = stdin)");
  peel_cmd->add_option("--k", k, "subset size + 1")->required();
  peel_cmd->add_option("--e", e, "codegree threshold")->required();
  peel_cmd->add_option("--output", peel_output, "peeled hypergraph ('-' = stdout)");
  peel_cmd->add_option("--log", log_path, "removal log file ('-' = stdout)");

  auto* extract = app.add_subcommand("extract", "density-increment deletion loop");
  extract->add_option("--input", input, "hypergraph file ('-' = stdin)");
  extract->add_option("--t", t, "configuration size + 1")->required();
  extract->add_option("--e", e, "family size")->required();
  extract->add_option("--k", k, "overlap parameter")->default_val(2);
  extract->add_option("--output", output, "final hypergraph file");

  auto* solve = app.add_subcommand("solve", "exact maximum edge count");
  solve->add_option("--n", n, "vertex count")->required();
  solve->add_option("--r", r, "uniformity")->required();
  solve->add_option("--v", vs, "union threshold (repeatable)")->required();
  solve->add_option("--e", es, "configuration size (repeatable)")->required();
  solve->add_option("--codegree-k", rule_k, "codegree rule subset size + 1");
  solve->add_option("--codegree-e", rule_e, "codegree rule threshold");
  solve->add_option("--output", output, "witness hypergraph file");

  auto* construct = app.add_subcommand("construct", "greedy conflict-free packing");
  construct->add_option("--n", n, "vertex count")->required();
  construct->add_option("--r", r, "uniformity")->required();
  construct->add_option("--e", e, "largest configuration size")->required();
  construct->add_option("--seed", seed, "candidate shuffle seed")->default_val(0);
  construct->add_option("--order", order, "candidate order")
      ->check(CLI::IsMember({"lex", "random"}))
      ->default_val("lex");
  construct->add_option("--output", output, "write the packing here");

  auto* limits = app.add_subcommand("limits", "closed-form tables");
  limits->add_option("--r", r, "uniformity")->required();
  limits->add_option("--k", k, "overlap parameter")->default_val(0);
  limits->add_option("--e", e, "configuration size")->default_val(0);
  limits->add_option("--v", v, "union threshold for the exponent row")->default_val(0);
  limits->add_option("--n", n, "point value for the exponent row")->default_val(0);
  limits->add_flag("--constants", constants_row, "include the density-increment constants");

  auto* chain = app.add_subcommand("chain", "f and f^(t) chain at one n");
  chain->add_option("--n", n, "vertex count")->required();
  chain->add_option("--r", r, "uniformity")->required();
  chain->add_option("--e", e, "family size")->required();
  chain->add_option("--k", k, "overlap parameter")->default_val(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*check) return run_check(common, input, vs, es, rule_k, rule_e);
    if (*peel_cmd) return run_peel(common, input, k, e, peel_output, log_path);
    if (*extract) return run_extract(common, input, t, e, k, output);
    if (*solve) return run_solve(common, n, r, vs, es, rule_k, rule_e, output);
    if (*construct) return run_construct(common, n, r, e, seed, order, output);
    if (*limits) return run_limits(common, r, k, e, v, n, constants_row);
    if (*chain) return run_chain(common, n, r, e, k);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 64;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 64;
}
