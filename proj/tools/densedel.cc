// densedel: command-line front end for the density-deletion library.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "densedel/bruteforce.h"
#include "densedel/cover.h"
#include "densedel/decomposition.h"
#include "densedel/densest.h"
#include "densedel/error.h"
#include "densedel/gadgets.h"
#include "densedel/graph.h"
#include "densedel/orientation_lp.h"
#include "densedel/random_deletion.h"
#include "densedel/supermod.h"

namespace {

using densedel::Cost;
using densedel::Error;
using densedel::ErrorCode;
using densedel::MultiGraph;
using densedel::OraclePtr;
using densedel::Rational;
using densedel::VertexSet;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct GlobalOptions {
  bool plain = false;
  bool oracle = false;
  bool timing = false;
  std::string objective = "graph";
  int p = 2;
};

// A loaded instance: the oracle plus whatever concrete structure backs it.
struct Instance {
  std::string objective;
  int p = 1;
  std::optional<MultiGraph> graph;
  std::optional<densedel::Hypergraph> hypergraph;
  OraclePtr f;
  std::vector<Cost> costs;
};

Instance load_instance(const std::string& path, const std::string& objective, int p) {
  Instance inst;
  inst.objective = objective;
  inst.p = p;
  const std::string text = densedel::read_text_file(path);
  if (objective == "graph" || objective == "pmean") {
    inst.graph = densedel::parse_graph(text);
    inst.costs = inst.graph->costs();
    inst.f = objective == "graph" ? densedel::graph_oracle(*inst.graph) : densedel::pmean_oracle(*inst.graph, p);
  } else if (objective == "hypergraph") {
    inst.hypergraph = densedel::parse_hypergraph(text);
    inst.costs = inst.hypergraph->costs;
    inst.f = densedel::hypergraph_oracle(*inst.hypergraph);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown objective '" + objective + "'");
  }
  return inst;
}

// Residual density after deleting `deleted`, recomputed from scratch.
densedel::DensityCertificate residual_density(const Instance& inst, const VertexSet& deleted) {
  if (inst.graph && inst.objective == "graph") {
    const densedel::InducedSubgraph rest = densedel::delete_vertices(*inst.graph, deleted);
    if (rest.graph.num_vertices() == 0) return {Rational(0), {}};
    densedel::DensityCertificate c = densedel::densest_subgraph(rest.graph);
    VertexSet witness;
    for (densedel::VertexId v : c.witness) witness.push_back(rest.original[v]);
    c.witness = densedel::normalized(std::move(witness));
    return c;
  }
  return densedel::oracle_density(*inst.f->restrict_to(densedel::set_difference(inst.f->ground(), deleted)));
}

json set_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

VertexSet set_from_json(const json& j) {
  VertexSet s;
  for (const auto& v : j) s.push_back(v.get<int>());
  return densedel::normalized(std::move(s));
}

Rational parse_rational_option(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidRational, std::string(name) + ": " + e.what());
  }
}

json cost_json(const Cost& c) { return c.to_string(); }

class Output {
 public:
  explicit Output(const GlobalOptions& opts) : opts_(opts), start_(std::chrono::steady_clock::now()) {}

  void emit(json j, const std::vector<std::string>& plain_lines) const {
    if (opts_.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
      j["wall_ms"] = ms.count();
    }
    if (opts_.plain) {
      for (const std::string& line : plain_lines) std::cout << line << '\n';
      if (opts_.timing) std::cout << "wall_ms " << j["wall_ms"].get<double>() << '\n';
    } else {
      std::cout << j.dump() << '\n';
    }
  }

 private:
  const GlobalOptions& opts_;
  std::chrono::steady_clock::time_point start_;
};

std::string join(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

// ---------------------------------------------------------------------------
// density / decompose

int run_density(const GlobalOptions& opts, const std::string& path) {
  const Output out(opts);
  const Instance inst = load_instance(path, opts.objective, opts.p);
  densedel::DensityCertificate cert;
  if (inst.objective == "graph") {
    cert = densedel::densest_subgraph(*inst.graph);
  } else {
    if (inst.f->ground().empty()) throw Error(ErrorCode::kEmptyGraph, "empty ground set");
    cert = densedel::oracle_density(*inst.f);
  }
  json j;
  j["lambda"] = cert.lambda_star.to_string();
  j["witness"] = set_json(cert.witness);
  if (opts.oracle) {
    const densedel::BruteDensity brute =
        inst.objective == "graph" ? densedel::brute_densest(*inst.graph) : densedel::brute_density(*inst.f);
    if (brute.lambda != cert.lambda_star || brute.maximal != cert.witness) {
      throw Error(ErrorCode::kInvariantViolation, "density disagrees with exhaustive enumeration");
    }
    j["oracle"] = {{"lambda", brute.lambda.to_string()}, {"agrees", true}};
  }
  out.emit(j, {"lambda " + cert.lambda_star.to_string(), "witness " + join(cert.witness)});
  return 0;
}

int run_decompose(const GlobalOptions& opts, const std::string& path) {
  const Output out(opts);
  const Instance inst = load_instance(path, opts.objective, opts.p);
  const densedel::DenseDecomposition d = densedel::dense_decomposition(*inst.f);
  json blocks = json::array();
  std::vector<std::string> lines;
  for (const densedel::DecompositionBlock& b : d) {
    blocks.push_back({{"block", set_json(b.block)}, {"density", b.density.to_string()}});
    lines.push_back(b.density.to_string() + " : " + join(b.block));
  }
  json j;
  j["blocks"] = blocks;
  if (opts.oracle) {
    const densedel::DenseDecomposition brute = densedel::brute_decomposition(*inst.f);
    bool same = brute.size() == d.size();
    for (std::size_t i = 0; same && i < d.size(); ++i) {
      same = brute[i].block == d[i].block && brute[i].density == d[i].density;
    }
    if (!same) throw Error(ErrorCode::kInvariantViolation, "decomposition disagrees with exhaustive recursion");
    j["oracle"] = {{"agrees", true}};
  }
  out.emit(j, lines);
  return 0;
}

// ---------------------------------------------------------------------------
// delete

struct DeleteOptions {
  std::string path;
  std::string rho = "1";
  std::string eps = "1/4";
  std::uint64_t seed = 0;
  int trials = 0;  // 0: single report; K: seeds seed..seed+K-1 with the mean cost
  std::string cf;  // empty: analytic; "brute": enumerated; otherwise a rational
};

json report_base(const Instance& inst, const std::string& algorithm) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["algorithm"] = algorithm;
  j["objective"] = inst.objective;
  if (inst.objective == "pmean") j["p"] = inst.p;
  return j;
}

// Residual lambda and certificate, recomputed independently of the algorithm.
void attach_residual(json& j, const Instance& inst, const VertexSet& deleted) {
  const densedel::DensityCertificate c = residual_density(inst, deleted);
  j["residual_lambda"] = c.lambda_star.to_string();
  j["certificate"] = {{"kind", "witness"}, {"witness", set_json(c.witness)}};
}

Cost total_cost(const Instance& inst, const VertexSet& s) {
  Cost c = Cost::zero();
  for (densedel::VertexId v : s) c += inst.costs.at(v);
  return c;
}

densedel::BruteResult brute_opt(const Instance& inst, const Rational& rho) {
  if (inst.objective == "graph") return densedel::brute_opt_deletion(*inst.graph, rho);
  return densedel::brute_opt_deletion(*inst.f, inst.costs, rho);
}

void attach_oracle(json& j, const Instance& inst, const Rational& rho) {
  const densedel::BruteResult opt = brute_opt(inst, rho);
  j["oracle"] = {{"opt", opt.value.to_string()}, {"finite_opt", opt.feasible}};
}

std::vector<std::string> report_lines(const json& j) {
  std::vector<std::string> lines;
  lines.push_back("algorithm " + j["algorithm"].get<std::string>());
  lines.push_back("deleted " + join(set_from_json(j["deleted"])));
  lines.push_back("cost " + j["cost"].get<std::string>());
  lines.push_back("residual_lambda " + j["residual_lambda"].get<std::string>());
  return lines;
}

int run_delete_lp(const GlobalOptions& opts, const DeleteOptions& d) {
  const Output out(opts);
  if (opts.objective != "graph") throw Error(ErrorCode::kInvalidArgument, "delete lp needs --objective graph");
  const Instance inst = load_instance(d.path, opts.objective, opts.p);
  const Rational rho = parse_rational_option(d.rho, "--rho");
  const Rational eps = parse_rational_option(d.eps, "--eps");
  const densedel::RoundedSolution r = densedel::round_threshold(*inst.graph, rho, eps);
  json j = report_base(inst, "lp");
  j["parameters"] = {{"rho", rho.to_string()}, {"eps", eps.to_string()}};
  j["deleted"] = set_json(r.deleted);
  j["cost"] = cost_json(r.cost);
  j["lp_value"] = r.lp_value.to_string();
  j["density_target"] = (rho / (Rational(1) - Rational(2) * eps)).to_string();
  attach_residual(j, inst, r.deleted);
  j["bounds"] = {{"density_bound", r.checks.density_bound},
                 {"cost_bound", r.checks.cost_bound},
                 {"orientation_cover", r.checks.orientation_cover},
                 {"orientation_load", r.checks.orientation_load}};
  if (opts.oracle) {
    attach_oracle(j, inst, rho);
    const densedel::BruteResult opt = brute_opt(inst, rho);
    if (opt.feasible && r.lp_value > opt.value.value()) {
      throw Error(ErrorCode::kInvariantViolation, "LP value exceeds the brute-force optimum");
    }
  }
  out.emit(j, report_lines(j));
  return 0;
}

int run_delete_greedy(const GlobalOptions& opts, const DeleteOptions& d) {
  const Output out(opts);
  const Instance inst = load_instance(d.path, opts.objective, opts.p);
  const Rational rho = parse_rational_option(d.rho, "--rho");
  const densedel::SubmodCoverInstance cover = densedel::reduce_dd_to_cover(inst.f, rho, inst.costs);
  const densedel::GreedyCoverResult g = densedel::greedy_cover(cover);
  json j = report_base(inst, "greedy");
  j["parameters"] = {{"rho", rho.to_string()}};
  j["deleted"] = set_json(g.chosen);
  j["order"] = g.order;
  j["cost"] = cost_json(g.cost);
  j["finite_cost"] = g.finite_cost;
  j["density_target"] = rho.to_string();
  Rational max_h = 0;
  for (densedel::VertexId v : inst.f->ground()) max_h = densedel::max(max_h, cover.h->eval({v}));
  j["max_singleton_h"] = max_h.to_string();
  // The logarithmic guarantee is only stated for integer-valued h, i.e. integer rho.
  if (rho.is_integer() && max_h >= Rational(1)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", densedel::wolsey_factor_upper(max_h));
    j["approximation_factor_upper"] = buf;
  }
  attach_residual(j, inst, g.chosen);
  if (opts.oracle) attach_oracle(j, inst, rho);
  out.emit(j, report_lines(j));
  return 0;
}

densedel::CfBound resolve_cf(const Instance& inst, const std::string& cf) {
  if (cf.empty()) {
    if (auto a = inst.f->analytic_cf()) return *a;
    return densedel::cf_bruteforce(*inst.f);
  }
  if (cf == "brute") return densedel::cf_bruteforce(*inst.f);
  return {parse_rational_option(cf, "--cf"), densedel::CfBound::Provenance::kAnalytic};
}

json random_report(const Instance& inst, const densedel::RandomDeletionRun& run) {
  json j = report_base(inst, "random");
  j["parameters"] = {{"rho", run.rho.to_string()},
                     {"eps", run.epsilon.to_string()},
                     {"seed", run.seed},
                     {"cf", run.cf.value.to_string()},
                     {"cf_provenance", run.cf.provenance == densedel::CfBound::Provenance::kAnalytic
                                           ? "analytic"
                                           : "bruteforce"}};
  j["deleted"] = set_json(run.deleted);
  j["cost"] = cost_json(run.cost);
  j["density_target"] = run.threshold.to_string();
  json trace = json::array();
  for (const densedel::SampleStep& s : run.trace) {
    trace.push_back({{"ground_size", s.ground_size},
                     {"sampled", s.sampled},
                     {"weight", s.weight.to_string()},
                     {"total_weight", s.total_weight.to_string()}});
  }
  j["trace"] = trace;
  attach_residual(j, inst, run.deleted);
  return j;
}

int run_delete_random(const GlobalOptions& opts, const DeleteOptions& d) {
  const Output out(opts);
  const Instance inst = load_instance(d.path, opts.objective, opts.p);
  const Rational rho = parse_rational_option(d.rho, "--rho");
  const Rational eps = parse_rational_option(d.eps, "--eps");
  const densedel::CfBound cf = resolve_cf(inst, d.cf);
  if (d.trials > 0) {
    json j = report_base(inst, "random");
    j["parameters"] = {{"rho", rho.to_string()}, {"eps", eps.to_string()}, {"seed", d.seed},
                       {"trials", d.trials}, {"cf", cf.value.to_string()}};
    json runs = json::array();
    std::vector<std::string> lines;
    Rational total = 0;
    for (int k = 0; k < d.trials; ++k) {
      const std::uint64_t seed = d.seed + static_cast<std::uint64_t>(k);
      const densedel::RandomDeletionRun run = densedel::random_delete(inst.f, inst.costs, rho, eps, cf, seed);
      total += run.cost.value();
      runs.push_back({{"seed", seed},
                      {"deleted", set_json(run.deleted)},
                      {"cost", cost_json(run.cost)},
                      {"residual_lambda", run.residual_lambda.to_string()}});
      lines.push_back("seed " + std::to_string(seed) + " cost " + run.cost.to_string());
    }
    j["runs"] = runs;
    j["mean_cost"] = (total / Rational(d.trials)).to_string();
    lines.push_back("mean_cost " + j["mean_cost"].get<std::string>());
    if (opts.oracle) attach_oracle(j, inst, rho);
    out.emit(j, lines);
    return 0;
  }
  const densedel::RandomDeletionRun run = densedel::random_delete(inst.f, inst.costs, rho, eps, cf, d.seed);
  json j = random_report(inst, run);
  if (opts.oracle) attach_oracle(j, inst, rho);
  out.emit(j, report_lines(j));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const GlobalOptions& opts, const std::string& instance_path, const std::string& report_path) {
  const Output out(opts);
  json report;
  try {
    report = json::parse(densedel::read_text_file(report_path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("report: ") + e.what());
  }
  for (const char* key : {"objective", "deleted", "cost", "residual_lambda", "density_target"}) {
    if (!report.contains(key)) throw Error(ErrorCode::kParseError, std::string("report lacks '") + key + "'");
  }
  const std::string objective = report["objective"].get<std::string>();
  const Instance inst = load_instance(instance_path, objective, report.value("p", 1));
  const VertexSet deleted = set_from_json(report["deleted"]);
  for (densedel::VertexId v : deleted) {
    if (!densedel::contains(inst.f->ground(), v)) {
      throw Error(ErrorCode::kInvalidVertex, "deleted element " + std::to_string(v) + " not in instance");
    }
  }
  const densedel::DensityCertificate c = residual_density(inst, deleted);
  const Cost cost = total_cost(inst, deleted);
  const Rational target = Rational::parse(report["density_target"].get<std::string>());

  json j;
  j["schema_version"] = kSchemaVersion;
  j["residual_lambda"] = c.lambda_star.to_string();
  j["cost"] = cost_json(cost);
  j["residual_matches"] = c.lambda_star.to_string() == report["residual_lambda"].get<std::string>();
  j["cost_matches"] = cost.to_string() == report["cost"].get<std::string>();
  j["within_target"] = c.lambda_star <= target;
  const bool ok = j["residual_matches"].get<bool>() && j["cost_matches"].get<bool>() && j["within_target"].get<bool>();
  j["verified"] = ok;
  out.emit(j, {std::string("verified ") + (ok ? "true" : "false"), "residual_lambda " + c.lambda_star.to_string(),
               "cost " + cost.to_string()});
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gadget

struct GadgetOptions {
  std::string sc_path;
  int rho = 2;
  bool warmup = false;
  std::string out_path;
  std::string report_path;
};

densedel::GadgetInstance make_gadget(const GadgetOptions& g) {
  const densedel::SetCoverInstance sc = densedel::parse_set_cover(densedel::read_text_file(g.sc_path));
  return g.warmup ? densedel::build_warmup_gadget(sc) : densedel::build_gadget(sc, g.rho);
}

int run_gadget_build(const GlobalOptions& opts, const GadgetOptions& g) {
  const Output out(opts);
  const densedel::GadgetInstance gi = make_gadget(g);
  const std::string text = densedel::format_graph(gi.graph);
  if (!g.out_path.empty()) {
    std::ofstream file(g.out_path);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + g.out_path);
    file << text;
  }
  json provenance = json::array();
  for (densedel::VertexId v = 0; v < gi.graph.num_vertices(); ++v) {
    const densedel::GadgetVertex& p = gi.provenance[v];
    json entry = {{"vertex", v}, {"role", densedel::gadget_role_name(p.role)}};
    if (p.set >= 0) entry["set"] = p.set;
    if (p.element >= 0) entry["element"] = p.element;
    provenance.push_back(entry);
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["rho"] = gi.rho;
  j["warmup"] = gi.warmup;
  j["vertices"] = gi.graph.num_vertices();
  j["edges"] = gi.graph.num_edges();
  if (g.out_path.empty()) j["graph"] = text;
  j["provenance"] = provenance;
  out.emit(j, {"rho " + std::to_string(gi.rho), "vertices " + std::to_string(gi.graph.num_vertices()),
               "edges " + std::to_string(gi.graph.num_edges())});
  return 0;
}

int run_gadget_extract(const GlobalOptions& opts, const GadgetOptions& g) {
  const Output out(opts);
  const densedel::SetCoverInstance sc = densedel::parse_set_cover(densedel::read_text_file(g.sc_path));
  const densedel::GadgetInstance gi = make_gadget(g);
  json report;
  try {
    report = json::parse(densedel::read_text_file(g.report_path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("report: ") + e.what());
  }
  if (!report.contains("deleted")) throw Error(ErrorCode::kParseError, "report lacks 'deleted'");
  const std::vector<int> cover = densedel::extract_cover(gi, set_from_json(report["deleted"]));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["cover"] = cover;
  j["cost"] = cost_json(sc.cost_of(cover));
  j["is_cover"] = sc.is_cover(cover);
  if (opts.oracle) j["oracle"] = {{"opt", densedel::brute_set_cover(sc).value.to_string()}};
  std::vector<std::string> lines = {"cover " + join(VertexSet(cover.begin(), cover.end())),
                                    "cost " + sc.cost_of(cover).to_string()};
  out.emit(j, lines);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchConfig {
  std::vector<std::string> instances;
  std::string objective = "graph";
  int p = 2;
  std::string algorithm = "random";
  std::string rho = "1";
  std::string eps = "1/4";
  std::uint64_t seed = 0;
  int seeds = 1;
  std::string cf;
  bool oracle = false;
};

BenchConfig parse_bench_config(const std::string& path) {
  std::istringstream in(densedel::read_text_file(path));
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  BenchConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError, "config line " + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "instance") {
        const std::filesystem::path p(value);
        cfg.instances.push_back(p.is_absolute() ? value : (base / p).string());
      } else if (key == "objective") {
        cfg.objective = value;
      } else if (key == "p") {
        cfg.p = std::stoi(value);
      } else if (key == "algorithm") {
        cfg.algorithm = value;
      } else if (key == "rho") {
        cfg.rho = value;
      } else if (key == "eps") {
        cfg.eps = value;
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "seeds") {
        cfg.seeds = std::stoi(value);
      } else if (key == "cf") {
        cfg.cf = value;
      } else if (key == "oracle") {
        cfg.oracle = value == "true" || value == "1";
      } else {
        throw Error(ErrorCode::kParseError, "unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "config line " + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  if (cfg.instances.empty()) throw Error(ErrorCode::kParseError, "config names no instance");
  if (cfg.seeds < 1) throw Error(ErrorCode::kParseError, "seeds must be >= 1");
  return cfg;
}

int run_bench(const GlobalOptions& opts, const std::string& config_path) {
  const BenchConfig cfg = parse_bench_config(config_path);
  const Rational rho = parse_rational_option(cfg.rho, "rho");
  const Rational eps = parse_rational_option(cfg.eps, "eps");
  const bool with_oracle = cfg.oracle || opts.oracle;
  std::cout << "instance,algorithm,seed,rho,eps,cost,residual_lambda,density_target,feasible";
  if (with_oracle) std::cout << ",opt";
  std::cout << '\n';
  for (const std::string& path : cfg.instances) {
    const Instance inst = load_instance(path, cfg.objective, cfg.p);
    std::string opt;
    if (with_oracle) opt = brute_opt(inst, rho).value.to_string();
    const int runs = cfg.algorithm == "random" ? cfg.seeds : 1;
    for (int k = 0; k < runs; ++k) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      VertexSet deleted;
      Cost cost;
      Rational target;
      if (cfg.algorithm == "random") {
        const densedel::RandomDeletionRun run =
            densedel::random_delete(inst.f, inst.costs, rho, eps, resolve_cf(inst, cfg.cf), seed);
        deleted = run.deleted;
        cost = run.cost;
        target = run.threshold;
      } else if (cfg.algorithm == "lp") {
        if (!inst.graph || inst.objective != "graph") {
          throw Error(ErrorCode::kInvalidArgument, "lp bench needs objective=graph");
        }
        const densedel::RoundedSolution r = densedel::round_threshold(*inst.graph, rho, eps);
        deleted = r.deleted;
        cost = r.cost;
        target = rho / (Rational(1) - Rational(2) * eps);
      } else if (cfg.algorithm == "greedy") {
        const densedel::GreedyCoverResult g =
            densedel::greedy_cover(densedel::reduce_dd_to_cover(inst.f, rho, inst.costs));
        deleted = g.chosen;
        cost = g.cost;
        target = rho;
      } else {
        throw Error(ErrorCode::kParseError, "unknown algorithm '" + cfg.algorithm + "'");
      }
      const Rational lambda = residual_density(inst, deleted).lambda_star;
      std::cout << path << ',' << cfg.algorithm << ',' << seed << ',' << rho.to_string() << ','
                << eps.to_string() << ',' << cost.to_string() << ',' << lambda.to_string() << ','
                << target.to_string() << ',' << (lambda <= target ? "true" : "false");
      if (with_oracle) std::cout << ',' << opt;
      std::cout << '\n';
    }
  }
  return 0;
}

void print_error(const GlobalOptions& opts, std::string_view code, const std::string& message) {
  if (opts.plain) {
    std::cout << "error " << code << ": " << message << '\n';
  } else {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = {{"code", std::string(code)}, {"message", message}};
    std::cout << j.dump() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-deletion algorithms on graphs and supermodular functions"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_flag("--plain", opts.plain, "Human-readable output instead of JSON");
  app.add_flag("--oracle", opts.oracle, "Cross-check against exhaustive enumeration");
  app.add_flag("--timing", opts.timing, "Report wall time");
  app.add_option("--objective", opts.objective, "graph | hypergraph | pmean")
      ->check(CLI::IsMember({"graph", "hypergraph", "pmean"}));
  app.add_option("--p", opts.p, "Exponent for the p-mean objective")->check(CLI::PositiveNumber);

  std::string path;
  std::string second_path;
  std::function<int()> action;

  CLI::App* density = app.add_subcommand("density", "Exact densest subset");
  density->add_option("instance", path)->required();
  density->callback([&] { action = [&] { return run_density(opts, path); }; });

  CLI::App* decompose = app.add_subcommand("decompose", "Dense decomposition");
  decompose->add_option("instance", path)->required();
  decompose->callback([&] { action = [&] { return run_decompose(opts, path); }; });

  DeleteOptions del;
  CLI::App* del_cmd = app.add_subcommand("delete", "Deletion algorithms");
  del_cmd->require_subcommand(1);
  auto add_delete = [&](const std::string& name, const std::string& help, bool eps, bool seed,
                        std::function<int(const GlobalOptions&, const DeleteOptions&)> fn) {
    CLI::App* sub = del_cmd->add_subcommand(name, help);
    sub->add_option("instance", del.path)->required();
    sub->add_option("--rho", del.rho, "Density target (p/q)");
    if (eps) sub->add_option("--eps", del.eps, "Epsilon (p/q)");
    if (seed) {
      sub->add_option("--seed", del.seed, "Random seed");
      sub->add_option("--trials", del.trials, "Run this many consecutive seeds and report the mean cost")
          ->check(CLI::PositiveNumber);
      sub->add_option("--cf", del.cf, "c_f bound: p/q, 'brute', or omitted for the analytic bound");
    }
    sub->callback([&, fn] { action = [&, fn] { return fn(opts, del); }; });
  };
  add_delete("greedy", "Greedy submodular cover", false, false, run_delete_greedy);
  add_delete("lp", "Orientation LP threshold rounding", true, false, run_delete_lp);
  add_delete("random", "Marginal-proportional random deletion", true, true, run_delete_random);

  GadgetOptions gadget;
  CLI::App* gadget_cmd = app.add_subcommand("gadget", "Set-cover gadgets");
  gadget_cmd->require_subcommand(1);
  CLI::App* build = gadget_cmd->add_subcommand("build", "Build a gadget graph from a set-cover instance");
  build->add_option("setcover", gadget.sc_path)->required();
  build->add_option("--rho", gadget.rho, "Target density (>= 2)");
  build->add_flag("--warmup", gadget.warmup, "Use the incidence-graph construction");
  build->add_option("--out", gadget.out_path, "Write the graph instance here");
  build->callback([&] { action = [&] { return run_gadget_build(opts, gadget); }; });
  CLI::App* extract = gadget_cmd->add_subcommand("extract", "Map a deletion report back to a set cover");
  extract->add_option("setcover", gadget.sc_path)->required();
  extract->add_option("report", gadget.report_path)->required();
  extract->add_option("--rho", gadget.rho, "Target density used at build time");
  extract->add_flag("--warmup", gadget.warmup, "Gadget was built with --warmup");
  extract->callback([&] { action = [&] { return run_gadget_extract(opts, gadget); }; });

  CLI::App* verify = app.add_subcommand("verify", "Recompute a deletion report's claims");
  verify->add_option("instance", path)->required();
  verify->add_option("report", second_path)->required();
  verify->callback([&] { action = [&] { return run_verify(opts, path, second_path); }; });

  CLI::App* bench = app.add_subcommand("bench", "Batch runs from a key=value config, CSV out");
  bench->add_option("config", path)->required();
  bench->callback([&] { action = [&] { return run_bench(opts, path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    print_error(opts, densedel::error_code_name(e.code()), e.what());
    return 1;
  }
}
