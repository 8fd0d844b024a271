// netgame: reachability-game analysis of networks under cascading attacks.
//
// Subcommands: generate, simulate, utility, check-eq, best-response, analyze,
// welfare, gw, sweep. Outputs are JSON (or CSV for sweeps) and embed a run
// manifest; re-running the recorded command reproduces every field except the
// timestamp bit-exactly.
//
// Exit codes: 0 success, 2 validation error, 3 enumeration cap exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netgame/netgame.hpp"

namespace {

using nlohmann::json;
using namespace netgame;

std::string g_command_line;

RunManifest make_manifest(std::uint64_t seed, const std::vector<std::string>& input_paths) {
  RunManifest m;
  m.command = g_command_line;
  m.seed = seed;
  for (const auto& p : input_paths) m.add_input(p);
  m.timestamp = RunManifest::now_utc();
  return m;
}

void emit(const json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

struct Range {
  double start = 0.0;
  double end = 0.0;
  double step = 0.0;

  // Grid points start, start+step, ... snapped by index so long sweeps do
  // not accumulate floating-point drift.
  std::vector<double> points() const {
    std::vector<double> out;
    if (step <= 0.0) {
      out.push_back(start);
      return out;
    }
    const int count = static_cast<int>(std::floor((end - start) / step + 1e-9)) + 1;
    for (int i = 0; i < std::max(count, 1); ++i) out.push_back(start + i * step);
    return out;
  }
};

Range parse_range(const std::string& text) {
  Range r;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    try {
      r.start = r.end = std::stod(text);
    } catch (...) {
      throw validation_error("range: cannot parse \"" + text + "\"");
    }
    r.step = 0.0;
    return r;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw validation_error("range: expected start:end:step, got \"" + text + "\"");
  }
  try {
    r.start = std::stod(text.substr(0, c1));
    r.end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(text.substr(c2 + 1));
  } catch (...) {
    throw validation_error("range: cannot parse \"" + text + "\"");
  }
  if (r.step <= 0.0) throw validation_error("range: step must be > 0");
  if (r.end < r.start) throw validation_error("range: end must be >= start");
  return r;
}

GameParams resolve_params(const std::optional<GameParams>& embedded, double c_flag, double p_flag) {
  GameParams gp;
  if (embedded) gp = *embedded;
  if (c_flag >= 0.0) gp.edge_cost = c_flag;
  if (p_flag >= 0.0) gp.spread_prob = p_flag;
  if (c_flag < 0.0 && p_flag < 0.0 && !embedded) {
    throw validation_error("params: supply --c/--p or embed \"params\" in the graph file");
  }
  gp.validate();
  return gp;
}

json utilities_to_json(const UtilityVector& u) {
  json players = json::array();
  for (std::size_t i = 0; i < u.utility.size(); ++i) {
    players.push_back({{"player", i}, {"benefit", u.benefit[i]}, {"utility", u.utility[i]}});
  }
  return json{{"players", players},
              {"total_benefit", u.total_benefit},
              {"total_cost", u.total_cost},
              {"welfare", u.welfare}};
}

json estimates_to_json(const McUtilities& est) {
  json players = json::array();
  for (std::size_t i = 0; i < est.player.size(); ++i) {
    json row = estimate_to_json(est.player[i]);
    row["player"] = i;
    players.push_back(std::move(row));
  }
  return json{{"players", players}, {"welfare", estimate_to_json(est.welfare)}};
}

json report_to_json(const DeviationReport& r) {
  return json{{"player", r.deviation.player},
              {"deviation", r.deviation.label},
              {"purchases", r.deviation.purchases},
              {"baseline", {{"mean", r.baseline.mean}, {"half_width", r.baseline.half_width}}},
              {"deviated", {{"mean", r.deviated.mean}, {"half_width", r.deviated.half_width}}},
              {"margin", r.margin},
              {"verdict", to_string(r.verdict)}};
}

std::string csv_manifest_header(const RunManifest& m) {
  std::ostringstream out;
  out << "# version=" << m.version << "\n";
  out << "# command=" << m.command << "\n";
  out << "# seed=" << m.seed << "\n";
  for (const auto& [path, hash] : m.inputs) out << "# input=" << path << " fnv1a64=" << hash << "\n";
  return out.str();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// ---- subcommand handlers ----------------------------------------------

struct GenerateArgs {
  std::string family;
  int n = 0;
  int arity = 2;
  double q = 0.1;
  std::uint64_t seed = 0;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  TopologySpec spec;
  spec.family = family_from_name(a.family);
  spec.n = a.n;
  spec.arity = a.arity;
  spec.q = a.q;
  spec.seed = a.seed;
  StrategyProfile sp = generate(spec);

  std::optional<GameParams> params;
  if (a.c >= 0.0 || a.p >= 0.0) {
    if (a.c < 0.0 || a.p < 0.0) {
      throw validation_error("params: --c and --p must be given together");
    }
    params = GameParams{a.c, a.p};
    params->validate();
  }
  json j = profile_to_json(sp, params);
  j["manifest"] = manifest_to_json(make_manifest(a.seed, {}));
  emit(j, a.out);
  return 0;
}

struct SimulateArgs {
  std::string graph;
  std::uint64_t samples = 0;
  double eps = 0.0, delta = 0.0;
  double confidence = 0.99;
  std::uint64_t seed = 0;
  int threads = 0;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  std::optional<GameParams> embedded;
  StrategyProfile sp = load_profile(a.graph, &embedded);
  GameParams gp = resolve_params(embedded, a.c, a.p);

  McOptions mc;
  mc.samples = a.samples;
  mc.eps = a.eps;
  mc.delta = a.delta;
  mc.confidence = a.confidence;
  mc.seed = a.seed;
  mc.threads = a.threads;
  McUtilities est = monte_carlo_utilities(sp, gp, mc);

  json j = estimates_to_json(est);
  j["params"] = {{"c", gp.edge_cost}, {"p", gp.spread_prob}};
  j["manifest"] = manifest_to_json(make_manifest(a.seed, {a.graph}));
  emit(j, a.out);
  return 0;
}

struct UtilityArgs {
  std::string graph;
  std::string mode = "exact";
  int cap = 20;
  std::uint64_t samples = 0;
  double eps = 0.0, delta = 0.0;
  double confidence = 0.99;
  std::uint64_t seed = 0;
  int threads = 0;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_utility(const UtilityArgs& a) {
  std::optional<GameParams> embedded;
  StrategyProfile sp = load_profile(a.graph, &embedded);
  GameParams gp = resolve_params(embedded, a.c, a.p);

  json j;
  if (a.mode == "exact") {
    j = utilities_to_json(exact_utilities(sp, gp, ExactOptions{a.cap}));
    j["mode"] = "exact";
  } else if (a.mode == "mc") {
    McOptions mc;
    mc.samples = a.samples;
    mc.eps = a.eps;
    mc.delta = a.delta;
    mc.confidence = a.confidence;
    mc.seed = a.seed;
    mc.threads = a.threads;
    j = estimates_to_json(monte_carlo_utilities(sp, gp, mc));
    j["mode"] = "mc";
  } else {
    throw validation_error("mode: expected exact|mc");
  }
  j["params"] = {{"c", gp.edge_cost}, {"p", gp.spread_prob}};
  j["manifest"] = manifest_to_json(make_manifest(a.seed, {a.graph}));
  emit(j, a.out);
  return 0;
}

struct CheckEqArgs {
  std::string graph;
  std::string cls = "drop";
  std::string mode = "exact";
  double epsilon = 0.0;
  double delta = 0.01;
  std::uint64_t seed = 0;
  int threads = 0;
  int cap = 20;
  int full_cap = 8;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_check_eq(const CheckEqArgs& a) {
  std::optional<GameParams> embedded;
  StrategyProfile sp = load_profile(a.graph, &embedded);
  GameParams gp = resolve_params(embedded, a.c, a.p);

  EquilibriumOptions opt;
  opt.epsilon = a.epsilon;
  opt.delta = a.delta;
  opt.seed = a.seed;
  opt.threads = a.threads;
  opt.edge_cap = a.cap;
  opt.full_subset_cap = a.full_cap;
  CheckMode mode;
  if (a.mode == "exact") {
    mode = CheckMode::Exact;
  } else if (a.mode == "mc") {
    mode = CheckMode::MonteCarlo;
  } else {
    throw validation_error("mode: expected exact|mc");
  }

  auto reports = check_equilibrium(sp, gp, deviation_class_from_name(a.cls), mode, opt);
  json rows = json::array();
  int violations = 0, inconclusive = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::BeneficialViolation) ++violations;
    if (r.verdict == Verdict::Inconclusive) ++inconclusive;
    rows.push_back(report_to_json(r));
  }
  json j{{"class", a.cls},
         {"mode", a.mode},
         {"epsilon", a.epsilon},
         {"reports", rows},
         {"violations", violations},
         {"inconclusive", inconclusive},
         {"is_equilibrium", violations == 0 && inconclusive == 0}};
  j["params"] = {{"c", gp.edge_cost}, {"p", gp.spread_prob}};
  j["manifest"] = manifest_to_json(make_manifest(a.seed, {a.graph}));
  emit(j, a.out);
  return 0;
}

struct BestResponseArgs {
  std::string graph;
  int player = 0;
  int rounds = 0;  // >0: run dynamics over all players with this cap
  int cap = 20;
  int full_cap = 8;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_best_response(const BestResponseArgs& a) {
  std::optional<GameParams> embedded;
  StrategyProfile sp = load_profile(a.graph, &embedded);
  GameParams gp = resolve_params(embedded, a.c, a.p);

  EquilibriumOptions opt;
  opt.edge_cap = a.cap;
  opt.full_subset_cap = a.full_cap;

  json j;
  if (a.rounds > 0) {
    DynamicsResult dyn = best_response_dynamics(sp, gp, a.rounds, opt);
    json steps = json::array();
    for (const auto& prof : dyn.history) steps.push_back(profile_to_json(prof));
    j = json{{"dynamics", steps}, {"converged", dyn.converged}, {"rounds", dyn.rounds}};
  } else {
    BestResponse br = best_response(sp, gp, a.player, opt);
    j = json{{"player", a.player}, {"purchases", br.purchases}, {"utility", br.utility}};
  }
  j["params"] = {{"c", gp.edge_cost}, {"p", gp.spread_prob}};
  j["manifest"] = manifest_to_json(make_manifest(0, {a.graph}));
  emit(j, a.out);
  return 0;
}

struct AnalyzeArgs {
  std::string graph;
  std::string op;
  double t = 1.0;
  int gamma = 0;
  std::vector<int> edge;
  std::string subset;
  double p = -1.0;
  std::string p_range;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  int cap = 20;
  bool csv = false;
  bool degree_tail = false;
  std::string out;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw validation_error("subset: cannot parse \"" + item + "\" as a vertex id");
    }
  }
  return out;
}

int run_analyze(const AnalyzeArgs& a) {
  StrategyProfile sp = load_profile(a.graph, nullptr);
  const Graph g = induced_graph(sp);
  RunManifest manifest = make_manifest(a.seed, {a.graph});

  SamplingOptions sopt;
  sopt.samples = a.samples;
  sopt.seed = a.seed;
  sopt.threads = a.threads;

  std::vector<double> p_values;
  if (!a.p_range.empty()) {
    p_values = parse_range(a.p_range).points();
  } else if (a.p >= 0.0) {
    p_values.push_back(a.p);
  }

  auto require_p = [&]() {
    if (p_values.empty()) throw validation_error("p: this analysis needs --p or --p-range");
  };

  if (a.op == "mincut") {
    MinCut mc = global_min_cut(g);
    json j{{"op", "mincut"}, {"alpha", mc.weight}, {"side", mc.side}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "decompose") {
    CutDecomposition d = min_cut_decompose(g, a.t);
    json leaves = json::array();
    for (int id : d.strong_leaves) {
      const CutNode& node = d.nodes[static_cast<std::size_t>(id)];
      leaves.push_back({{"vertices", node.vertices}, {"alpha", node.alpha}});
    }
    json nodes = json::array();
    for (const auto& node : d.nodes) {
      nodes.push_back({{"vertices", node.vertices},
                       {"cut_size", node.cut_size},
                       {"alpha", node.alpha},
                       {"left", node.left},
                       {"right", node.right}});
    }
    json j{{"op", "decompose"},
           {"threshold", a.t},
           {"strong_leaves", leaves},
           {"removed_edge_total", d.removed_edge_total},
           {"internal_count", d.internal_count},
           {"nodes", nodes}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "robustness") {
    json j{{"op", "robustness"}};
    if (a.edge.size() == 2) {
      RobustnessCertificate cert = edge_robustness(g, a.edge[0], a.edge[1]);
      j["edge"] = {cert.u, cert.v};
      j["robustness"] = cert.robustness;
      j["witness_cut"] = cert.witness_cut;
    } else {
      auto found = robust_edge_exists(g, a.gamma);
      j["gamma"] = a.gamma;
      j["found"] = found.has_value();
      if (found) {
        j["edge"] = {found->u, found->v};
        j["robustness"] = found->robustness;
        j["witness_cut"] = found->witness_cut;
      }
    }
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "infection") {
    require_p();
    if (a.subset.empty()) throw validation_error("subset: infection analysis needs --subset");
    std::vector<int> subset = parse_int_list(a.subset);
    if (a.csv) {
      std::ostringstream csvout;
      csvout << csv_manifest_header(manifest);
      csvout << "p,min_certainty,half_width,min_seed\n";
      for (double p : p_values) {
        InfectionCertainty cert = infection_certainty(g, subset, p, sopt);
        csvout << fmt(p) << "," << fmt(cert.min_estimate().mean) << ","
               << fmt(cert.min_estimate().half_width) << ","
               << cert.subgraph[static_cast<std::size_t>(cert.min_index)] << "\n";
      }
      emit_text(csvout.str(), a.out);
      return 0;
    }
    InfectionCertainty cert = infection_certainty(g, subset, p_values.front(), sopt);
    json per_seed = json::array();
    for (std::size_t i = 0; i < cert.per_seed.size(); ++i) {
      per_seed.push_back({{"seed", cert.subgraph[i]},
                          {"certainty", cert.per_seed[i].mean},
                          {"half_width", cert.per_seed[i].half_width}});
    }
    json j{{"op", "infection"},
           {"p", p_values.front()},
           {"per_seed", per_seed},
           {"min_certainty", cert.min_estimate().mean},
           {"min_half_width", cert.min_estimate().half_width},
           {"min_seed", cert.subgraph[static_cast<std::size_t>(cert.min_index)]}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "tail") {
    require_p();
    TailOptions topt;
    static_cast<SamplingOptions&>(topt) = sopt;
    topt.degree_tail = a.degree_tail;
    if (a.csv) {
      std::ostringstream csvout;
      csvout << csv_manifest_header(manifest);
      csvout << "p,mean_size,max_observed,tail_ge_2,tail_ge_4,tail_ge_8,tail_ge_16\n";
      for (double p : p_values) {
        ComponentSizeTail tail = component_size_tail(g, p, topt);
        double mean = 0.0;
        for (std::size_t s = 0; s < tail.size_counts.size(); ++s) {
          mean += static_cast<double>(s) * tail.size_counts[s];
        }
        mean /= static_cast<double>(tail.samples);
        csvout << fmt(p) << "," << fmt(mean) << "," << tail.max_observed << ","
               << fmt(tail.tail_probability(2)) << "," << fmt(tail.tail_probability(4)) << ","
               << fmt(tail.tail_probability(8)) << "," << fmt(tail.tail_probability(16)) << "\n";
      }
      emit_text(csvout.str(), a.out);
      return 0;
    }
    ComponentSizeTail tail = component_size_tail(g, p_values.front(), topt);
    json hist = json::array();
    for (std::size_t s = 0; s < tail.size_counts.size(); ++s) {
      if (tail.size_counts[s] > 0) hist.push_back({{"size", s}, {"count", tail.size_counts[s]}});
    }
    json j{{"op", "tail"},
           {"p", p_values.front()},
           {"samples", tail.samples},
           {"max_observed", tail.max_observed},
           {"histogram", hist},
           {"tail_half_width", tail.tail_half_width()}};
    if (!tail.mean_vertices_with_kept_degree_at_least.empty()) {
      j["mean_vertices_with_kept_degree_at_least"] = tail.mean_vertices_with_kept_degree_at_least;
    }
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "connectivity") {
    require_p();
    if (a.csv) {
      std::ostringstream csvout;
      csvout << csv_manifest_header(manifest);
      csvout << "p,connected_probability,half_width\n";
      for (double p : p_values) {
        ProbabilityEstimate est = connectivity_probability(g, p, sopt);
        csvout << fmt(p) << "," << fmt(est.mean) << "," << fmt(est.half_width) << "\n";
      }
      emit_text(csvout.str(), a.out);
      return 0;
    }
    ProbabilityEstimate est = connectivity_probability(g, p_values.front(), sopt);
    json j{{"op", "connectivity"},
           {"p", p_values.front()},
           {"connected_probability", est.mean},
           {"half_width", est.half_width},
           {"samples", est.samples}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "welfare-bound") {
    require_p();
    WelfareBoundCheck check = check_component_welfare_bound(g, g.vertex_count(), p_values.front(), a.cap);
    json j{{"op", "welfare-bound"},
           {"p", check.p},
           {"component_size", check.component_size},
           {"expected_largest_component", check.expected_largest},
           {"epsilon", check.epsilon},
           {"bound", check.bound},
           {"exact_benefit_sum", check.exact_benefit_sum},
           {"holds", check.holds}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "density") {
    require_p();
    json j{{"op", "density"}};
    json rows = json::array();
    for (double p : p_values) {
      DensityReport rep = density_report(g, p);
      rows.push_back({{"p", p},
                      {"n", rep.n},
                      {"edges", rep.edge_count},
                      {"ratio_nlogn", rep.ratio_nlogn},
                      {"ratio_n", rep.ratio_n}});
    }
    j["reports"] = rows;
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  if (a.op == "isolated") {
    require_p();
    IsolatedVertexBound b = isolated_vertex_bound(g, p_values.front());
    json j{{"op", "isolated"},
           {"p", p_values.front()},
           {"exact_expected_isolated", b.exact_expected_isolated},
           {"amgm_lower_bound", b.amgm_lower_bound}};
    j["manifest"] = manifest_to_json(manifest);
    emit(j, a.out);
    return 0;
  }
  throw validation_error(
      "op: unknown analysis \"" + a.op +
      "\" (expected mincut|decompose|robustness|infection|tail|connectivity|welfare-bound|"
      "density|isolated)");
}

struct WelfareArgs {
  std::string graph;
  std::string mode = "exact";
  int cap = 20;
  std::uint64_t samples = 0;
  double eps = 0.0, delta = 0.0;
  std::uint64_t seed = 0;
  int threads = 0;
  double c = -1.0, p = -1.0;
  std::string out;
};

int run_welfare(const WelfareArgs& a) {
  std::optional<GameParams> embedded;
  StrategyProfile sp = load_profile(a.graph, &embedded);
  GameParams gp = resolve_params(embedded, a.c, a.p);
  const Graph g = induced_graph(sp);

  json j{{"mode", a.mode}};
  if (a.mode == "exact") {
    UtilityVector u = exact_utilities(sp, gp, ExactOptions{a.cap});
    j["welfare"] = u.welfare;
    j["total_benefit"] = u.total_benefit;
    j["total_cost"] = u.total_cost;
  } else if (a.mode == "mc") {
    McOptions mc;
    mc.samples = a.samples;
    mc.eps = a.eps;
    mc.delta = a.delta;
    mc.seed = a.seed;
    mc.threads = a.threads;
    McUtilities est = monte_carlo_utilities(sp, gp, mc);
    j["welfare"] = estimate_to_json(est.welfare);
  } else {
    throw validation_error("mode: expected exact|mc");
  }
  IsolatedVertexBound iso = isolated_vertex_bound(g, gp.spread_prob);
  DensityReport dens = density_report(g, gp.spread_prob);
  j["isolated_vertex"] = {{"exact_expected", iso.exact_expected_isolated},
                          {"amgm_lower_bound", iso.amgm_lower_bound}};
  j["density"] = {{"ratio_nlogn", dens.ratio_nlogn}, {"ratio_n", dens.ratio_n}};
  j["params"] = {{"c", gp.edge_cost}, {"p", gp.spread_prob}};
  j["manifest"] = manifest_to_json(make_manifest(a.seed, {a.graph}));
  emit(j, a.out);
  return 0;
}

struct GwArgs {
  std::string offspring = "bernoulli-sum";
  int m = 1;
  double q = 0.5;
  std::string pmf;
  std::uint64_t runs = 1000000;
  int kmax = 20;
  double theta_max = 50.0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw validation_error("pmf: cannot parse \"" + item + "\"");
    }
  }
  return out;
}

int run_gw(const GwArgs& a) {
  OffspringDistribution dist = [&] {
    if (a.offspring == "bernoulli-sum") return OffspringDistribution::bernoulli_sum(a.m, a.q);
    if (a.offspring == "pmf") return OffspringDistribution::from_pmf(parse_double_list(a.pmf));
    throw validation_error("offspring: expected bernoulli-sum|pmf");
  }();
  if (a.kmax < 0) throw validation_error("kmax: must be >= 0");

  RateFunction rate = rate_function(dist, a.theta_max);
  std::vector<std::uint64_t> ks;
  for (int k = 0; k <= a.kmax; ++k) ks.push_back(static_cast<std::uint64_t>(k));
  TailOptionsGw opt;
  opt.runs = a.runs;
  opt.seed = a.seed;
  opt.threads = a.threads;
  opt.theta_max = a.theta_max;
  auto rows = verify_tail_bound(dist, ks, opt);

  RunManifest manifest = make_manifest(a.seed, {});
  std::ostringstream csvout;
  csvout << csv_manifest_header(manifest);
  csvout << "# h=" << fmt(rate.h) << " argmax_theta=" << fmt(rate.argmax_theta)
         << (rate.boundary ? " (boundary)" : "") << "\n";
  csvout << "k,empirical,bound,ci_half,satisfied\n";
  for (const auto& row : rows) {
    csvout << row.k << "," << fmt(row.empirical) << "," << fmt(row.bound) << ","
           << fmt(row.ci_half) << "," << (row.satisfied ? 1 : 0) << "\n";
  }
  emit_text(csvout.str(), a.out);
  return 0;
}

struct SweepArgs {
  std::string family = "cycle";
  int n = 8;
  int arity = 2;
  double q = 0.1;
  std::uint64_t gen_seed = 0;
  std::string p_range;
  std::string c_range;
  std::string check = "full";
  double epsilon = 0.0;
  int cap = 20;
  int full_cap = 8;
  int threads = 0;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  TopologySpec spec;
  spec.family = family_from_name(a.family);
  spec.n = a.n;
  spec.arity = a.arity;
  spec.q = a.q;
  spec.seed = a.gen_seed;
  const StrategyProfile sp = generate(spec);
  const DeviationClass cls = deviation_class_from_name(a.check);

  const std::vector<double> ps = parse_range(a.p_range).points();
  const std::vector<double> cs = parse_range(a.c_range).points();

  EquilibriumOptions opt;
  opt.edge_cap = a.cap;
  opt.full_subset_cap = a.full_cap;
  opt.threads = a.threads;

  RunManifest manifest = make_manifest(0, {});
  std::ostringstream csvout;
  csvout << csv_manifest_header(manifest);
  csvout << "p,c,violations,worst_margin,is_equilibrium\n";
  // The exact benefit change of a deviation does not depend on c, so each p
  // row is enumerated once and every c column read off it.
  for (double p : ps) {
    auto deltas = deviation_benefit_deltas(sp, p, cls, opt);
    for (double c : cs) {
      int violations = 0;
      double worst = -1e300;
      for (const auto& d : deltas) {
        const double margin = d.benefit_delta - d.purchase_delta * c;
        worst = std::max(worst, margin);
        if (margin > a.epsilon + 1e-12) ++violations;
      }
      csvout << fmt(p) << "," << fmt(c) << "," << violations << "," << fmt(worst) << ","
             << (violations == 0 ? 1 : 0) << "\n";
    }
  }
  emit_text(csvout.str(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd << ' ';
    cmd << argv[i];
  }
  g_command_line = cmd.str();

  CLI::App app{"reachability network-formation games under cascading attacks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cgen = app.add_subcommand("generate", "construct a named topology as a graph file");
  cgen->add_option("--family", gen.family, "empty|hub-spoke|cycle|linear-paths|tree|complete|erdos-renyi|two-hub-spoke")->required();
  cgen->add_option("--n", gen.n, "vertex count")->required();
  cgen->add_option("--arity", gen.arity, "tree arity");
  cgen->add_option("--q", gen.q, "erdos-renyi edge probability");
  cgen->add_option("--seed", gen.seed, "erdos-renyi seed");
  cgen->add_option("--c", gen.c, "embed edge cost");
  cgen->add_option("--p", gen.p, "embed spread probability");
  cgen->add_option("--out", gen.out, "output path (default stdout)");

  SimulateArgs sim;
  auto* csim = app.add_subcommand("simulate", "Monte Carlo utility estimates");
  csim->add_option("--graph", sim.graph)->required();
  csim->add_option("--samples", sim.samples);
  csim->add_option("--eps", sim.eps);
  csim->add_option("--delta", sim.delta);
  csim->add_option("--confidence", sim.confidence);
  csim->add_option("--seed", sim.seed);
  csim->add_option("--threads", sim.threads);
  csim->add_option("--c", sim.c);
  csim->add_option("--p", sim.p);
  csim->add_option("--out", sim.out);

  UtilityArgs util;
  auto* cutil = app.add_subcommand("utility", "exact or Monte Carlo utilities");
  cutil->add_option("--graph", util.graph)->required();
  cutil->add_option("--mode", util.mode, "exact|mc");
  cutil->add_option("--cap", util.cap, "exact enumeration edge cap");
  cutil->add_option("--samples", util.samples);
  cutil->add_option("--eps", util.eps);
  cutil->add_option("--delta", util.delta);
  cutil->add_option("--confidence", util.confidence);
  cutil->add_option("--seed", util.seed);
  cutil->add_option("--threads", util.threads);
  cutil->add_option("--c", util.c);
  cutil->add_option("--p", util.p);
  cutil->add_option("--out", util.out);

  CheckEqArgs eq;
  auto* ceq = app.add_subcommand("check-eq", "equilibrium check under a deviation class");
  ceq->add_option("--graph", eq.graph)->required();
  ceq->add_option("--class", eq.cls, "drop|add|swap|full");
  ceq->add_option("--mode", eq.mode, "exact|mc");
  ceq->add_option("--eps", eq.epsilon, "improvement threshold (and MC accuracy target)");
  ceq->add_option("--delta", eq.delta, "MC failure probability");
  ceq->add_option("--seed", eq.seed);
  ceq->add_option("--threads", eq.threads);
  ceq->add_option("--cap", eq.cap);
  ceq->add_option("--full-cap", eq.full_cap);
  ceq->add_option("--c", eq.c);
  ceq->add_option("--p", eq.p);
  ceq->add_option("--out", eq.out);

  BestResponseArgs br;
  auto* cbr = app.add_subcommand("best-response", "exhaustive best response (exact oracle)");
  cbr->add_option("--graph", br.graph)->required();
  cbr->add_option("--player", br.player);
  cbr->add_option("--iterate", br.rounds, "run sequential best-response rounds (iteration cap)");
  cbr->add_option("--cap", br.cap);
  cbr->add_option("--full-cap", br.full_cap);
  cbr->add_option("--c", br.c);
  cbr->add_option("--p", br.p);
  cbr->add_option("--out", br.out);

  AnalyzeArgs an;
  auto* can = app.add_subcommand("analyze", "structural analyses");
  can->add_option("--graph", an.graph)->required();
  can->add_option("--op", an.op, "mincut|decompose|robustness|infection|tail|connectivity|welfare-bound|density|isolated")->required();
  can->add_option("--t", an.t, "decomposition threshold");
  can->add_option("--gamma", an.gamma, "robustness target");
  can->add_option("--edge", an.edge, "edge endpoints (two ids)")->expected(2);
  can->add_option("--subset", an.subset, "comma-separated vertex ids");
  can->add_option("--p", an.p);
  can->add_option("--p-range", an.p_range, "start:end:step sweep over p");
  can->add_option("--samples", an.samples);
  can->add_option("--seed", an.seed);
  can->add_option("--threads", an.threads);
  can->add_option("--cap", an.cap);
  can->add_flag("--csv", an.csv, "emit a CSV sweep table");
  can->add_flag("--degree-tail", an.degree_tail, "include retained-degree statistics (full draws)");
  can->add_option("--out", an.out);

  WelfareArgs wf;
  auto* cwf = app.add_subcommand("welfare", "welfare plus bound diagnostics");
  cwf->add_option("--graph", wf.graph)->required();
  cwf->add_option("--mode", wf.mode, "exact|mc");
  cwf->add_option("--cap", wf.cap);
  cwf->add_option("--samples", wf.samples);
  cwf->add_option("--eps", wf.eps);
  cwf->add_option("--delta", wf.delta);
  cwf->add_option("--seed", wf.seed);
  cwf->add_option("--threads", wf.threads);
  cwf->add_option("--c", wf.c);
  cwf->add_option("--p", wf.p);
  cwf->add_option("--out", wf.out);

  GwArgs gw;
  auto* cgw = app.add_subcommand("gw", "branching-process tail bound check");
  cgw->add_option("--offspring", gw.offspring, "bernoulli-sum|pmf");
  cgw->add_option("--m", gw.m, "bernoulli-sum trial count");
  cgw->add_option("--q", gw.q, "bernoulli-sum per-trial probability");
  cgw->add_option("--pmf", gw.pmf, "comma-separated pmf over 0..m");
  cgw->add_option("--runs", gw.runs);
  cgw->add_option("--kmax", gw.kmax);
  cgw->add_option("--theta-max", gw.theta_max);
  cgw->add_option("--seed", gw.seed);
  cgw->add_option("--threads", gw.threads);
  cgw->add_option("--out", gw.out);

  SweepArgs sw;
  auto* csw = app.add_subcommand("sweep", "equilibrium region map over a (p, c) grid");
  csw->add_option("--family", sw.family)->required();
  csw->add_option("--n", sw.n)->required();
  csw->add_option("--arity", sw.arity);
  csw->add_option("--q", sw.q);
  csw->add_option("--gen-seed", sw.gen_seed);
  csw->add_option("--p", sw.p_range, "start:end:step")->required();
  csw->add_option("--c", sw.c_range, "start:end:step")->required();
  csw->add_option("--check", sw.check, "drop|add|swap|full");
  csw->add_option("--eps", sw.epsilon);
  csw->add_option("--cap", sw.cap);
  csw->add_option("--full-cap", sw.full_cap);
  csw->add_option("--threads", sw.threads);
  csw->add_option("--out", sw.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cgen->parsed()) return run_generate(gen);
    if (csim->parsed()) return run_simulate(sim);
    if (cutil->parsed()) return run_utility(util);
    if (ceq->parsed()) return run_check_eq(eq);
    if (cbr->parsed()) return run_best_response(br);
    if (can->parsed()) return run_analyze(an);
    if (cwf->parsed()) return run_welfare(wf);
    if (cgw->parsed()) return run_gw(gw);
    if (csw->parsed()) return run_sweep(sw);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
