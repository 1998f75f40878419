// Command-line front end for the gtcent library.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 usage (bad flags, missing files,
// invalid parameters), 3 malformed input file, 4 exhaustive solver size limit.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtcent/betweenness.hpp"
#include "gtcent/centrality.hpp"
#include "gtcent/community.hpp"
#include "gtcent/connectivity.hpp"
#include "gtcent/degree_games.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/mcnets.hpp"
#include "gtcent/oracles.hpp"
#include "gtcent/vulnerability.hpp"

#ifndef GTCENT_VERSION
#define GTCENT_VERSION "0.0.0"
#endif

namespace {

using namespace gtcent;

// Invalid parameter values found after parsing; reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph;
  std::string node_weights;
  bool directed = false;
  std::string format = "csv";
};

struct Report {
  std::string measure;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> labels;
  std::vector<double> scores;
};

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Values indistinguishable from zero at the printed precision are written as 0,
// so that algorithms differing only in rounding noise print identical reports.
void snap_zeros(std::vector<double>& scores) {
  double scale = 1;
  for (double x : scores) scale = std::max(scale, std::fabs(x));
  for (double& x : scores) if (std::fabs(x) <= 1e-12 * scale) x = 0;
}

void emit(const Report& in, const std::string& format) {
  Report r = in;
  snap_zeros(r.scores);
  std::vector<int> order(r.scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  // Rank on the printed value so ties survive rounding noise.
  std::vector<double> shown(r.scores.size());
  for (std::size_t i = 0; i < shown.size(); ++i) shown[i] = std::stod(fmt12(r.scores[i]));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (shown[a] != shown[b]) return shown[a] > shown[b];
    return r.labels[a] < r.labels[b];
  });
  if (format == "json") {
    nlohmann::ordered_json j;
    j["metadata"]["measure"] = r.measure;
    j["metadata"]["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["metadata"]["parameters"][k] = v;
    j["metadata"]["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    j["metadata"]["version"] = GTCENT_VERSION;
    j["scores"] = nlohmann::ordered_json::array();
    for (int v : order) j["scores"].push_back({{"node", r.labels[v]}, {"score", shown[v]}});
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "node,score\n";
  for (int v : order) std::cout << r.labels[v] << ',' << fmt12(r.scores[v]) << '\n';
}

Report report_of(const Graph& g, const CentralityResult& c) {
  Report r{c.measure, c.params, c.seed, {}, c.scores};
  for (int v = 0; v < g.size(); ++v) r.labels.push_back(g.label(v));
  return r;
}

Graph load(const Common& c) {
  BuildOptions opts;
  opts.directed = c.directed;
  if (!c.node_weights.empty()) opts.node_weights = parse_node_values(read_file(c.node_weights));
  return load_graph(c.graph, opts);
}

void add_graph_flags(CLI::App* app, Common& c, bool required = true) {
  auto* opt = app->add_option("--graph", c.graph, "Edge list: 'u v [weight]' per line")->check(CLI::ExistingFile);
  if (required) opt->required();
  app->add_option("--node-weights", c.node_weights, "Node values: 'node value' per line")->check(CLI::ExistingFile);
  app->add_flag("--directed", c.directed, "Read arcs instead of edges");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(x);
  }
  return out;
}

// "uniform" or "interval:a,b".
SizeDistribution parse_pd(const std::string& text, int n) {
  if (text == "uniform") return SizeDistribution::uniform(n);
  if (text.rfind("interval:", 0) == 0) {
    auto ab = split_numbers(text.substr(9), ',');
    if (ab.size() != 2) throw UsageError("--pd interval needs a,b");
    return interval_pd(static_cast<int>(ab[0]), static_cast<int>(ab[1]), n);
  }
  throw UsageError("--pd must be 'uniform' or 'interval:a,b'");
}

CoalitionalWeights parse_preset(const std::string& text, const CommunityStructure& cs) {
  if (text.rfind("p-binomial:", 0) == 0) {
    auto p = split_numbers(text.substr(11), ',');
    if (p.size() != 1) throw UsageError("--preset p-binomial needs one probability");
    return preset_weights(WeightPreset::p_binomial, cs, p[0]);
  }
  if (text == "banzhaf") return preset_weights(WeightPreset::owen_banzhaf, cs);
  return preset_weights(parse_weight_preset(text), cs);
}

std::function<double(double)> parse_distance_function(const std::string& text) {
  if (text == "inverse") return [](double d) { return 1.0 / (1.0 + d); };
  if (text == "exp") return [](double d) { return std::exp(-d); };
  if (text == "step") return [](double d) { return d <= 1.0 ? 1.0 : 0.0; };
  throw UsageError("--f must be inverse, exp or step");
}

// ---------------------------------------------------------------- centrality

struct CentralityArgs {
  Common common;
  std::string measure;
  int k = 1;
  double cutoff = 1;
  std::string f = "inverse";
  std::string pd = "uniform";
  std::string communities;
  std::string preset = "owen";
};

void run_centrality(const CentralityArgs& a) {
  Graph g = load(a.common);
  const int n = g.size();
  CentralityResult r;
  const std::string& m = a.measure;
  auto communities = [&] {
    if (a.communities.empty()) throw UsageError("--communities is required for " + m);
    return parse_communities(read_file(a.communities), g);
  };
  const DistanceMode mode = g.weighted() ? DistanceMode::weighted : DistanceMode::unweighted;
  if (m == "degree") {
    r = classic_centrality(g, ClassicKind::degree);
  } else if (m == "closeness") {
    r = classic_centrality(g, ClassicKind::closeness);
  } else if (m == "betweenness") {
    r = classic_centrality(g, ClassicKind::betweenness, mode);
  } else if (m == "sv-g1") {
    r = sv_g1(g);
  } else if (m == "sv-g2") {
    r = sv_g2(g, std::vector<int>(n, a.k));
    r.params.emplace_back("k", std::to_string(a.k));
  } else if (m == "sv-g3") {
    r = sv_g3(g, std::vector<double>(n, a.cutoff));
    r.params.emplace_back("cutoff", fmt12(a.cutoff));
  } else if (m == "sv-g4") {
    r = sv_g4(g, parse_distance_function(a.f));
    r.params.emplace_back("f", a.f);
  } else if (m == "sv-g5") {
    r = sv_g5_approx(g, std::vector<double>(n, a.cutoff));
    r.params.emplace_back("cutoff", fmt12(a.cutoff));
  } else if (m == "svb") {
    r = g.weighted() ? wsvb(g) : svb(g);
  } else if (m == "semivalue-b") {
    auto pd = parse_pd(a.pd, n);
    r = g.weighted() ? wsb(g, pd) : semivalue_betweenness(g, pd);
    r.params.emplace_back("pd", a.pd);
  } else if (m == "owen-degree") {
    r = owen_degree(g, communities());
  } else if (m == "coalitional-semivalue") {
    auto cs = communities();
    r = coalitional_semivalue_degree(g, cs, parse_preset(a.preset, cs));
    r.params.emplace_back("preset", a.preset);
  }
  emit(report_of(g, r), a.common.format);
}

// ---------------------------------------------------------------- connectivity

struct ConnectivityArgs {
  Common common;
  std::string f = "unit";
  std::string mode = "faster";
  std::uint64_t iters = 100000;
  std::uint64_t seed = 1;
};

void run_connectivity(const ConnectivityArgs& a) {
  Graph g = load(a.common);
  auto game = ConnectivityGame::make(g, parse_connectivity_preset(a.f));
  CentralityResult r;
  if (a.mode == "exact") {
    r = general_sv_connectivity(game);
  } else if (a.mode == "faster") {
    r = faster_svcg(game);
    r.params.clear();  // keep exact and faster reports identical
  } else {
    r = approximate_svcg(game, a.iters, a.seed);
  }
  r.measure = "connectivity-sv";
  r.params.insert(r.params.begin(), {"f", a.f});
  emit(report_of(g, r), a.common.format);
}

// ---------------------------------------------------------------- gmcnets

struct GmcnetsArgs {
  Common common;
  std::string rules;
  std::string value = "nr";
};

RuleSet load_rules(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_rules(read_file(arg));
  if (arg.find("->") == std::string::npos) throw CLI::ValidationError("--rules", "no such file: " + arg);
  return parse_rules(arg);
}

void run_gmcnets(const GmcnetsArgs& a) {
  RuleSet rs = load_rules(a.rules);
  Report r;
  r.measure = a.value == "nr" ? "nowak-radzik" : "sanchez-bergantinos";
  r.labels = rs.players;
  r.scores = a.value == "nr" ? comp_nr(rs) : comp_sb(rs);
  emit(r, a.common.format);
}

void run_gmcnets_betweenness(const GmcnetsArgs& a) {
  Graph g = load(a.common);
  auto r = generalized_betweenness(g, a.value == "nr" ? OrderedValue::nr : OrderedValue::sb);
  emit(report_of(g, r), a.common.format);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  Common common;
  std::string interval = "1,2";
  std::string strategy = "rank-inv-sq";
  int trials = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> measures{"betweenness", "semivalue-b"};
  std::string pd;
};

void run_simulate(const SimulateArgs& a) {
  Graph g = load(a.common);
  auto ab = split_numbers(a.interval, ',');
  if (ab.size() != 2) throw UsageError("--interval needs a,b");
  FailureModel model{static_cast<int>(ab[0]), static_cast<int>(ab[1]), a.trials, a.seed};
  const auto strategy = ProtectionStrategy::parse(a.strategy);
  // The Semivalue ranking defaults to the failure interval itself.
  const std::string pd = a.pd.empty() ? "interval:" + a.interval : a.pd;
  std::cout << simulation_csv_header() << '\n';
  for (const auto& m : a.measures) {
    CentralityResult ranking;
    if (m == "betweenness") {
      ranking = classic_centrality(g, ClassicKind::betweenness);
    } else if (m == "degree") {
      ranking = classic_centrality(g, ClassicKind::degree);
    } else if (m == "svb") {
      ranking = svb(g);
    } else if (m == "semivalue-b") {
      ranking = semivalue_betweenness(g, parse_pd(pd, g.size()));
    } else {
      throw UsageError("unknown ranking measure: " + m);
    }
    auto res = simulate_failures(g, ranking, strategy, model);
    std::cout << simulation_csv_row(model, strategy, m, res) << '\n';
  }
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  Common common;
  std::string concept_name;
  std::string game = "group-betweenness";
  std::string rules;
  std::string pd = "uniform";
  std::string communities;
  std::string preset = "owen";
};

void run_oracle(const OracleArgs& a) {
  Report r;
  r.measure = "oracle-" + a.concept_name;
  if (a.concept_name == "nr" || a.concept_name == "sb") {
    if (a.rules.empty()) throw UsageError("--rules is required for " + a.concept_name);
    RuleSet rs = load_rules(a.rules);
    auto game = as_ordered_game(rs);
    r.labels = rs.players;
    r.scores = a.concept_name == "nr" ? exact_nowak_radzik(game) : exact_sanchez_bergantinos(game);
    emit(r, a.common.format);
    return;
  }
  if (a.common.graph.empty()) throw UsageError("--graph is required for " + a.concept_name);
  Graph g = load(a.common);
  if (g.size() > kSubsetOracleLimit && a.concept_name != "owen" && a.concept_name != "csemi") {
    throw SizeLimitError("oracle limited to " + std::to_string(kSubsetOracleLimit) + " nodes");
  }
  CoalitionGame game;
  if (a.game == "group-betweenness") {
    game = group_betweenness_game(g, g.weighted() ? DistanceMode::weighted : DistanceMode::unweighted);
  } else if (a.game == "weighted-degree") {
    game = weighted_degree_game(g);
  } else if (a.game == "g1") {
    game = as_coalition_game(g, DegreeGameSpec{});
  } else if (a.game == "connectivity") {
    auto cg = ConnectivityGame::make(g, ConnectivityPreset::unit);
    game = {g.size(), [cg](Mask c) { return nu_connectivity(cg, c); }};
  } else {
    throw UsageError("unknown game: " + a.game);
  }
  r.params.emplace_back("game", a.game);
  for (int v = 0; v < g.size(); ++v) r.labels.push_back(g.label(v));
  if (a.concept_name == "sv") {
    r.scores = exact_shapley(game);
  } else if (a.concept_name == "semivalue") {
    r.scores = exact_semivalue(game, parse_pd(a.pd, g.size()).as_semivalue());
  } else {
    if (a.communities.empty()) throw UsageError("--communities is required for " + a.concept_name);
    auto cs = parse_communities(read_file(a.communities), g);
    r.scores = a.concept_name == "owen" ? exact_owen(game, cs)
                                        : exact_coalitional_semivalue(game, cs, parse_preset(a.preset, cs));
  }
  emit(r, a.common.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic network centrality"};
  app.set_version_flag("--version", GTCENT_VERSION);
  app.require_subcommand(1);

  CentralityArgs ca;
  auto* cen = app.add_subcommand("centrality", "Rank nodes by a centrality measure");
  add_graph_flags(cen, ca.common);
  cen->add_option("--measure", ca.measure)
      ->required()
      ->check(CLI::IsMember({"degree", "closeness", "betweenness", "sv-g1", "sv-g2", "sv-g3", "sv-g4", "sv-g5",
                             "svb", "semivalue-b", "owen-degree", "coalitional-semivalue"}));
  cen->add_option("--k", ca.k, "sv-g2: neighbours needed to be influenced");
  cen->add_option("--cutoff", ca.cutoff, "sv-g3: reach distance; sv-g5: weight threshold");
  cen->add_option("--f", ca.f, "sv-g4: inverse (1/(1+d)), exp (e^-d) or step (d <= 1)");
  cen->add_option("--pd", ca.pd, "semivalue-b: uniform or interval:a,b");
  cen->add_option("--communities", ca.communities, "'node community' per line")->check(CLI::ExistingFile);
  cen->add_option("--preset", ca.preset, "owen, banzhaf, owen-banzhaf, sym-banzhaf or p-binomial:p");

  ConnectivityArgs co;
  auto* con = app.add_subcommand("connectivity", "Shapley value of a connectivity game");
  add_graph_flags(con, co.common);
  con->add_option("--f", co.f, "Value of a connected coalition")->check(CLI::IsMember({"unit", "edges-over-weight"}));
  con->add_option("--mode", co.mode, "Enumerate all coalitions, connected ones only, or sample")->check(CLI::IsMember({"exact", "faster", "approx"}));
  con->add_option("--iters", co.iters, "approx: number of sampled coalitions")->check(CLI::PositiveNumber);
  con->add_option("--seed", co.seed, "approx: random seed");

  GmcnetsArgs gm;
  auto* gmc = app.add_subcommand("gmcnets", "Nowak-Radzik or Sanchez-Bergantinos value of a rule set");
  gmc->add_option("--rules", gm.rules, "Rule file, or rule text");
  gmc->add_option("--value", gm.value, "Nowak-Radzik or Sanchez-Bergantinos")->check(CLI::IsMember({"nr", "sb"}));
  gmc->add_option("--format", gm.common.format)->check(CLI::IsMember({"csv", "json"}));
  gmc->require_subcommand(0, 1);
  GmcnetsArgs gb;
  auto* gbet = gmc->add_subcommand("betweenness", "Generalized game-theoretic betweenness");
  add_graph_flags(gbet, gb.common);
  gbet->add_option("--value", gb.value, "Nowak-Radzik or Sanchez-Bergantinos")->check(CLI::IsMember({"nr", "sb"}));

  SimulateArgs si;
  auto* sim = app.add_subcommand("simulate", "Simultaneous node failures under protection strategies");
  add_graph_flags(sim, si.common);
  sim->add_option("--interval", si.interval, "Failure-set size range a,b (sizes a..b-1)");
  sim->add_option("--strategy", si.strategy, "rank-inv-sq, top:fraction, full or none");
  sim->add_option("--trials", si.trials, "Failure sets drawn per strategy and measure")->check(CLI::PositiveNumber);
  sim->add_option("--seed", si.seed, "Random seed");
  sim->add_option("--measure", si.measures, "Ranking measures to compare");
  sim->add_option("--pd", si.pd, "Semivalue size distribution; defaults to the failure interval");

  OracleArgs orc;
  auto* ora = app.add_subcommand("oracle", "Brute-force solution concepts for cross-checks");
  add_graph_flags(ora, orc.common, false);
  ora->add_option("--concept", orc.concept_name)
      ->required()
      ->check(CLI::IsMember({"sv", "semivalue", "owen", "csemi", "nr", "sb"}));
  ora->add_option("--game", orc.game, "group-betweenness, weighted-degree, g1 or connectivity");
  ora->add_option("--rules", orc.rules, "Rule file or text (nr, sb)");
  ora->add_option("--pd", orc.pd, "semivalue: uniform or interval:a,b");
  ora->add_option("--communities", orc.communities, "'node community' per line (owen, csemi)")->check(CLI::ExistingFile);
  ora->add_option("--preset", orc.preset, "csemi weights, as for centrality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cen->parsed()) {
      run_centrality(ca);
    } else if (con->parsed()) {
      run_connectivity(co);
    } else if (gbet->parsed()) {
      run_gmcnets_betweenness(gb);
    } else if (gmc->parsed()) {
      if (gm.rules.empty()) throw UsageError("gmcnets needs --rules or the betweenness subcommand");
      run_gmcnets(gm);
    } else if (sim->parsed()) {
      run_simulate(si);
    } else if (ora->parsed()) {
      run_oracle(orc);
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
