#include <gtest/gtest.h>

#include <boost/math/distributions/normal.hpp>

#include "gtcent/betweenness.hpp"
#include "gtcent/fixtures.hpp"
#include "gtcent/generators.hpp"
#include "gtcent/vulnerability.hpp"
#include "support.hpp"

using namespace gtcent;
using gtcent::testing::max_abs_diff;

namespace {

std::vector<double> rounded(std::vector<double> v) {
  for (double& x : v) x = std::round(x * 1e9) / 1e9;
  return v;
}

CentralityResult scores(std::vector<double> s) {
  CentralityResult r;
  r.scores = std::move(s);
  return r;
}

}  // namespace

TEST(Igm, Examples) {
  EXPECT_DOUBLE_EQ(igm(parse_graph("a b\nb c\n")), 5);
  EXPECT_DOUBLE_EQ(igm(Graph(2)), 0);
  for (int n = 2; n <= 8; ++n) EXPECT_DOUBLE_EQ(igm(complete_graph(n)), n * (n - 1));
  std::vector<char> removed{0, 1, 0};
  EXPECT_DOUBLE_EQ(igm(parse_graph("a b\nb c\n"), &removed), 0);
}

TEST(Igm, MonotoneUnderRemoval) {
  Rng rng(13);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = erdos_renyi(20, 0.15, seed);
    std::vector<char> removed(20, 0);
    double prev = igm(g, &removed);
    std::vector<int> order(20);
    std::iota(order.begin(), order.end(), 0);
    shuffle_in_place(order, rng);
    for (int v : order) {
      removed[v] = 1;
      const double cur = igm(g, &removed);
      EXPECT_LE(cur, prev + 1e-12);
      prev = cur;
    }
    EXPECT_EQ(prev, 0);
  }
}

TEST(IntervalPd, Examples) {
  auto one = interval_pd(1, 2, 5);
  EXPECT_EQ(one.pd, (std::vector<double>{1, 0, 0, 0, 0}));
  auto all = interval_pd(1, 6, 5);
  EXPECT_LE(max_abs_diff(all.pd, SizeDistribution::uniform(5).pd), 1e-15);
  EXPECT_THROW(interval_pd(0, 2, 5), std::invalid_argument);
  EXPECT_THROW(interval_pd(3, 3, 5), std::invalid_argument);
  EXPECT_THROW(interval_pd(1, 7, 5), std::invalid_argument);
}

TEST(IntervalPd, SingletonSizeIsStandardBetweenness) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = preferential_attachment(40, 2, seed);
    auto sb = semivalue_betweenness(g, interval_pd(1, 2, 40));
    auto cb = classic_centrality(g, ClassicKind::betweenness);
    EXPECT_LE(max_abs_diff(sb.scores, cb.scores), 1e-9);
    EXPECT_EQ(ranks_of(rounded(sb.scores)), ranks_of(rounded(cb.scores)));
  }
}

TEST(IntervalPd, AllButFullSizeRanksLikeShapley) {
  // Values differ by the factor n/(n-1); rankings agree.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 40;
    Graph g = preferential_attachment(n, 2, seed);
    auto sb = semivalue_betweenness(g, interval_pd(1, n, n));
    auto sv = svb(g);
    std::vector<double> scaled(sv.scores);
    for (double& x : scaled) x *= static_cast<double>(n) / (n - 1);
    EXPECT_LE(max_abs_diff(sb.scores, scaled), 1e-9);
    EXPECT_GT(max_abs_diff(sb.scores, sv.scores), 1e-6);
    EXPECT_EQ(ranks_of(rounded(sb.scores)), ranks_of(rounded(scaled)));
  }
}

TEST(Ranks, TiesGoToLowerIndex) {
  EXPECT_EQ(ranks_of({1, 3, 3, 0}), (std::vector<int>{3, 1, 2, 4}));
}

TEST(Strategy, ParseAndName) {
  EXPECT_EQ(ProtectionStrategy::parse("rank-inv-sq").kind, ProtectionStrategy::Kind::rank_inverse_square);
  auto top = ProtectionStrategy::parse("top:0.25");
  EXPECT_EQ(top.kind, ProtectionStrategy::Kind::top_fraction);
  EXPECT_EQ(top.fraction, 0.25);
  EXPECT_EQ(top.name(), "top:0.25");
  EXPECT_EQ(ProtectionStrategy::parse("full").name(), "full");
  EXPECT_THROW(ProtectionStrategy::parse("top:0"), std::invalid_argument);
  EXPECT_THROW(ProtectionStrategy::parse("top:1.5"), std::invalid_argument);
  EXPECT_THROW(ProtectionStrategy::parse("top:x"), std::invalid_argument);
  EXPECT_THROW(ProtectionStrategy::parse("half"), std::invalid_argument);
}

TEST(Simulate, FullProtectionKeepsBaseline) {
  Graph g = preferential_attachment(50, 2, 4);
  auto ranking = classic_centrality(g, ClassicKind::degree);
  FailureModel model{1, 51, 300, 9};
  auto r = simulate_failures(g, ranking, ProtectionStrategy::parse("full"), model);
  EXPECT_EQ(r.mean, igm(g));
  EXPECT_EQ(r.stddev, 0);
  EXPECT_EQ(r.ci_low, r.mean);
  EXPECT_EQ(r.ci_high, r.mean);
}

TEST(Simulate, EverythingFails) {
  Graph g = preferential_attachment(20, 2, 4);
  auto ranking = classic_centrality(g, ClassicKind::degree);
  auto r = simulate_failures(g, ranking, ProtectionStrategy::parse("none"), FailureModel{20, 21, 50, 1});
  EXPECT_EQ(r.mean, 0);
  EXPECT_EQ(r.stddev, 0);
}

TEST(Simulate, TopFractionSavesTopRanks) {
  // Protecting every node ranked in the top half of a path keeps those nodes alive.
  Graph g = fixtures::path(4);
  auto ranking = scores({0, 1, 1, 0});
  auto r = simulate_failures(g, ranking, ProtectionStrategy::parse("top:0.5"), FailureModel{4, 5, 10, 2});
  EXPECT_DOUBLE_EQ(r.mean, 2);
  auto fraction = simulate_failures(g, ranking, ProtectionStrategy::parse("top:0.3"), FailureModel{4, 5, 10, 2});
  EXPECT_DOUBLE_EQ(fraction.mean, 2);
}

TEST(Simulate, Deterministic) {
  Graph g = preferential_attachment(40, 2, 5);
  auto ranking = svb(g);
  FailureModel model{1, 30, 200, 77};
  auto strategy = ProtectionStrategy::parse("rank-inv-sq");
  auto a = simulate_failures(g, ranking, strategy, model);
  auto b = simulate_failures(g, ranking, strategy, model);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stddev, b.stddev);
  model.seed = 78;
  EXPECT_NE(simulate_failures(g, ranking, strategy, model).mean, a.mean);
  EXPECT_LT(a.ci_low, a.mean);
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.875);
  EXPECT_NEAR(a.ci_high - a.mean, z * a.stddev / std::sqrt(200.0), 1e-9);
}

TEST(Simulate, CsvRow) {
  FailureModel model{1, 30, 10, 5};
  SimulationResult r{12.5, 1, 12, 13, 10};
  EXPECT_EQ(simulation_csv_header(), "interval,strategy,measure,mean_igm,ci_low,ci_high,seed");
  EXPECT_EQ(simulation_csv_row(model, ProtectionStrategy::parse("top:0.1"), "svb", r), "[1;30),top:0.1,svb,12.5,12,13,5");
}

TEST(Simulate, SemivalueRankingProtectsBetterThanBetweenness) {
  // 30 scale-free graphs, failures of size [1, n), rank-based protection. The mean
  // difference of IGM (semivalue ranking minus standard ranking) should be positive
  // at 75% confidence.
  const int n = 60, graphs = 30;
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.875);
  auto strategy = ProtectionStrategy::parse("rank-inv-sq");
  std::vector<double> diff;
  for (int i = 0; i < graphs; ++i) {
    Graph g = preferential_attachment(n, 2, 1000 + i);
    FailureModel model{1, n, 500, static_cast<std::uint64_t>(i + 1)};
    auto semi = simulate_failures(g, semivalue_betweenness(g, interval_pd(1, n, n)), strategy, model);
    auto standard = simulate_failures(g, classic_centrality(g, ClassicKind::betweenness), strategy, model);
    diff.push_back(semi.mean - standard.mean);
  }
  double mean = 0, ss = 0;
  for (double d : diff) mean += d / graphs;
  for (double d : diff) ss += (d - mean) * (d - mean);
  const double se = std::sqrt(ss / (graphs - 1) / graphs);
  std::cout << "mean IGM difference " << mean << ", 75% interval [" << mean - z * se << ", " << mean + z * se
            << "]\n";
  EXPECT_GE(mean - z * se, 0);
}
