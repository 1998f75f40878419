#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent {

// Read-once formula over player indices. Basic atoms need every listed player present;
// ordered atoms need their players to appear in the listed order.
struct Formula {
  enum class Kind { basic, ordered, negation, conjunction, disjunction, exclusive };
  using Ptr = std::shared_ptr<const Formula>;

  Kind kind = Kind::basic;
  std::vector<int> players;  // atoms only
  Ptr left, right;           // right is unused by negation

  static Ptr basic(std::vector<int> players);
  static Ptr ordered(std::vector<int> players);
  static Ptr negate(Ptr f);
  static Ptr combine(Kind kind, Ptr a, Ptr b);

  // Every player mentioned, in order of appearance.
  std::vector<int> support() const;
  bool read_once() const;
};

struct Rule {
  Formula::Ptr formula;
  double value = 0;
};

struct RuleSet {
  std::vector<std::string> players;
  std::vector<Rule> rules;

  int player_count() const { return static_cast<int>(players.size()); }
  int index_of(std::string_view name) const;  // -1 when absent
};

// One "FORMULA -> NUMBER" rule per line, '#' comments, optional "players: a,b,c" header.
// Operators by increasing binding: '|', '^', '&', then prefix '!'. Throws FormatError.
RuleSet parse_rules(std::string_view text);
std::string to_string(const Formula& f, const std::vector<std::string>& names);

// Ordered coalition t holds distinct player indices.
bool satisfies(const std::vector<int>& t, const Formula& f);
double evaluate_ruleset(const RuleSet& rs, const std::vector<int>& t);
OrderedGame as_ordered_game(const RuleSet& rs);

// Shapley value of a single rule that conjoins single-player literals (Ieong and Shoham).
// Throws std::invalid_argument on any other shape.
std::vector<double> classic_mcnet_rule_sv(const Rule& rule, int player_count);

// Counts of ordered coalitions over the formula's own players. For each member i,
// a[i][k][l] counts coalitions S of size k without i that fail the formula while S with i
// inserted at position l (1-based, stored at l-1) satisfies it; b is the reverse.
// In appended-only mode each a[i][k] holds the single entry l = k+1.
struct QuantityTables {
  std::vector<int> players;
  std::vector<double> t, f;
  std::vector<std::vector<std::vector<double>>> a, b;
};
QuantityTables quantity_tables(const Formula& f, bool all_positions);

std::vector<double> comp_nr(const RuleSet& rs);
std::vector<double> comp_sb(const RuleSet& rs);

enum class OrderedValue { nr, sb };

// One rule per geodesic p with at least two nodes: OAF(p) and not BAF(V \ p), worth
// the path betweenness of p. Players are the graph nodes.
RuleSet betweenness_rules(const Graph& g);
CentralityResult generalized_betweenness(const Graph& g, OrderedValue value);

}  // namespace gtcent
