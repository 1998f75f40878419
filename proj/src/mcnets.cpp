#include "gtcent/mcnets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtcent {

using Int = boost::multiprecision::cpp_int;
using Kind = Formula::Kind;

// ---------------------------------------------------------------- formulas

Formula::Ptr Formula::basic(std::vector<int> players) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::basic;
  f->players = std::move(players);
  return f;
}

Formula::Ptr Formula::ordered(std::vector<int> players) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::ordered;
  f->players = std::move(players);
  return f;
}

Formula::Ptr Formula::negate(Ptr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::negation;
  f->left = std::move(a);
  return f;
}

Formula::Ptr Formula::combine(Kind kind, Ptr a, Ptr b) {
  if (kind != Kind::conjunction && kind != Kind::disjunction && kind != Kind::exclusive) {
    throw std::invalid_argument("combine needs a binary connective");
  }
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

std::vector<int> Formula::support() const {
  std::vector<int> out;
  switch (kind) {
    case Kind::basic:
    case Kind::ordered:
      return players;
    case Kind::negation:
      return left->support();
    default: {
      out = left->support();
      auto r = right->support();
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
  }
}

bool Formula::read_once() const {
  auto s = support();
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

int RuleSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < players.size(); ++i) if (players[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------- parsing

namespace {

bool id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

class RuleParser {
 public:
  RuleParser(std::string_view text, std::size_t line, RuleSet& rs) : s_(text), line_(line), rs_(rs) {}

  Rule parse() {
    Rule r;
    r.formula = parse_or();
    skip_space();
    if (s_.substr(pos_, 2) != "->") fail(pos_ < s_.size() && s_[pos_] == ')' ? "unbalanced ')'" : "expected '->'");
    pos_ += 2;
    skip_space();
    const auto rest = s_.substr(pos_);
    const char* first = rest.data();
    const char* last = rest.data() + rest.size();
    while (last > first && std::isspace(static_cast<unsigned char>(last[-1]))) --last;
    double v = 0;
    auto res = std::from_chars(first, last, v);
    if (first == last || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) fail("expected a number after '->'");
    r.value = v;
    std::vector<int> seen = r.formula->support();
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) fail("player " + rs_.players[*dup] + " repeated in rule");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw FormatError(msg, line_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula::Ptr parse_or() {
    auto f = parse_xor();
    while (accept('|')) f = Formula::combine(Kind::disjunction, f, parse_xor());
    return f;
  }

  Formula::Ptr parse_xor() {
    auto f = parse_and();
    while (accept('^')) f = Formula::combine(Kind::exclusive, f, parse_and());
    return f;
  }

  Formula::Ptr parse_and() {
    auto f = parse_unary();
    while (accept('&')) f = Formula::combine(Kind::conjunction, f, parse_unary());
    return f;
  }

  Formula::Ptr parse_unary() {
    if (accept('!')) return Formula::negate(parse_unary());
    return parse_primary();
  }

  Formula::Ptr parse_primary() {
    skip_space();
    if (accept('(')) {
      auto f = parse_or();
      if (!accept(')')) fail("unbalanced '('");
      return f;
    }
    if (accept('{')) return Formula::basic(parse_ids('}'));
    if (accept('<')) return Formula::ordered(parse_ids('>'));
    if (pos_ < s_.size() && id_char(s_[pos_])) return Formula::basic({parse_id()});
    if (pos_ >= s_.size()) fail("unexpected end of rule");
    fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  int parse_id() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && id_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a player name");
    std::string name(s_.substr(start, pos_ - start));
    int idx = rs_.index_of(name);
    if (idx < 0) {
      rs_.players.push_back(name);
      idx = rs_.player_count() - 1;
    }
    return idx;
  }

  std::vector<int> parse_ids(char close) {
    std::vector<int> ids;
    if (accept(close)) fail("empty atomic formula");
    for (;;) {
      ids.push_back(parse_id());
      if (accept(close)) return ids;
      if (!accept(',')) fail(std::string("unbalanced bracket, expected '") + close + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  RuleSet& rs_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RuleSet parse_rules(std::string_view text) {
  RuleSet rs;
  std::size_t line_no = 0;
  bool any_rule = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.substr(0, 8) == "players:") {
      if (any_rule) throw FormatError("players header must precede the rules", line_no);
      std::string_view rest = line.substr(8);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        auto name = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (name.empty() || !std::all_of(name.begin(), name.end(), id_char)) {
          throw FormatError("bad player name in header", line_no);
        }
        if (rs.index_of(name) >= 0) throw FormatError("player listed twice in header", line_no);
        rs.players.emplace_back(name);
      }
      continue;
    }
    rs.rules.push_back(RuleParser(line, line_no, rs).parse());
    any_rule = true;
  }
  return rs;
}

std::string to_string(const Formula& f, const std::vector<std::string>& names) {
  auto atom = [&](char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < f.players.size(); ++i) {
      if (i) s += ',';
      s += names[f.players[i]];
    }
    return s + close;
  };
  switch (f.kind) {
    case Kind::basic:
      return atom('{', '}');
    case Kind::ordered:
      return atom('<', '>');
    case Kind::negation:
      return "!" + to_string(*f.left, names);
    case Kind::conjunction:
      return "(" + to_string(*f.left, names) + " & " + to_string(*f.right, names) + ")";
    case Kind::disjunction:
      return "(" + to_string(*f.left, names) + " | " + to_string(*f.right, names) + ")";
    case Kind::exclusive:
      return "(" + to_string(*f.left, names) + " ^ " + to_string(*f.right, names) + ")";
  }
  return {};
}

// ---------------------------------------------------------------- semantics

bool satisfies(const std::vector<int>& t, const Formula& f) {
  switch (f.kind) {
    case Kind::basic:
      return std::all_of(f.players.begin(), f.players.end(),
                         [&](int p) { return std::find(t.begin(), t.end(), p) != t.end(); });
    case Kind::ordered: {
      std::size_t next = 0;
      for (int p : t) if (next < f.players.size() && p == f.players[next]) ++next;
      return next == f.players.size();
    }
    case Kind::negation:
      return !satisfies(t, *f.left);
    case Kind::conjunction:
      return satisfies(t, *f.left) && satisfies(t, *f.right);
    case Kind::disjunction:
      return satisfies(t, *f.left) || satisfies(t, *f.right);
    case Kind::exclusive:
      return satisfies(t, *f.left) != satisfies(t, *f.right);
  }
  return false;
}

double evaluate_ruleset(const RuleSet& rs, const std::vector<int>& t) {
  for (int p : t) {
    if (p < 0 || p >= rs.player_count()) throw std::invalid_argument("unknown player in coalition");
  }
  if (t.empty()) return 0;
  double total = 0;
  for (const Rule& r : rs.rules) if (satisfies(t, *r.formula)) total += r.value;
  return total;
}

OrderedGame as_ordered_game(const RuleSet& rs) {
  return {rs.player_count(), [rs](const std::vector<int>& t) { return evaluate_ruleset(rs, t); }};
}

std::vector<double> classic_mcnet_rule_sv(const Rule& rule, int player_count) {
  std::vector<int> pos, neg;
  std::vector<const Formula*> stack{rule.formula.get()};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind == Kind::conjunction) {
      stack.push_back(f->left.get());
      stack.push_back(f->right.get());
    } else if (f->kind == Kind::basic) {
      pos.insert(pos.end(), f->players.begin(), f->players.end());
    } else if (f->kind == Kind::negation && f->left->kind == Kind::basic && f->left->players.size() == 1) {
      neg.push_back(f->left->players[0]);
    } else {
      throw std::invalid_argument("rule is not a conjunction of literals");
    }
  }
  if (!rule.formula->read_once()) throw std::invalid_argument("rule repeats a player");
  std::vector<double> phi(player_count, 0.0);
  const double p = static_cast<double>(pos.size()), n = static_cast<double>(neg.size());
  auto choose = [](double a, double b) { return std::round(std::tgamma(a + 1) / (std::tgamma(b + 1) * std::tgamma(a - b + 1))); };
  for (int i : pos) phi[i] += rule.value / (p * choose(p + n, n));
  for (int i : neg) phi[i] -= rule.value / (n * choose(p + n, p));
  return phi;
}

// ---------------------------------------------------------------- quantity tables

namespace {

struct Counts {
  const std::vector<Int>& fact;
  std::vector<std::vector<Int>> binom;

  explicit Counts(const std::vector<Int>& f, int r) : fact(f) {
    binom.assign(r + 1, std::vector<Int>(r + 1, 0));
    for (int a = 0; a <= r; ++a) {
      binom[a][0] = 1;
      for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
  }
  Int falling(int r, int k) const { return fact[r] / fact[r - k]; }
};

// table[k][l-1], k = 0..r-1.
using Table = std::vector<std::vector<Int>>;

struct Exact {
  std::vector<int> players;
  std::vector<Int> t, f;
  std::vector<Table> a, b;
};

Table zero_table(int r, bool positions) {
  Table t(std::max(r, 0));
  for (int k = 0; k < r; ++k) t[k].assign(positions ? k + 1 : 1, 0);
  return t;
}

Exact atom(const Formula& node, bool positions, const Counts& c) {
  Exact e;
  e.players = node.players;
  const int r = static_cast<int>(e.players.size());
  e.t.assign(r + 1, 0);
  e.t[r] = node.kind == Kind::basic ? c.fact[r] : Int(1);
  e.f.resize(r + 1);
  for (int k = 0; k <= r; ++k) e.f[k] = c.falling(r, k) - e.t[k];
  for (int p = 0; p < r; ++p) {
    Table a = zero_table(r, positions);
    if (node.kind == Kind::basic) {
      for (auto& x : a[r - 1]) x = c.fact[r - 1];
    } else if (positions) {
      a[r - 1][p] = 1;  // the others in order, p put back into its own slot
    } else if (p == r - 1) {
      a[r - 1][0] = 1;
    }
    e.a.push_back(std::move(a));
    e.b.push_back(zero_table(r, positions));
  }
  return e;
}

// Interleave coalitions over the player's side (x, size a, player inserted at l1) with
// coalitions over the other side counted by y; out[k][l] gains all the combinations.
void convolve(const Table& x, const std::vector<Int>& y, int r, bool positions, const Counts& c, Table& out) {
  const int r1 = static_cast<int>(x.size());
  const int r2 = static_cast<int>(y.size()) - 1;
  for (int a = 0; a < r1; ++a) {
    for (int j = 0; j <= r2; ++j) {
      if (y[j].is_zero()) continue;
      const int k = a + j;
      if (k >= r) continue;
      if (!positions) {
        if (x[a][0].is_zero()) continue;
        out[k][0] += c.binom[k][a] * x[a][0] * y[j];
        continue;
      }
      for (int l1 = 1; l1 <= a + 1; ++l1) {
        const Int& xv = x[a][l1 - 1];
        if (xv.is_zero()) continue;
        const Int base = xv * y[j];
        // l - l1 of the other side's players come before the insertion point.
        for (int before = 0; before <= j; ++before) {
          const int l = l1 + before;
          out[k][l - 1] += c.binom[l - 1][l1 - 1] * c.binom[k - l + 1][a - l1 + 1] * base;
        }
      }
    }
  }
}

Exact build(const Formula& node, bool positions, const Counts& c) {
  switch (node.kind) {
    case Kind::basic:
    case Kind::ordered:
      return atom(node, positions, c);
    case Kind::negation: {
      Exact e = build(*node.left, positions, c);
      std::swap(e.t, e.f);
      std::swap(e.a, e.b);
      return e;
    }
    default:
      break;
  }
  Exact l = build(*node.left, positions, c);
  Exact r = build(*node.right, positions, c);
  const int r1 = static_cast<int>(l.players.size());
  const int r2 = static_cast<int>(r.players.size());
  const int n = r1 + r2;
  Exact e;
  e.players = l.players;
  e.players.insert(e.players.end(), r.players.begin(), r.players.end());
  e.t.assign(n + 1, 0);
  e.f.assign(n + 1, 0);
  for (int a = 0; a <= r1; ++a) {
    for (int j = 0; j <= r2; ++j) {
      Int sat;
      switch (node.kind) {
        case Kind::conjunction:
          sat = l.t[a] * r.t[j];
          break;
        case Kind::disjunction:
          sat = l.t[a] * r.t[j] + l.t[a] * r.f[j] + l.f[a] * r.t[j];
          break;
        default:
          sat = l.t[a] * r.f[j] + l.f[a] * r.t[j];
          break;
      }
      e.t[a + j] += c.binom[a + j][a] * sat;
    }
  }
  for (int k = 0; k <= n; ++k) e.f[k] = c.falling(n, k) - e.t[k];

  auto side = [&](const Exact& mine, const Exact& other) {
    for (std::size_t p = 0; p < mine.players.size(); ++p) {
      Table a = zero_table(n, positions), b = zero_table(n, positions);
      switch (node.kind) {
        case Kind::conjunction:
          convolve(mine.a[p], other.t, n, positions, c, a);
          convolve(mine.b[p], other.t, n, positions, c, b);
          break;
        case Kind::disjunction:
          convolve(mine.a[p], other.f, n, positions, c, a);
          convolve(mine.b[p], other.f, n, positions, c, b);
          break;
        default:
          convolve(mine.a[p], other.f, n, positions, c, a);
          convolve(mine.b[p], other.t, n, positions, c, a);
          convolve(mine.b[p], other.f, n, positions, c, b);
          convolve(mine.a[p], other.t, n, positions, c, b);
          break;
      }
      e.a.push_back(std::move(a));
      e.b.push_back(std::move(b));
    }
  };
  side(l, r);
  side(r, l);
  return e;
}

std::vector<Int> factorials(int r) {
  std::vector<Int> f(r + 1);
  f[0] = 1;
  for (int i = 1; i <= r; ++i) f[i] = f[i - 1] * i;
  return f;
}

Exact exact_tables(const Formula& f, bool positions, std::vector<Int>& fact) {
  if (!f.read_once()) throw std::invalid_argument("formula repeats a player");
  const int r = static_cast<int>(f.support().size());
  fact = factorials(r);
  Counts c(fact, r);
  return build(f, positions, c);
}

double to_double(const Int& x) { return x.convert_to<double>(); }

std::vector<double> solve(const RuleSet& rs, bool positions) {
  std::vector<double> phi(rs.player_count(), 0.0);
  for (const Rule& rule : rs.rules) {
    if (rule.value == 0) continue;
    std::vector<Int> fact;
    Exact e = exact_tables(*rule.formula, positions, fact);
    const int r = static_cast<int>(e.players.size());
    for (int p = 0; p < r; ++p) {
      double total = 0;
      for (int k = 0; k < r; ++k) {
        Int diff = 0;
        for (std::size_t l = 0; l < e.a[p][k].size(); ++l) diff += e.a[p][k][l] - e.b[p][k][l];
        if (diff.is_zero()) continue;
        Int num = fact[r - k - 1] * diff;
        double term = to_double(num) / to_double(fact[r]);
        if (positions) term /= (k + 1);
        total += term;
      }
      phi[e.players[p]] += rule.value * total;
    }
    // The empty coalition is worth 0 even when a negation would fire on it; that
    // lifts the first player in every ordering, 1/n in expectation for each player.
    if (satisfies({}, *rule.formula)) {
      for (double& x : phi) x += rule.value / rs.player_count();
    }
  }
  return phi;
}

}  // namespace

QuantityTables quantity_tables(const Formula& f, bool all_positions) {
  std::vector<Int> fact;
  Exact e = exact_tables(f, all_positions, fact);
  QuantityTables q;
  q.players = e.players;
  for (const auto& x : e.t) q.t.push_back(to_double(x));
  for (const auto& x : e.f) q.f.push_back(to_double(x));
  auto convert = [](const std::vector<Table>& src) {
    std::vector<std::vector<std::vector<double>>> out;
    for (const auto& table : src) {
      auto& t = out.emplace_back();
      for (const auto& row : table) {
        auto& r = t.emplace_back();
        for (const auto& x : row) r.push_back(to_double(x));
      }
    }
    return out;
  };
  q.a = convert(e.a);
  q.b = convert(e.b);
  return q;
}

std::vector<double> comp_nr(const RuleSet& rs) { return solve(rs, false); }
std::vector<double> comp_sb(const RuleSet& rs) { return solve(rs, true); }

}  // namespace gtcent
