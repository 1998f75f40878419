#include "gtcent/graph.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gtcent {

namespace {

std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

double parse_number(std::string_view tok, std::size_t line) {
  double x = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw FormatError("not a number: '" + std::string(tok) + "'", line);
  }
  return x;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    auto body = strip_comment(text.substr(start, end - start));
    auto toks = split_ws(body);
    if (!toks.empty()) f(toks, lineno);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Graph::Graph(int n, bool directed)
    : directed_(directed), out_(n), in_(directed ? n : 0), labels_(n) {
  for (int v = 0; v < n; ++v) {
    labels_[v] = std::to_string(v);
    by_label_[labels_[v]] = v;
  }
}

void Graph::set_label(int v, std::string label) {
  by_label_.erase(labels_[v]);
  auto [it, fresh] = by_label_.emplace(label, v);
  if (!fresh && it->second != v) throw std::invalid_argument("duplicate label " + label);
  labels_[v] = std::move(label);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != labels_.size()) throw std::invalid_argument("one label per node expected");
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < size(); ++v) {
    if (!by_label.emplace(labels[v], v).second) throw std::invalid_argument("duplicate label " + labels[v]);
  }
  labels_ = std::move(labels);
  by_label_ = std::move(by_label);
}

void Graph::add_edge(int u, int v, double weight) {
  if (u == v) throw std::invalid_argument("self-loop at " + labels_[u]);
  if (!(weight > 0)) throw std::invalid_argument("edge weight must be positive");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge " + labels_[u] + " " + labels_[v]);
  out_[u].push_back({v, weight});
  weights_[pair_key(u, v)] = weight;
  if (directed_) {
    in_[v].push_back({u, weight});
  } else {
    out_[v].push_back({u, weight});
    weights_[pair_key(v, u)] = weight;
  }
  if (weight != 1.0) weighted_ = true;
  ++edges_;
}

void Graph::set_node_weights(std::vector<double> w) {
  if (static_cast<int>(w.size()) != size()) throw std::invalid_argument("node weight count mismatch");
  node_weight_ = std::move(w);
}

bool Graph::has_edge(int u, int v) const { return weights_.count(pair_key(u, v)) != 0; }

double Graph::weight(int u, int v) const {
  auto it = weights_.find(pair_key(u, v));
  return it == weights_.end() ? 0.0 : it->second;
}

std::optional<int> Graph::index_of(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

int Graph::index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw std::out_of_range("unknown node " + std::string(label));
  return *i;
}

Graph Graph::unweighted_copy() const {
  Graph g = *this;
  for (auto& adj : g.out_) for (auto& a : adj) a.weight = 1.0;
  for (auto& adj : g.in_) for (auto& a : adj) a.weight = 1.0;
  for (auto& [k, w] : g.weights_) w = 1.0;
  g.weighted_ = false;
  return g;
}

Graph build_graph(const std::vector<EdgeSpec>& edges, const BuildOptions& opts) {
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> order;
  auto intern = [&](const std::string& s, std::size_t line) {
    if (s.empty()) throw FormatError("empty node label", line);
    auto [it, fresh] = ids.emplace(s, static_cast<int>(order.size()));
    if (fresh) order.push_back(s);
    return it->second;
  };
  std::optional<bool> weighted;
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : edges) {
    bool w = e.weight.has_value();
    if (weighted && *weighted != w) throw FormatError("mixed weighted and unweighted edges", e.line);
    weighted = w;
    if (w && !(*e.weight > 0)) throw FormatError("non-positive edge weight", e.line);
    const int u = intern(e.u, e.line);
    ends.emplace_back(u, intern(e.v, e.line));
  }
  for (const auto& s : opts.extra_nodes) intern(s, 0);

  Graph g(static_cast<int>(order.size()), opts.directed);
  g.set_labels(order);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = ends[i];
    if (u == v) throw FormatError("self-loop at " + edges[i].u, edges[i].line);
    int a = u, b = v;
    if (!opts.directed && a > b) std::swap(a, b);
    if (!seen.insert(pair_key(a, b)).second) {
      throw FormatError("duplicate edge " + edges[i].u + " " + edges[i].v, edges[i].line);
    }
    g.add_edge(u, v, edges[i].weight.value_or(1.0));
  }
  g.set_weighted(weighted.value_or(false));
  if (!opts.node_weights.empty()) {
    std::vector<double> w(g.size(), 1.0);
    for (const auto& [label, x] : opts.node_weights) {
      auto v = g.index_of(label);
      if (!v) throw FormatError("node weight for unknown node " + label);
      w[*v] = x;
    }
    g.set_node_weights(std::move(w));
  }
  return g;
}

std::vector<EdgeSpec> parse_edge_list(std::string_view text) {
  std::vector<EdgeSpec> out;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t.size() != 2 && t.size() != 3) throw FormatError("expected 'u v' or 'u v w'", line);
    EdgeSpec e{std::string(t[0]), std::string(t[1]), std::nullopt, line};
    if (t.size() == 3) e.weight = parse_number(t[2], line);
    out.push_back(std::move(e));
  });
  return out;
}

Graph parse_graph(std::string_view text, const BuildOptions& opts) {
  return build_graph(parse_edge_list(text), opts);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path, const BuildOptions& opts) {
  return parse_graph(read_file(path), opts);
}

std::vector<std::pair<std::string, double>> parse_node_values(std::string_view text) {
  std::vector<std::pair<std::string, double>> out;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t.size() != 2) throw FormatError("expected 'node value'", line);
    out.emplace_back(std::string(t[0]), parse_number(t[1], line));
  });
  return out;
}

CommunityStructure::CommunityStructure(std::vector<int> assignment) {
  std::unordered_map<int, int> compact;
  assignment_.resize(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    auto [it, fresh] = compact.emplace(assignment[v], static_cast<int>(members_.size()));
    if (fresh) members_.emplace_back();
    assignment_[v] = it->second;
    members_[it->second].push_back(static_cast<int>(v));
  }
}

CommunityStructure parse_communities(std::string_view text, const Graph& g) {
  std::vector<int> assign(g.size(), -1);
  std::unordered_map<std::string, int> ids;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t.size() != 2) throw FormatError("expected 'node community'", line);
    auto v = g.index_of(t[0]);
    if (!v) throw FormatError("unknown node " + std::string(t[0]), line);
    if (assign[*v] != -1) throw FormatError("node assigned twice: " + std::string(t[0]), line);
    auto [it, fresh] = ids.emplace(std::string(t[1]), static_cast<int>(ids.size()));
    assign[*v] = it->second;
  });
  for (int v = 0; v < g.size(); ++v) {
    if (assign[v] < 0) throw FormatError("node without community: " + g.label(v));
  }
  return CommunityStructure(std::move(assign));
}

}  // namespace gtcent
