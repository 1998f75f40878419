#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gtcent {

// Raised for malformed input text. line() is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when an exhaustive solver is asked to go past its size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  int to;
  double weight;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  std::optional<double> weight;
  std::size_t line = 0;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, bool directed = false);

  // Labels default to the decimal index.
  void set_label(int v, std::string label);
  // Replaces every label at once; throws std::invalid_argument on duplicates.
  void set_labels(std::vector<std::string> labels);
  void add_edge(int u, int v, double weight = 1.0);
  void set_weighted(bool w) { weighted_ = w; }
  void set_node_weights(std::vector<double> w);

  int size() const { return static_cast<int>(out_.size()); }
  std::size_t edge_count() const { return edges_; }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  const std::vector<Arc>& out(int v) const { return out_[v]; }
  // Same as out() for undirected graphs.
  const std::vector<Arc>& in(int v) const { return directed_ ? in_[v] : out_[v]; }
  int degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in(v).size()); }

  bool has_edge(int u, int v) const;
  // 0 when the edge is absent.
  double weight(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> index_of(std::string_view label) const;
  int index(std::string_view label) const;

  bool has_node_weights() const { return !node_weight_.empty(); }
  double node_weight(int v) const { return node_weight_.empty() ? 1.0 : node_weight_[v]; }

  // Copy with every weight replaced by 1.
  Graph unweighted_copy() const;

 private:
  bool directed_ = false;
  bool weighted_ = false;
  std::size_t edges_ = 0;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> by_label_;
  std::unordered_map<std::uint64_t, double> weights_;
  std::vector<double> node_weight_;
};

struct BuildOptions {
  bool directed = false;
  // Labelled node weights; every label must already occur in the edge list.
  std::vector<std::pair<std::string, double>> node_weights;
  // Nodes without edges, added after the edge endpoints.
  std::vector<std::string> extra_nodes;
};

// Indices follow first appearance. Throws FormatError naming the offending line.
Graph build_graph(const std::vector<EdgeSpec>& edges, const BuildOptions& opts = {});

std::vector<EdgeSpec> parse_edge_list(std::string_view text);
Graph parse_graph(std::string_view text, const BuildOptions& opts = {});
Graph load_graph(const std::string& path, const BuildOptions& opts = {});

// "label value" pairs, '#' comments.
std::vector<std::pair<std::string, double>> parse_node_values(std::string_view text);

class CommunityStructure {
 public:
  CommunityStructure() = default;
  // assignment[v] is the community of v; ids are compacted to 0..m-1 in order of first use.
  explicit CommunityStructure(std::vector<int> assignment);

  int community_of(int v) const { return assignment_[v]; }
  int count() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members(int c) const { return members_[c]; }
  const std::vector<int>& assignment() const { return assignment_; }
  int node_count() const { return static_cast<int>(assignment_.size()); }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> members_;
};

// "node community" lines. Every node of g must be assigned exactly once.
CommunityStructure parse_communities(std::string_view text, const Graph& g);

std::string read_file(const std::string& path);

}  // namespace gtcent
