#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace wavedmd {

using Index = Eigen::Index;

struct Edge {
  Index i = 0;
  Index j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected simple graph on nodes 0..n-1.
///
/// Edges are stored once per unordered pair with i < j, sorted
/// lexicographically. Construction validates positivity of weights, index
/// range, absence of self-loops and of repeated pairs.
class Graph {
 public:
  Graph() = default;
  Graph(Index n, std::vector<Edge> edges);

  Index num_nodes() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Weighted degree sum_l W_il for every node.
  Eigen::VectorXd weighted_degrees() const;

  /// Neighbor lists as (neighbor, weight) pairs.
  std::vector<std::vector<std::pair<Index, double>>> adjacency() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
};

struct ParseOptions {
  bool one_based = false;
  double default_weight = 1.0;
};

/// Reads "i j" or "i j w" lines. '#' starts a comment line, blank lines are
/// skipped and CRLF line endings are accepted. Repeated pairs with equal
/// weights collapse; conflicting weights are a ParseError.
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list_string(const std::string& text, const ParseOptions& options = {});
Graph load_edge_list(const std::string& path, const ParseOptions& options = {});

/// One "i j w" line per edge, 0-based, 17 significant digits.
void write_edge_list(std::ostream& out, const Graph& g);
std::string serialize_edge_list(const Graph& g);

// -- generators --------------------------------------------------------------

/// Path on n nodes where the edge between 1-based nodes weak_pos and
/// weak_pos+1 carries w_weak and every other edge w_strong.
Graph generate_weak_line(Index n, Index weak_pos, double w_strong, double w_weak);

/// Cycle on n nodes with uniform weight (a regular graph).
Graph generate_ring(Index n, double w = 1.0);

/// Zachary's karate club, 34 nodes and 78 unweighted edges.
Graph karate_club();

/// Club each karate member joined after the split (0 = instructor, 1 = officer).
std::vector<int> karate_factions();

struct WeightRange {
  double lo = 1.0;
  double hi = 1.0;
};

struct PlantedPartitionSpec {
  Index blocks = 4;
  Index block_size = 100;
  double p_in = 0.2;
  double p_out = 0.01;
  WeightRange w_in{1.0, 2.0};
  WeightRange w_out{0.1, 0.5};
  std::uint64_t seed = 7;
  int max_retries = 100;
};

struct PlantedGraph {
  Graph graph;
  std::vector<int> labels;  ///< planted block of every node
};

/// Stochastic block model with uniform edge weights, resampled until the
/// graph is connected. Deterministic for a fixed seed.
PlantedGraph generate_planted_partition(const PlantedPartitionSpec& spec);

/// Erdős–Rényi graph with uniform weights on [w_lo, w_hi], plus a random
/// spanning path so the result is always connected.
Graph generate_random_connected(Index n, double p, double w_lo, double w_hi, std::uint64_t seed);

}  // namespace wavedmd
