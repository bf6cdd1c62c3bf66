#include <array>
#include <string>

#include "wavedmd/errors.hpp"
#include "wavedmd/graph.hpp"
#include "wavedmd/random.hpp"

namespace wavedmd {

Graph generate_weak_line(Index n, Index weak_pos, double w_strong, double w_weak) {
  if (n < 3) throw InputError("line graph needs at least 3 nodes");
  if (weak_pos < 1 || weak_pos >= n) {
    throw InputError("weak edge position " + std::to_string(weak_pos) + " outside [1, " + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, i == weak_pos - 1 ? w_weak : w_strong});
  return Graph(n, std::move(edges));
}

Graph generate_ring(Index n, double w) {
  if (n < 3) throw InputError("ring needs at least 3 nodes");
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, w});
  return Graph(n, std::move(edges));
}

namespace {

// Zachary (1977), 0-based.
constexpr std::array<std::array<int, 2>, 78> kKarateEdges{{
    {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {0, 10},  {0, 11},
    {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},
    {1, 17},  {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
    {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
    {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32}, {15, 33},
    {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
    {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
    {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
}};

}  // namespace

Graph karate_club() {
  std::vector<Edge> edges;
  edges.reserve(kKarateEdges.size());
  for (const auto& e : kKarateEdges) edges.push_back({e[0], e[1], 1.0});
  return Graph(34, std::move(edges));
}

std::vector<int> karate_factions() {
  std::vector<int> labels(34, 1);
  for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17, 19, 21}) labels[static_cast<std::size_t>(i)] = 0;
  return labels;
}

PlantedGraph generate_planted_partition(const PlantedPartitionSpec& spec) {
  if (spec.blocks < 1 || spec.block_size < 1) throw InputError("planted partition needs blocks, block_size >= 1");
  auto valid_p = [](double p) { return p > 0.0 && p <= 1.0; };
  if (!valid_p(spec.p_in) || (spec.blocks > 1 && !valid_p(spec.p_out))) {
    throw InputError("edge probabilities must lie in (0, 1]");
  }
  if (spec.blocks > 1 && !(spec.p_in > spec.p_out)) throw InputError("p_in must exceed p_out");
  for (const auto& r : {spec.w_in, spec.w_out}) {
    if (!(r.lo > 0.0) || r.hi < r.lo) throw InputError("weight interval must be positive and ordered");
  }

  const Index n = spec.blocks * spec.block_size;
  PlantedGraph out;
  out.labels.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.labels[static_cast<std::size_t>(i)] = static_cast<int>(i / spec.block_size);

  Rng rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const bool same = out.labels[static_cast<std::size_t>(i)] == out.labels[static_cast<std::size_t>(j)];
        if (unit_uniform(rng) < (same ? spec.p_in : spec.p_out)) {
          const auto& range = same ? spec.w_in : spec.w_out;
          edges.push_back({i, j, uniform_in(rng, range.lo, range.hi)});
        }
      }
    }
    Graph g(n, std::move(edges));
    if (g.is_connected()) {
      out.graph = std::move(g);
      return out;
    }
  }
  throw InputError("planted partition still disconnected after " + std::to_string(spec.max_retries) + " draws");
}

Graph generate_random_connected(Index n, double p, double w_lo, double w_hi, std::uint64_t seed) {
  if (n < 2) throw InputError("random graph needs at least 2 nodes");
  Rng rng(seed);
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Index>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  auto add = [&](Index a, Index b) {
    if (a > b) std::swap(a, b);
    auto& flag = present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (flag) return;
    flag = 1;
    edges.push_back({a, b, uniform_in(rng, w_lo, w_hi)});
  };
  for (Index k = 0; k + 1 < n; ++k) add(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k + 1)]);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (unit_uniform(rng) < p) add(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace wavedmd
