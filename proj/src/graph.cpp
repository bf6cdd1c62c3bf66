#include "wavedmd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "wavedmd/errors.hpp"

namespace wavedmd {

Graph::Graph(Index n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative node count");
  for (auto& e : edges_) {
    if (e.i < 0 || e.j < 0 || e.i >= n_ || e.j >= n_) {
      throw InputError("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") outside [0, " +
                       std::to_string(n_) + ")");
    }
    if (e.i == e.j) throw InputError("self-loop at node " + std::to_string(e.i));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw InputError("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") has non-positive weight");
    }
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw InputError("repeated edge (" + std::to_string(edges_[k].i) + ", " + std::to_string(edges_[k].j) + ")");
    }
  }
}

Eigen::VectorXd Graph::weighted_degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n_);
  for (const auto& e : edges_) {
    d(e.i) += e.w;
    d(e.j) += e.w;
  }
  return d;
}

std::vector<std::vector<std::pair<Index, double>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<Index, double>>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.w);
    adj[static_cast<std::size_t>(e.j)].emplace_back(e.i, e.w);
  }
  return adj;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  const auto adj = adjacency();
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index reached = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj[static_cast<std::size_t>(v)]) {
      (void)w;
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view token, T& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  if (!(options.default_weight > 0.0)) throw InputError("default weight must be positive");
  std::map<std::pair<Index, Index>, double> pairs;
  Index max_index = -1;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected \"i j\" or \"i j w\"");
    }
    long long a = 0;
    long long b = 0;
    if (!parse_number(tokens[0], a) || !parse_number(tokens[1], b)) {
      throw ParseError(line_no, "node index is not an integer");
    }
    double w = options.default_weight;
    if (tokens.size() == 3 && !parse_number(tokens[2], w)) throw ParseError(line_no, "weight is not a number");
    if (options.one_based) {
      --a;
      --b;
    }
    if (a < 0 || b < 0) throw ParseError(line_no, "negative node index");
    if (a == b) throw ParseError(line_no, "self-loop");
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line_no, "weight must be positive");
    const std::pair<Index, Index> key = std::minmax(static_cast<Index>(a), static_cast<Index>(b));
    const auto [it, inserted] = pairs.emplace(key, w);
    if (!inserted && it->second != w) throw ParseError(line_no, "conflicting weight for repeated edge");
    max_index = std::max<Index>(max_index, key.second);
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [key, w] : pairs) edges.push_back({key.first, key.second, w});
  return Graph(max_index + 1, std::move(edges));
}

Graph parse_edge_list_string(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return parse_edge_list(in, options);
}

Graph load_edge_list(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[64];
  for (const auto& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%lld %lld %.17g\n", static_cast<long long>(e.i), static_cast<long long>(e.j), e.w);
    out << buf;
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace wavedmd
