#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "romdom/error.hpp"

namespace romdom {

using vertex_t = std::uint32_t;
using Edge = std::pair<vertex_t, vertex_t>;

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes the edge list. Edges are stored as (min, max),
  // sorted; adjacency lists are sorted ascending.
  Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") references a vertex >= n=" + std::to_string(n));
      }
      if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->first) + "," +
                               std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : edges) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
  }

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // N_i, sorted, excluding i.
  std::span<const vertex_t> neighbors(vertex_t i) const {
    check_vertex(i);
    return adjacency_[i];
  }

  std::size_t degree(vertex_t i) const { return neighbors(i).size(); }

  bool adjacent(vertex_t u, vertex_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Closed k-hop neighborhood {j : d(i,j) <= k}, sorted.
  std::vector<vertex_t> closed_ball(vertex_t i, unsigned k) const {
    check_vertex(i);
    std::vector<unsigned> dist(size(), ~0u);
    std::vector<vertex_t> frontier{i}, ball{i};
    dist[i] = 0;
    for (unsigned d = 1; d <= k && !frontier.empty(); ++d) {
      std::vector<vertex_t> next;
      for (auto u : frontier) {
        for (auto v : adjacency_[u]) {
          if (dist[v] == ~0u) {
            dist[v] = d;
            next.push_back(v);
            ball.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(ball.begin(), ball.end());
    return ball;
  }

  std::vector<vertex_t> two_hop_closed(vertex_t i) const { return closed_ball(i, 2); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& list : adjacency_) d = std::max(d, list.size());
    return d;
  }

  bool has_isolated_vertex() const noexcept {
    return std::any_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& list) { return list.empty(); });
  }

  bool is_connected() const {
    if (size() == 0) return true;
    return closed_ball(0, static_cast<unsigned>(size())).size() == size();
  }

  bool is_tree() const { return size() >= 1 && edge_count() + 1 == size() && is_connected(); }

  void check_vertex(vertex_t i) const {
    if (i >= size()) {
      throw RangeError("vertex " + std::to_string(i) + " out of range (n=" +
                       std::to_string(size()) + ")");
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.size() == b.size(); }

 private:
  std::vector<std::vector<vertex_t>> adjacency_;
  std::vector<Edge> edges_;
};

namespace detail {

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected unsigned integers, got '" +
                       std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace detail

// Graph file: "n m", then m lines "u v"; '#' lines and blank lines are skipped.
inline Graph from_edge_list(std::string_view text) {
  std::size_t line_no = 0, n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    auto nums = detail::parse_numbers(line, line_no);
    if (nums.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      have_header = true;
      edges.reserve(m);
    } else {
      if (nums[0] >= n || nums[1] >= n) {
        throw RangeError("line " + std::to_string(line_no) + ": vertex ID >= n=" + std::to_string(n));
      }
      edges.emplace_back(static_cast<vertex_t>(nums[0]), static_cast<vertex_t>(nums[1]));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing 'n m' header line");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list(buf.str());
}

// Named test graphs shipped with the repository (also under data/fixtures/).
namespace fixtures {

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (vertex_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle(std::size_t n) {
  auto e = path(n).edges();
  e.emplace_back(0, static_cast<vertex_t>(n - 1));
  return Graph(n, std::move(e));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (vertex_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::move(e));
}

// Center 0 joined to k triangles' outer pairs: vertices 2t+1, 2t+2 form a
// matched pair, both adjacent to 0. k = 2 is the h2 fixture.
inline Graph matching_star(std::size_t k) {
  std::vector<Edge> e;
  for (vertex_t t = 0; t < k; ++t) {
    vertex_t a = 2 * t + 1, b = 2 * t + 2;
    e.emplace_back(0, a);
    e.emplace_back(0, b);
    e.emplace_back(a, b);
  }
  return Graph(2 * k + 1, std::move(e));
}

inline Graph p3() { return path(3); }
inline Graph c4() { return cycle(4); }
inline Graph p7() { return path(7); }
inline Graph h2() { return matching_star(2); }
inline Graph star3() { return star(3); }
inline Graph k2() { return complete(2); }

}  // namespace fixtures

}  // namespace romdom
