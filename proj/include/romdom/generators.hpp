#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/rng.hpp"

namespace romdom {

enum class GraphModel { BA, ER, RT, BAT };

inline std::string_view to_string(GraphModel model) {
  switch (model) {
    case GraphModel::BA: return "ba";
    case GraphModel::ER: return "er";
    case GraphModel::RT: return "rt";
    case GraphModel::BAT: return "bat";
  }
  return "?";
}

inline GraphModel parse_model(std::string_view s) {
  if (s == "ba" || s == "BA") return GraphModel::BA;
  if (s == "er" || s == "ER") return GraphModel::ER;
  if (s == "rt" || s == "RT") return GraphModel::RT;
  if (s == "bat" || s == "BAT") return GraphModel::BAT;
  throw ParameterError("unknown graph model '" + std::string(s) + "'");
}

inline bool is_tree_model(GraphModel model) { return model == GraphModel::RT || model == GraphModel::BAT; }

struct GraphGenSpec {
  GraphModel model = GraphModel::ER;
  std::size_t n = 0;
  std::size_t m = 1;   // BA attachment count
  double p = 0.5;      // ER edge probability
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kErResampleCap = 1000;

// Preferential attachment. Seed graph: complete graph on max(m, 2) vertices;
// each later vertex joins m distinct existing vertices drawn proportionally to degree.
inline Graph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) {
    throw ParameterError("BA requires 1 <= m < n (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  }
  SplitMix64 rng(seed);
  const std::size_t m0 = std::max<std::size_t>(m, 2);
  std::vector<Edge> edges;
  // Each vertex appears once per incident edge.
  std::vector<vertex_t> endpoints;
  for (vertex_t u = 0; u < m0; ++u) {
    for (vertex_t v = u + 1; v < m0; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<vertex_t> targets;
  std::vector<char> taken(n, 0);
  for (auto v = static_cast<vertex_t>(m0); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      auto t = endpoints[rng.below(endpoints.size())];
      if (!taken[t]) {
        taken[t] = 1;
        targets.push_back(t);
      }
    }
    for (auto t : targets) {
      taken[t] = 0;
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph(n, std::move(edges));
}

struct ErSample {
  Graph graph;
  std::size_t resamples = 0;
};

// G(n, p) conditioned on minimum degree >= 1: graphs with an isolated vertex
// are redrawn from the same stream, at most kErResampleCap times.
inline ErSample gen_er_sample(std::size_t n, double p, std::uint64_t seed,
                              std::size_t resample_cap = kErResampleCap) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("ER requires 0 < p <= 1");
  if (n < 2) throw ParameterError("ER requires n >= 2 (no isolated vertices)");
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt <= resample_cap; ++attempt) {
    std::vector<Edge> edges;
    std::vector<char> touched(n, 0);
    for (vertex_t u = 0; u < n; ++u) {
      for (vertex_t v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) {
          edges.emplace_back(u, v);
          touched[u] = touched[v] = 1;
        }
      }
    }
    if (std::find(touched.begin(), touched.end(), 0) == touched.end()) {
      return {Graph(n, std::move(edges)), attempt};
    }
  }
  throw ResampleCapError("ER(n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                         "): every draw had an isolated vertex after " +
                         std::to_string(resample_cap) + " resamples");
}

inline Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  return gen_er_sample(n, p, seed).graph;
}

// Uniformly ordered edges of K_n are added unless they close a cycle, until a
// spanning tree is formed.
inline Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ParameterError("random tree requires n >= 2");
  SplitMix64 rng(seed);
  std::vector<Edge> all;
  all.reserve(n * (n - 1) / 2);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) all.emplace_back(u, v);

  std::vector<vertex_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](vertex_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<Edge> tree;
  tree.reserve(n - 1);
  // Lazy Fisher-Yates: draw the next uniformly random remaining edge.
  for (std::size_t k = 0; tree.size() + 1 < n; ++k) {
    std::swap(all[k], all[k + rng.below(all.size() - k)]);
    auto [u, v] = all[k];
    auto ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      tree.push_back(all[k]);
    }
  }
  return Graph(n, std::move(tree));
}

inline Graph gen_ba_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ParameterError("BA tree requires n >= 2");
  return gen_ba(n, 1, seed);
}

inline Graph generate(const GraphGenSpec& spec) {
  switch (spec.model) {
    case GraphModel::BA: return gen_ba(spec.n, spec.m, spec.seed);
    case GraphModel::ER: return gen_er(spec.n, spec.p, spec.seed);
    case GraphModel::RT: return gen_random_tree(spec.n, spec.seed);
    case GraphModel::BAT: return gen_ba_tree(spec.n, spec.seed);
  }
  throw ParameterError("unknown graph model");
}

}  // namespace romdom
