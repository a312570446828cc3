#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "romdom/game.hpp"
#include "romdom/verify.hpp"

namespace romdom {

// Greedy RDF: repeatedly blacken the vertex whose closed neighborhood covers
// the most still-uncovered vertices (ties to the smallest ID) while that count
// is at least 2, then give weight 1 to whatever is left.
inline Profile greedy_rdf(const Graph& g) {
  require_no_isolated(g);
  const auto n = g.size();
  Profile c(n, 0);
  if (n == 0) return c;
  std::vector<char> uncovered(n, 1);
  std::vector<std::size_t> gain(n);
  for (vertex_t v = 0; v < n; ++v) gain[v] = g.degree(v) + 1;

  auto cover = [&](vertex_t u) {
    if (!uncovered[u]) return;
    uncovered[u] = 0;
    --gain[u];
    for (auto w : g.neighbors(u)) --gain[w];
  };

  for (;;) {
    vertex_t best = 0;
    for (vertex_t v = 1; v < n; ++v)
      if (gain[v] > gain[best]) best = v;
    if (gain[best] < 2) break;
    c.set(best, 2);
    cover(best);
    for (auto u : g.neighbors(best)) cover(u);
  }
  for (vertex_t u = 0; u < n; ++u)
    if (uncovered[u]) c.set(u, 1);
  return c;
}

// Subtree costs for the tree DP, rooted at vertex 0.
struct DpStates {
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t black = kInf;      // value 2
  std::size_t gray = kInf;       // value 1
  std::size_t covered = kInf;    // value 0, dominated by a black child
  std::size_t awaiting = kInf;   // value 0, to be dominated by a black parent

  std::size_t settled() const { return std::min({black, gray, covered}); }
};

struct TreeDpResult {
  OracleResult optimum;
  std::vector<DpStates> table;
};

// Exact gamma_R on a tree. Children of a vertex valued 0 or 1 may not be in
// the awaiting state; an awaiting vertex has no black child.
inline TreeDpResult tree_dp(const Graph& g) {
  if (g.size() < 2 || !g.is_tree()) throw NotATreeError("tree DP requires a tree with at least 2 vertices");
  const auto n = g.size();
  constexpr auto kInf = DpStates::kInf;

  std::vector<vertex_t> order, parent(n, 0);
  order.reserve(n);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto w : g.neighbors(order[k])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }

  std::vector<DpStates> t(n);
  std::vector<vertex_t> forced(n, 0);  // child forced black in the covered state
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = *it;
    std::size_t sum_any = 0, sum_settled = 0, sum_no_black = 0, extra = kInf;
    bool has_child = false, settled_by_black = false;
    for (auto ch : g.neighbors(v)) {
      if (v != 0 && ch == parent[v]) continue;
      has_child = true;
      const auto& s = t[ch];
      sum_any += std::min(s.settled(), s.awaiting);
      sum_settled += s.settled();
      sum_no_black = std::min(kInf, sum_no_black + std::min(s.gray, s.covered));
      if (!settled_by_black && s.black == s.settled()) {
        settled_by_black = true;
        forced[v] = ch;
        extra = 0;
      } else if (!settled_by_black && s.black - s.settled() < extra) {
        extra = s.black - s.settled();
        forced[v] = ch;
      }
    }
    auto& s = t[v];
    s.black = 2 + sum_any;
    s.gray = 1 + sum_settled;
    s.covered = has_child ? sum_settled + extra : kInf;
    s.awaiting = has_child ? sum_no_black : 0;
  }

  // Top-down reconstruction: state 0 black, 1 gray, 2 covered, 3 awaiting.
  std::vector<int> state(n, 0);
  std::vector<strategy_t> values(n, 0);
  {
    const auto& r = t[0];
    state[0] = r.black == r.settled() ? 0 : (r.gray == r.settled() ? 1 : 2);
  }
  for (auto v : order) {
    values[v] = state[v] == 0 ? 2 : (state[v] == 1 ? 1 : 0);
    for (auto ch : g.neighbors(v)) {
      if (v != 0 && ch == parent[v]) continue;
      const auto& s = t[ch];
      int pick;
      switch (state[v]) {
        case 0:  // any child state; prefer settled on ties
          if (s.black == std::min(s.settled(), s.awaiting)) pick = 0;
          else if (s.gray == std::min(s.settled(), s.awaiting)) pick = 1;
          else if (s.covered == std::min(s.settled(), s.awaiting)) pick = 2;
          else pick = 3;
          break;
        case 2:
          if (ch == forced[v]) {
            pick = 0;
            break;
          }
          [[fallthrough]];
        case 1:
          pick = s.black == s.settled() ? 0 : (s.gray == s.settled() ? 1 : 2);
          break;
        default:  // awaiting: gray or covered children only
          pick = s.gray <= s.covered ? 1 : 2;
          break;
      }
      state[ch] = pick;
    }
  }

  Profile witness(std::move(values));
  return {{t[0].settled(), std::move(witness)}, std::move(t)};
}

inline OracleResult tree_dp_optimum(const Graph& g) { return tree_dp(g).optimum; }

}  // namespace romdom
