#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "romdom/game.hpp"

namespace romdom {

using Rational = boost::rational<std::int64_t>;

enum class RdfClass : unsigned {
  RDF = 1u << 0,
  M_RDF = 1u << 1,
  S_RDF = 1u << 2,
  NE = 1u << 3,
  G_RDF = 1u << 4,
  PARETO = 1u << 5,
};

struct ClassLabel {
  unsigned flags = 0;

  bool has(RdfClass c) const noexcept { return (flags & static_cast<unsigned>(c)) != 0; }
  void set(RdfClass c) noexcept { flags |= static_cast<unsigned>(c); }

  // G_RDF => NE => S_RDF => M_RDF => RDF.
  bool chain_consistent() const noexcept {
    auto implies = [&](RdfClass a, RdfClass b) { return !has(a) || has(b); };
    return implies(RdfClass::G_RDF, RdfClass::NE) && implies(RdfClass::NE, RdfClass::S_RDF) &&
           implies(RdfClass::S_RDF, RdfClass::M_RDF) && implies(RdfClass::M_RDF, RdfClass::RDF);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    static constexpr std::pair<RdfClass, const char*> kNames[] = {
        {RdfClass::RDF, "RDF"}, {RdfClass::M_RDF, "M-RDF"}, {RdfClass::S_RDF, "S-RDF"},
        {RdfClass::NE, "NE"},   {RdfClass::G_RDF, "G-RDF"}, {RdfClass::PARETO, "PARETO"}};
    for (auto [c, name] : kNames)
      if (has(c)) out.emplace_back(name);
    return out;
  }
};

struct OracleResult {
  std::size_t optimum_weight = 0;
  Profile witness;
};

inline constexpr std::size_t kOracleCap = 14;
inline constexpr std::size_t kEnumerationCap = 10;

inline bool is_rdf(const Graph& g, const Profile& c) {
  check_profile(g, c);
  for (vertex_t v = 0; v < g.size(); ++v) {
    if (c[v] != 0) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](vertex_t u) { return c[u] == 2; })) return false;
  }
  return true;
}

inline bool is_minimal_rdf(const Graph& g, const Profile& c) {
  if (!is_rdf(g, c)) return false;
  Profile trial = c;
  for (vertex_t i = 0; i < g.size(); ++i) {
    if (c[i] == 0) continue;
    trial.set(i, c[i] - 1);
    bool still = is_rdf(g, trial);
    trial.set(i, c[i]);
    if (still) return false;
  }
  return true;
}

// Swap-to-black transform at i: c_i <- 2, gray neighbors of i <- 0, the rest unchanged.
inline Profile swap_to_black(const Graph& g, const Profile& c, vertex_t i) {
  Profile out = c;
  out.set(i, 2);
  for (auto j : g.neighbors(i))
    if (c[j] == 1) out.set(j, 0);
  return out;
}

inline bool is_strong_minimal_rdf(const Graph& g, const Profile& c) {
  if (!is_minimal_rdf(g, c)) return false;
  const auto w = weight(c);
  for (vertex_t i = 0; i < g.size(); ++i) {
    auto t = swap_to_black(g, c, i);
    if (weight(t) < w && is_rdf(g, t)) return false;
  }
  return true;
}

inline bool is_nash(const Graph& g, const Profile& c, const GameConfig& cfg) {
  GameState view(g, c);
  for (vertex_t i = 0; i < g.size(); ++i)
    if (view.marginal_utility(i, cfg) > 0) return false;
  return true;
}

enum class BadPattern : char { A = 'A', B = 'B' };

struct BadSubstructure {
  BadPattern pattern;
  vertex_t center;
  friend bool operator==(const BadSubstructure&, const BadSubstructure&) = default;
};

// A: gray vertex with >= 2 gray neighbors. B: white vertex with >= 3 gray neighbors.
inline std::vector<BadSubstructure> find_bad_substructures(const Graph& g, const Profile& c) {
  check_profile(g, c);
  std::vector<BadSubstructure> out;
  for (vertex_t v = 0; v < g.size(); ++v) {
    if (c[v] == 2) continue;
    auto nb = g.neighbors(v);
    auto gray = std::count_if(nb.begin(), nb.end(), [&](vertex_t u) { return c[u] == 1; });
    if (c[v] == 1 && gray >= 2) out.push_back({BadPattern::A, v});
    if (c[v] == 0 && gray >= 3) out.push_back({BadPattern::B, v});
  }
  return out;
}

// Visits every profile of length n in lexicographic order.
template <typename Fn>
void for_each_profile(std::size_t n, Fn&& fn) {
  std::vector<strategy_t> digits(n, 0);
  for (;;) {
    fn(Profile(digits));
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == 2) digits[--k] = 0;
    if (k == 0) return;
    ++digits[k - 1];
  }
}

inline void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.size() > cap) {
    throw SizeCapError(std::string(what) + ": n=" + std::to_string(g.size()) +
                       " exceeds the configured cap of " + std::to_string(cap));
  }
}

// Plain 3^n scan; reference path for cross-checking the pruned search.
inline OracleResult brute_force_optimum_exhaustive(const Graph& g, std::size_t cap = kEnumerationCap) {
  check_cap(g, cap, "exhaustive optimum");
  OracleResult best{std::numeric_limits<std::size_t>::max(), {}};
  for_each_profile(g.size(), [&](const Profile& c) {
    auto w = weight(c);
    if (w < best.optimum_weight && is_rdf(g, c)) best = {w, c};
  });
  return best;
}

namespace detail {

// Depth-first search over vertices in ID order, trying values 0, 1, 2, so
// complete assignments arrive in lexicographic order; only strict improvements
// replace the incumbent.
class RdfBranchAndBound {
 public:
  explicit RdfBranchAndBound(const Graph& g)
      : g_(g), values_(g.size(), 0), black_near_(g.size(), 0), max_closed_(g.max_degree() + 1) {}

  OracleResult run() {
    // Upper bound from the all-ones labeling (weight n) lets the search start pruned.
    best_weight_ = g_.size() + 1;
    descend(0, 0);
    return {best_weight_, Profile(best_)};
  }

 private:
  // Lower bound on the cost still needed: every vertex that is not yet
  // dominated costs at least min(1, 2 / (Delta + 1)).
  std::size_t lower_bound(vertex_t next) const {
    std::size_t open = 0;
    for (vertex_t v = 0; v < g_.size(); ++v) {
      if (black_near_[v] > 0) continue;
      if (v < next && values_[v] != 0) continue;
      ++open;
    }
    if (max_closed_ <= 2) return open;
    return (2 * open + max_closed_ - 1) / max_closed_;
  }

  // A decided white vertex whose neighbors are all decided needs a black one already.
  bool dead_end(vertex_t next) const {
    for (vertex_t v = 0; v < next; ++v) {
      if (values_[v] != 0 || black_near_[v] > 0) continue;
      auto nb = g_.neighbors(v);
      if (nb.empty() || nb.back() < next) return true;
    }
    return false;
  }

  void set_black(vertex_t v, int delta) {
    black_near_[v] += delta;
    for (auto u : g_.neighbors(v)) black_near_[u] += delta;
  }

  void descend(vertex_t next, std::size_t partial) {
    if (next == g_.size()) {
      if (partial < best_weight_) {
        best_weight_ = partial;
        best_ = values_;
      }
      return;
    }
    for (strategy_t x = 0; x <= 2; ++x) {
      values_[next] = x;
      if (x == 2) set_black(next, +1);
      const auto w = partial + x;
      if (!dead_end(next + 1) && w + lower_bound(next + 1) < best_weight_) descend(next + 1, w);
      if (x == 2) set_black(next, -1);
    }
    values_[next] = 0;
  }

  const Graph& g_;
  std::vector<strategy_t> values_;
  std::vector<int> black_near_;
  std::size_t max_closed_;
  std::size_t best_weight_ = 0;
  std::vector<strategy_t> best_;
};

}  // namespace detail

// gamma_R(G) with the lexicographically least optimal labeling.
inline OracleResult brute_force_optimum(const Graph& g, std::size_t cap = kOracleCap) {
  check_cap(g, cap, "brute-force optimum");
  if (g.size() == 0) return {0, Profile()};
  return detail::RdfBranchAndBound(g).run();
}

inline bool is_pareto_optimal_bruteforce(const Graph& g, const Profile& c, const GameConfig& cfg,
                                         std::size_t cap = kEnumerationCap) {
  check_profile(g, c);
  check_cap(g, cap, "Pareto check");
  const auto n = g.size();
  std::vector<utility_t> base(n);
  {
    GameState view(g, c);
    for (vertex_t i = 0; i < n; ++i) base[i] = view.utility(i, cfg);
  }
  bool dominated = false;
  for_each_profile(n, [&](const Profile& other) {
    if (dominated) return;
    GameState view(g, other);
    bool strict = false;
    for (vertex_t i = 0; i < n; ++i) {
      auto u = view.utility(i, cfg);
      if (u < base[i]) return;
      strict = strict || u > base[i];
    }
    dominated = strict;
  });
  return !dominated;
}

// Labels one profile. G_RDF needs the optimum (pass it, or it is computed when
// n <= kOracleCap); PARETO is evaluated only when n <= pareto_cap.
inline ClassLabel classify(const Graph& g, const Profile& c, const GameConfig& cfg,
                           std::optional<std::size_t> optimum = std::nullopt,
                           std::size_t pareto_cap = kEnumerationCap) {
  ClassLabel label;
  if (!is_rdf(g, c)) return label;
  label.set(RdfClass::RDF);
  if (is_minimal_rdf(g, c)) label.set(RdfClass::M_RDF);
  if (label.has(RdfClass::M_RDF) && is_strong_minimal_rdf(g, c)) label.set(RdfClass::S_RDF);
  if (is_nash(g, c, cfg)) label.set(RdfClass::NE);
  if (!optimum && g.size() <= kOracleCap) optimum = brute_force_optimum(g).optimum_weight;
  if (optimum && weight(c) == *optimum) label.set(RdfClass::G_RDF);
  if (g.size() <= pareto_cap && is_pareto_optimal_bruteforce(g, c, cfg, pareto_cap)) label.set(RdfClass::PARETO);
  return label;
}

// min weight over M-RDF \ S-RDF divided by max weight over S-RDF; nullopt when
// every M-RDF is strong.
inline std::optional<Rational> srdf_gap_ratio(const Graph& g, std::size_t cap = kEnumerationCap) {
  check_cap(g, cap, "S-RDF gap ratio");
  std::optional<std::size_t> min_weak;
  std::size_t max_strong = 0;
  for_each_profile(g.size(), [&](const Profile& c) {
    if (!is_minimal_rdf(g, c)) return;
    auto w = weight(c);
    if (is_strong_minimal_rdf(g, c)) {
      max_strong = std::max(max_strong, w);
    } else if (!min_weak || w < *min_weak) {
      min_weak = w;
    }
  });
  if (!min_weak || max_strong == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(*min_weak), static_cast<std::int64_t>(max_strong));
}

}  // namespace romdom
