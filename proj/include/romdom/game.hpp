#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom {

using strategy_t = std::uint8_t;  // 0 white, 1 gray, 2 black
using utility_t = std::int64_t;

// A strategy profile C, read equally as the labeling f with f(v_i) = c_i.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t n, strategy_t fill = 0) : values_(n, fill) {}
  Profile(std::initializer_list<int> values) {
    values_.reserve(values.size());
    for (int v : values) values_.push_back(checked(v));
  }
  explicit Profile(std::vector<strategy_t> values) : values_(std::move(values)) {
    for (auto v : values_) checked(v);
  }

  // "01202" style text form.
  static Profile parse(std::string_view text) {
    Profile p;
    p.values_.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '2') {
        throw ParseError("profile string may only contain 0, 1, 2 (got '" + std::string(text) + "')");
      }
      p.values_.push_back(static_cast<strategy_t>(ch - '0'));
    }
    return p;
  }

  std::string str() const {
    std::string s(values_.size(), '0');
    for (std::size_t i = 0; i < values_.size(); ++i) s[i] = static_cast<char>('0' + values_[i]);
    return s;
  }

  std::size_t size() const noexcept { return values_.size(); }
  strategy_t operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, strategy_t v) { values_[i] = checked(v); }
  const std::vector<strategy_t>& values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  static strategy_t checked(int v) {
    if (v < 0 || v > 2) throw ParseError("strategy value must be 0, 1 or 2");
    return static_cast<strategy_t>(v);
  }

  std::vector<strategy_t> values_;
};

inline void check_profile(const Graph& g, const Profile& c) {
  if (c.size() != g.size()) {
    throw LengthMismatchError("profile length " + std::to_string(c.size()) +
                              " does not match vertex count " + std::to_string(g.size()));
  }
}

// Sum of c_i, i.e. gamma_R(G, f).
inline std::size_t weight(const Profile& c) {
  std::size_t w = 0;
  for (auto v : c) w += v;
  return w;
}

// lambda1, lambda2 with (2/3) lambda2 < lambda1 < (3/4) lambda2, checked in integers.
class GameConfig {
 public:
  static constexpr utility_t kDefaultLambda1 = 17;
  static constexpr utility_t kDefaultLambda2 = 24;

  GameConfig() : GameConfig(kDefaultLambda1, kDefaultLambda2) {}
  GameConfig(utility_t lambda1, utility_t lambda2) : lambda1_(lambda1), lambda2_(lambda2) {
    if (lambda1 <= 0 || lambda2 <= 0 || !(2 * lambda2 < 3 * lambda1) || !(4 * lambda1 < 3 * lambda2)) {
      throw ParameterError("lambda constants must satisfy 0 < 2*lambda2 < 3*lambda1 and 4*lambda1 < 3*lambda2 (got " +
                           std::to_string(lambda1) + ", " + std::to_string(lambda2) + ")");
    }
  }

  utility_t lambda1() const noexcept { return lambda1_; }
  utility_t lambda2() const noexcept { return lambda2_; }

  // Smallest positive single-deviation gain: min(3l1 - 2l2, 3l2 - 4l1).
  utility_t min_gain() const noexcept {
    return std::min(3 * lambda1_ - 2 * lambda2_, 3 * lambda2_ - 4 * lambda1_);
  }

  // T = ceil((4 l1 + 2 l2) n / min_gain), the bound on improving steps from any start.
  std::size_t round_cap(std::size_t n) const noexcept {
    auto num = static_cast<std::uint64_t>(4 * lambda1_ + 2 * lambda2_) * n;
    auto den = static_cast<std::uint64_t>(min_gain());
    return static_cast<std::size_t>((num + den - 1) / den);
  }

  // Positive lower bound on u_i gain for the move from -> to (zero on the diagonal).
  utility_t transition_gain_floor(strategy_t from, strategy_t to) const noexcept {
    const utility_t l1 = lambda1_, l2 = lambda2_;
    static constexpr int kIndex[3][3] = {{-1, 3, 5}, {2, -1, 4}, {0, 1, -1}};
    const std::array<utility_t, 6> floors{4 * l1 - 2 * l2, 3 * l1 - 2 * l2, l1,
                                          l2 - l1,         3 * l2 - 3 * l1, 3 * l2 - 4 * l1};
    int k = kIndex[from][to];
    return k < 0 ? 0 : floors[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;

 private:
  utility_t lambda1_;
  utility_t lambda2_;
};

// A profile on a graph plus, per vertex, the number of black vertices in its
// closed neighborhood, so m-values, utilities and best responses cost O(deg).
class GameState {
 public:
  GameState(const Graph& g, Profile c) : g_(&g), c_(std::move(c)), black_count_(g.size(), 0) {
    check_profile(g, c_);
    for (vertex_t v = 0; v < g.size(); ++v)
      if (c_[v] == 2) add_black(v, +1);
  }

  const Graph& graph() const noexcept { return *g_; }
  const Profile& profile() const noexcept { return c_; }
  strategy_t operator[](vertex_t i) const { return c_[i]; }

  void set(vertex_t i, strategy_t x) {
    g_->check_vertex(i);
    if (c_[i] == x) return;
    if (c_[i] == 2) add_black(i, -1);
    c_.set(i, x);
    if (x == 2) add_black(i, +1);
  }

  // m_j(C): 1 iff no vertex of the closed neighborhood of j is black.
  int m(vertex_t j) const {
    g_->check_vertex(j);
    return black_count_[j] == 0 ? 1 : 0;
  }

  bool strongly_dominated(vertex_t j) const { return m(j) == 0; }

  std::size_t black_in_closed_neighborhood(vertex_t j) const { return black_count_[j]; }

  // u_i(x, C_{-i}).
  utility_t utility_if(vertex_t i, strategy_t x, const GameConfig& cfg) const {
    g_->check_vertex(i);
    const utility_t x2 = static_cast<utility_t>(x) * x;
    if (x == 2) return -cfg.lambda1() * 4;
    // With i not black, m-values around i only see the other black vertices.
    const std::size_t own = c_[i] == 2 ? 1 : 0;
    utility_t q = (black_count_[i] - own == 0) ? (2 - x) : 0;
    for (auto j : g_->neighbors(i)) {
      if (black_count_[j] - own == 0) q += 2 - c_[j];
    }
    return -cfg.lambda1() * x2 - cfg.lambda2() * q;
  }

  utility_t utility(vertex_t i, const GameConfig& cfg) const { return utility_if(i, c_[i], cfg); }

  // Best response with ties broken toward staying, then toward the smaller value.
  strategy_t best_response(vertex_t i, const GameConfig& cfg) const {
    const strategy_t current = c_[i];
    utility_t best_u = utility_if(i, current, cfg);
    strategy_t best = current;
    for (strategy_t x = 0; x <= 2; ++x) {
      if (x == current) continue;
      auto u = utility_if(i, x, cfg);
      if (u > best_u) {
        best_u = u;
        best = x;
      }
    }
    return best;
  }

  utility_t marginal_utility(vertex_t i, const GameConfig& cfg) const {
    return utility_if(i, best_response(i, cfg), cfg) - utility(i, cfg);
  }

  utility_t potential(const GameConfig& cfg) const {
    utility_t sq = 0, free_deficit = 0;
    for (vertex_t j = 0; j < g_->size(); ++j) {
      const utility_t cj = c_[j];
      sq += cj * cj;
      if (black_count_[j] == 0) free_deficit += 2 - cj;
    }
    return -cfg.lambda1() * sq - cfg.lambda2() * free_deficit;
  }

 private:
  void add_black(vertex_t v, int delta) {
    black_count_[v] += static_cast<std::size_t>(delta);
    for (auto w : g_->neighbors(v)) black_count_[w] += static_cast<std::size_t>(delta);
  }

  const Graph* g_;
  Profile c_;
  std::vector<std::size_t> black_count_;
};

inline int m_value(const Graph& g, const Profile& c, vertex_t j) { return GameState(g, c).m(j); }

inline utility_t utility(const Graph& g, const Profile& c, vertex_t i, const GameConfig& cfg) {
  return GameState(g, c).utility(i, cfg);
}

inline utility_t potential(const Graph& g, const Profile& c, const GameConfig& cfg) {
  return GameState(g, c).potential(cfg);
}

inline strategy_t best_response(const Graph& g, const Profile& c, vertex_t i, const GameConfig& cfg) {
  return GameState(g, c).best_response(i, cfg);
}

inline utility_t marginal_utility(const Graph& g, const Profile& c, vertex_t i, const GameConfig& cfg) {
  return GameState(g, c).marginal_utility(i, cfg);
}

inline void require_no_isolated(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw IsolatedVertexError("the game is only defined on graphs without isolated vertices");
  }
}

}  // namespace romdom
