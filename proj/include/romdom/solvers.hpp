#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "romdom/game.hpp"
#include "romdom/rng.hpp"
#include "romdom/verify.hpp"

namespace romdom {

enum class Algorithm { GAA, GSA, EGSA };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::GAA: return "gaa";
    case Algorithm::GSA: return "gsa";
    case Algorithm::EGSA: return "egsa";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "gaa") return Algorithm::GAA;
  if (s == "gsa") return Algorithm::GSA;
  if (s == "egsa") return Algorithm::EGSA;
  throw ParameterError("unknown algorithm '" + std::string(s) + "'");
}

// x_ab: number of single-player strategy changes a -> b.
class TransitionCounts {
 public:
  std::size_t operator()(strategy_t from, strategy_t to) const { return counts_[from * 3 + to]; }
  void record(strategy_t from, strategy_t to) {
    if (from != to) ++counts_[from * 3 + to];
  }
  TransitionCounts& operator+=(const TransitionCounts& o) {
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += o.counts_[k];
    return *this;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  // x01 + x12 + 2 x02 - x10 - x21 - 2 x20, which is the net change in weight.
  std::int64_t weight_drift() const {
    auto x = [&](int a, int b) { return static_cast<std::int64_t>((*this)(a, b)); };
    return x(0, 1) + x(1, 2) + 2 * x(0, 2) - x(1, 0) - x(2, 1) - 2 * x(2, 0);
  }

  friend bool operator==(const TransitionCounts&, const TransitionCounts&) = default;

 private:
  std::array<std::size_t, 9> counts_{};
};

// Coalition move proposed by a white vertex: proposer -> 2, everyone else in
// the coalition -> 0.
struct Contract {
  vertex_t proposer = 0;
  std::vector<vertex_t> coalition;  // sorted, contains the proposer
  std::vector<std::pair<vertex_t, strategy_t>> new_values;
  utility_t gain = 0;
  std::size_t round = 0;  // set when applied by a solver

  Profile apply(Profile c) const {
    for (auto [v, x] : new_values) c.set(v, x);
    return c;
  }
};

struct RoundRecord {
  std::vector<vertex_t> movers;   // players that changed (the coalition on a contract round)
  utility_t mover_gain = 0;       // sum of the movers' marginal utilities
  bool contract = false;
  bool rdf_after = false;
  TransitionCounts transitions;
};

struct RunReport {
  Algorithm algorithm = Algorithm::GSA;
  Profile initial;
  Profile final_profile;
  bool initial_rdf = false;
  std::size_t rounds_total = 0;
  std::size_t rounds_effective = 0;
  std::size_t round_cap = 0;
  // potential_trace[0] is pi(C0); potential_trace[t] is pi after round t.
  std::vector<utility_t> potential_trace;
  TransitionCounts x_counts;
  std::vector<Contract> contracts;
  std::size_t declined_contracts = 0;  // EGSA proposals rejected as invalid
  std::vector<RoundRecord> rounds;

  std::size_t weight() const { return romdom::weight(final_profile); }
};

inline std::size_t egsa_round_cap(const GameConfig& cfg, std::size_t n) {
  return cfg.round_cap(n) * (2 * n + 1);
}

namespace detail {

inline RunReport start_report(const Graph& g, const Profile& c0, const GameConfig& cfg, Algorithm algo,
                              std::size_t cap) {
  require_no_isolated(g);
  check_profile(g, c0);
  RunReport r;
  r.algorithm = algo;
  r.initial = c0;
  r.initial_rdf = is_rdf(g, c0);
  r.round_cap = cap;
  r.potential_trace.push_back(potential(g, c0, cfg));
  return r;
}

inline void close_round(RunReport& r, const GameState& state, const GameConfig& cfg, RoundRecord rec) {
  ++r.rounds_total;
  if (!rec.movers.empty()) ++r.rounds_effective;
  rec.rdf_after = is_rdf(state.graph(), state.profile());
  r.x_counts += rec.transitions;
  r.potential_trace.push_back(state.potential(cfg));
  r.rounds.push_back(std::move(rec));
}

[[noreturn]] inline void cap_exceeded(Algorithm algo, std::size_t cap) {
  throw CapExceededError(std::string(to_string(algo)) + " did not converge within " + std::to_string(cap) +
                         " rounds; the convergence bound says this cannot happen");
}

}  // namespace detail

// Sequential best-response sweeps in ascending ID order until a sweep changes nothing.
inline RunReport run_gaa(const Graph& g, const Profile& c0, const GameConfig& cfg = {}) {
  const auto cap = cfg.round_cap(g.size());
  auto report = detail::start_report(g, c0, cfg, Algorithm::GAA, cap);
  GameState state(g, c0);
  for (;;) {
    if (report.rounds_total == cap) detail::cap_exceeded(Algorithm::GAA, cap);
    RoundRecord rec;
    for (vertex_t i = 0; i < g.size(); ++i) {
      const auto br = state.best_response(i, cfg);
      if (br == state[i]) continue;
      rec.mover_gain += state.utility_if(i, br, cfg) - state.utility(i, cfg);
      rec.transitions.record(state[i], br);
      rec.movers.push_back(i);
      state.set(i, br);
    }
    const bool done = rec.movers.empty();
    detail::close_round(report, state, cfg, std::move(rec));
    if (done) break;
  }
  report.final_profile = state.profile();
  return report;
}

// Players with positive marginal utility that hold the smallest ID among the
// positive players of their closed 2-hop neighborhood.
inline std::vector<vertex_t> select_movers(const Graph& g, const std::vector<utility_t>& mu) {
  if (mu.size() != g.size()) {
    throw LengthMismatchError("marginal utility vector has length " + std::to_string(mu.size()) +
                              ", graph has " + std::to_string(g.size()) + " vertices");
  }
  std::vector<vertex_t> movers;
  for (vertex_t i = 0; i < g.size(); ++i) {
    if (mu[i] <= 0) continue;
    bool smallest = true;
    for (auto j : g.neighbors(i)) {
      if (j < i && mu[j] > 0) smallest = false;
      for (auto k = g.neighbors(j).begin(); smallest && k != g.neighbors(j).end() && *k < i; ++k)
        if (mu[*k] > 0) smallest = false;
      if (!smallest) break;
    }
    if (smallest) movers.push_back(i);
  }
  return movers;
}

namespace detail {

// One synchronous round against the frozen profile in `state`; returns the record
// with movers empty when the profile is already an NE.
inline RoundRecord gsa_round(GameState& state, const GameConfig& cfg) {
  const auto& g = state.graph();
  std::vector<utility_t> mu(g.size());
  std::vector<strategy_t> br(g.size());
  for (vertex_t i = 0; i < g.size(); ++i) {
    br[i] = state.best_response(i, cfg);
    mu[i] = state.utility_if(i, br[i], cfg) - state.utility(i, cfg);
  }
  RoundRecord rec;
  rec.movers = select_movers(g, mu);
  for (auto i : rec.movers) {
    rec.mover_gain += mu[i];
    rec.transitions.record(state[i], br[i]);
  }
  for (auto i : rec.movers) state.set(i, br[i]);
  return rec;
}

}  // namespace detail

inline RunReport run_gsa(const Graph& g, const Profile& c0, const GameConfig& cfg = {}) {
  const auto cap = cfg.round_cap(g.size());
  auto report = detail::start_report(g, c0, cfg, Algorithm::GSA, cap);
  GameState state(g, c0);
  for (;;) {
    if (report.rounds_total == cap) detail::cap_exceeded(Algorithm::GSA, cap);
    auto rec = detail::gsa_round(state, cfg);
    const bool done = rec.movers.empty();
    detail::close_round(report, state, cfg, std::move(rec));
    if (done) break;
  }
  report.final_profile = state.profile();
  return report;
}

// Ñ_j(C): white neighbors of j whose only black neighbor is j.
inline std::vector<vertex_t> uniquely_dominated_whites(const Graph& g, const Profile& c, vertex_t j) {
  std::vector<vertex_t> out;
  for (auto k : g.neighbors(j)) {
    if (c[k] != 0) continue;
    auto nb = g.neighbors(k);
    auto blacks = std::count_if(nb.begin(), nb.end(), [&](vertex_t v) { return c[v] == 2; });
    if (blacks == 1) out.push_back(k);  // j itself is one of them
  }
  return out;
}

// Which neighborhood of the proposer i must contain Ñ_j for m_{i,j} = 1.
// Closed: i itself may be in Ñ_j, since i turns black under the contract and
// covers itself. Open: the literal N_i, which rejects every black j that is the
// only black neighbor of i.
enum class ContractReach { Closed, Open };

// m_{i,j}(C) = 1 iff Ñ_j(C) lies in the chosen neighborhood of i. Requires j in N_i and c_j = 2.
inline int m_ij(const Graph& g, const Profile& c, vertex_t i, vertex_t j,
                ContractReach reach = ContractReach::Closed) {
  check_profile(g, c);
  g.check_vertex(i);
  g.check_vertex(j);
  if (!g.adjacent(i, j) || c[j] != 2) {
    throw PreconditionError("m_ij requires a black neighbor j of i (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ")");
  }
  for (auto k : uniquely_dominated_whites(g, c, j)) {
    if (k == i && reach == ContractReach::Closed) continue;
    if (!g.adjacent(i, k)) return 0;
  }
  return 1;
}

// w_i(C) = sum over gray neighbors j of m_j(C) + 2 * sum over black neighbors j of m_{i,j}(C).
inline std::size_t w_value(const Graph& g, const Profile& c, vertex_t i,
                           ContractReach reach = ContractReach::Closed) {
  GameState state(g, c);
  std::size_t w = 0;
  for (auto j : g.neighbors(i)) {
    if (c[j] == 1) w += static_cast<std::size_t>(state.m(j));
    if (c[j] == 2) w += 2 * static_cast<std::size_t>(m_ij(g, c, i, j, reach));
  }
  return w;
}

// The contract a white vertex with w_i >= 3 proposes at an NE; none otherwise.
// The proposal is not necessarily valid, see contract_valid.
inline std::optional<Contract> propose_contract(const Graph& g, const Profile& c, vertex_t i,
                                                const GameConfig& cfg = {},
                                                ContractReach reach = ContractReach::Closed) {
  check_profile(g, c);
  g.check_vertex(i);
  if (c[i] != 0 || w_value(g, c, i, reach) < 3) return std::nullopt;

  Contract k;
  k.proposer = i;
  k.coalition.push_back(i);
  k.new_values.emplace_back(i, 2);
  for (auto j : g.neighbors(i)) {
    if (c[j] == 1 || (c[j] == 2 && m_ij(g, c, i, j, reach) == 1)) {
      k.coalition.push_back(j);
      k.new_values.emplace_back(j, 0);
    }
  }
  std::sort(k.coalition.begin(), k.coalition.end());

  GameState before(g, c);
  GameState after(g, k.apply(c));
  for (auto j : k.coalition) k.gain += after.utility(j, cfg) - before.utility(j, cfg);
  return k;
}

// A proposed contract is applied only if it is valid: positive aggregate gain
// and an RDF afterwards. Both hold when a single black neighbor drops out, but
// two dropping blacks can jointly leave a shared white neighbor undominated
// without it being in either Ñ_j; such proposals are declined.
inline bool contract_valid(const Graph& g, const Profile& c, const Contract& k) {
  return k.gain > 0 && is_rdf(g, k.apply(c));
}

// GSA rounds; whenever a round finds an NE, the first valid contract in ID
// order is applied as that round's update. Stops at an NE with no valid contract.
inline RunReport run_egsa(const Graph& g, const Profile& c0, const GameConfig& cfg = {},
                          ContractReach reach = ContractReach::Closed) {
  const auto cap = egsa_round_cap(cfg, g.size());
  auto report = detail::start_report(g, c0, cfg, Algorithm::EGSA, cap);
  GameState state(g, c0);
  for (;;) {
    if (report.rounds_total == cap) detail::cap_exceeded(Algorithm::EGSA, cap);
    auto rec = detail::gsa_round(state, cfg);
    if (rec.movers.empty()) {
      std::optional<Contract> contract;
      for (vertex_t i = 0; i < g.size() && !contract; ++i) {
        contract = propose_contract(g, state.profile(), i, cfg, reach);
        if (contract && !contract_valid(g, state.profile(), *contract)) {
          ++report.declined_contracts;
          contract.reset();
        }
      }
      if (!contract) {
        detail::close_round(report, state, cfg, std::move(rec));
        break;
      }
      if (contract->coalition.size() < 2) {
        throw InternalError("contract at vertex " + std::to_string(contract->proposer) + " has an empty coalition");
      }
      contract->round = report.rounds_total + 1;
      rec.contract = true;
      rec.movers = contract->coalition;
      for (auto [v, x] : contract->new_values) {
        rec.transitions.record(state[v], x);
        state.set(v, x);
      }
      report.contracts.push_back(std::move(*contract));
    }
    detail::close_round(report, state, cfg, std::move(rec));
  }
  report.final_profile = state.profile();
  return report;
}

inline RunReport run(Algorithm algo, const Graph& g, const Profile& c0, const GameConfig& cfg = {}) {
  switch (algo) {
    case Algorithm::GAA: return run_gaa(g, c0, cfg);
    case Algorithm::GSA: return run_gsa(g, c0, cfg);
    case Algorithm::EGSA: return run_egsa(g, c0, cfg);
  }
  throw ParameterError("unknown algorithm");
}

inline Profile random_profile(std::size_t n, SplitMix64& rng) {
  std::vector<strategy_t> v(n);
  for (auto& x : v) x = static_cast<strategy_t>(rng.below(3));
  return Profile(std::move(v));
}

struct RestartResult {
  RunReport best;
  std::size_t best_run = 0;
  std::vector<std::size_t> weights;  // final weight of every run, run 0 first
};

// Run 0 starts from all zeros; run r >= 1 from a uniform profile drawn from
// the substream split(r) of `seed`. Ties keep the earliest run.
inline RestartResult run_gsa_restarts(const Graph& g, std::size_t restarts, std::uint64_t seed,
                                      const GameConfig& cfg = {}) {
  RestartResult out{run_gsa(g, Profile(g.size(), 0), cfg), 0, {}};
  out.weights.push_back(out.best.weight());
  const SplitMix64 root(seed);
  for (std::size_t r = 1; r <= restarts; ++r) {
    auto rng = root.split(r);
    auto report = run_gsa(g, random_profile(g.size(), rng), cfg);
    out.weights.push_back(report.weight());
    if (report.weight() < out.best.weight()) {
      out.best = std::move(report);
      out.best_run = r;
    }
  }
  return out;
}

// All players switch to their best response at once (no independence filter).
inline Profile simultaneous_best_response_step(const Graph& g, const Profile& c, const GameConfig& cfg = {}) {
  GameState state(g, c);
  Profile next = c;
  for (vertex_t i = 0; i < g.size(); ++i) next.set(i, state.best_response(i, cfg));
  return next;
}

// Part of a run between two contracts (or run start/end), ending at an NE.
struct TransitionSegment {
  std::size_t start_round = 0;  // state index the audited stretch starts from
  std::size_t end_round = 0;    // state index of the NE that closes it
  bool starts_at_rdf = false;
  TransitionCounts x;

  bool holds() const { return x.weight_drift() <= 0; }
};

// Splits a report at its contract rounds. With from_first_rdf, each segment is
// trimmed to start at its first RDF profile.
inline std::vector<TransitionSegment> transition_segments(const RunReport& r, bool from_first_rdf) {
  std::vector<TransitionSegment> out;
  auto rdf_at = [&](std::size_t state) { return state == 0 ? r.initial_rdf : r.rounds[state - 1].rdf_after; };
  std::size_t begin = 0;
  for (std::size_t t = 1; t <= r.rounds.size() + 1; ++t) {
    const bool boundary = t > r.rounds.size() || r.rounds[t - 1].contract;
    if (!boundary) continue;
    TransitionSegment seg;
    seg.end_round = t - 1;
    seg.start_round = begin;
    if (from_first_rdf) {
      while (seg.start_round < seg.end_round && !rdf_at(seg.start_round)) ++seg.start_round;
    }
    seg.starts_at_rdf = rdf_at(seg.start_round);
    for (auto s = seg.start_round + 1; s <= seg.end_round; ++s) seg.x += r.rounds[s - 1].transitions;
    out.push_back(seg);
    begin = t;
  }
  return out;
}

// Checks x01 + x12 + 2 x02 - x10 - x21 - 2 x20 <= 0 on every RDF-to-NE segment
// of the run. The run must start from an RDF.
inline bool audit_transitions(const RunReport& r) {
  auto segments = transition_segments(r, false);
  for (const auto& seg : segments) {
    if (!seg.starts_at_rdf) {
      throw SegmentBoundaryError("audited segment starting at round " + std::to_string(seg.start_round) +
                                 " does not start from an RDF");
    }
  }
  return std::all_of(segments.begin(), segments.end(), [](const auto& s) { return s.holds(); });
}

// Same check for runs from arbitrary starts: each segment is audited from its
// first RDF profile on.
inline bool audit_transitions_from_first_rdf(const RunReport& r) {
  auto segments = transition_segments(r, true);
  return std::all_of(segments.begin(), segments.end(), [](const auto& s) { return s.holds(); });
}

}  // namespace romdom
