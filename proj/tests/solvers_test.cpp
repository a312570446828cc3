#include <set>

#include <gtest/gtest.h>

#include "romdom/generators.hpp"
#include "romdom/solvers.hpp"

using namespace romdom;

namespace {

const GameConfig kCfg;

void expect_theorem_suite(const Graph& g, const RunReport& r) {
  const auto& c = r.final_profile;
  EXPECT_TRUE(is_rdf(g, c)) << c.str();
  EXPECT_TRUE(is_minimal_rdf(g, c)) << c.str();
  EXPECT_TRUE(is_strong_minimal_rdf(g, c)) << c.str();
  EXPECT_TRUE(is_nash(g, c, kCfg)) << c.str();
  EXPECT_LE(r.rounds_total, r.round_cap);
}

Graph random_instance(SplitMix64& rng) {
  switch (rng.below(4)) {
    case 0: return gen_er(10 + rng.below(30), 0.2, rng());
    case 1: return gen_ba(10 + rng.below(30), 1 + rng.below(4), rng());
    case 2: return gen_random_tree(5 + rng.below(40), rng());
    default: return gen_ba_tree(5 + rng.below(40), rng());
  }
}

}  // namespace

TEST(Gaa, P3FromZeros) {
  const auto g = fixtures::p3();
  auto r = run_gaa(g, Profile(3, 0));
  EXPECT_EQ(r.final_profile, (Profile{2, 0, 1}));
  EXPECT_EQ(r.weight(), 3u);
  EXPECT_EQ(r.rounds_total, 2u);
  EXPECT_EQ(r.rounds_effective, 1u);
  EXPECT_EQ(r.rounds[0].movers, (std::vector<vertex_t>{0, 2}));
}

TEST(Gaa, AlreadyNash) {
  const auto g = fixtures::p3();
  auto r = run_gaa(g, Profile{0, 2, 0});
  EXPECT_EQ(r.final_profile, (Profile{0, 2, 0}));
  EXPECT_EQ(r.rounds_effective, 0u);
  EXPECT_EQ(r.rounds_total, 1u);
}

TEST(Gaa, C4FromAllBlack) {
  const auto g = fixtures::c4();
  auto r = run_gaa(g, Profile(4, 2));
  expect_theorem_suite(g, r);
  EXPECT_LE(r.weight(), 4u);
}

TEST(Gaa, RejectsIsolatedAndMismatch) {
  EXPECT_THROW(run_gaa(Graph(3, {{0, 1}}), Profile(3, 0)), IsolatedVertexError);
  EXPECT_THROW(run_gaa(fixtures::p3(), Profile(4, 0)), LengthMismatchError);
}

TEST(SelectMovers, Examples) {
  EXPECT_EQ(select_movers(fixtures::c4(), {76, 76, 76, 76}), (std::vector<vertex_t>{0}));
  EXPECT_EQ(select_movers(fixtures::p3(), {17, 0, 17}), (std::vector<vertex_t>{0}));
  EXPECT_EQ(select_movers(fixtures::path(6), {5, 0, 0, 0, 0, 5}), (std::vector<vertex_t>{0, 5}));
  EXPECT_EQ(select_movers(fixtures::path(6), {0, 0, 0, 0, 0, 0}), (std::vector<vertex_t>{}));
  EXPECT_THROW(select_movers(fixtures::p3(), {1, 2}), LengthMismatchError);
}

TEST(Gsa, C4FromZeros) {
  const auto g = fixtures::c4();
  auto r = run_gsa(g, Profile(4, 0));
  EXPECT_EQ(r.final_profile, (Profile{2, 0, 1, 0}));
  EXPECT_EQ(r.rounds_total, 3u);
  EXPECT_EQ(r.rounds_effective, 2u);
  EXPECT_EQ(r.rounds[0].movers, (std::vector<vertex_t>{0}));
  EXPECT_EQ(r.rounds[1].movers, (std::vector<vertex_t>{2}));
}

TEST(Gsa, P3FromZeros) {
  const auto g = fixtures::p3();
  auto r = run_gsa(g, Profile(3, 0));
  EXPECT_EQ(r.final_profile, (Profile{2, 0, 1}));
  EXPECT_EQ(r.rounds[0].movers, (std::vector<vertex_t>{0}));
  EXPECT_EQ(r.rounds[1].movers, (std::vector<vertex_t>{2}));
  EXPECT_EQ(r.x_counts(0, 2), 1u);
  EXPECT_EQ(r.x_counts(0, 1), 1u);
  EXPECT_EQ(r.x_counts.total(), 2u);
}

TEST(Gsa, H2NashIsFixed) {
  const auto g = fixtures::h2();
  auto r = run_gsa(g, Profile{0, 2, 0, 2, 0});
  EXPECT_EQ(r.final_profile, (Profile{0, 2, 0, 2, 0}));
  EXPECT_EQ(r.rounds_effective, 0u);
}

TEST(Oscillation, SimultaneousBestResponseCyclesOnC4) {
  const auto g = fixtures::c4();
  const Profile zeros(4, 0), blacks(4, 2);
  EXPECT_EQ(simultaneous_best_response_step(g, zeros), blacks);
  EXPECT_EQ(simultaneous_best_response_step(g, blacks), zeros);
  auto r = run_gsa(g, zeros);
  EXPECT_TRUE(is_nash(g, r.final_profile, kCfg));
  EXPECT_LE(r.rounds_total, 3u);
}

TEST(ContractScore, MijExamples) {
  const auto h2 = fixtures::h2();
  const auto p7 = fixtures::p7();
  const Profile h2c{0, 2, 0, 2, 0}, p7c{1, 0, 2, 0, 2, 0, 1};
  EXPECT_EQ(uniquely_dominated_whites(h2, h2c, 1), (std::vector<vertex_t>{2}));
  EXPECT_EQ(m_ij(h2, h2c, 0, 1), 1);
  EXPECT_EQ(m_ij(h2, h2c, 0, 1, ContractReach::Open), 1);
  // Ñ_2 = {1}: the proposer itself.
  EXPECT_EQ(uniquely_dominated_whites(p7, p7c, 2), (std::vector<vertex_t>{1}));
  EXPECT_EQ(m_ij(p7, p7c, 1, 2), 1);
  EXPECT_EQ(m_ij(p7, p7c, 1, 2, ContractReach::Open), 0);
  // Ñ_1 empty: vertex 0 sees blacks 1 and 3.
  EXPECT_EQ(m_ij(fixtures::c4(), Profile{0, 2, 2, 2}, 0, 1), 1);
  EXPECT_EQ(m_ij(fixtures::c4(), Profile{0, 2, 2, 2}, 0, 1, ContractReach::Open), 1);
  EXPECT_THROW(m_ij(p7, p7c, 1, 3), PreconditionError);
  EXPECT_THROW(m_ij(p7, p7c, 0, 2), PreconditionError);
}

TEST(ContractScore, WValueExamples) {
  const auto p7 = fixtures::p7();
  const Profile p7c{1, 0, 2, 0, 2, 0, 1};
  EXPECT_EQ(w_value(fixtures::h2(), Profile{0, 2, 0, 2, 0}, 0), 4u);
  EXPECT_EQ(w_value(p7, p7c, 1), 3u);
  EXPECT_EQ(w_value(p7, p7c, 1, ContractReach::Open), 1u);
  EXPECT_EQ(w_value(p7, p7c, 3), 0u);
  EXPECT_EQ(w_value(p7, p7c, 3, ContractReach::Open), 0u);
  EXPECT_EQ(w_value(p7, p7c, 0), 0u);
}

TEST(ContractProposal, H2) {
  const auto g = fixtures::h2();
  const Profile c{0, 2, 0, 2, 0};
  for (auto reach : {ContractReach::Closed, ContractReach::Open}) {
    auto k = propose_contract(g, c, 0, kCfg, reach);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(k->proposer, 0u);
    EXPECT_EQ(k->coalition, (std::vector<vertex_t>{0, 1, 3}));
    EXPECT_EQ(k->apply(c), (Profile{2, 0, 0, 0, 0}));
    EXPECT_EQ(k->gain, 68);
  }
}

TEST(ContractProposal, IneligibleVertices) {
  const auto p7 = fixtures::p7();
  const Profile p7c{1, 0, 2, 0, 2, 0, 1};
  EXPECT_FALSE(propose_contract(p7, p7c, 1, kCfg, ContractReach::Open).has_value());
  EXPECT_FALSE(propose_contract(p7, p7c, 2, kCfg).has_value());  // not white
  for (vertex_t i = 0; i < 4; ++i) EXPECT_FALSE(propose_contract(fixtures::c4(), Profile{2, 0, 1, 0}, i, kCfg));
}

TEST(ContractProposal, P7ClosedReachFindsOptimum) {
  const auto p7 = fixtures::p7();
  auto k = propose_contract(p7, Profile{1, 0, 2, 0, 2, 0, 1}, 1, kCfg);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->coalition, (std::vector<vertex_t>{0, 1, 2}));
  EXPECT_EQ(k->apply(Profile{1, 0, 2, 0, 2, 0, 1}), (Profile{0, 2, 0, 0, 2, 0, 1}));
  EXPECT_GT(k->gain, 0);
}

TEST(Egsa, H2GapCollapses) {
  const auto g = fixtures::h2();
  auto r = run_egsa(g, Profile{0, 2, 0, 2, 0});
  EXPECT_EQ(r.final_profile, (Profile{2, 0, 0, 0, 0}));
  ASSERT_EQ(r.contracts.size(), 1u);
  EXPECT_EQ(r.contracts[0].round, 1u);
  EXPECT_EQ(r.contracts[0].gain, 68);
  EXPECT_EQ(r.rounds_total, 2u);
  EXPECT_EQ(r.rounds_effective, 1u);
  EXPECT_EQ(r.potential_trace, (std::vector<utility_t>{-136, -68, -68}));
}

TEST(Egsa, H2FromZeros) {
  auto r = run_egsa(fixtures::h2(), Profile(5, 0));
  EXPECT_EQ(r.weight(), 2u);
}

TEST(Egsa, P3FromZerosDependsOnReach) {
  const auto g = fixtures::p3();
  auto open = run_egsa(g, Profile(3, 0), kCfg, ContractReach::Open);
  EXPECT_EQ(open.final_profile, (Profile{2, 0, 1}));
  EXPECT_TRUE(open.contracts.empty());

  auto closed = run_egsa(g, Profile(3, 0));
  EXPECT_EQ(closed.final_profile, (Profile{0, 2, 0}));
  ASSERT_EQ(closed.contracts.size(), 1u);
  EXPECT_EQ(closed.contracts[0].proposer, 1u);
  EXPECT_EQ(closed.contracts[0].gain, 65);
  EXPECT_EQ(closed.rounds_total, 4u);
  EXPECT_EQ(closed.rounds_effective, 3u);
}

// Blacks 1 and 13 both join vertex 3's coalition; vertex 9 sees only those two
// blacks, so it is in neither Ñ_1 nor Ñ_13 and ends up undominated.
TEST(Egsa, JointlyDominatedVertexMakesProposalInvalid) {
  const auto g = from_edge_list(
      "17 45\n0 1\n0 2\n0 3\n0 4\n0 5\n0 7\n0 9\n0 10\n0 14\n0 15\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n"
      "1 8\n1 9\n1 11\n2 3\n2 9\n3 4\n3 5\n3 6\n3 7\n3 8\n3 11\n3 12\n3 13\n4 6\n4 8\n4 10\n4 11\n"
      "4 14\n4 15\n4 16\n6 12\n7 14\n9 10\n9 12\n9 13\n9 15\n10 16\n11 16\n12 13\n");
  const auto ne = Profile::parse("02002000000002000");
  ASSERT_TRUE(is_nash(g, ne, kCfg));
  auto k = propose_contract(g, ne, 3, kCfg);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->coalition, (std::vector<vertex_t>{1, 3, 13}));
  EXPECT_EQ(k->gain, -28);
  EXPECT_FALSE(is_rdf(g, k->apply(ne)));
  EXPECT_FALSE(contract_valid(g, ne, *k));

  auto r = run_egsa(g, ne);
  EXPECT_GE(r.declined_contracts, 1u);
  expect_theorem_suite(g, r);
  EXPECT_LE(r.weight(), weight(ne));
}

TEST(Egsa, MatchingStarNashCollapsesToCenter) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto g = fixtures::matching_star(k);
    Profile heads(g.size(), 0);
    for (std::size_t t = 0; t < k; ++t) heads.set(2 * t + 1, 2);
    ASSERT_TRUE(is_nash(g, heads, kCfg));
    ASSERT_EQ(weight(heads), g.size() - 1);
    auto r = run_egsa(g, heads);
    EXPECT_EQ(r.weight(), 2u) << k;
    EXPECT_EQ(r.final_profile[0], 2) << k;
  }
}

TEST(Restarts, ZeroRestartsIsPlainGsa) {
  const auto g = gen_er(25, 0.2, 3);
  auto res = run_gsa_restarts(g, 0, 99);
  auto plain = run_gsa(g, Profile(25, 0));
  EXPECT_EQ(res.best.final_profile, plain.final_profile);
  EXPECT_EQ(res.best.rounds_total, plain.rounds_total);
  EXPECT_EQ(res.weights.size(), 1u);
}

TEST(Restarts, H2FindsCenterAndNeverWorsens) {
  const auto g = fixtures::h2();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto res = run_gsa_restarts(g, 50, seed);
    EXPECT_EQ(res.best.weight(), 2u);
    EXPECT_LE(res.best.weight(), res.weights[0]);
  }
  const auto er = gen_er(30, 0.2, 8);
  auto a = run_gsa_restarts(er, 5, 4), b = run_gsa_restarts(er, 20, 4);
  EXPECT_LE(b.best.weight(), a.best.weight());  // superset of runs
  EXPECT_EQ(std::vector<std::size_t>(b.weights.begin(), b.weights.begin() + 6), a.weights);
}

TEST(Audit, Examples) {
  auto h2 = run_egsa(fixtures::h2(), Profile{0, 2, 0, 2, 0});
  auto segments = transition_segments(h2, false);
  ASSERT_EQ(segments.size(), 2u);
  EXPECT_EQ(segments[1].x.total(), 0u);  // (2,0,0,0,0) is already an NE
  EXPECT_TRUE(audit_transitions(h2));

  auto p3 = run_gsa(fixtures::p3(), Profile{1, 1, 1});
  EXPECT_TRUE(p3.initial_rdf);
  EXPECT_TRUE(audit_transitions(p3));
  EXPECT_EQ(p3.final_profile, (Profile{0, 2, 0}));

  auto zeros = run_gsa(fixtures::p3(), Profile(3, 0));
  EXPECT_THROW(audit_transitions(zeros), SegmentBoundaryError);
  EXPECT_TRUE(audit_transitions_from_first_rdf(zeros));
}

TEST(Audit, DriftEqualsWeightChange) {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_instance(rng);
    auto r = run_egsa(g, random_profile(g.size(), rng));
    EXPECT_EQ(r.x_counts.weight_drift(),
              static_cast<std::int64_t>(r.weight()) - static_cast<std::int64_t>(weight(r.initial)));
  }
}

TEST(SolverProperties, RandomInstances) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = random_instance(rng);
    const auto c0 = trial % 2 ? random_profile(g.size(), rng) : Profile(g.size(), 0);
    auto gaa = run_gaa(g, c0);
    auto gsa = run_gsa(g, c0);
    auto egsa = run_egsa(g, c0);
    expect_theorem_suite(g, gaa);
    expect_theorem_suite(g, gsa);
    expect_theorem_suite(g, egsa);
    EXPECT_LE(egsa.weight(), gsa.weight());
    EXPECT_LE(gsa.rounds_total, kCfg.round_cap(g.size()));
    EXPECT_LE(egsa.rounds_total, egsa_round_cap(kCfg, g.size()));
    EXPECT_TRUE(audit_transitions_from_first_rdf(gsa));
    EXPECT_TRUE(audit_transitions_from_first_rdf(egsa));

    // Per-round potential identity and 2-hop independence of movers.
    for (std::size_t t = 0; t < gsa.rounds.size(); ++t) {
      const auto& rec = gsa.rounds[t];
      EXPECT_EQ(gsa.potential_trace[t + 1] - gsa.potential_trace[t], rec.mover_gain);
      if (!rec.movers.empty()) {
        EXPECT_GT(rec.mover_gain, 0);
      }
      std::set<vertex_t> movers(rec.movers.begin(), rec.movers.end());
      for (auto i : rec.movers)
        for (auto j : g.two_hop_closed(i)) EXPECT_TRUE(j == i || !movers.count(j));
    }
    for (std::size_t t = 0; t < gaa.rounds.size(); ++t)
      EXPECT_EQ(gaa.potential_trace[t + 1] - gaa.potential_trace[t], gaa.rounds[t].mover_gain);
    for (std::size_t t = 0; t < egsa.rounds.size(); ++t) {
      if (!egsa.rounds[t].contract && !egsa.rounds[t].movers.empty()) {
        EXPECT_GT(egsa.potential_trace[t + 1], egsa.potential_trace[t]);
      }
    }
    for (const auto& k : egsa.contracts) EXPECT_GT(k.gain, 0);
  }
}

TEST(SolverProperties, Deterministic) {
  const auto g = gen_ba(60, 3, 17);
  for (auto algo : {Algorithm::GAA, Algorithm::GSA, Algorithm::EGSA}) {
    auto a = run(algo, g, Profile(60, 0));
    auto b = run(algo, g, Profile(60, 0));
    EXPECT_EQ(a.final_profile, b.final_profile);
    EXPECT_EQ(a.potential_trace, b.potential_trace);
    EXPECT_EQ(a.x_counts, b.x_counts);
  }
}

TEST(AlgorithmNames, RoundTrip) {
  for (auto a : {Algorithm::GAA, Algorithm::GSA, Algorithm::EGSA}) EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_THROW(parse_algorithm("sa"), ParameterError);
}
