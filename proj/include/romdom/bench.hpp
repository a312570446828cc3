#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "romdom/baselines.hpp"
#include "romdom/generators.hpp"
#include "romdom/solvers.hpp"
#include "romdom/verify.hpp"

namespace romdom {

// Means of up to thousands of fractions (omega) overflow 64-bit rationals.
using ExactRational = boost::multiprecision::cpp_rational;

enum class BenchAlgo { GAA, GSA, EGSA, GSA_RESTARTS, GREEDY, TREEDP };

struct AlgoSpec {
  BenchAlgo kind = BenchAlgo::GSA;
  std::size_t restarts = 0;  // GSA_RESTARTS only

  bool is_game() const { return kind == BenchAlgo::GAA || kind == BenchAlgo::GSA || kind == BenchAlgo::EGSA || kind == BenchAlgo::GSA_RESTARTS; }

  std::string name() const {
    switch (kind) {
      case BenchAlgo::GAA: return "gaa";
      case BenchAlgo::GSA: return "gsa";
      case BenchAlgo::EGSA: return "egsa";
      case BenchAlgo::GSA_RESTARTS: return "gsa_restarts(" + std::to_string(restarts) + ")";
      case BenchAlgo::GREEDY: return "greedy";
      case BenchAlgo::TREEDP: return "treedp";
    }
    return "?";
  }

  // Accepts gaa, gsa, egsa, greedy, treedp, gsa_restarts (uses default_restarts)
  // and gsa_restarts(k).
  static AlgoSpec parse(std::string_view s, std::size_t default_restarts = 0) {
    if (s == "gaa") return {BenchAlgo::GAA};
    if (s == "gsa") return {BenchAlgo::GSA};
    if (s == "egsa") return {BenchAlgo::EGSA};
    if (s == "greedy") return {BenchAlgo::GREEDY};
    if (s == "treedp") return {BenchAlgo::TREEDP};
    if (s == "gsa_restarts") return {BenchAlgo::GSA_RESTARTS, default_restarts};
    constexpr std::string_view prefix = "gsa_restarts(";
    if (s.starts_with(prefix) && s.ends_with(")")) {
      auto digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
      std::size_t k = 0;
      for (char ch : digits) {
        if (ch < '0' || ch > '9') throw ParameterError("bad restart count in '" + std::string(s) + "'");
        k = k * 10 + static_cast<std::size_t>(ch - '0');
      }
      if (digits.empty()) throw ParameterError("bad restart count in '" + std::string(s) + "'");
      return {BenchAlgo::GSA_RESTARTS, k};
    }
    throw ParameterError("unknown benchmark algorithm '" + std::string(s) + "'");
  }

  friend bool operator==(const AlgoSpec&, const AlgoSpec&) = default;
};

struct ExperimentSpec {
  GraphGenSpec graph;  // model and its parameters; n and seed are filled per sample
  std::vector<std::size_t> ns;
  std::size_t samples = 1;
  std::vector<AlgoSpec> algos;
  std::uint64_t seed = 0;
  GameConfig cfg;
  bool verify = true;
  std::size_t oracle_cap = 12;  // brute-force optimum for omega on non-tree models

  void validate() const {
    if (samples < 1) throw ParameterError("sample count must be >= 1");
    if (ns.empty()) throw ParameterError("at least one n value is required");
    if (algos.empty()) throw ParameterError("at least one algorithm is required");
    for (const auto& a : algos) {
      if (a.kind == BenchAlgo::TREEDP && !is_tree_model(graph.model)) {
        throw ParameterError("treedp is only available on tree models (rt, bat)");
      }
    }
  }
};

struct ResultRow {
  GraphModel model = GraphModel::ER;
  std::size_t n = 0;
  std::string algorithm;
  std::size_t samples = 0;
  ExactRational mean_weight;
  std::optional<ExactRational> mean_rounds_total;
  std::optional<ExactRational> mean_rounds_effective;
  std::optional<ExactRational> eta;
  std::optional<ExactRational> omega;
  std::uint64_t seed = 0;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  // Per-instance final weights, rows[k] <-> weights[k][sample].
  std::vector<std::vector<std::size_t>> weights;
};

// eta = gsa_rounds / (gaa_rounds * n).
inline ExactRational metric_eta(const ExactRational& gsa_rounds, const ExactRational& gaa_rounds, std::size_t n) {
  if (gaa_rounds <= 0 || n == 0) throw ParameterError("eta needs positive GAA rounds and n > 0");
  return gsa_rounds / (gaa_rounds * ExactRational(n));
}

// omega = (weight - optimum) / optimum.
inline ExactRational metric_omega(std::size_t weight, std::size_t optimum) {
  if (optimum == 0) throw ParameterError("omega needs a positive optimum");
  if (weight < optimum) {
    throw InternalError("solver weight " + std::to_string(weight) + " is below the optimum " +
                        std::to_string(optimum) + "; the solver or the oracle is broken");
  }
  return ExactRational(static_cast<long long>(weight - optimum), static_cast<long long>(optimum));
}

// Fixed-point decimal with `places` digits, ties rounded to even.
inline std::string format_fixed(const ExactRational& value, int places = 6) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  cpp_int scaled = num * scale;
  cpp_int q = scaled / den;
  cpp_int rem = scaled % den;
  if (2 * rem > den || (2 * rem == den && (q & 1) != 0)) ++q;
  std::string digits = q.str();
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  if (negative && q != 0) out.insert(0, "-");
  return out;
}

namespace detail {

// Tree DP results are trusted by the harness only after they have matched the
// brute-force oracle on a batch of random small trees in this process.
inline void ensure_tree_dp_validated() {
  static const bool ok = [] {
    for (std::uint64_t s = 0; s < 64; ++s) {
      const std::size_t n = 2 + s % 11;
      auto t = (s % 2) ? gen_random_tree(n, derive_seed(0xD9, {s})) : gen_ba_tree(n, derive_seed(0xD9, {s}));
      if (tree_dp_optimum(t).optimum_weight != brute_force_optimum(t).optimum_weight) return false;
    }
    return true;
  }();
  if (!ok) throw InternalError("tree DP disagrees with the brute-force oracle; refusing to benchmark with it");
}

inline void verify_game_output(const Graph& g, const Profile& c, const GameConfig& cfg) {
  if (!is_nash(g, c, cfg)) throw InternalError("solver output is not a Nash equilibrium");
  if (!is_strong_minimal_rdf(g, c)) throw InternalError("solver output is not a strong minimal RDF");
}

struct Accumulator {
  ExactRational weight, rounds_total, rounds_effective, omega;
  bool has_rounds = false;
  bool has_omega = true;
  std::vector<std::size_t> weights;
};

}  // namespace detail

inline std::uint64_t sample_seed(std::uint64_t base, std::size_t n, std::size_t sample) {
  return derive_seed(base, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(sample)});
}

// Every algorithm starts from all zeros on the same sampled graph; graph seeds
// depend only on (seed, n, sample), so the algorithm list never perturbs sampling.
inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const bool tree = is_tree_model(spec.graph.model);
  if (tree) detail::ensure_tree_dp_validated();

  ExperimentResult result;
  for (auto n : spec.ns) {
    std::vector<detail::Accumulator> acc(spec.algos.size());
    for (std::size_t sample = 0; sample < spec.samples; ++sample) {
      auto gen = spec.graph;
      gen.n = n;
      gen.seed = sample_seed(spec.seed, n, sample);
      try {
        const Graph g = generate(gen);
        std::optional<std::size_t> optimum;
        if (tree) optimum = tree_dp_optimum(g).optimum_weight;
        else if (n <= spec.oracle_cap) optimum = brute_force_optimum(g, spec.oracle_cap).optimum_weight;

        const Profile zeros(n, 0);
        for (std::size_t a = 0; a < spec.algos.size(); ++a) {
          const auto& algo = spec.algos[a];
          auto& slot = acc[a];
          Profile out;
          switch (algo.kind) {
            case BenchAlgo::GAA:
            case BenchAlgo::GSA:
            case BenchAlgo::EGSA:
            case BenchAlgo::GSA_RESTARTS: {
              RunReport rep;
              if (algo.kind == BenchAlgo::GSA_RESTARTS) {
                rep = run_gsa_restarts(g, algo.restarts, derive_seed(gen.seed, {0x5EED}), spec.cfg).best;
              } else {
                const auto kind = algo.kind == BenchAlgo::GAA ? Algorithm::GAA
                                  : algo.kind == BenchAlgo::GSA ? Algorithm::GSA
                                                                : Algorithm::EGSA;
                rep = run(kind, g, zeros, spec.cfg);
              }
              out = rep.final_profile;
              slot.has_rounds = true;
              slot.rounds_total += ExactRational(static_cast<long long>(rep.rounds_total));
              slot.rounds_effective += ExactRational(static_cast<long long>(rep.rounds_effective));
              if (spec.verify) detail::verify_game_output(g, out, spec.cfg);
              break;
            }
            case BenchAlgo::GREEDY:
              out = greedy_rdf(g);
              break;
            case BenchAlgo::TREEDP:
              out = tree_dp_optimum(g).witness;
              break;
          }
          if (spec.verify && !is_rdf(g, out)) throw InternalError(algo.name() + " output is not an RDF");
          const auto w = weight(out);
          slot.weights.push_back(w);
          slot.weight += ExactRational(static_cast<long long>(w));
          if (optimum) slot.omega += metric_omega(w, *optimum);
          else slot.has_omega = false;
        }
      } catch (const Error& e) {
        throw ExperimentError(std::string(to_string(spec.graph.model)) + " n=" + std::to_string(n) +
                              " sample=" + std::to_string(sample) + " seed=" + std::to_string(gen.seed) + ": " +
                              e.what());
      }
    }

    const ExactRational count(static_cast<long long>(spec.samples));
    std::optional<ExactRational> gaa_rounds;
    for (std::size_t a = 0; a < spec.algos.size(); ++a)
      if (spec.algos[a].kind == BenchAlgo::GAA) gaa_rounds = acc[a].rounds_total / count;

    for (std::size_t a = 0; a < spec.algos.size(); ++a) {
      auto& slot = acc[a];
      ResultRow row;
      row.model = spec.graph.model;
      row.n = n;
      row.algorithm = spec.algos[a].name();
      row.samples = spec.samples;
      row.seed = spec.seed;
      row.mean_weight = slot.weight / count;
      if (slot.has_rounds) {
        row.mean_rounds_total = slot.rounds_total / count;
        row.mean_rounds_effective = slot.rounds_effective / count;
      }
      if (spec.algos[a].kind == BenchAlgo::GSA && gaa_rounds) {
        row.eta = metric_eta(*row.mean_rounds_total, *gaa_rounds, n);
      }
      if (slot.has_omega) row.omega = slot.omega / count;
      result.rows.push_back(std::move(row));
      result.weights.push_back(std::move(slot.weights));
    }
  }
  return result;
}

inline constexpr std::string_view kCsvHeader =
    "model,n,algorithm,samples,mean_weight,mean_rounds_total,mean_rounds_effective,eta,omega,seed";

inline std::string emit_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  auto cell = [](const std::optional<ExactRational>& v) { return v ? format_fixed(*v) : std::string(); };
  for (const auto& r : result.rows) {
    out << to_string(r.model) << ',' << r.n << ',' << r.algorithm << ',' << r.samples << ','
        << format_fixed(r.mean_weight) << ',' << cell(r.mean_rounds_total) << ','
        << cell(r.mean_rounds_effective) << ',' << cell(r.eta) << ',' << cell(r.omega) << ',' << r.seed << '\n';
  }
  return out.str();
}

inline std::string emit_json(const ExperimentResult& result) {
  using nlohmann::json;
  auto num = [](const std::optional<ExactRational>& v) -> json {
    if (!v) return nullptr;
    return json::parse(format_fixed(*v));
  };
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"model", std::string(to_string(r.model))},
                    {"n", r.n},
                    {"algorithm", r.algorithm},
                    {"samples", r.samples},
                    {"mean_weight", num(r.mean_weight)},
                    {"mean_rounds_total", num(r.mean_rounds_total)},
                    {"mean_rounds_effective", num(r.mean_rounds_effective)},
                    {"eta", num(r.eta)},
                    {"omega", num(r.omega)},
                    {"seed", r.seed}});
  }
  json doc = {{"rows", rows},
              {"meta", {{"eta_rounds", "rounds_total (includes the terminal no-change round)"}}}};
  return doc.dump(2) + "\n";
}

enum class EmitFormat { CSV, JSON };

inline std::string emit(const ExperimentResult& result, EmitFormat format) {
  return format == EmitFormat::CSV ? emit_csv(result) : emit_json(result);
}

}  // namespace romdom
