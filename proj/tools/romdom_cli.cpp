// romdom: command-line front end for the solver library.
//
//   romdom solve <graph> --algo egsa --init 02020
//   romdom verify <graph> <profile>
//   romdom oracle <graph>
//   romdom baseline <graph> --algo treedp
//   romdom bench --model rt --n 20,50 --samples 100 --algos gsa,egsa,treedp --seed 42

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "romdom/romdom.hpp"

using namespace romdom;

namespace {

struct LambdaFlags {
  std::optional<long long> lambda1, lambda2;

  GameConfig config() const {
    return GameConfig(lambda1.value_or(GameConfig::kDefaultLambda1), lambda2.value_or(GameConfig::kDefaultLambda2));
  }
};

void add_lambda_flags(CLI::App* cmd, LambdaFlags& flags) {
  cmd->add_option("--lambda1", flags.lambda1, "lambda1 (default 17)");
  cmd->add_option("--lambda2", flags.lambda2, "lambda2 (default 24)");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ParameterError("failed writing '" + path + "'");
}

int cmd_solve(const std::string& graph_path, const std::string& algo_name, const std::string& init,
              std::size_t restarts, std::uint64_t seed, const LambdaFlags& lambdas, const std::string& trace_path) {
  const auto g = read_graph_file(graph_path);
  const auto cfg = lambdas.config();
  const auto algo = parse_algorithm(algo_name);

  RunReport report;
  if (restarts > 0) {
    if (algo != Algorithm::GSA) throw ParameterError("--restarts is only supported with --algo gsa");
    if (init != "zeros") throw ParameterError("--restarts always starts run 0 from zeros; drop --init");
    auto res = run_gsa_restarts(g, restarts, seed, cfg);
    std::cerr << "best of " << res.weights.size() << " runs: run " << res.best_run << '\n';
    report = std::move(res.best);
  } else {
    Profile c0;
    if (init == "zeros") {
      c0 = Profile(g.size(), 0);
    } else if (init == "random") {
      SplitMix64 rng(seed);
      c0 = random_profile(g.size(), rng);
    } else {
      c0 = Profile::parse(init);
    }
    report = run(algo, g, c0, cfg);
  }

  const auto doc = to_json(report).dump(2) + "\n";
  if (!trace_path.empty()) write_file(trace_path, doc);
  std::cout << doc;
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& profile_text, const LambdaFlags& lambdas) {
  const auto g = read_graph_file(graph_path);
  const auto c = Profile::parse(profile_text);
  check_profile(g, c);
  const auto cfg = lambdas.config();

  const auto label = classify(g, c, cfg);
  std::cout << "profile " << c.str() << " weight " << weight(c) << '\n';
  std::cout << "classes";
  if (label.flags == 0) std::cout << " none";
  for (const auto& name : label.names()) std::cout << ' ' << name;
  std::cout << '\n';
  if (g.size() > kOracleCap) std::cout << "G-RDF not checked (n > " << kOracleCap << ")\n";
  if (g.size() > kEnumerationCap) std::cout << "PARETO not checked (n > " << kEnumerationCap << ")\n";
  for (const auto& bad : find_bad_substructures(g, c)) {
    std::cout << "bad substructure " << static_cast<char>(bad.pattern) << " at vertex " << bad.center << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& graph_path) {
  const auto g = read_graph_file(graph_path);
  const auto res = brute_force_optimum(g);
  std::cout << "optimum " << res.optimum_weight << " witness " << res.witness.str() << '\n';
  return 0;
}

int cmd_baseline(const std::string& graph_path, const std::string& algo) {
  const auto g = read_graph_file(graph_path);
  Profile c;
  if (algo == "greedy") c = greedy_rdf(g);
  else if (algo == "treedp") c = tree_dp_optimum(g).witness;
  else throw ParameterError("unknown baseline '" + algo + "' (expected greedy or treedp)");
  std::cout << "weight " << weight(c) << " profile " << c.str() << '\n';
  return 0;
}

struct BenchFlags {
  std::string model = "ba";
  std::vector<std::size_t> ns;
  std::size_t samples = 100;
  std::vector<std::string> algos;
  std::uint64_t seed = 42;
  std::size_t restarts = 0;
  std::size_t m = 5;
  double p = 0.2;
  std::string format = "csv";
  bool verify = true;
  std::string out;
  LambdaFlags lambdas;
};

int cmd_bench(const BenchFlags& f) {
  ExperimentSpec spec;
  spec.graph.model = parse_model(f.model);
  spec.graph.m = f.m;
  spec.graph.p = f.p;
  spec.ns = f.ns;
  spec.samples = f.samples;
  spec.seed = f.seed;
  spec.cfg = f.lambdas.config();
  spec.verify = f.verify;
  for (const auto& a : f.algos) spec.algos.push_back(AlgoSpec::parse(a, f.restarts));

  EmitFormat format;
  if (f.format == "csv") format = EmitFormat::CSV;
  else if (f.format == "json") format = EmitFormat::JSON;
  else throw ParameterError("unknown format '" + f.format + "' (expected csv or json)");

  const auto text = emit(run_experiment(spec), format);
  if (f.out.empty()) std::cout << text;
  else write_file(f.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roman domination game solvers, verifiers and benchmarks"};
  app.require_subcommand(1);
  int status = 0;

  // solve
  std::string solve_graph, solve_algo, solve_init = "zeros", solve_trace;
  std::size_t solve_restarts = 0;
  std::uint64_t solve_seed = 0;
  LambdaFlags solve_lambdas;
  auto* solve = app.add_subcommand("solve", "run a game dynamic to a Nash equilibrium");
  solve->add_option("graph", solve_graph, "edge-list file")->required();
  solve->add_option("--algo", solve_algo, "gaa, gsa or egsa")->required();
  solve->add_option("--init", solve_init, "start profile: zeros, random or a digit string")->capture_default_str();
  solve->add_option("--restarts", solve_restarts, "GSA only: extra random restarts, keep the lightest");
  solve->add_option("--seed", solve_seed, "seed for --init random and --restarts");
  solve->add_option("--trace", solve_trace, "also write the run report to this JSON file");
  add_lambda_flags(solve, solve_lambdas);
  solve->callback([&] {
    status = cmd_solve(solve_graph, solve_algo, solve_init, solve_restarts, solve_seed, solve_lambdas, solve_trace);
  });

  // verify
  std::string verify_graph, verify_profile;
  LambdaFlags verify_lambdas;
  auto* verify = app.add_subcommand("verify", "classify a profile and list bad substructures");
  verify->add_option("graph", verify_graph, "edge-list file")->required();
  verify->add_option("profile", verify_profile, "profile string, e.g. 01202")->required();
  add_lambda_flags(verify, verify_lambdas);
  verify->callback([&] { status = cmd_verify(verify_graph, verify_profile, verify_lambdas); });

  // oracle
  std::string oracle_graph;
  auto* oracle = app.add_subcommand("oracle", "exact Roman domination number by branch and bound");
  oracle->add_option("graph", oracle_graph, "edge-list file")->required();
  oracle->callback([&] { status = cmd_oracle(oracle_graph); });

  // baseline
  std::string baseline_graph, baseline_algo;
  auto* baseline = app.add_subcommand("baseline", "non-game baselines");
  baseline->add_option("graph", baseline_graph, "edge-list file")->required();
  baseline->add_option("--algo", baseline_algo, "greedy or treedp")->required();
  baseline->callback([&] { status = cmd_baseline(baseline_graph, baseline_algo); });

  // bench
  BenchFlags bf;
  auto* bench = app.add_subcommand("bench", "sampled-graph sweep, CSV or JSON to stdout");
  bench->add_option("--model", bf.model, "ba, er, rt or bat")->capture_default_str();
  bench->add_option("--n", bf.ns, "comma-separated vertex counts")->delimiter(',')->required();
  bench->add_option("--samples", bf.samples, "graphs per n")->capture_default_str();
  bench->add_option("--algos", bf.algos, "gaa,gsa,egsa,greedy,treedp,gsa_restarts(k)")->delimiter(',')->required();
  bench->add_option("--seed", bf.seed, "base seed")->capture_default_str();
  bench->add_option("--restarts", bf.restarts, "k for a bare gsa_restarts entry");
  bench->add_option("--m", bf.m, "BA attachment count")->capture_default_str();
  bench->add_option("--p", bf.p, "ER edge probability")->capture_default_str();
  bench->add_option("--format", bf.format, "csv or json")->capture_default_str();
  bench->add_flag("--verify,!--no-verify", bf.verify, "check every solver output (on by default)");
  bench->add_option("--out", bf.out, "write to this file instead of stdout");
  add_lambda_flags(bench, bf.lambdas);
  bench->callback([&] { status = cmd_bench(bf); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const romdom::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
