// geopricer command-line tool. Exit codes: 0 success, 1 input error,
// 2 size cap exceeded, 3 internal assertion failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "geopricer/approx.hpp"
#include "geopricer/errors.hpp"
#include "geopricer/harness.hpp"
#include "geopricer/io.hpp"
#include "geopricer/poset.hpp"
#include "geopricer/qptas.hpp"
#include "geopricer/reductions.hpp"
#include "geopricer/subroutines.hpp"

using namespace geopricer;

namespace {

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out, j);
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

Json trace_to_json(const ApproxTrace& t) {
  Json children = Json::array();
  for (const ApproxTrace& c : t.children) children.push_back(trace_to_json(c));
  Json j{{"kind", t.kind},           {"path", t.path},
         {"dimension", t.dimension}, {"consumers", t.consumers},
         {"items", t.items},         {"children", children}};
  if (t.epsilon != 0) j["epsilon"] = t.epsilon.str();
  if (t.leaf) {
    j["method"] = t.method;
    j["skipped"] = t.skipped;
    j["sub_revenue"] = t.sub_revenue.str();
    j["extended_revenue"] = t.extended_revenue.str();
  }
  return j;
}

struct Common {
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric multi-attribute pricing solvers"};
  app.require_subcommand(1);

  // generate
  GeneratorSpec gen;
  std::string gen_kind = "random";
  std::string gen_model = "uudp-min";
  std::string gen_budgets = "1,2,3";
  std::string gen_weights;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a random instance");
  generate_cmd->add_option("--kind", gen_kind, "random|chain|antichain|grid|clustered");
  generate_cmd->add_option("--n", gen.n, "Number of items");
  generate_cmd->add_option("--m", gen.m, "Number of consumers");
  generate_cmd->add_option("--d", gen.d, "Dimension");
  generate_cmd->add_option("--model", gen_model, "uudp-min|smp");
  generate_cmd->add_option("--budgets", gen_budgets, "Budget support, comma separated");
  generate_cmd->add_option("--weights", gen_weights, "Budget weights, comma separated");
  generate_cmd->add_option("--coord-max", gen.coord_max, "Largest coordinate");
  generate_cmd->add_option("--seed", gen.seed, "Seed");
  generate_cmd->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // solve and the per-algorithm shortcuts
  Common solve;
  std::string algo = "approx";
  std::string epsilon = "1";
  int trials = 64;
  std::string trace_out;
  std::string lattice;
  auto* solve_cmd = app.add_subcommand("solve", "Run a named algorithm");
  solve_cmd->add_option("--algo", algo, "approx|qptas|smp-dp|oracle|balcan-blum|one-dim")
      ->check(CLI::IsMember(kAlgorithms));
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum");
  oracle_cmd->add_option("--lattice", lattice, "Price lattice for single-minded instances, e.g. 0,1,2");
  auto* approx_cmd = app.add_subcommand("approx", "Recursive approximation");
  approx_cmd->add_option("--trace", trace_out, "Write the recursion trace here");
  auto* qptas_cmd = app.add_subcommand("qptas", "2-D ladder dynamic program");
  auto* smp_cmd = app.add_subcommand("smp-dp", "2-D single-minded special case, budgets in {1,2}");
  for (CLI::App* cmd : {solve_cmd, oracle_cmd, approx_cmd, qptas_cmd, smp_cmd}) {
    cmd->add_option("--in", solve.in, "Instance JSON")->required();
    cmd->add_option("--out", solve.out, "Output file (stdout when omitted)");
  }
  for (CLI::App* cmd : {solve_cmd, approx_cmd}) {
    cmd->add_option("--seed", solve.seed, "Seed");
    cmd->add_option("--trials", trials, "Balcan-Blum trials");
  }
  for (CLI::App* cmd : {solve_cmd, qptas_cmd}) cmd->add_option("--epsilon", epsilon, "Ladder epsilon, p/q");

  // decompose
  Common dec;
  std::string dec_eps = "1";
  auto* decompose_cmd = app.add_subcommand("decompose", "Chain/antichain decomposition of the items");
  decompose_cmd->add_option("--in", dec.in, "Instance JSON")->required();
  decompose_cmd->add_option("--epsilon", dec_eps, "Epsilon in (0, 1]");
  decompose_cmd->add_option("--out", dec.out, "Output file");

  // reduce
  Common red;
  std::string kind;
  std::string corr_out;
  int bound = -1;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the geometric image of a combinatorial instance");
  reduce_cmd->add_option("--kind", kind, "highway|gvp4|vc|universal|perm")
      ->required()
      ->check(CLI::IsMember({"highway", "gvp4", "vc", "universal", "perm"}));
  reduce_cmd->add_option("--in", red.in, "Source JSON")->required();
  reduce_cmd->add_option("--seed", red.seed, "Seed (perm)");
  reduce_cmd->add_option("--bound", bound, "Largest set size B (perm; defaults to the observed maximum)");
  reduce_cmd->add_option("--out", red.out, "Instance output file");
  reduce_cmd->add_option("--correspondence", corr_out, "Correspondence output file");

  // bench
  std::string bench_config;
  std::string csv_out;
  std::string json_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment config");
  bench_cmd->add_option("--config", bench_config, "Experiment JSON")->required();
  bench_cmd->add_option("--csv", csv_out, "CSV report (stdout when omitted)");
  bench_cmd->add_option("--json", json_out, "JSON report");

  // verify
  std::string v_in;
  std::string v_target;
  std::string v_dec;
  std::string v_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check an embedding, decomposition or solution");
  verify_cmd->add_option("--in", v_in, "Source instance")->required();
  verify_cmd->add_option("--target", v_target, "Index-aligned image instance");
  verify_cmd->add_option("--decomposition", v_dec, "Decomposition JSON");
  verify_cmd->add_option("--solution", v_solution, "Solution JSON with prices and revenue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (generate_cmd->parsed()) {
      gen.kind = generator_kind_from_string(gen_kind);
      gen.model = model_from_string(gen_model);
      gen.budget_support.clear();
      std::stringstream budgets(gen_budgets);
      for (std::string tok; std::getline(budgets, tok, ',');) gen.budget_support.push_back(Rational::parse(tok));
      gen.budget_weights.assign(gen.budget_support.size(), 1);
      if (!gen_weights.empty()) {
        gen.budget_weights.clear();
        std::stringstream ss(gen_weights);
        for (std::string tok; std::getline(ss, tok, ',');) gen.budget_weights.push_back(std::stoull(tok));
      }
      emit(instance_to_json(generate(gen)), gen_out);
      return 0;
    }

    if (solve_cmd->parsed() || oracle_cmd->parsed() || approx_cmd->parsed() || qptas_cmd->parsed() ||
        smp_cmd->parsed()) {
      const Instance inst = instance_from_json(read_json_file(solve.in));
      AlgorithmParams params;
      params.epsilon = Rational::parse(epsilon);
      params.trials = trials;
      Solution sol;
      if (approx_cmd->parsed() || (solve_cmd->parsed() && algo == "approx" && !trace_out.empty())) {
        ApproxConfig cfg;
        cfg.seed = solve.seed;
        cfg.balcan_blum_trials = trials;
        cfg.trace = !trace_out.empty();
        ApproxResult r = inst.model() == Model::UudpMin ? uudp_min_approx(inst, cfg) : smp_approx(inst, cfg);
        if (!trace_out.empty()) write_json_file(trace_out, trace_to_json(r.trace));
        sol = std::move(r.solution);
      } else if (oracle_cmd->parsed()) {
        sol = !lattice.empty() && inst.model() == Model::Smp ? brute_force_smp(inst, PriceLattice::parse(lattice))
                                                             : run_oracle(inst);
      } else if (qptas_cmd->parsed()) {
        sol = run_algorithm("qptas", inst, 0, params);
      } else if (smp_cmd->parsed()) {
        sol = run_algorithm("smp-dp", inst, 0, params);
      } else {
        sol = run_algorithm(algo, inst, solve.seed, params);
      }
      emit(solution_to_json(sol), solve.out);
      return 0;
    }

    if (decompose_cmd->parsed()) {
      const Instance inst = instance_from_json(read_json_file(dec.in));
      emit(decomposition_to_json(decompose_chains_antichains(inst.items(), Rational::parse(dec_eps))), dec.out);
      return 0;
    }

    if (reduce_cmd->parsed()) {
      const Json src = read_json_file(red.in);
      Reduction result{Instance(1, {}, {}, Model::UudpMin), {}};
      Json extra = Json::object();
      if (kind == "highway") {
        result = highway_to_2smp(highway_from_json(src));
      } else if (kind == "gvp4") {
        result = bipartite_gvp_to_4smp(bipartite_from_json(src));
      } else if (kind == "vc") {
        const SetSystemInstance s = vertex_cover_to_pricing(graph_from_json(src));
        result = universal_embedding(s);
        extra["set_system"] = set_system_to_json(s);
      } else if (kind == "universal") {
        result = universal_embedding(set_system_from_json(src));
      } else {
        const SetSystemInstance s = set_system_from_json(src);
        int b = bound;
        if (b < 0) {
          b = 0;
          for (const auto& c : s.consumers) b = std::max(b, static_cast<int>(c.set.size()));
        }
        Rng rng(red.seed);
        PermutationEmbedding p = random_permutation_embedding(s, b, rng);
        extra["dimension"] = p.dimension;
        extra["sets_preserved"] = preserves_sets(s, p.reduction.instance);
        result = std::move(p.reduction);
      }
      Json corr = correspondence_to_json(result.correspondence);
      corr.update(extra);
      emit(instance_to_json(result.instance), red.out);
      if (!corr_out.empty()) {
        write_json_file(corr_out, corr);
      } else {
        std::cerr << corr.dump() << "\n";
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      const ExperimentReport report = run_experiment(experiment_config_from_json(read_json_file(bench_config)));
      if (csv_out.empty()) {
        std::cout << report_to_csv(report);
      } else {
        write_text(csv_out, report_to_csv(report));
      }
      if (!json_out.empty()) write_json_file(json_out, report_to_json(report));
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Instance inst = instance_from_json(read_json_file(v_in));
      Json result = Json::object();
      bool ok = true;
      if (!v_target.empty()) {
        const Instance target = instance_from_json(read_json_file(v_target));
        Embedding emb{inst.dimension(), target.dimension(), {}, target.items(), EmbeddingKind::Identity};
        for (const Consumer& c : target.consumers()) emb.consumer_images.push_back(c.point);
        const EmbeddingCheck check = verify_embedding(inst, target, emb);
        result["embedding"] = {{"ok", check.ok}, {"consumer", check.consumer}, {"item", check.item},
                               {"reason", check.reason}};
        ok = ok && check.ok;
      }
      if (!v_dec.empty()) {
        const std::string problem = check_decomposition(inst.items(), decomposition_from_json(read_json_file(v_dec)));
        result["decomposition"] = {{"ok", problem.empty()}, {"reason", problem}};
        ok = ok && problem.empty();
      }
      if (!v_solution.empty()) {
        const Json sj = read_json_file(v_solution);
        const Rational evaluated = evaluate_revenue(inst, prices_from_json(sj)).total;
        const bool match = !sj.contains("revenue") || rational_from_json(sj.at("revenue")) == evaluated;
        result["solution"] = {{"ok", match}, {"evaluated", evaluated.str()}};
        ok = ok && match;
      }
      result["ok"] = ok;
      std::cout << result.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const SizeError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
