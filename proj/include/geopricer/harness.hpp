#ifndef GEOPRICER_HARNESS_HPP
#define GEOPRICER_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geopricer/core.hpp"
#include "geopricer/exact.hpp"
#include "geopricer/io.hpp"
#include "geopricer/poset.hpp"

namespace geopricer {

enum class GeneratorKind { Random, Chain, Antichain, Grid, Clustered };

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  int n = 5;
  int m = 6;
  int d = 2;
  Model model = Model::UudpMin;
  std::vector<Rational> budget_support{Rational(1), Rational(2), Rational(3)};
  std::vector<std::uint64_t> budget_weights{1, 1, 1};
  std::int64_t coord_max = 10;  ///< coordinates are integers in [0, coord_max]
  std::uint64_t seed = 0;
};

/**
 * Deterministic instance generator.
 *
 * random: uniform integer coordinates. chain: items along a monotone walk.
 * antichain: rejection sampling for pairwise incomparable items, falling
 * back to an anti-diagonal in the first two coordinates. grid: each item
 * coordinate is a random permutation of 1..n. clustered: points scattered
 * around a few centers. Budgets are drawn from the weighted support.
 */
Instance generate(const GeneratorSpec& spec);

Json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const Json& j);

struct AlgorithmParams {
  Rational epsilon = 1;  ///< ladder epsilon for qptas
  int trials = 64;       ///< Balcan-Blum trials
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

inline const std::vector<std::string> kAlgorithms{"approx", "qptas", "smp-dp", "oracle", "balcan-blum", "one-dim"};

/// Runs one named algorithm. Seeded algorithms draw only from `seed`.
Solution run_algorithm(const std::string& algorithm, const Instance& inst, std::uint64_t seed,
                       const AlgorithmParams& params = {});

/// Exact optimum: full brute force for min-buying, the default lattice for
/// single-minded instances.
Solution run_oracle(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

struct ExperimentConfig {
  GeneratorSpec generator;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms{"approx"};
  bool oracle = true;
  AlgorithmParams params;
};

/// {"generator": {...}, "seeds": [..] | "seed_start"+"seed_count",
///  "algorithms": [..], "oracle": bool, "epsilon": rat, "trials": int}
ExperimentConfig experiment_config_from_json(const Json& j);

struct ReportRow {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int d = 0;
  Model model = Model::UudpMin;
  std::string algorithm;
  std::optional<Rational> revenue;
  std::optional<Rational> oracle;
  double wall_ms = 0;
  std::string error;  ///< empty on success

  /// oracle / revenue as "p/q"; "n/a" without an oracle or on error; "inf"
  /// when the oracle earns something and the algorithm nothing.
  std::string ratio() const;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;  ///< ordered by seed, then algorithm order
  double mean_ratio = 0;
  double median_ratio = 0;
  double max_ratio = 0;
  int ratio_count = 0;  ///< rows with a finite ratio
};

ExperimentReport run_experiment(const ExperimentConfig& config);

inline constexpr const char* kReportColumns =
    "seed,n,m,d,model,algorithm,revenue,oracle,ratio,wall_ms,error";

std::string report_to_csv(const ExperimentReport& report);
Json report_to_json(const ExperimentReport& report);

Json solution_to_json(const Solution& sol);
Json decomposition_to_json(const ChainAntichainDecomposition& dec);
ChainAntichainDecomposition decomposition_from_json(const Json& j);

/// Empty string when dec partitions the items into chains and antichains of
/// the dominance order; otherwise a description of the first problem.
std::string check_decomposition(std::span<const Point> items, const ChainAntichainDecomposition& dec);

}  // namespace geopricer

#endif  // GEOPRICER_HARNESS_HPP
