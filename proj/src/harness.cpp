#include "geopricer/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "geopricer/approx.hpp"
#include "geopricer/errors.hpp"
#include "geopricer/qptas.hpp"
#include "geopricer/subroutines.hpp"

namespace geopricer {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Random: return "random";
    case GeneratorKind::Chain: return "chain";
    case GeneratorKind::Antichain: return "antichain";
    case GeneratorKind::Grid: return "grid";
    case GeneratorKind::Clustered: return "clustered";
  }
  return "random";
}

GeneratorKind generator_kind_from_string(const std::string& text) {
  for (GeneratorKind k : {GeneratorKind::Random, GeneratorKind::Chain, GeneratorKind::Antichain, GeneratorKind::Grid,
                          GeneratorKind::Clustered}) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown generator kind '" + text + "'");
}

namespace {

Rational draw_budget(const GeneratorSpec& spec, Rng& rng) {
  const std::uint64_t total = std::accumulate(spec.budget_weights.begin(), spec.budget_weights.end(), std::uint64_t{0});
  std::uint64_t r = rng.below(total);
  for (std::size_t k = 0; k < spec.budget_weights.size(); ++k) {
    if (r < spec.budget_weights[k]) return spec.budget_support[k];
    r -= spec.budget_weights[k];
  }
  return spec.budget_support.back();
}

Rational coord(Rng& rng, std::int64_t hi) { return Rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi) + 1))); }

Point random_point(Rng& rng, int d, std::int64_t hi) {
  std::vector<Rational> c;
  for (int k = 0; k < d; ++k) c.push_back(coord(rng, hi));
  return Point(std::move(c));
}

bool strictly_incomparable(const std::vector<Point>& pts) {
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (dominates(pts[a], pts[b]) || dominates(pts[b], pts[a])) return false;
    }
  }
  return true;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 0 || spec.m < 0) throw InputError("item and consumer counts must be non-negative");
  if (spec.d < 1) throw InputError("dimension must be at least 1");
  if (spec.coord_max < 0) throw InputError("coordinate range must be non-negative");
  if (spec.budget_support.empty() || spec.budget_support.size() != spec.budget_weights.size()) {
    throw InputError("budget support and weights must be nonempty and of equal length");
  }
  for (std::uint64_t w : spec.budget_weights) {
    if (w == 0) throw InputError("budget weights must be positive");
  }
  for (const Rational& b : spec.budget_support) {
    if (b < 0) throw InputError("budgets must be non-negative");
  }
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  validate(spec);
  const Rng root(spec.seed);
  Rng item_rng = root.derive({1});
  Rng consumer_rng = root.derive({2});
  Rng budget_rng = root.derive({3});
  const int n = spec.n;
  const int d = spec.d;
  std::vector<Point> items;
  std::vector<Point> consumer_points;
  std::int64_t consumer_hi = spec.coord_max;

  switch (spec.kind) {
    case GeneratorKind::Random:
      for (int i = 0; i < n; ++i) items.push_back(random_point(item_rng, d, spec.coord_max));
      break;
    case GeneratorKind::Chain: {
      Point cur = random_point(item_rng, d, spec.coord_max / 2);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k) cur[static_cast<std::size_t>(k)] += coord(item_rng, 2);
        items.push_back(cur);
        for (int k = 0; k < d; ++k) consumer_hi = std::max(consumer_hi, cur[static_cast<std::size_t>(k)].num());
      }
      break;
    }
    case GeneratorKind::Antichain: {
      if (d == 1 && n > 1) throw InputError("a one-dimensional antichain has at most one item");
      bool found = false;
      for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        items.clear();
        for (int i = 0; i < n; ++i) items.push_back(random_point(item_rng, d, spec.coord_max));
        found = strictly_incomparable(items);
      }
      if (!found) {
        items.clear();
        for (int i = 0; i < n; ++i) {
          Point p = random_point(item_rng, d, spec.coord_max);
          p[0] = Rational(i);
          p[1] = Rational(n - 1 - i);
          items.push_back(std::move(p));
        }
        consumer_hi = std::max<std::int64_t>(consumer_hi, n);
      }
      break;
    }
    case GeneratorKind::Grid: {
      items.assign(static_cast<std::size_t>(n), Point(std::vector<Rational>(static_cast<std::size_t>(d))));
      for (int k = 0; k < d; ++k) {
        const std::vector<int> pi = item_rng.permutation(n);
        for (int i = 0; i < n; ++i) items[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Rational(pi[static_cast<std::size_t>(i)] + 1);
      }
      consumer_hi = n;
      break;
    }
    case GeneratorKind::Clustered: {
      const int clusters = std::max(1, n / 3);
      std::vector<Point> centers;
      for (int k = 0; k < clusters; ++k) centers.push_back(random_point(item_rng, d, spec.coord_max));
      for (int i = 0; i < n; ++i) {
        Point p = centers[static_cast<std::size_t>(item_rng.below(static_cast<std::uint64_t>(clusters)))];
        for (int k = 0; k < d; ++k) p[static_cast<std::size_t>(k)] += coord(item_rng, 2);
        items.push_back(std::move(p));
      }
      for (int c = 0; c < spec.m; ++c) {
        Point p = centers[static_cast<std::size_t>(consumer_rng.below(static_cast<std::uint64_t>(clusters)))];
        for (int k = 0; k < d; ++k) {
          const Rational shift = coord(consumer_rng, 2);
          p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] >= shift ? p[static_cast<std::size_t>(k)] - shift : Rational(0);
        }
        consumer_points.push_back(std::move(p));
      }
      break;
    }
  }
  if (consumer_points.empty()) {
    for (int c = 0; c < spec.m; ++c) consumer_points.push_back(random_point(consumer_rng, d, consumer_hi));
  }
  std::vector<Consumer> consumers;
  for (Point& p : consumer_points) consumers.push_back({std::move(p), draw_budget(spec, budget_rng)});
  return Instance(d, std::move(items), std::move(consumers), spec.model);
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
  Json support = Json::array();
  for (const Rational& b : spec.budget_support) support.push_back(b.str());
  return {{"kind", to_string(spec.kind)}, {"n", spec.n}, {"m", spec.m}, {"d", spec.d},
          {"model", to_string(spec.model)}, {"budgets", support}, {"weights", spec.budget_weights},
          {"coord_max", spec.coord_max}, {"seed", spec.seed}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  try {
    GeneratorSpec spec;
    if (j.contains("kind")) spec.kind = generator_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("n")) spec.n = j.at("n").get<int>();
    if (j.contains("m")) spec.m = j.at("m").get<int>();
    if (j.contains("d")) spec.d = j.at("d").get<int>();
    if (j.contains("model")) spec.model = model_from_string(j.at("model").get<std::string>());
    if (j.contains("budgets")) {
      spec.budget_support.clear();
      for (const Json& b : j.at("budgets")) spec.budget_support.push_back(rational_from_json(b));
      spec.budget_weights.assign(spec.budget_support.size(), 1);
    }
    if (j.contains("weights")) spec.budget_weights = j.at("weights").get<std::vector<std::uint64_t>>();
    if (j.contains("coord_max")) spec.coord_max = j.at("coord_max").get<std::int64_t>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    validate(spec);
    return spec;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed generator spec: ") + e.what());
  }
}

Solution run_oracle(const Instance& inst, std::uint64_t cap) {
  if (inst.model() == Model::UudpMin) return brute_force_uudp(inst, cap);
  return brute_force_smp(inst, default_smp_lattice(inst), cap);
}

Solution run_algorithm(const std::string& algorithm, const Instance& inst, std::uint64_t seed,
                       const AlgorithmParams& params) {
  if (algorithm == "approx") {
    ApproxConfig cfg;
    cfg.seed = seed;
    cfg.balcan_blum_trials = params.trials;
    cfg.trace = false;
    cfg.enumeration_cap = params.enumeration_cap;
    return inst.model() == Model::UudpMin ? uudp_min_approx(inst, cfg).solution : smp_approx(inst, cfg).solution;
  }
  if (algorithm == "qptas") return qptas_uudp2(inst, params.epsilon);
  if (algorithm == "smp-dp") return smp_special_case_dp(inst);
  if (algorithm == "oracle") return run_oracle(inst, params.enumeration_cap);
  if (algorithm == "balcan-blum") return balcan_blum_approx(inst, params.trials, Rng(seed));
  if (algorithm == "one-dim") return solve_one_dim_uudp(inst);
  throw InputError("unknown algorithm '" + algorithm + "'");
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  try {
    ExperimentConfig cfg;
    if (j.contains("generator")) cfg.generator = generator_spec_from_json(j.at("generator"));
    if (j.contains("seeds")) {
      cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
      const auto start = j.value("seed_start", std::uint64_t{0});
      const auto count = j.value("seed_count", std::uint64_t{0});
      for (std::uint64_t s = 0; s < count; ++s) cfg.seeds.push_back(start + s);
    }
    if (j.contains("algorithms")) cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    for (const std::string& a : cfg.algorithms) {
      if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
        throw InputError("unknown algorithm '" + a + "'");
      }
    }
    cfg.oracle = j.value("oracle", true);
    if (j.contains("epsilon")) cfg.params.epsilon = rational_from_json(j.at("epsilon"));
    if (j.contains("trials")) cfg.params.trials = j.at("trials").get<int>();
    if (j.contains("enumeration_cap")) cfg.params.enumeration_cap = j.at("enumeration_cap").get<std::uint64_t>();
    return cfg;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed experiment config: ") + e.what());
  }
}

std::string ReportRow::ratio() const {
  if (!error.empty() || !revenue || !oracle) return "n/a";
  if (*revenue == 0) return *oracle == 0 ? "1" : "inf";
  return (*oracle / *revenue).str();
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  using Clock = std::chrono::steady_clock;
  ExperimentReport report;
  std::vector<std::uint64_t> seeds = config.seeds;
  std::stable_sort(seeds.begin(), seeds.end());
  for (std::uint64_t seed : seeds) {
    GeneratorSpec spec = config.generator;
    spec.seed = seed;
    const Instance inst = generate(spec);
    std::optional<Rational> oracle;
    if (config.oracle) {
      try {
        oracle = run_oracle(inst, config.params.enumeration_cap).revenue;
      } catch (const SizeError&) {
        // Too large for the oracle; the ratio column reads n/a.
      }
    }
    for (const std::string& algo : config.algorithms) {
      ReportRow row;
      row.seed = seed;
      row.n = inst.num_items();
      row.m = inst.num_consumers();
      row.d = inst.dimension();
      row.model = inst.model();
      row.algorithm = algo;
      row.oracle = oracle;
      const auto start = Clock::now();
      try {
        row.revenue = run_algorithm(algo, inst, seed, config.params).revenue;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      report.rows.push_back(std::move(row));
    }
  }

  std::vector<double> ratios;
  for (const ReportRow& row : report.rows) {
    if (row.error.empty() && row.revenue && row.oracle && *row.revenue > 0) {
      ratios.push_back((*row.oracle / *row.revenue).to_double());
    } else if (row.error.empty() && row.revenue && row.oracle && *row.oracle == 0) {
      ratios.push_back(1.0);
    }
  }
  report.ratio_count = static_cast<int>(ratios.size());
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    report.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
    const std::size_t mid = ratios.size() / 2;
    report.median_ratio = ratios.size() % 2 == 1 ? ratios[mid] : (ratios[mid - 1] + ratios[mid]) / 2;
    report.max_ratio = ratios.back();
  }
  return report;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : "n/a"; }

}  // namespace

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kReportColumns << "\n";
  for (const ReportRow& row : report.rows) {
    out << row.seed << ',' << row.n << ',' << row.m << ',' << row.d << ',' << to_string(row.model) << ','
        << row.algorithm << ',' << opt_str(row.revenue) << ',' << opt_str(row.oracle) << ',' << row.ratio() << ','
        << row.wall_ms << ',' << csv_escape(row.error) << "\n";
  }
  return out.str();
}

Json report_to_json(const ExperimentReport& report) {
  Json rows = Json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"seed", row.seed}, {"n", row.n}, {"m", row.m}, {"d", row.d}, {"model", to_string(row.model)},
                    {"algorithm", row.algorithm}, {"revenue", opt_str(row.revenue)}, {"oracle", opt_str(row.oracle)},
                    {"ratio", row.ratio()}, {"wall_ms", row.wall_ms}, {"error", row.error}});
  }
  return {{"rows", rows},
          {"aggregates",
           {{"mean_ratio", report.mean_ratio},
            {"median_ratio", report.median_ratio},
            {"max_ratio", report.max_ratio},
            {"ratio_count", report.ratio_count}}}};
}

Json solution_to_json(const Solution& sol) {
  Json j = prices_to_json(sol.prices);
  j["method"] = sol.method;
  j["revenue"] = sol.revenue.str();
  return j;
}

Json decomposition_to_json(const ChainAntichainDecomposition& dec) {
  return {{"antichains", dec.antichains}, {"chains", dec.chains}};
}

ChainAntichainDecomposition decomposition_from_json(const Json& j) {
  try {
    return {j.at("antichains").get<std::vector<std::vector<int>>>(), j.at("chains").get<std::vector<std::vector<int>>>()};
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed decomposition: ") + e.what());
  }
}

std::string check_decomposition(std::span<const Point> items, const ChainAntichainDecomposition& dec) {
  const int n = static_cast<int>(items.size());
  const DominanceOrder order(items);
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  auto mark = [&](const std::vector<int>& part) -> std::string {
    for (int i : part) {
      if (i < 0 || i >= n) return "item index " + std::to_string(i) + " out of range";
      if (seen[static_cast<std::size_t>(i)]++) return "item " + std::to_string(i) + " appears twice";
    }
    return "";
  };
  for (const auto& anti : dec.antichains) {
    if (auto e = mark(anti); !e.empty()) return e;
    for (std::size_t a = 0; a < anti.size(); ++a) {
      for (std::size_t b = a + 1; b < anti.size(); ++b) {
        if (order.comparable(anti[a], anti[b])) {
          return "antichain members " + std::to_string(anti[a]) + " and " + std::to_string(anti[b]) + " are comparable";
        }
      }
    }
  }
  for (const auto& chain : dec.chains) {
    if (auto e = mark(chain); !e.empty()) return e;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (!order.less_equal(chain[k], chain[k + 1])) {
        return "chain members " + std::to_string(chain[k]) + " and " + std::to_string(chain[k + 1]) + " are out of order";
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) return "item " + std::to_string(i) + " is not covered";
  }
  return "";
}

}  // namespace geopricer
