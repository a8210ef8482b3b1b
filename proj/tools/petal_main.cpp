// Command-line front end for the petal projection pipeline: single-knot
// analysis (det/gauss/matrix/arcs/reduce), the prime-knot regression
// table, timing runs and colorability surveys.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "petal/coloring.hpp"
#include "petal/exactdet.hpp"
#include "petal/experiments.hpp"
#include "petal/gausscode.hpp"
#include "petal/permutation.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", ms);
  return buf;
}

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", pct);
  return buf;
}

double round1(double pct) { return std::round(pct * 10.0) / 10.0; }

ordered_json bigint_json(const petal::BigInt& v) {
  if (v.fits_ulong_p()) return ordered_json(static_cast<std::uint64_t>(v.get_ui()));
  return ordered_json(v.get_str());
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t draw_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int run_det(const std::string& raw, bool as_json) {
  const petal::PetalPermutation perm = petal::PetalPermutation::parse(raw);
  const petal::ColoringReport report = petal::coloring_report(perm);
  if (as_json) {
    ordered_json j;
    j["permutation"] = perm.heights();
    j["petal_number"] = perm.petal_number();
    j["determinant"] = report.determinant.get_str();
    ordered_json factorization = ordered_json::array();
    for (const petal::PrimePower& f : report.factorization)
      factorization.push_back(ordered_json::array({bigint_json(f.prime), f.exponent}));
    j["factorization"] = factorization;
    ordered_json colorings = ordered_json::array();
    for (const petal::ColoringCount& c : report.per_prime) {
      ordered_json entry;
      entry["p"] = bigint_json(c.prime);
      entry["ord"] = c.ord;
      entry["total"] = c.total.get_str();
      entry["nontrivial"] = c.nontrivial.get_str();
      colorings.push_back(entry);
    }
    j["colorings"] = colorings;
    print_json(j);
    return 0;
  }
  std::cout << "You asked for analysis of the knot with petal permutation " << perm.to_string()
            << "\n";
  std::cout << "The knot's determinant is " << report.determinant.get_str() << ".\n";
  for (const petal::ColoringCount& c : report.per_prime) {
    std::cout << "Since " << c.prime.get_str() << " appears " << c.ord
              << " time(s) in the prime factorization of " << report.determinant.get_str()
              << ", there are " << c.prime.get_str() << "^(" << c.ord << "+1) - "
              << c.prime.get_str() << " = " << c.nontrivial.get_str() << " nontrivial "
              << c.prime.get_str() << "-colorings of the knot.\n";
  }
  std::cout << "These are all nontrivial colorings of the knot, though there are p trivial "
               "colorings for every prime p.\n";
  return 0;
}

int run_gauss(const std::string& raw, bool want_unsigned, bool as_json) {
  std::vector<int> entries;
  if (want_unsigned) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(raw, &used);
      if (used != raw.size()) throw std::invalid_argument(raw);
    } catch (const std::exception&) {
      std::cerr << "error: --unsigned expects a petal number, got '" << raw << "'\n";
      return kExitUsage;
    }
    entries = petal::unsigned_gauss_code(p).entries;
  } else {
    entries = petal::sign_gauss_code(petal::PetalPermutation::parse(raw)).entries;
  }
  if (as_json)
    print_json(ordered_json(entries));
  else
    std::cout << join_ints(entries) << "\n";
  return 0;
}

int run_matrix(const std::string& raw, bool as_json) {
  const petal::PetalPermutation perm = petal::PetalPermutation::parse(raw);
  const petal::ColoringMatrix m = petal::build_coloring_matrix(petal::sign_gauss_code(perm));
  if (as_json) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
      rows.push_back(row);
    }
    print_json(rows);
    return 0;
  }
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) std::cout << ' ';
      std::cout << m.at(i, j);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_arcs(const std::string& raw, bool as_json) {
  const petal::PetalPermutation perm = petal::PetalPermutation::parse(raw);
  const petal::ArcDecomposition dec = petal::split_arcs(petal::sign_gauss_code(perm));
  if (as_json) {
    ordered_json arcs = ordered_json::array();
    for (const std::vector<int>& arc : dec.arcs) arcs.push_back(arc);
    print_json(arcs);
    return 0;
  }
  for (const std::vector<int>& arc : dec.arcs) std::cout << join_ints(arc) << "\n";
  return 0;
}

int run_reduce(const std::string& raw, bool as_json) {
  const petal::PetalPermutation reduced =
      petal::canonical_rotation(petal::reduce_fully(petal::PetalPermutation::parse(raw)));
  if (as_json)
    print_json(ordered_json(reduced.heights()));
  else
    std::cout << reduced.to_string() << "\n";
  return 0;
}

int run_regress(const std::string& fixtures_path, bool as_json) {
  const std::vector<petal::KnotFixture> fixtures = petal::load_fixtures(fixtures_path);
  const std::vector<petal::RegressionRow> rows = petal::regression_suite(fixtures);
  std::size_t passed = 0;
  for (const petal::RegressionRow& row : rows) passed += row.pass ? 1 : 0;

  if (as_json) {
    ordered_json j;
    ordered_json out_rows = ordered_json::array();
    for (const petal::RegressionRow& row : rows) {
      ordered_json r;
      r["knot"] = row.fixture.name;
      r["petal_number"] = row.fixture.petal_number;
      r["permutation"] = row.fixture.permutation;
      r["expected"] = row.fixture.expected_determinant;
      r["computed"] = row.computed.get_str();
      r["pass"] = row.pass;
      out_rows.push_back(r);
    }
    j["fixtures"] = out_rows;
    j["passed"] = passed;
    j["total"] = rows.size();
    print_json(j);
  } else {
    std::cout << "knot,petal_number,permutation,expected,computed,pass\n";
    for (const petal::RegressionRow& row : rows) {
      std::ostringstream perm;
      for (std::size_t i = 0; i < row.fixture.permutation.size(); ++i) {
        if (i) perm << ' ';
        perm << row.fixture.permutation[i];
      }
      std::cout << row.fixture.name << ',' << row.fixture.petal_number << ',' << perm.str() << ','
                << row.fixture.expected_determinant << ',' << row.computed.get_str() << ','
                << (row.pass ? "true" : "false") << "\n";
    }
  }
  if (passed != rows.size()) {
    std::cerr << "regression failed: " << passed << "/" << rows.size() << " fixtures passed\n";
    return kExitInternal;
  }
  std::cerr << "regression passed: " << passed << "/" << rows.size() << " fixtures\n";
  return 0;
}

int run_bench(int p, const std::string& mode_name, int runs, bool seed_given, std::uint64_t seed,
              bool as_json) {
  const petal::BenchMode mode =
      mode_name == "random" ? petal::BenchMode::random : petal::BenchMode::identity;
  const bool randomized = mode == petal::BenchMode::random;
  if (randomized && !seed_given) {
    if (as_json) {
      std::cerr << "error: --seed is required with --json for randomized runs\n";
      return kExitUsage;
    }
    seed = draw_seed();
  }
  const petal::BenchResult result = petal::bench(p, mode, runs, seed);

  if (as_json) {
    ordered_json j;
    j["p"] = result.petal_number;
    j["mode"] = mode_name;
    j["runs"] = runs;
    if (randomized) j["seed"] = result.seed;
    j["host"] = result.host;
    j["times_ms"] = result.run_ms;
    j["min_ms"] = result.min_ms;
    j["mean_ms"] = result.mean_ms;
    if (randomized) {
      ordered_json dets = ordered_json::array();
      for (const petal::BigInt& d : result.determinants) dets.push_back(d.get_str());
      j["determinants"] = dets;
    }
    print_json(j);
    return 0;
  }
  std::cout << "host: " << result.host << "\n";
  std::cout << "p: " << result.petal_number << "\n";
  std::cout << "mode: " << mode_name << "\n";
  std::cout << "runs: " << runs << "\n";
  if (randomized) std::cout << "seed: " << result.seed << "\n";
  std::cout << "times_ms: ";
  for (std::size_t i = 0; i < result.run_ms.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << format_ms(result.run_ms[i]);
  }
  std::cout << "\n";
  std::cout << "min_ms: " << format_ms(result.min_ms) << "\n";
  std::cout << "mean_ms: " << format_ms(result.mean_ms) << "\n";
  if (randomized) {
    std::cout << "determinants: ";
    for (std::size_t i = 0; i < result.determinants.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << result.determinants[i].get_str();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_survey(int n, int samples, const std::string& primes_text, bool seed_given,
               std::uint64_t seed, bool as_json) {
  std::vector<std::uint64_t> primes;
  if (primes_text.empty()) {
    primes = petal::default_survey_primes();
  } else {
    std::stringstream ss(primes_text);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        primes.push_back(std::stoull(field));
      } catch (const std::exception&) {
        std::cerr << "error: --primes expects a comma-separated list, got '" << primes_text
                  << "'\n";
        return kExitUsage;
      }
    }
  }
  const bool randomized = !petal::survey_is_exhaustive(n);
  if (randomized && !seed_given) {
    if (as_json) {
      std::cerr << "error: --seed is required with --json for sampled surveys\n";
      return kExitUsage;
    }
    seed = draw_seed();
  }
  const petal::SurveyRow row = petal::survey(n, samples, primes, seed);
  const char* mode = row.exhaustive ? "exhaustive" : "sampled";

  if (as_json) {
    ordered_json j;
    j["n"] = row.n;
    j["mode"] = mode;
    j["samples"] = row.samples;
    if (randomized) j["seed"] = row.seed;
    j["primes"] = row.primes;
    ordered_json counts;
    counts["nc"] = row.nc_count;
    ordered_json per_prime;
    for (std::uint64_t q : row.primes) per_prime[std::to_string(q)] = row.colorable_counts.at(q);
    counts["colorable"] = per_prime;
    j["counts"] = counts;
    ordered_json percent;
    percent["nc"] = round1(row.percent(row.nc_count));
    ordered_json prime_pct;
    for (std::uint64_t q : row.primes)
      prime_pct[std::to_string(q)] = round1(row.percent(row.colorable_counts.at(q)));
    percent["colorable"] = prime_pct;
    j["percent"] = percent;
    print_json(j);
    return 0;
  }
  std::cout << "n,mode,samples,seed,nc";
  for (std::uint64_t q : row.primes) std::cout << ',' << q;
  std::cout << "\n";
  std::cout << row.n << ',' << mode << ',' << row.samples << ','
            << (randomized ? std::to_string(row.seed) : "-") << ','
            << format_pct(row.percent(row.nc_count));
  for (std::uint64_t q : row.primes)
    std::cout << ',' << format_pct(row.percent(row.colorable_counts.at(q)));
  std::cout << "\n";
  return 0;
}

}  // namespace

#ifndef PETAL_DEFAULT_FIXTURES
#define PETAL_DEFAULT_FIXTURES "data/prime_knots.csv"
#endif

int main(int argc, char** argv) {
  std::string invocation;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) invocation += ' ';
    invocation += argv[i];
  }

  CLI::App app{"Knot invariants from petal permutations"};
  app.require_subcommand(1);

  std::string det_perm;
  bool det_json = false;
  CLI::App* det = app.add_subcommand("det", "Knot determinant and coloring counts");
  det->add_option("permutation", det_perm, "Petal permutation, e.g. 1,3,5,2,4")->required();
  det->add_flag("--json", det_json, "Machine-readable output");

  std::string gauss_arg;
  bool gauss_unsigned = false;
  bool gauss_json = false;
  CLI::App* gauss = app.add_subcommand("gauss", "Petal Gauss code");
  gauss->add_option("input", gauss_arg,
                    "Petal permutation (signed code) or, with --unsigned, a petal number")
      ->required();
  gauss->add_flag("--unsigned", gauss_unsigned, "Emit the unsigned code for a petal number");
  gauss->add_flag("--json", gauss_json, "Machine-readable output");

  std::string matrix_perm;
  bool matrix_json = false;
  CLI::App* matrix = app.add_subcommand("matrix", "Coloring matrix");
  matrix->add_option("permutation", matrix_perm, "Petal permutation")->required();
  matrix->add_flag("--json", matrix_json, "Machine-readable output");

  std::string arcs_perm;
  bool arcs_json = false;
  CLI::App* arcs = app.add_subcommand("arcs", "Arc decomposition of the signed code");
  arcs->add_option("permutation", arcs_perm, "Petal permutation")->required();
  arcs->add_flag("--json", arcs_json, "Machine-readable output");

  std::string reduce_perm;
  bool reduce_json = false;
  CLI::App* reduce = app.add_subcommand("reduce", "Cancel petals as far as possible");
  reduce->add_option("permutation", reduce_perm, "Petal permutation")->required();
  reduce->add_flag("--json", reduce_json, "Machine-readable output");

  std::string regress_fixtures = PETAL_DEFAULT_FIXTURES;
  bool regress_json = false;
  CLI::App* regress = app.add_subcommand("regress", "Prime-knot determinant regression table");
  regress->add_option("--fixtures", regress_fixtures, "Fixture CSV path");
  regress->add_flag("--json", regress_json, "Machine-readable output");

  int bench_p = 0;
  std::string bench_mode = "identity";
  int bench_runs = 10;
  std::uint64_t bench_seed = 0;
  bool bench_json = false;
  CLI::App* bench = app.add_subcommand("bench", "Time repeated determinant runs");
  bench->add_option("p", bench_p, "Petal number")->required();
  bench->add_option("--mode", bench_mode, "identity or random")
      ->check(CLI::IsMember({"identity", "random"}));
  bench->add_option("--runs", bench_runs, "Number of runs");
  CLI::Option* bench_seed_opt = bench->add_option("--seed", bench_seed, "RNG seed (random mode)");
  bench->add_flag("--json", bench_json, "Machine-readable output");

  int survey_n = 0;
  int survey_samples = 1000;
  std::string survey_primes;
  std::uint64_t survey_seed = 0;
  bool survey_json = false;
  CLI::App* survey = app.add_subcommand("survey", "Colorability distribution for a petal number");
  survey->add_option("n", survey_n, "Petal number")->required();
  survey->add_option("--samples", survey_samples, "Sample count when not exhaustive");
  survey->add_option("--primes", survey_primes, "Comma-separated primes to test");
  CLI::Option* survey_seed_opt = survey->add_option("--seed", survey_seed, "RNG seed");
  survey->add_flag("--json", survey_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*det) return run_det(det_perm, det_json);
    if (*gauss) return run_gauss(gauss_arg, gauss_unsigned, gauss_json);
    if (*matrix) return run_matrix(matrix_perm, matrix_json);
    if (*arcs) return run_arcs(arcs_perm, arcs_json);
    if (*reduce) return run_reduce(reduce_perm, reduce_json);
    if (*regress) return run_regress(regress_fixtures, regress_json);
    if (*bench)
      return run_bench(bench_p, bench_mode, bench_runs, bench_seed_opt->count() > 0, bench_seed,
                       bench_json);
    if (*survey)
      return run_survey(survey_n, survey_samples, survey_primes, survey_seed_opt->count() > 0,
                        survey_seed, survey_json);
  } catch (const petal::Error& e) {
    std::cerr << "error: " << e.what() << " (input: " << invocation << ")\n";
    return e.code() == petal::Errc::internal_inconsistency ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << " (input: " << invocation << ")\n";
    return kExitInternal;
  }
  return kExitUsage;
}
