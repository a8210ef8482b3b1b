#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "petal/exactdet.hpp"

namespace petal {

// One row of the prime-knot table: a named knot, a minimal petal
// representation and the expected determinant.
struct KnotFixture {
  std::string name;
  int petal_number = 0;
  std::vector<int> permutation;
  long long expected_determinant = 0;
};

// CSV columns: knot,petal_number,permutation (space separated),determinant.
std::vector<KnotFixture> load_fixtures(const std::string& csv_path);
std::string default_fixture_path();

struct RegressionRow {
  KnotFixture fixture;
  BigInt computed;
  bool pass = false;
};

std::vector<RegressionRow> regression_suite(const std::vector<KnotFixture>& fixtures);

enum class BenchMode { identity, random };

// Wall-clock timings of repeated determinant runs; reported, never
// asserted. Identity mode additionally requires every result to be 1.
struct BenchResult {
  int petal_number = 0;
  BenchMode mode = BenchMode::identity;
  std::uint64_t seed = 0;
  std::vector<double> run_ms;
  double min_ms = 0.0;
  double mean_ms = 0.0;
  std::vector<BigInt> determinants;  // one per run in random mode
  std::string host;
};

BenchResult bench(int petal_number, BenchMode mode, int runs, std::uint64_t seed);

std::string host_description();

// Colorability shares for petal number n: exhaustive over all n!
// permutations when n! < 1000, otherwise `samples` seeded random draws.
// A knot counts as q-colorable when q divides its determinant; NC counts
// permutations divisible by none of the tested primes.
struct SurveyRow {
  int n = 0;
  long long samples = 0;  // permutations actually tested
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  std::map<std::uint64_t, long long> colorable_counts;
  long long nc_count = 0;

  double percent(long long count) const {
    return samples == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(samples);
  }
};

SurveyRow survey(int n, int samples, const std::vector<std::uint64_t>& primes, std::uint64_t seed);

std::vector<std::uint64_t> default_survey_primes();  // 3,5,...,23

// n! < 1000, the cutoff below which the survey enumerates everything.
bool survey_is_exhaustive(int n);

}  // namespace petal
