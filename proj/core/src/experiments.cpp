#include "petal/experiments.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "petal/coloring.hpp"
#include "petal/gausscode.hpp"

#ifndef PETAL_PRIME_KNOTS_CSV
#define PETAL_PRIME_KNOTS_CSV "data/prime_knots.csv"
#endif

namespace petal {

namespace {

constexpr long long kExhaustionThreshold = 1000;  // enumerate when n! < this

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string default_fixture_path() { return PETAL_PRIME_KNOTS_CSV; }

std::vector<KnotFixture> load_fixtures(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) fail(Errc::empty_input, "cannot open fixture table " + csv_path);
  std::vector<KnotFixture> fixtures;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4)
      fail(Errc::empty_input, "bad fixture row (want 4 columns): " + line);
    if (fields[0] == "knot") continue;  // header
    KnotFixture fx;
    fx.name = fields[0];
    fx.petal_number = std::stoi(fields[1]);
    std::stringstream ps(fields[2]);
    int h;
    while (ps >> h) fx.permutation.push_back(h);
    fx.expected_determinant = std::stoll(fields[3]);
    if (static_cast<int>(fx.permutation.size()) != fx.petal_number)
      fail(Errc::empty_input, "fixture " + fx.name + " has a mismatched permutation length");
    fixtures.push_back(std::move(fx));
  }
  return fixtures;
}

std::vector<RegressionRow> regression_suite(const std::vector<KnotFixture>& fixtures) {
  std::vector<RegressionRow> rows;
  rows.reserve(fixtures.size());
  for (const KnotFixture& fx : fixtures) {
    RegressionRow row{fx, knot_determinant(PetalPermutation(fx.permutation)), false};
    row.pass = (row.computed == static_cast<long>(fx.expected_determinant));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string host_description() {
  utsname u{};
  if (uname(&u) != 0) return "unknown";
  return std::string(u.sysname) + " " + u.release + " " + u.machine;
}

BenchResult bench(int petal_number, BenchMode mode, int runs, std::uint64_t seed) {
  if (petal_number < 1 || petal_number % 2 == 0)
    fail(Errc::even_petal_number,
         "petal number " + std::to_string(petal_number) + " is not a positive odd number");
  if (runs < 1) fail(Errc::too_small, "bench requires at least one run");

  BenchResult result;
  result.petal_number = petal_number;
  result.mode = mode;
  result.seed = seed;
  result.host = host_description();
  result.run_ms.reserve(static_cast<std::size_t>(runs));

  std::vector<int> identity(static_cast<std::size_t>(petal_number));
  std::iota(identity.begin(), identity.end(), 1);

  for (int i = 0; i < runs; ++i) {
    const PetalPermutation perm =
        mode == BenchMode::identity
            ? PetalPermutation(identity)
            : random_permutation(petal_number, derive_seed(seed, static_cast<std::uint64_t>(i)));
    const auto t0 = std::chrono::steady_clock::now();
    BigInt det = knot_determinant(perm);
    const auto t1 = std::chrono::steady_clock::now();
    result.run_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (mode == BenchMode::identity) {
      if (det != 1)
        fail(Errc::internal_inconsistency,
             "identity permutation of " + std::to_string(petal_number) +
                 " petals produced determinant " + det.get_str());
    } else {
      result.determinants.push_back(std::move(det));
    }
  }
  result.min_ms = *std::min_element(result.run_ms.begin(), result.run_ms.end());
  result.mean_ms = std::accumulate(result.run_ms.begin(), result.run_ms.end(), 0.0) /
                   static_cast<double>(result.run_ms.size());
  return result;
}

bool survey_is_exhaustive(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f >= kExhaustionThreshold) return false;
  }
  return true;
}

namespace {

struct SurveyTally {
  std::vector<long long> colorable;  // parallel to the prime list
  long long nc = 0;
  long long tested = 0;

  explicit SurveyTally(std::size_t n_primes) : colorable(n_primes, 0) {}
  void merge(const SurveyTally& other) {
    for (std::size_t i = 0; i < colorable.size(); ++i) colorable[i] += other.colorable[i];
    nc += other.nc;
    tested += other.tested;
  }
};

void tally_permutation(const PetalPermutation& perm, const std::vector<std::uint64_t>& primes,
                       SurveyTally& tally) {
  ++tally.tested;
  if (perm.petal_number() <= 3) {
    ++tally.nc;  // determinant 1
    return;
  }
  const IntMatrix minor = first_minor(build_coloring_matrix(sign_gauss_code(perm)));
  bool any = false;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (det_mod(minor, primes[i]) == 0) {
      ++tally.colorable[i];
      any = true;
    }
  }
  if (!any) ++tally.nc;
}

}  // namespace

SurveyRow survey(int n, int samples, const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
  if (n < 1 || n % 2 == 0)
    fail(Errc::even_petal_number, "petal number " + std::to_string(n) + " is not a positive odd number");
  for (std::uint64_t q : primes)
    if (!is_prime_u64(q)) fail(Errc::not_prime, std::to_string(q) + " is not prime");

  SurveyRow row;
  row.n = n;
  row.seed = seed;
  row.primes = primes;
  row.exhaustive = survey_is_exhaustive(n);

  SurveyTally tally(primes.size());
  if (row.exhaustive) {
    std::vector<int> heights(static_cast<std::size_t>(n));
    std::iota(heights.begin(), heights.end(), 1);
    do {
      tally_permutation(PetalPermutation(heights), primes, tally);
    } while (std::next_permutation(heights.begin(), heights.end()));
  } else {
    if (samples < 1) fail(Errc::too_small, "sampled survey requires at least one sample");
    // Per-sample RNG streams keyed by (seed, index): chunked parallel
    // execution reproduces the sequential result exactly.
    const int threads = static_cast<int>(
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              static_cast<std::size_t>(samples)));
    std::vector<SurveyTally> parts(static_cast<std::size_t>(threads), SurveyTally(primes.size()));
    std::atomic<int> cursor{0};
    auto work = [&](int slot) {
      for (;;) {
        const int i = cursor.fetch_add(1);
        if (i >= samples) break;
        tally_permutation(random_permutation(n, derive_seed(seed, static_cast<std::uint64_t>(i))),
                          primes, parts[static_cast<std::size_t>(slot)]);
      }
    };
    if (threads <= 1) {
      work(0);
    } else {
      std::vector<std::future<void>> futures;
      for (int t = 1; t < threads; ++t)
        futures.push_back(std::async(std::launch::async, work, t));
      work(0);
      for (auto& f : futures) f.get();
    }
    for (const SurveyTally& part : parts) tally.merge(part);
  }

  row.samples = tally.tested;
  row.nc_count = tally.nc;
  for (std::size_t i = 0; i < primes.size(); ++i) row.colorable_counts[primes[i]] = tally.colorable[i];
  return row;
}

std::vector<std::uint64_t> default_survey_primes() { return {3, 5, 7, 11, 13, 17, 19, 23}; }

}  // namespace petal
