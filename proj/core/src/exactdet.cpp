#include "petal/exactdet.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "petal/coloring.hpp"
#include "petal/gausscode.hpp"

namespace petal {

namespace {

constexpr std::uint64_t kModulusLimit = 1ULL << 31;       // word-size elimination bound
constexpr std::uint64_t kExhaustiveBudget = 10'000'000;   // max q^N enumerated
constexpr int kBareissLimit = 256;                        // largest dimension for the Bareiss path

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Barrett reduction for q < 2^31; valid for any x < 2^63.
struct Barrett {
  std::uint64_t q;
  std::uint64_t magic;
  explicit Barrett(std::uint64_t q_)
      : q(q_), magic(static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / q_)) {}
  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t t = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - t * q;
    while (r >= q) r -= q;
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
};

std::uint64_t inverse_mod(std::uint64_t a, const Barrett& br) {
  // q prime, a != 0 mod q
  std::uint64_t r = 1, base = a % br.q, exp = br.q - 2;
  while (exp) {
    if (exp & 1) r = br.mul(r, base);
    base = br.mul(base, base);
    exp >>= 1;
  }
  return r;
}

struct ElimResult {
  std::uint64_t det;
  int rank;
};

// In-place Gaussian elimination of a rows x cols matrix over Z/qZ.
// det is meaningful for square input only.
ElimResult eliminate_mod(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t q) {
  const Barrett br(q);
  std::uint64_t det = 1 % q;
  int sign = 1;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r) * cols + col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      det = 0;
      continue;
    }
    if (found != pivot_row) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(found) * cols + col,
                       a.begin() + static_cast<std::ptrdiff_t>(found + 1) * cols,
                       a.begin() + static_cast<std::ptrdiff_t>(pivot_row) * cols + col);
      sign = -sign;
    }
    const std::uint64_t* prow = &a[static_cast<std::size_t>(pivot_row) * cols];
    const std::uint64_t pivot = prow[col];
    det = br.mul(det, pivot);
    const std::uint64_t inv = inverse_mod(pivot, br);
    for (int r = pivot_row + 1; r < rows; ++r) {
      std::uint64_t* rrow = &a[static_cast<std::size_t>(r) * cols];
      const std::uint64_t lead = rrow[col];
      if (lead == 0) continue;
      const std::uint64_t f = q - br.mul(lead, inv);
      for (int j = col; j < cols; ++j) rrow[j] = br.reduce(rrow[j] + f * prow[j]);
    }
    ++pivot_row;
  }
  if (det != 0 && sign < 0) det = q - det;
  return {det, pivot_row};
}

void reduce_entries_mod(const IntMatrix& m, std::uint64_t q, std::vector<std::uint64_t>& out) {
  const std::int64_t qi = static_cast<std::int64_t>(q);
  out.resize(m.data.size());
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    std::int64_t v = m.data[i] % qi;
    if (v < 0) v += qi;
    out[i] = static_cast<std::uint64_t>(v);
  }
}

std::uint64_t det_mod_into(const IntMatrix& m, std::uint64_t q, std::vector<std::uint64_t>& buf) {
  if (m.rows == 0) return 1 % q;
  reduce_entries_mod(m, q, buf);
  return eliminate_mod(buf, m.rows, m.cols, q).det;
}

void require_word_prime(std::uint64_t q) {
  if (q >= kModulusLimit)
    fail(Errc::too_large, "modulus " + std::to_string(q) + " exceeds the 2^31 word bound");
  if (!is_prime_u64(q)) fail(Errc::not_prime, std::to_string(q) + " is not prime");
}

// Pool of word primes descending from 2^31 - 1, grown on demand.
std::uint64_t crt_prime(std::size_t index) {
  static std::vector<std::uint64_t> pool;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (pool.size() <= index) {
    std::uint64_t candidate = pool.empty() ? 2147483647ULL : pool.back() - 2;
    while (!is_prime_u64(candidate)) candidate -= 2;
    pool.push_back(candidate);
  }
  return pool[index];
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

BigInt det_bareiss(const IntMatrix& m) {
  if (!m.square()) fail(Errc::not_square, "determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  std::vector<mpz_class> a;
  a.reserve(m.data.size());
  for (std::int64_t e : m.data) a.emplace_back(static_cast<long>(e));

  mpz_class prev(1), t1, t2;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (mpz_sgn(a[static_cast<std::size_t>(r) * n + k].get_mpz_t()) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = k; j < n; ++j)
        mpz_swap(a[static_cast<std::size_t>(k) * n + j].get_mpz_t(),
                 a[static_cast<std::size_t>(pivot) * n + j].get_mpz_t());
      sign = -sign;
    }
    const mpz_class& pv = a[static_cast<std::size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      mpz_class& lead = a[static_cast<std::size_t>(i) * n + k];
      for (int j = k + 1; j < n; ++j) {
        mpz_class& e = a[static_cast<std::size_t>(i) * n + j];
        mpz_mul(t1.get_mpz_t(), e.get_mpz_t(), pv.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), a[static_cast<std::size_t>(k) * n + j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(e.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = pv;
  }
  mpz_class result = a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  if (sign < 0) mpz_neg(result.get_mpz_t(), result.get_mpz_t());
  return result;
}

BigInt det_crt(const IntMatrix& m, DetStats* stats) {
  if (!m.square()) fail(Errc::not_square, "determinant of a non-square matrix");
  const int n = m.rows;
  if (stats) *stats = DetStats{true, BigInt(0), 0};
  if (n == 0) return 1;

  mpz_class norms(1), row_sum, sq;
  for (int i = 0; i < n; ++i) {
    row_sum = 0;
    for (int j = 0; j < n; ++j) {
      const std::int64_t e = m.at(i, j);
      sq = static_cast<long>(e);
      sq *= static_cast<long>(e);
      row_sum += sq;
    }
    if (row_sum == 0) return 0;  // zero row
    norms *= row_sum;
  }
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norms.get_mpz_t());
  mpz_class check = bound * bound;
  if (check < norms) bound += 1;
  if (stats) stats->hadamard_bound = bound;

  // |det| <= bound, so a modulus product beyond 2*bound pins the signed value.
  std::vector<std::uint64_t> primes;
  mpz_class prod(1);
  const mpz_class target = 2 * bound;
  while (prod <= target) {
    const std::uint64_t q = crt_prime(primes.size());
    primes.push_back(q);
    mpz_mul_ui(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(q));
  }
  if (stats) stats->crt_primes = static_cast<int>(primes.size());

  std::vector<std::uint64_t> residues(primes.size(), 0);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    std::vector<std::uint64_t> buf;
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= primes.size()) break;
      residues[i] = det_mod_into(m, primes[i], buf);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), primes.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t t = 0; t + 1 < threads; ++t)
      futures.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futures) f.get();
  }

  // Incremental CRT in fixed prime order keeps the combination deterministic.
  mpz_class value(0), modulus(1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t q = primes[i];
    const Barrett br(q);
    const std::uint64_t mq = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(q));
    const std::uint64_t xq = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(q));
    const std::uint64_t r = residues[i];
    const std::uint64_t diff = r >= xq ? r - xq : r + q - xq;
    const std::uint64_t t = br.mul(diff, inverse_mod(mq, br));
    mpz_addmul_ui(value.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(q));
  }
  if (2 * value > modulus) value -= modulus;
  return value;
}

BigInt det_exact(const IntMatrix& m, DetStats* stats) {
  if (!m.square()) fail(Errc::not_square, "determinant of a non-square matrix");
  if (m.rows <= kBareissLimit) {
    if (stats) *stats = DetStats{};
    return det_bareiss(m);
  }
  return det_crt(m, stats);
}

std::uint64_t det_mod(const IntMatrix& m, std::uint64_t q) {
  if (!m.square()) fail(Errc::not_square, "determinant of a non-square matrix");
  require_word_prime(q);
  std::vector<std::uint64_t> buf;
  return det_mod_into(m, q, buf);
}

int rank_mod(const IntMatrix& m, std::uint64_t q) {
  require_word_prime(q);
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::uint64_t> buf;
  reduce_entries_mod(m, q, buf);
  return eliminate_mod(buf, m.rows, m.cols, q).rank;
}

BigInt knot_determinant(const PetalPermutation& perm) {
  if (perm.petal_number() <= 3) return 1;
  const IntMatrix minor = first_minor(build_coloring_matrix(sign_gauss_code(perm)));
  BigInt d = det_exact(minor);
  mpz_abs(d.get_mpz_t(), d.get_mpz_t());
  return d;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x(2), y(2), d(1), diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      if (diff == 0) break;  // cycled without finding a factor; change c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) fail(Errc::too_small, "factorize requires n >= 1");
  std::vector<PrimePower> out;
  mpz_class m = n;

  auto strip = [&](unsigned long d) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) return;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    out.push_back({BigInt(static_cast<unsigned long>(d)), e});
  };

  strip(2);
  strip(3);
  for (unsigned long d = 5; d <= 1000000UL; d += 6) {
    if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
    if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) break;  // survivor is prime
    strip(d);
    strip(d + 2);
  }

  if (m > 1) {
    std::vector<mpz_class> pending{m};
    while (!pending.empty()) {
      mpz_class c = pending.back();
      pending.pop_back();
      if (mpz_probab_prime_p(c.get_mpz_t(), 40) != 0) {
        out.push_back({c, 1});
        continue;
      }
      mpz_class d = pollard_rho(c);
      pending.push_back(d);
      pending.push_back(c / d);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::vector<PrimePower> merged;
  for (PrimePower& f : out) {
    if (!merged.empty() && merged.back().prime == f.prime)
      merged.back().exponent += f.exponent;
    else
      merged.push_back(std::move(f));
  }
  return merged;
}

int multiplicity(const BigInt& prime, const BigInt& n) {
  if (prime < 2) fail(Errc::not_prime, "multiplicity requires a base >= 2");
  if (n < 1) fail(Errc::too_small, "multiplicity requires n >= 1");
  int e = 0;
  mpz_class m = n;
  while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
    ++e;
  }
  return e;
}

ColoringReport coloring_report(const PetalPermutation& perm) {
  ColoringReport rep{perm, BigInt(1), {}, {}, DetStats{}};
  if (perm.petal_number() > 3) {
    const IntMatrix minor = first_minor(build_coloring_matrix(sign_gauss_code(perm)));
    rep.determinant = det_exact(minor, &rep.det_stats);
    mpz_abs(rep.determinant.get_mpz_t(), rep.determinant.get_mpz_t());
  }
  rep.factorization = factorize(rep.determinant);
  for (const PrimePower& f : rep.factorization) {
    ColoringCount count;
    count.prime = f.prime;
    count.ord = f.exponent;
    mpz_pow_ui(count.total.get_mpz_t(), f.prime.get_mpz_t(),
               static_cast<unsigned long>(f.exponent) + 1);
    count.nontrivial = count.total - f.prime;
    rep.per_prime.push_back(std::move(count));
  }
  return rep;
}

BigInt colorings_exhaustive(const IntMatrix& m, std::uint64_t q) {
  require_word_prime(q);
  const int vars = m.cols;
  const int rows = m.rows;
  if (vars > 12) fail(Errc::too_large, "exhaustive enumeration limited to 12 variables");
  std::uint64_t total = 1;
  for (int i = 0; i < vars; ++i) {
    total *= q;
    if (total > kExhaustiveBudget)
      fail(Errc::too_large, "q^N exceeds the exhaustive enumeration budget");
  }

  std::vector<std::uint64_t> coef;
  reduce_entries_mod(m, q, coef);
  std::vector<std::uint64_t> sums(static_cast<std::size_t>(rows), 0);
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(vars), 0);
  int nonzero_rows = 0;
  std::uint64_t count = 1;  // the all-zero assignment

  // Every odometer step bumps a handful of digits by one (a rollover from
  // q-1 to 0 also shifts each row sum by +coef, since -(q-1) = 1 mod q).
  auto bump = [&](int digit) {
    for (int r = 0; r < rows; ++r) {
      std::uint64_t& s = sums[static_cast<std::size_t>(r)];
      const std::uint64_t old = s;
      s += coef[static_cast<std::size_t>(r) * vars + digit];
      if (s >= q) s -= q;
      nonzero_rows += static_cast<int>(s != 0) - static_cast<int>(old != 0);
    }
  };

  for (std::uint64_t it = 1; it < total; ++it) {
    int d = 0;
    while (digits[static_cast<std::size_t>(d)] == q - 1) {
      digits[static_cast<std::size_t>(d)] = 0;
      bump(d);
      ++d;
    }
    ++digits[static_cast<std::size_t>(d)];
    bump(d);
    if (nonzero_rows == 0) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt colorings_by_rank(const IntMatrix& m, std::uint64_t q) {
  const int rank = rank_mod(m, q);
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(m.cols - rank));
  return count;
}

BigInt brute_force_colorings(const IntMatrix& m, std::uint64_t q) {
  require_word_prime(q);
  if (m.cols <= 12) {
    std::uint64_t total = 1;
    bool fits = true;
    for (int i = 0; i < m.cols && fits; ++i) {
      total *= q;
      if (total > kExhaustiveBudget) fits = false;
    }
    if (fits) return colorings_exhaustive(m, q);
  }
  return colorings_by_rank(m, q);
}

}  // namespace petal
