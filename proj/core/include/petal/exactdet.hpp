#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "petal/matrix.hpp"
#include "petal/permutation.hpp"

namespace petal {

using BigInt = mpz_class;

struct PrimePower {
  BigInt prime;
  int exponent = 0;
};

struct ColoringCount {
  BigInt prime;
  int ord = 0;           // multiplicity of prime in the determinant
  BigInt total;          // prime^(ord+1) colorings, trivial ones included
  BigInt nontrivial;     // total - prime
};

// Diagnostics of an exact determinant computation; hadamard_bound and
// crt_primes are filled only when the multi-modular path ran.
struct DetStats {
  bool used_crt = false;
  BigInt hadamard_bound;
  int crt_primes = 0;
};

struct ColoringReport {
  PetalPermutation permutation;
  BigInt determinant;  // |M|, non-negative
  std::vector<PrimePower> factorization;
  std::vector<ColoringCount> per_prime;
  DetStats det_stats;
};

// Fraction-free single-step elimination over arbitrary-precision
// integers. Exact for any integer matrix; a 0x0 matrix has determinant 1.
BigInt det_bareiss(const IntMatrix& m);

// Determinant modulo enough machine-word primes to exceed twice the
// Hadamard bound, recombined by Chinese remaindering; exact, and equal to
// det_bareiss by construction. Residues are computed in parallel.
BigInt det_crt(const IntMatrix& m, DetStats* stats = nullptr);

// Dispatches to det_bareiss for dimension <= 256 and det_crt above.
BigInt det_exact(const IntMatrix& m, DetStats* stats = nullptr);

// Determinant over the field of q elements (q prime, q < 2^31).
std::uint64_t det_mod(const IntMatrix& m, std::uint64_t q);

// Rank over the field of q elements (q prime, q < 2^31).
int rank_mod(const IntMatrix& m, std::uint64_t q);

// |det(first minor of the coloring matrix)|; 1 for p in {1, 3}.
BigInt knot_determinant(const PetalPermutation& perm);

// Complete factorization: trial division through 10^6, then Pollard rho
// with primality certification for survivors. factorize(1) is empty.
std::vector<PrimePower> factorize(const BigInt& n);

// Largest e with prime^e dividing n (repeated exact division); n >= 1.
int multiplicity(const BigInt& prime, const BigInt& n);

// Determinant, prime factorization and per-prime coloring counts
// (prime^(ord+1) total, minus the prime trivial ones).
ColoringReport coloring_report(const PetalPermutation& perm);

// Number of assignments in (Z/qZ)^cols satisfying every row of m.
// Exhaustive enumeration; rejects q^cols beyond a fixed budget.
BigInt colorings_exhaustive(const IntMatrix& m, std::uint64_t q);

// Same count via the nullity: q^(cols - rank).
BigInt colorings_by_rank(const IntMatrix& m, std::uint64_t q);

// Exhaustive when cols <= 12 and q^cols fits the budget, else rank-based.
BigInt brute_force_colorings(const IntMatrix& m, std::uint64_t q);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

}  // namespace petal
