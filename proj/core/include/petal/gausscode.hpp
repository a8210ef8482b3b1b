#pragma once

#include <vector>

#include "petal/permutation.hpp"

namespace petal {

// Gauss code of the split petal projection with p petals, before any
// over/under information: length p(p-3), every crossing label in
// 1..p(p-3)/2 appearing exactly twice. Depends only on the petal number.
struct UnsignedGaussCode {
  int petal_number = 0;
  std::vector<int> entries;
};

// Same sequence with every understrand pass negated; for each label,
// exactly one of its two occurrences is negative. Determined by the
// petal permutation used for signing.
struct SignedGaussCode {
  int petal_number;
  std::vector<int> entries;
  PetalPermutation source;
};

// Smallest non-negative integer congruent to k mod n. Total for negative
// k; n must be positive.
long long remainder(long long k, long long n);

// Layer of the k-th crossing visit: the repeating palindrome
// 0,1,...,(p-5)/2,(p-5)/2,...,1,0 with period p-3.
int layer_value(int petal_number, long long k);

// Position within the petal block: (p-3)/2 zeros then 1..(p-3)/2,
// period p-3.
int block_position(int petal_number, long long k);

// Index of the crossing within its layer, in 1..p. Defined for
// 0 <= k < p(p-3).
int layer_index(int petal_number, long long k);

// Entries c_k = p * layer + layer_index. Empty for p in {1, 3}
// (crossingless unknot projections); even p is rejected.
UnsignedGaussCode unsigned_gauss_code(int petal_number);

// partner_index(code, k) is the other index carrying the same label;
// an involution. partner_table gives all of them in one linear pass.
std::vector<int> partner_table(const UnsignedGaussCode& code);
int partner_index(const UnsignedGaussCode& code, int k);

// Signed block distance from index k's petal block to its partner's,
// computed without locating the partner.
int partner_block_shift(int petal_number, long long k);

// Petal block containing index k: floor(k / (p-3)), in [0, p).
int block_index(int petal_number, long long k);

// Petal block containing the partner of index k, via partner_block_shift;
// always equals block_index(p, partner_index(code, k)).
int partner_block_index(int petal_number, long long k);

// Keeps an entry positive when its own block's strand is higher (smaller
// height value) than its partner block's, and negates it otherwise.
// Empty for p in {1, 3}.
SignedGaussCode sign_gauss_code(const PetalPermutation& perm);

}  // namespace petal
