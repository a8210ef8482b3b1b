#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <functional>
#include <map>

#include "petal/gausscode.hpp"

using petal::Errc;
using petal::Error;
using petal::PetalPermutation;
using petal::UnsignedGaussCode;

namespace {

// Nine-petal reference rows, index k = 0..53.
constexpr std::array<int, 54> kCode9 = {
    1,  10, 19, 20, 12, 4,  5,  14, 23, 24, 16, 8,  9,  18, 27, 19, 11, 3,
    4,  13, 22, 23, 15, 7,  8,  17, 26, 27, 10, 2,  3,  12, 21, 22, 14, 6,
    7,  16, 25, 26, 18, 1,  2,  11, 20, 21, 13, 5,  6,  15, 24, 25, 17, 9};

constexpr std::array<int, 54> kLayerIndex9 = {
    1, 1, 1, 2, 3, 4, 5, 5, 5, 6, 7, 8, 9, 9, 9, 1, 2, 3,
    4, 4, 4, 5, 6, 7, 8, 8, 8, 9, 1, 2, 3, 3, 3, 4, 5, 6,
    7, 7, 7, 8, 9, 1, 2, 2, 2, 3, 4, 5, 6, 6, 6, 7, 8, 9};

constexpr std::array<int, 54> kPartner9 = {
    41, 28, 15, 44, 31, 18, 47, 34, 21, 50, 37, 24, 53, 40, 27, 2,  43, 30,
    5,  46, 33, 8,  49, 36, 11, 52, 39, 14, 1,  42, 17, 4,  45, 20, 7,  48,
    23, 10, 51, 26, 13, 0,  29, 16, 3,  32, 19, 6,  35, 22, 9,  38, 25, 12};

// Signed code of the nine-petal permutation (1,3,5,2,8,4,6,9,7).
constexpr std::array<int, 54> kStevedoreSigned = {
    1,   10,  19,  20,  12,  4,   5,   14,  -23, 24,  16,  8,   9,  18,  27,  -19, 11,  -3,
    -4,  13,  22,  23,  15,  7,   -8,  -17, -26, -27, -10, 2,   3,  -12, 21,  -22, -14, 6,
    -7,  -16, 25,  26,  -18, -1,  -2,  -11, -20, -21, -13, -5,  -6, -15, -24, -25, 17,  -9};

Errc error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected petal::Error");
  return Errc::internal_inconsistency;
}

}  // namespace

TEST_CASE("remainder is a true mathematical mod") {
  CHECK(petal::remainder(5, 2) == 1);
  CHECK(petal::remainder(9, 3) == 0);
  CHECK(petal::remainder(-1, 7) == 6);
  CHECK(petal::remainder(-14, 7) == 0);
  CHECK(error_code([] { petal::remainder(3, 0); }) == Errc::zero_modulus);
  CHECK(error_code([] { petal::remainder(3, -2); }) == Errc::zero_modulus);
}

TEST_CASE("layer palindrome") {
  const std::array<int, 6> expected9 = {0, 1, 2, 2, 1, 0};
  for (int k = 0; k < 6; ++k) CHECK(petal::layer_value(9, k) == expected9[static_cast<std::size_t>(k)]);
  CHECK(petal::layer_value(9, 6) == 0);
  const std::array<int, 4> expected7 = {0, 1, 1, 0};
  for (int k = 0; k < 4; ++k) CHECK(petal::layer_value(7, k) == expected7[static_cast<std::size_t>(k)]);
  CHECK(error_code([] { petal::layer_value(4, 0); }) == Errc::invalid_petal_number);
  CHECK(error_code([] { petal::layer_value(3, 0); }) == Errc::invalid_petal_number);
}

TEST_CASE("block position ramp") {
  const std::array<int, 6> expected9 = {0, 0, 0, 1, 2, 3};
  for (int k = 0; k < 6; ++k)
    CHECK(petal::block_position(9, k) == expected9[static_cast<std::size_t>(k)]);
  CHECK(petal::block_position(9, 9) == 1);
  const std::array<int, 4> expected7 = {0, 0, 1, 2};
  for (int k = 0; k < 4; ++k)
    CHECK(petal::block_position(7, k) == expected7[static_cast<std::size_t>(k)]);
}

TEST_CASE("layer index within each layer") {
  for (int k = 0; k < 54; ++k)
    CHECK(petal::layer_index(9, k) == kLayerIndex9[static_cast<std::size_t>(k)]);
  CHECK(petal::layer_index(9, 17) == 3);
  CHECK(petal::layer_index(9, 53) == 9);
  CHECK(error_code([] { petal::layer_index(9, 54); }) == Errc::index_out_of_range);
  CHECK(error_code([] { petal::layer_index(9, -1); }) == Errc::index_out_of_range);
}

TEST_CASE("layer and block-position sequences repeat with period p-3") {
  for (int p : {5, 7, 9, 11, 13}) {
    for (long long k = 0; k < 3LL * (p - 3); ++k) {
      CHECK(petal::layer_value(p, k) == petal::layer_value(p, k + (p - 3)));
      CHECK(petal::block_position(p, k) == petal::block_position(p, k + (p - 3)));
    }
  }
}

TEST_CASE("nine-petal unsigned code matches the reference row") {
  const UnsignedGaussCode code = petal::unsigned_gauss_code(9);
  REQUIRE(code.entries.size() == 54);
  for (int k = 0; k < 54; ++k)
    CHECK(code.entries[static_cast<std::size_t>(k)] == kCode9[static_cast<std::size_t>(k)]);
}

TEST_CASE("seven-petal unsigned code starts as expected") {
  const UnsignedGaussCode code = petal::unsigned_gauss_code(7);
  const std::array<int, 8> head = {1, 8, 9, 3, 4, 11, 12, 6};
  REQUIRE(code.entries.size() == 28);
  for (int k = 0; k < 8; ++k)
    CHECK(code.entries[static_cast<std::size_t>(k)] == head[static_cast<std::size_t>(k)]);
}

TEST_CASE("degenerate petal numbers") {
  CHECK(petal::unsigned_gauss_code(3).entries.empty());
  CHECK(petal::unsigned_gauss_code(1).entries.empty());
  CHECK(error_code([] { petal::unsigned_gauss_code(4); }) == Errc::even_petal_number);
}

TEST_CASE("every label appears exactly twice") {
  for (int p = 5; p <= 31; p += 2) {
    const UnsignedGaussCode code = petal::unsigned_gauss_code(p);
    REQUIRE(static_cast<int>(code.entries.size()) == p * (p - 3));
    std::map<int, int> counts;
    for (int e : code.entries) ++counts[e];
    CHECK(static_cast<int>(counts.size()) == p * (p - 3) / 2);
    for (const auto& [label, count] : counts) {
      CHECK(label >= 1);
      CHECK(label <= p * (p - 3) / 2);
      CHECK(count == 2);
    }
  }
}

TEST_CASE("partner indices") {
  const UnsignedGaussCode code = petal::unsigned_gauss_code(9);
  CHECK(petal::partner_index(code, 0) == 41);
  CHECK(petal::partner_index(code, 41) == 0);
  CHECK(petal::partner_index(code, 8) == 21);
  const std::vector<int> table = petal::partner_table(code);
  for (int k = 0; k < 54; ++k) CHECK(table[static_cast<std::size_t>(k)] == kPartner9[static_cast<std::size_t>(k)]);
  CHECK(error_code([&] { petal::partner_index(code, 54); }) == Errc::index_out_of_range);
}

TEST_CASE("petal blocks") {
  CHECK(petal::block_index(9, 41) == 6);
  CHECK(petal::block_index(9, 0) == 0);
  CHECK(petal::block_index(9, 53) == 8);
  CHECK(error_code([] { petal::block_index(9, 54); }) == Errc::index_out_of_range);
}

TEST_CASE("partner block shift") {
  // (9,3): both routes give -2; the piecewise branch r >= (p-3)/2 applies
  // since r_6(3) = 3, and 2*(a_44 - a_3) = 2*(0 - 1) agrees.
  CHECK(petal::partner_block_shift(9, 0) == 6);
  CHECK(petal::partner_block_shift(9, 3) == -2);
  CHECK(petal::partner_block_shift(9, 5) == -6);
  CHECK(error_code([] { petal::partner_block_shift(4, 1); }) == Errc::invalid_petal_number);
}

TEST_CASE("partner block lookup") {
  CHECK(petal::partner_block_index(9, 0) == 6);
  CHECK(petal::partner_block_index(9, 41) == 0);
  CHECK(petal::partner_block_index(9, 8) == 3);
}

TEST_CASE("partner identities across petal numbers") {
  for (int p = 5; p <= 21; p += 2) {
    const UnsignedGaussCode code = petal::unsigned_gauss_code(p);
    const std::vector<int> partner = petal::partner_table(code);
    for (int k = 0; k < p * (p - 3); ++k) {
      const int kp = partner[static_cast<std::size_t>(k)];
      CHECK(kp != k);
      CHECK(partner[static_cast<std::size_t>(kp)] == k);
      // complementary positions inside their blocks
      CHECK(petal::remainder(k, p - 3) + petal::remainder(kp, p - 3) == p - 4);
      // the shift formula locates the partner's block
      CHECK(petal::partner_block_index(p, k) == petal::block_index(p, kp));
      // and matches twice the block-position difference
      CHECK(petal::partner_block_shift(p, k) ==
            2 * (petal::block_position(p, kp) - petal::block_position(p, k)));
    }
  }
}

TEST_CASE("stevedore signed code matches the reference row") {
  const petal::SignedGaussCode code =
      petal::sign_gauss_code(PetalPermutation({1, 3, 5, 2, 8, 4, 6, 9, 7}));
  REQUIRE(code.entries.size() == 54);
  CHECK(code.entries[0] == 1);
  CHECK(code.entries[8] == -23);
  for (int k = 0; k < 54; ++k)
    CHECK(code.entries[static_cast<std::size_t>(k)] == kStevedoreSigned[static_cast<std::size_t>(k)]);
}

TEST_CASE("signing is antisymmetric per label and flips with the diagram") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PetalPermutation perm = petal::random_permutation(9, petal::derive_seed(5, seed));
    const petal::SignedGaussCode code = petal::sign_gauss_code(perm);
    std::map<int, int> negatives, positives;
    for (int e : code.entries) ++(e < 0 ? negatives[-e] : positives[e]);
    for (const auto& [label, count] : negatives) {
      CHECK(count == 1);
      CHECK(positives[label] == 1);
    }
    const petal::SignedGaussCode flipped = petal::sign_gauss_code(flip_vertical(perm));
    for (std::size_t k = 0; k < code.entries.size(); ++k)
      CHECK(flipped.entries[k] == -code.entries[k]);
  }
}

TEST_CASE("signed codes of crossingless projections are empty") {
  CHECK(petal::sign_gauss_code(PetalPermutation({1})).entries.empty());
  CHECK(petal::sign_gauss_code(PetalPermutation({1, 3, 2})).entries.empty());
}
