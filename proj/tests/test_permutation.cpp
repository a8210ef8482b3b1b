#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "petal/exactdet.hpp"
#include "petal/permutation.hpp"

using petal::Errc;
using petal::Error;
using petal::PetalPermutation;

namespace {

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

TEST_CASE("validation accepts odd permutations and rejects the rest") {
  const PetalPermutation perm({1, 3, 5, 2, 4});
  CHECK(perm.petal_number() == 5);
  CHECK(error_code([] { PetalPermutation({1, 2}); }) == Errc::even_length);
  CHECK(error_code([] { PetalPermutation({1, 3, 3, 2, 4}); }) == Errc::not_a_permutation);
  CHECK(error_code([] { PetalPermutation({}); }) == Errc::empty_input);
  CHECK(error_code([] { PetalPermutation({0, 2, 1}); }) == Errc::not_a_permutation);
  CHECK(error_code([] { PetalPermutation({1, 2, 4}); }) == Errc::not_a_permutation);
}

TEST_CASE("text round trip") {
  CHECK(PetalPermutation::parse("1,3,5,2,4") == PetalPermutation({1, 3, 5, 2, 4}));
  CHECK(PetalPermutation::parse(" 1, 3,5 ,2,4") == PetalPermutation({1, 3, 5, 2, 4}));
  CHECK(PetalPermutation({1, 3, 5, 2, 4}).to_string() == "1,3,5,2,4");
  CHECK_THROWS_AS(PetalPermutation::parse("1,x,3"), Error);
  CHECK_THROWS_AS(PetalPermutation::parse(""), Error);
}

TEST_CASE("basepoint rotation") {
  const PetalPermutation trefoil({1, 3, 5, 2, 4});
  CHECK(rotate_basepoint(trefoil, 1) == PetalPermutation({3, 5, 2, 4, 1}));
  CHECK(rotate_basepoint(trefoil, 0) == trefoil);
  CHECK(rotate_basepoint(trefoil, 2) == PetalPermutation({5, 2, 4, 1, 3}));
  CHECK(rotate_basepoint(trefoil, 5) == trefoil);
  CHECK(rotate_basepoint(trefoil, -1) == rotate_basepoint(trefoil, 4));
}

TEST_CASE("vertical flip") {
  CHECK(flip_vertical(PetalPermutation({1, 3, 5, 2, 4})) == PetalPermutation({5, 3, 1, 4, 2}));
  CHECK(flip_vertical(PetalPermutation({1})) == PetalPermutation({1}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PetalPermutation perm = petal::random_permutation(9, seed);
    CHECK(flip_vertical(flip_vertical(perm)) == perm);
  }
}

TEST_CASE("height shift") {
  const PetalPermutation perm({1, 6, 4, 2, 5, 7, 3});
  CHECK(shift_heights(perm, 1) == PetalPermutation({2, 7, 5, 3, 6, 1, 4}));
  CHECK(shift_heights(perm, 0) == perm);
  CHECK(shift_heights(perm, 7) == perm);
  // shifts and flips always land back on valid permutations
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PetalPermutation p = petal::random_permutation(11, seed);
    for (int t = 0; t < 11; ++t) {
      const PetalPermutation shifted = shift_heights(p, t);
      std::set<int> values(shifted.heights().begin(), shifted.heights().end());
      CHECK(values.size() == 11);
    }
  }
}

TEST_CASE("single petal cancellation") {
  // removing (4,3) pulls heights 6 and 7 down by two
  const auto reduced = reduce_once(PetalPermutation({1, 4, 3, 6, 2, 7, 5}));
  REQUIRE(reduced.has_value());
  CHECK(*reduced == PetalPermutation({1, 4, 2, 5, 3}));
  CHECK(petal::knot_determinant(PetalPermutation({1, 4, 3, 6, 2, 7, 5})) ==
        petal::knot_determinant(*reduced));

  CHECK_FALSE(reduce_once(PetalPermutation({1, 3, 5, 2, 4})).has_value());

  const auto tiny = reduce_once(PetalPermutation({1, 2, 3}));
  REQUIRE(tiny.has_value());
  CHECK(*tiny == PetalPermutation({1}));

  // only the wrap pair (h_{p-1}, h_0) = (4,3) is consecutive here
  const auto wrapped = reduce_once(PetalPermutation({3, 1, 5, 2, 4}));
  REQUIRE(wrapped.has_value());
  CHECK(*wrapped == PetalPermutation({1, 3, 2}));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PetalPermutation perm = petal::random_permutation(9, seed);
    if (auto r = reduce_once(perm)) CHECK(r->petal_number() == perm.petal_number() - 2);
  }
}

TEST_CASE("full reduction") {
  CHECK(petal::reduce_fully(PetalPermutation({1, 2, 3, 4, 5, 6, 7})) == PetalPermutation({1}));
  CHECK(petal::reduce_fully(PetalPermutation({1, 3, 5, 2, 4})) == PetalPermutation({1, 3, 5, 2, 4}));
  const PetalPermutation reduced = petal::reduce_fully(PetalPermutation({1, 4, 3, 6, 2, 7, 5}));
  CHECK(reduced.petal_number() == 5);
  CHECK(petal::knot_determinant(reduced) == 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PetalPermutation perm = petal::random_permutation(11, seed);
    CHECK(petal::reduce_fully(perm).petal_number() <= 11);
  }
}

TEST_CASE("canonical rotation starts at height 1") {
  CHECK(petal::canonical_rotation(PetalPermutation({3, 5, 2, 4, 1})) ==
        PetalPermutation({1, 3, 5, 2, 4}));
}

TEST_CASE("random permutations are seeded and valid") {
  CHECK(petal::random_permutation(5, 42) == petal::random_permutation(5, 42));
  CHECK(petal::random_permutation(1, 7) == PetalPermutation({1}));
  CHECK(error_code([] { petal::random_permutation(6, 1); }) == Errc::even_length);
  CHECK(error_code([] { petal::random_permutation(0, 1); }) == Errc::empty_input);
}

TEST_CASE("random permutations look uniform (5 sigma per cell)") {
  constexpr int kSamples = 10000;
  constexpr int kP = 7;
  int counts[kP][kP] = {};
  for (int s = 0; s < kSamples; ++s) {
    const PetalPermutation perm = petal::random_permutation(kP, petal::derive_seed(2024, s));
    for (int pos = 0; pos < kP; ++pos) ++counts[pos][perm.height(pos) - 1];
  }
  const double expected = static_cast<double>(kSamples) / kP;
  const double sigma = std::sqrt(kSamples * (1.0 / kP) * (1.0 - 1.0 / kP));
  for (int pos = 0; pos < kP; ++pos)
    for (int val = 0; val < kP; ++val)
      CHECK(std::abs(counts[pos][val] - expected) <= 5.0 * sigma);
}

TEST_CASE("moves preserve the knot determinant") {
  for (int p : {5, 7, 9}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const PetalPermutation perm = petal::random_permutation(p, petal::derive_seed(99, seed));
      const petal::BigInt det = petal::knot_determinant(perm);
      CHECK(petal::knot_determinant(rotate_basepoint(perm, static_cast<int>(seed) % p)) == det);
      CHECK(petal::knot_determinant(flip_vertical(perm)) == det);
      CHECK(petal::knot_determinant(shift_heights(perm, static_cast<int>(seed) % p)) == det);
      if (auto r = reduce_once(perm)) CHECK(petal::knot_determinant(*r) == det);
    }
  }
}
