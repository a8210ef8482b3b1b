#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "petal/error.hpp"

namespace petal {

// Strand heights of a petal projection, read once around the diagram
// (1 = topmost strand). Always a permutation of {1..p}; p must be odd,
// since an even number of petals describes a link rather than a knot.
// p = 1 and p = 3 are valid crossingless unknot projections.
class PetalPermutation {
 public:
  // Validates on construction: throws Error with code empty_input,
  // even_length or not_a_permutation.
  explicit PetalPermutation(std::vector<int> heights);

  // Parses "1,3,5,2,4" (whitespace around entries tolerated).
  static PetalPermutation parse(std::string_view text);

  int petal_number() const noexcept { return static_cast<int>(heights_.size()); }
  int height(int index) const { return heights_.at(static_cast<std::size_t>(index)); }
  const std::vector<int>& heights() const noexcept { return heights_; }

  bool operator==(const PetalPermutation&) const = default;

  // Comma separated, no brackets: "1,3,5,2,4".
  std::string to_string() const;

 private:
  std::vector<int> heights_;
};

// Reads the same projection starting s petals later: (h_s, ..., h_{s-1}).
// Any integer offset is accepted and taken mod p.
PetalPermutation rotate_basepoint(const PetalPermutation& perm, int offset);

// Turns the projection upside down: h_i -> p + 1 - h_i.
PetalPermutation flip_vertical(const PetalPermutation& perm);

// Moves the bottom strand(s) to the top: h_i -> ((h_i - 1 + t) mod p) + 1.
PetalPermutation shift_heights(const PetalPermutation& perm, int amount);

// Cancels the leftmost cyclically adjacent pair of consecutive heights
// (wrap pair (h_{p-1}, h_0) included), pulling that petal through the
// crossing. Heights above the removed pair drop by 2 so the result is a
// permutation of {1..p-2}. Returns nullopt when no pair qualifies.
std::optional<PetalPermutation> reduce_once(const PetalPermutation& perm);

// Iterates reduce_once; when stuck, retries under every height shift
// composed with every basepoint rotation before declaring the projection
// irreducible. Preserves the knot, hence the determinant. Makes no
// minimality claim.
PetalPermutation reduce_fully(const PetalPermutation& perm);

// The conventional display rotation with h_0 = 1.
PetalPermutation canonical_rotation(const PetalPermutation& perm);

// Uniform random permutation of {1..p} (Fisher-Yates over a seeded
// mt19937_64 with rejection sampling, so results are identical across
// platforms). p must be odd.
PetalPermutation random_permutation(int petal_number, std::uint64_t seed);

// Deterministic per-task sub-seed for task `index` of a batch run: batch
// results are reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace petal
