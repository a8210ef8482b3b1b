#include "petal/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace petal {

PetalPermutation::PetalPermutation(std::vector<int> heights) : heights_(std::move(heights)) {
  const int p = static_cast<int>(heights_.size());
  if (p == 0) fail(Errc::empty_input, "petal permutation is empty");
  if (p % 2 == 0)
    fail(Errc::even_length,
         "petal permutation has even length " + std::to_string(p) + " (a link, not a knot)");
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (int h : heights_) {
    if (h < 1 || h > p || seen[static_cast<std::size_t>(h)])
      fail(Errc::not_a_permutation,
           "heights are not a permutation of 1.." + std::to_string(p));
    seen[static_cast<std::size_t>(h)] = true;
  }
}

PetalPermutation PetalPermutation::parse(std::string_view text) {
  std::vector<int> heights;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - pos);
    std::size_t b = field.find_first_not_of(" \t");
    std::size_t e = field.find_last_not_of(" \t");
    if (b == std::string_view::npos) {
      if (heights.empty() && comma == std::string_view::npos) break;  // wholly blank input
      fail(Errc::not_a_permutation, "blank entry in permutation text");
    }
    field = field.substr(b, e - b + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      fail(Errc::not_a_permutation, "'" + std::string(field) + "' is not an integer");
    heights.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return PetalPermutation(std::move(heights));
}

std::string PetalPermutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (i) out << ',';
    out << heights_[i];
  }
  return out.str();
}

PetalPermutation rotate_basepoint(const PetalPermutation& perm, int offset) {
  const int p = perm.petal_number();
  int s = offset % p;
  if (s < 0) s += p;
  std::vector<int> h(perm.heights());
  std::rotate(h.begin(), h.begin() + s, h.end());
  return PetalPermutation(std::move(h));
}

PetalPermutation flip_vertical(const PetalPermutation& perm) {
  const int p = perm.petal_number();
  std::vector<int> h(perm.heights());
  for (int& x : h) x = p + 1 - x;
  return PetalPermutation(std::move(h));
}

PetalPermutation shift_heights(const PetalPermutation& perm, int amount) {
  const int p = perm.petal_number();
  int t = amount % p;
  if (t < 0) t += p;
  std::vector<int> h(perm.heights());
  for (int& x : h) x = (x - 1 + t) % p + 1;
  return PetalPermutation(std::move(h));
}

std::optional<PetalPermutation> reduce_once(const PetalPermutation& perm) {
  const int p = perm.petal_number();
  if (p < 3) return std::nullopt;
  const std::vector<int>& h = perm.heights();
  for (int i = 0; i < p; ++i) {
    const int a = h[static_cast<std::size_t>(i)];
    const int b = h[static_cast<std::size_t>((i + 1) % p)];
    if (std::abs(a - b) != 1) continue;
    const int top = std::max(a, b);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p) - 2);
    for (int j = 0; j < p; ++j) {
      if (j == i || j == (i + 1) % p) continue;
      int x = h[static_cast<std::size_t>(j)];
      out.push_back(x > top ? x - 2 : x);
    }
    return PetalPermutation(std::move(out));
  }
  return std::nullopt;
}

PetalPermutation reduce_fully(const PetalPermutation& perm) {
  PetalPermutation current = perm;
  for (;;) {
    while (auto next = reduce_once(current)) current = *next;
    bool reduced = false;
    const int p = current.petal_number();
    for (int t = 0; t < p && !reduced; ++t) {
      for (int s = 0; s < p && !reduced; ++s) {
        PetalPermutation candidate = rotate_basepoint(shift_heights(current, t), s);
        if (auto next = reduce_once(candidate)) {
          current = *next;
          reduced = true;
        }
      }
    }
    if (!reduced) return current;
  }
}

PetalPermutation canonical_rotation(const PetalPermutation& perm) {
  const std::vector<int>& h = perm.heights();
  auto it = std::find(h.begin(), h.end(), 1);
  return rotate_basepoint(perm, static_cast<int>(it - h.begin()));
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform and the stream
  // identical on every platform.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

PetalPermutation random_permutation(int petal_number, std::uint64_t seed) {
  if (petal_number < 1) fail(Errc::empty_input, "petal number must be at least 1");
  if (petal_number % 2 == 0)
    fail(Errc::even_length, "petal number " + std::to_string(petal_number) + " is even");
  std::vector<int> h(static_cast<std::size_t>(petal_number));
  std::iota(h.begin(), h.end(), 1);
  std::mt19937_64 gen(seed);
  for (int i = petal_number - 1; i > 0; --i) {
    const int j = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(i) + 1));
    std::swap(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]);
  }
  return PetalPermutation(std::move(h));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace petal
