#include "petal/gausscode.hpp"

#include <algorithm>
#include <string>

namespace petal {

namespace {

void require_petal_number(int p) {
  if (p < 5 || p % 2 == 0)
    fail(Errc::invalid_petal_number,
         "petal number " + std::to_string(p) + " is not an odd number >= 5");
}

void require_code_index(int p, long long k) {
  const long long len = static_cast<long long>(p) * (p - 3);
  if (k < 0 || k >= len)
    fail(Errc::index_out_of_range,
         "index " + std::to_string(k) + " outside code of length " + std::to_string(len));
}

}  // namespace

long long remainder(long long k, long long n) {
  if (n < 1) fail(Errc::zero_modulus, "modulus must be positive, got " + std::to_string(n));
  long long r = k % n;
  return r < 0 ? r + n : r;
}

int layer_value(int petal_number, long long k) {
  require_petal_number(petal_number);
  const long long r = remainder(k, petal_number - 3);
  return static_cast<int>(std::min(r, (petal_number - 4) - r));
}

int block_position(int petal_number, long long k) {
  require_petal_number(petal_number);
  const long long r = remainder(k, petal_number - 3);
  const long long half = (petal_number - 3) / 2;
  return static_cast<int>(r < half ? 0 : r - half + 1);
}

int layer_index(int petal_number, long long k) {
  require_petal_number(petal_number);
  require_code_index(petal_number, k);
  const long long blocks = k / (petal_number - 3);
  const long long value =
      static_cast<long long>((petal_number - 1) / 2) * blocks + block_position(petal_number, k);
  return static_cast<int>(remainder(value, petal_number)) + 1;
}

UnsignedGaussCode unsigned_gauss_code(int petal_number) {
  if (petal_number < 1 || petal_number % 2 == 0)
    fail(Errc::even_petal_number,
         "petal number " + std::to_string(petal_number) + " is not a positive odd number");
  UnsignedGaussCode code;
  code.petal_number = petal_number;
  if (petal_number <= 3) return code;  // crossingless
  const long long len = static_cast<long long>(petal_number) * (petal_number - 3);
  code.entries.reserve(static_cast<std::size_t>(len));
  for (long long k = 0; k < len; ++k)
    code.entries.push_back(petal_number * layer_value(petal_number, k) +
                           layer_index(petal_number, k));
  return code;
}

std::vector<int> partner_table(const UnsignedGaussCode& code) {
  const int len = static_cast<int>(code.entries.size());
  std::vector<int> first(static_cast<std::size_t>(len) / 2 + 1, -1);
  std::vector<int> partner(static_cast<std::size_t>(len), -1);
  for (int i = 0; i < len; ++i) {
    const int label = code.entries[static_cast<std::size_t>(i)];
    if (label < 1 || label > len / 2)
      fail(Errc::internal_inconsistency, "crossing label " + std::to_string(label) + " out of range");
    int& seen = first[static_cast<std::size_t>(label)];
    if (seen < 0) {
      seen = i;
    } else if (partner[static_cast<std::size_t>(seen)] < 0) {
      partner[static_cast<std::size_t>(seen)] = i;
      partner[static_cast<std::size_t>(i)] = seen;
    } else {
      fail(Errc::internal_inconsistency, "crossing label " + std::to_string(label) + " appears more than twice");
    }
  }
  for (int i = 0; i < len; ++i)
    if (partner[static_cast<std::size_t>(i)] < 0)
      fail(Errc::internal_inconsistency, "unpaired crossing label in Gauss code");
  return partner;
}

int partner_index(const UnsignedGaussCode& code, int k) {
  if (k < 0 || k >= static_cast<int>(code.entries.size()))
    fail(Errc::index_out_of_range, "index " + std::to_string(k) + " outside Gauss code");
  return partner_table(code)[static_cast<std::size_t>(k)];
}

int partner_block_shift(int petal_number, long long k) {
  require_petal_number(petal_number);
  const long long r = remainder(k, petal_number - 3);
  if (r < (petal_number - 3) / 2) return static_cast<int>(petal_number - 3 - 2 * r);
  return static_cast<int>(petal_number - 5 - 2 * r);
}

int block_index(int petal_number, long long k) {
  require_petal_number(petal_number);
  require_code_index(petal_number, k);
  return static_cast<int>(k / (petal_number - 3));
}

int partner_block_index(int petal_number, long long k) {
  require_petal_number(petal_number);
  require_code_index(petal_number, k);
  return static_cast<int>(
      remainder(k / (petal_number - 3) + partner_block_shift(petal_number, k), petal_number));
}

SignedGaussCode sign_gauss_code(const PetalPermutation& perm) {
  const int p = perm.petal_number();
  UnsignedGaussCode base = unsigned_gauss_code(p);
  SignedGaussCode code{p, std::move(base.entries), perm};
  for (std::size_t k = 0; k < code.entries.size(); ++k) {
    const long long kk = static_cast<long long>(k);
    const int own = perm.height(block_index(p, kk));
    const int other = perm.height(partner_block_index(p, kk));
    if (own > other) code.entries[k] = -code.entries[k];
  }
  return code;
}

}  // namespace petal
