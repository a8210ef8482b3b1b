#pragma once

#include <stdexcept>
#include <string>

namespace petal {

enum class Errc {
  empty_input,
  even_length,
  not_a_permutation,
  zero_modulus,
  invalid_petal_number,
  even_petal_number,
  index_out_of_range,
  empty_code,
  no_negative_entries,
  too_small,
  too_large,
  not_square,
  not_prime,
  internal_inconsistency,
};

// One exception type for everything the library can reject. Callers that
// need to distinguish bad input from a broken internal invariant (the CLI
// maps them to different exit statuses) branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace petal
