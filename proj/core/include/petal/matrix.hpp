#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace petal {

// Dense row-major matrix with machine-integer entries. Coloring matrices
// have entries in {-1, 0, 1, 2}; exactdet widens to arbitrary precision
// internally, so int64 is plenty for everything stored here.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int i, int j) {
    return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
  std::int64_t at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
  bool square() const noexcept { return rows == cols; }
};

}  // namespace petal
