#pragma once

#include <vector>

#include "petal/gausscode.hpp"
#include "petal/matrix.hpp"

namespace petal {

// Arc-sets of a signed Gauss code: each arc runs from one undercrossing
// to the next, with both negative endpoints included, so consecutive
// arcs share an endpoint. Arc numbering follows the traversal, which
// starts at the first negative entry of the code.
struct ArcDecomposition {
  std::vector<std::vector<int>> arcs;
  int rotation_offset = 0;  // index of the first negative entry
};

// The crossings-by-arcs integer matrix: row (label - 1) accumulates +2 on
// the arc passing over that crossing and -1 on each arc-slot ending or
// starting at it. Every row sums to zero and the all-ones vector is in
// the kernel, so the full determinant is always 0.
using ColoringMatrix = IntMatrix;

ArcDecomposition split_arcs(const SignedGaussCode& code);

ColoringMatrix build_coloring_matrix(const SignedGaussCode& code);

// Submatrix with row `row` and column `col` removed (0-based).
IntMatrix strike(const IntMatrix& m, int row, int col);

// strike(m, 0, 0); the knot determinant is |det| of this.
IntMatrix first_minor(const IntMatrix& m);

}  // namespace petal
