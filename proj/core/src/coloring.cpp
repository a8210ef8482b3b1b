#include "petal/coloring.hpp"

#include <string>

namespace petal {

ArcDecomposition split_arcs(const SignedGaussCode& code) {
  const int len = static_cast<int>(code.entries.size());
  if (len == 0)
    fail(Errc::empty_code,
         "petal number " + std::to_string(code.petal_number) + " yields a crossingless code");
  int start = -1;
  for (int i = 0; i < len; ++i) {
    if (code.entries[static_cast<std::size_t>(i)] < 0) {
      start = i;
      break;
    }
  }
  if (start < 0) fail(Errc::no_negative_entries, "signed code has no understrand entries");

  ArcDecomposition dec;
  dec.rotation_offset = start;
  std::vector<int> current{code.entries[static_cast<std::size_t>(start)]};
  for (int step = 1; step < len; ++step) {
    const int e = code.entries[static_cast<std::size_t>((start + step) % len)];
    current.push_back(e);
    if (e < 0) {
      dec.arcs.push_back(current);
      current = {e};
    }
  }
  current.push_back(code.entries[static_cast<std::size_t>(start)]);
  dec.arcs.push_back(std::move(current));
  return dec;
}

ColoringMatrix build_coloring_matrix(const SignedGaussCode& code) {
  const ArcDecomposition dec = split_arcs(code);
  const int p = code.petal_number;
  const int n = p * (p - 3) / 2;
  if (static_cast<int>(dec.arcs.size()) != n)
    fail(Errc::internal_inconsistency,
         "expected " + std::to_string(n) + " arcs, found " + std::to_string(dec.arcs.size()));

  // Locate the unique arc passing over each crossing.
  std::vector<int> over_arc(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> over_count(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 0; a < n; ++a) {
    const std::vector<int>& arc = dec.arcs[static_cast<std::size_t>(a)];
    for (std::size_t i = 1; i + 1 < arc.size(); ++i) {
      const int e = arc[i];
      if (e < 1 || e > n)
        fail(Errc::internal_inconsistency, "unexpected interior entry " + std::to_string(e));
      over_arc[static_cast<std::size_t>(e)] = a;
      ++over_count[static_cast<std::size_t>(e)];
    }
  }

  ColoringMatrix m(n, n);
  for (int label = 1; label <= n; ++label) {
    if (over_count[static_cast<std::size_t>(label)] != 1)
      fail(Errc::internal_inconsistency,
           "crossing " + std::to_string(label) + " is interior to " +
               std::to_string(over_count[static_cast<std::size_t>(label)]) + " arcs");
    m.at(label - 1, over_arc[static_cast<std::size_t>(label)]) += 2;
  }
  // Contributions accumulate, so a crossing whose over-arc is also one of
  // its under-arcs still produces a zero row sum.
  for (int a = 0; a < n; ++a) {
    const std::vector<int>& arc = dec.arcs[static_cast<std::size_t>(a)];
    m.at(-arc.front() - 1, a) -= 1;
    m.at(-arc.back() - 1, a) -= 1;
  }
  return m;
}

IntMatrix strike(const IntMatrix& m, int row, int col) {
  if (row < 0 || row >= m.rows || col < 0 || col >= m.cols)
    fail(Errc::index_out_of_range, "strike position outside matrix");
  IntMatrix out(m.rows - 1, m.cols - 1);
  for (int i = 0, oi = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

IntMatrix first_minor(const IntMatrix& m) {
  if (m.rows < 2 || m.cols < 2)
    fail(Errc::too_small, "matrix too small to take a first minor");
  return strike(m, 0, 0);
}

}  // namespace petal
