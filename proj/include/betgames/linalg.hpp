// Copyright 2026 The betgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETGAMES_LINALG_HPP
#define BETGAMES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "betgames/numeric.hpp"

namespace betgames {

enum class SolveStatus { unique, underdetermined, inconsistent };

template <class R>
struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<R> x;
};

// Gauss-Jordan elimination on a (possibly non-square) system; exact in
// rational mode. Small systems only (support enumeration).
template <class R>
LinearSolution<R> solve_linear(std::vector<std::vector<R>> a, std::vector<R> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pick = rank;
    if constexpr (numeric_traits<R>::is_exact) {
      while (pick < rows && a[pick][col] == R(0)) ++pick;
    } else {
      std::size_t best = rank;
      for (std::size_t r = rank; r < rows; ++r)
        if (numeric_traits<R>::abs(a[r][col]) > numeric_traits<R>::abs(a[best][col])) best = r;
      pick = numeric_traits<R>::abs(a[best][col]) > R(1e-12) ? best : rows;
    }
    if (pick >= rows) continue;
    std::swap(a[rank], a[pick]);
    std::swap(b[rank], b[pick]);
    const R inv = a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] /= inv;
    b[rank] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const R f = a[r][col];
      if (f == R(0)) continue;
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row[rank] = static_cast<int>(col);
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  LinearSolution<R> out;
  const R zero_tol = numeric_traits<R>::is_exact ? R(0) : R(1e-9);
  for (std::size_t r = rank; r < rows; ++r)
    if (numeric_traits<R>::abs(b[r]) > zero_tol) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  if (rank < cols) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.x.assign(cols, R(0));
  for (std::size_t c = 0; c < cols; ++c) out.x[c] = b[pivot_row_of_col[c]];
  return out;
}

}  // namespace betgames

#endif  // BETGAMES_LINALG_HPP
