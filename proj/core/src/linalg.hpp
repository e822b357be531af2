#pragma once

// Internal: dense linear algebra over Q.

#include <vector>

#include "rdyn/poly.hpp"

namespace rdyn::linalg {

using Matrix = std::vector<std::vector<Q>>;

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Matrix& A) {
  std::vector<int> piv;
  if (A.empty()) return piv;
  const int rows = static_cast<int>(A.size()), cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[r], A[p]);
    Q inv = 1 / A[r][c];
    for (int j = c; j < cols; ++j) A[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Q f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  A.resize(r);
  return piv;
}

// Basis of {v : A v = 0}; A has ncols columns.
inline std::vector<std::vector<Q>> nullspace(Matrix A, int ncols) {
  for (auto& row : A) row.resize(ncols);
  std::vector<int> piv = rref(A);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Q>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rdyn::linalg
