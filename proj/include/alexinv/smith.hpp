#pragma once

#include <alexinv/integer.hpp>
#include <alexinv/matrix.hpp>

#include <cstddef>
#include <vector>

namespace alexinv {

using IntMatrix = Matrix<Integer>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
/// V_inverse is carried along so callers can map back to the original basis.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith form without tracking the transforms.
std::vector<Integer> smith_diagonal(IntMatrix a);

/// Rank over F_p.
std::size_t rank_mod_p(const IntMatrix& a, unsigned p);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(IntMatrix a);

}  // namespace alexinv
