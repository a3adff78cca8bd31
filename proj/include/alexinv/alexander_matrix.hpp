#pragma once

#include <alexinv/laurent.hpp>
#include <alexinv/matrix.hpp>

#include <cstddef>
#include <vector>

namespace alexinv {

/// Matrix over Z[t1^+-1..tr^+-1]; every entry has the same arity r.
class AlexanderMatrix {
 public:
  AlexanderMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
      : arity_(arity), entries_(rows, cols, LaurentPoly(arity)) {}

  static AlexanderMatrix from_rows(std::size_t arity,
                                   const std::vector<std::vector<LaurentPoly>>& rows);

  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  std::size_t arity() const noexcept { return arity_; }

  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
  void set(std::size_t i, std::size_t j, LaurentPoly value);

  const Matrix<LaurentPoly>& entries() const noexcept { return entries_; }

  friend bool operator==(const AlexanderMatrix&, const AlexanderMatrix&) = default;

 private:
  std::size_t arity_;
  Matrix<LaurentPoly> entries_;
};

/// Determinant of a square matrix of Laurent polynomials (Bareiss, exact).
LaurentPoly determinant(const Matrix<LaurentPoly>& square, std::size_t arity);

}  // namespace alexinv
