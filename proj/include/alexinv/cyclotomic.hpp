#pragma once

// Exact arithmetic in Z[zeta_m] inside the cyclotomic field Q(zeta_m).

#include <alexinv/integer.hpp>
#include <alexinv/laurent.hpp>
#include <alexinv/matrix.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace alexinv {

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

class CyclotomicField {
 public:
  /// Element of Z[zeta]: coefficients of 1, zeta, ..., zeta^(degree-1).
  using Element = std::vector<Integer>;

  explicit CyclotomicField(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }

  Element zero() const { return Element(degree(), 0); }
  Element one() const;
  Element zeta_power(std::int64_t k) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  static bool is_zero(const Element& a);

  /// f(zeta^powers[0], ..., zeta^powers[n-1]).
  Element evaluate(const LaurentPoly& f, std::span<const std::int64_t> powers) const;

  /// Rank over Q(zeta) by fraction-free elimination.
  std::size_t rank(Matrix<Element> m) const;

 private:
  Element reduce(std::vector<Integer> coeffs) const;

  unsigned order_;
  std::vector<Integer> phi_;
};

}  // namespace alexinv
