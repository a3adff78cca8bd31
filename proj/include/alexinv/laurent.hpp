#pragma once

// Integer-coefficient Laurent polynomials in n commuting variables t1..tn,
// i.e. the group ring Z[H] of a free abelian group H of rank n.

#include <alexinv/integer.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alexinv {

using Exponent = std::int64_t;

/// Exponents of t1..tn for one monomial t^I. Ordered lexicographically.
using ExponentVector = std::vector<Exponent>;

/// Exponents are kept within +-2^31 so sums of two never overflow.
inline constexpr Exponent kMaxExponent = Exponent{1} << 31;

class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Integer>;

  /// The zero polynomial of the given arity (>= 1).
  explicit LaurentPoly(std::size_t arity);

  static LaurentPoly constant(std::size_t arity, const Integer& c);
  static LaurentPoly monomial(const ExponentVector& exponents, const Integer& c);
  /// t_index (0-based index).
  static LaurentPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  Integer coefficient(const ExponentVector& exponents) const;
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Adds c*t^exponents; a resulting zero coefficient is pruned.
  void add_term(const ExponentVector& exponents, const Integer& c);

  /// Componentwise minimum / maximum exponent over the support (nonzero only).
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;
  /// max - min exponent of variable `index`; 0 for the zero polynomial.
  Exponent degree_span(std::size_t index) const;

  /// t^shift * this.
  LaurentPoly shifted(const ExponentVector& shift) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  Terms terms_;
};

/// A unit of Z[H]: sign * t^shift.
struct MonomialUnit {
  int sign = 1;
  ExponentVector shift;

  LaurentPoly as_poly() const;
  friend bool operator==(const MonomialUnit&, const MonomialUnit&) = default;
};

enum class Symmetry { Symmetric, UnitSymmetric, ModUnitSymmetric, Asymmetric };

/// Strongest symmetry notion that applies, with its witnessing unit u:
///  - Symmetric / UnitSymmetric: u*f is symmetric (u = 1 for Symmetric);
///  - ModUnitSymmetric: involution(f) == u*f;
///  - Asymmetric: no witness.
struct SymmetryClass {
  Symmetry kind = Symmetry::Asymmetric;
  std::optional<MonomialUnit> witness;

  /// True for Symmetric and UnitSymmetric.
  bool unit_symmetric() const noexcept {
    return kind == Symmetry::Symmetric || kind == Symmetry::UnitSymmetric;
  }
  bool mod_unit_symmetric() const noexcept { return kind != Symmetry::Asymmetric; }
};

std::string to_string(Symmetry s);

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g);

/// The ring automorphism induced by h -> h^{-1}: every exponent negated.
LaurentPoly involution(const LaurentPoly& f);

/// Sum of coefficients, i.e. f(1, ..., 1).
Integer trace(const LaurentPoly& f);

/// Canonical representative of the orbit {+-t^I f}: every variable's minimum
/// exponent is 0 and the lexicographically smallest term has a positive
/// coefficient. Zero maps to zero.
LaurentPoly normalize(const LaurentPoly& f);

/// Throws PreconditionError on the zero polynomial.
SymmetryClass classify_symmetry(const LaurentPoly& f);

/// a / b when b divides a in Z[t1^+-1..tn^+-1]; nullopt otherwise.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Normalized greatest common divisor. gcd(f, 0) = normalize(f), gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

/// Exact integer  prod_{0 <= e_i < p_i} f(rho_1^e_1, ..., rho_n^e_n)  with
/// rho_i a primitive p_i-th root of unity.
Integer root_of_unity_norm(const LaurentPoly& f, std::span<const unsigned> primes);

/// Grammar: integers, `t` (arity 1) or `t1`..`tn`, `+ - *`, `^` with an
/// optionally negative integer exponent, parentheses.
LaurentPoly parse_poly(std::string_view text, std::size_t arity);

/// Terms in descending lexicographic exponent order, e.g. "t^2 - 4*t + 1".
std::string to_string(const LaurentPoly& f);

/// Name of variable `index` (0-based) in a ring of the given arity.
std::string variable_name(std::size_t arity, std::size_t index);

}  // namespace alexinv
