#pragma once

// Alexander polynomials from presentation matrices, the block-diagonal
// extension by a symmetric polynomial, and the one-variable checks.

#include <alexinv/alexander_matrix.hpp>
#include <alexinv/laurent.hpp>
#include <alexinv/presentation.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alexinv {

enum class Convention {
  /// gcd of the (n-1)-minors of an n-column Fox matrix.
  RelativeFirstMinors,
  /// gcd of the n-minors of a module presentation matrix with n columns.
  OrderZeroDirect,
};

std::string to_string(Convention c);

struct AlexanderPolynomial {
  LaurentPoly poly{1};  // always normalized
  Convention convention = Convention::RelativeFirstMinors;

  bool is_zero() const noexcept { return poly.is_zero(); }
  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

/// All size x size minors, rows and columns taken in lexicographic order of
/// index subsets. size 0 gives {1}; a size larger than either dimension
/// gives the empty list.
std::vector<LaurentPoly> elementary_minors(const AlexanderMatrix& a, std::size_t size);

/// Normalized gcd of all size x size minors; 1 for size 0, 0 when none exist.
LaurentPoly minors_gcd(const AlexanderMatrix& a, std::size_t size);

/// Relative convention on a Fox matrix: size = cols - 1.
AlexanderPolynomial relative_first_minors(const AlexanderMatrix& fox);

/// Throws PreconditionError when b1 = 0.
AlexanderPolynomial alexander_polynomial(const Presentation& p);

/// Module presentation matrix given directly. Fewer rows than columns means
/// implicit zero rows, hence 0.
AlexanderPolynomial order_zero_direct(const AlexanderMatrix& a);

struct LevineHypotheses {
  bool is_symmetric = false;
  bool trace_nonzero = false;
  Integer trace;

  bool satisfied() const noexcept { return is_symmetric && trace_nonzero; }
};

LevineHypotheses check_levine_hypotheses(const LaurentPoly& lambda);

/// diag(A, lambda). Throws PreconditionError naming each failed hypothesis,
/// ArityError when lambda lives in a different ring.
AlexanderMatrix levine_extend(const AlexanderMatrix& a, const LaurentPoly& lambda);

struct B1OneCharacterization {
  bool realizable = false;
  SymmetryClass symmetry;
  Integer trace;
  /// diag(1, u*lambda) with u*lambda symmetric; present iff realizable.
  std::optional<AlexanderMatrix> witness;
};

/// Throws ArityError unless lambda has one variable, PreconditionError on 0.
B1OneCharacterization characterize_b1_one(const LaurentPoly& lambda);

/// Whether delta is at least mod unit symmetric. Throws on zero.
bool check_blanchfield(const AlexanderPolynomial& delta);

/// |delta(1)|. Throws ArityError unless delta has one variable.
Integer torsion_order_b1_one(const AlexanderPolynomial& delta);

struct InvariantReport {
  std::size_t b1 = 0;
  std::vector<Integer> torsion;
  AlexanderPolynomial delta;
  /// Absent when delta = 0.
  std::optional<SymmetryClass> symmetry;
  std::optional<Integer> trace;
  std::vector<std::vector<Integer>> gen_images;
  std::map<std::string, bool> checks;

  Integer torsion_order() const;
  bool all_checks_pass() const;
};

/// Throws PreconditionError when b1 = 0.
InvariantReport full_report(const Presentation& p);

/// Small integers as JSON numbers, anything wider as a decimal string.
nlohmann::json integer_json(const Integer& x);
nlohmann::json to_json(const InvariantReport& r);

}  // namespace alexinv
