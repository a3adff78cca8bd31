#pragma once

// Free differential calculus.

#include <alexinv/alexander_matrix.hpp>
#include <alexinv/presentation.hpp>

#include <map>
#include <vector>

namespace alexinv {

/// Element of the integral group ring of the free group.
class FreeGroupRingElement {
 public:
  using Terms = std::map<Word, Integer>;

  void add(const Word& w, const Integer& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FreeGroupRingElement& operator+=(const FreeGroupRingElement& other);
  FreeGroupRingElement& operator-=(const FreeGroupRingElement& other);
  /// Right multiplication by a group element.
  FreeGroupRingElement times(const Word& w) const;

  friend bool operator==(const FreeGroupRingElement&, const FreeGroupRingElement&) = default;

 private:
  Terms terms_;
};

/// d w / d x_generator.
FreeGroupRingElement fox_derivative(const Word& w, std::size_t generator);

/// Image under the ring map induced by x_j -> t^images[j].
LaurentPoly abelian_image(const FreeGroupRingElement& e,
                          const std::vector<std::vector<Integer>>& images, std::size_t arity);

/// Entry (i, j) is the image of d r_i / d x_j under the free-abelianization
/// map. Throws PreconditionError when b1 = 0.
AlexanderMatrix fox_matrix(const Presentation& p);
AlexanderMatrix fox_matrix(const Presentation& p, const AbelianizationData& ab);

}  // namespace alexinv
