#include <alexinv/errors.hpp>
#include <alexinv/fox.hpp>

#include <stdexcept>

namespace alexinv {

AlexanderMatrix AlexanderMatrix::from_rows(std::size_t arity,
                                           const std::vector<std::vector<LaurentPoly>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  AlexanderMatrix m(rows.size(), cols, arity);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("AlexanderMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void AlexanderMatrix::set(std::size_t i, std::size_t j, LaurentPoly value) {
  if (value.arity() != arity_) throw ArityError("AlexanderMatrix: entry arity mismatch");
  entries_.at(i, j) = std::move(value);
}

LaurentPoly determinant(const Matrix<LaurentPoly>& square, std::size_t arity) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = square.rows();
  if (n == 0) return LaurentPoly::constant(arity, 1);
  Matrix<LaurentPoly> a = square;
  bool negate = false;
  LaurentPoly previous = LaurentPoly::constant(arity, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return LaurentPoly(arity);
      a.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = divide_exact(numerator, previous);
        if (!q) throw std::logic_error("determinant: Bareiss division was not exact");
        a(i, j) = std::move(*q);
      }
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

void FreeGroupRingElement::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeGroupRingElement& FreeGroupRingElement::operator+=(const FreeGroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

FreeGroupRingElement& FreeGroupRingElement::operator-=(const FreeGroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

FreeGroupRingElement FreeGroupRingElement::times(const Word& w) const {
  FreeGroupRingElement out;
  for (const auto& [u, c] : terms_) out.add(u * w, c);
  return out;
}

FreeGroupRingElement fox_derivative(const Word& w, std::size_t generator) {
  // d(uv) = du + u dv, dx/dx = 1, d(x^-1)/dx = -x^-1.
  FreeGroupRingElement out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].generator != generator) continue;
    if (letters[i].exponent > 0)
      out.add(reduce_word(std::span(letters.data(), i)), 1);
    else
      out.add(reduce_word(std::span(letters.data(), i + 1)), -1);
  }
  return out;
}

LaurentPoly abelian_image(const FreeGroupRingElement& e,
                          const std::vector<std::vector<Integer>>& images, std::size_t arity) {
  LaurentPoly out(arity);
  ExponentVector exponent(arity);
  for (const auto& [w, c] : e.terms()) {
    std::fill(exponent.begin(), exponent.end(), 0);
    for (const auto& l : w.letters()) {
      const auto& img = images.at(l.generator);
      for (std::size_t k = 0; k < arity; ++k) exponent[k] += l.exponent * img[k].get_si();
    }
    out.add_term(exponent, c);
  }
  return out;
}

AlexanderMatrix fox_matrix(const Presentation& p) { return fox_matrix(p, abelianize(p)); }

AlexanderMatrix fox_matrix(const Presentation& p, const AbelianizationData& ab) {
  if (ab.rank == 0) throw PreconditionError("fox_matrix: first Betti number is 0");
  AlexanderMatrix m(p.relator_count(), p.generator_count(), ab.rank);
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (std::size_t j = 0; j < p.generator_count(); ++j)
      m.set(i, j, abelian_image(fox_derivative(p.relators()[i], j), ab.gen_images, ab.rank));
  return m;
}

}  // namespace alexinv
