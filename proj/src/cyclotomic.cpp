#include <alexinv/cyclotomic.hpp>
#include <alexinv/errors.hpp>

#include <stdexcept>

namespace alexinv {
namespace {

// Quotient of a by the monic polynomial b; the remainder must vanish.
std::vector<Integer> divide_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // x^m - 1 = prod_{d | m} Phi_d(x)
  std::vector<Integer> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order), phi_(cyclotomic_polynomial(order)) {}

CyclotomicField::Element CyclotomicField::one() const {
  Element e = zero();
  e[0] = 1;
  return e;
}

CyclotomicField::Element CyclotomicField::reduce(std::vector<Integer> c) const {
  const std::size_t d = degree();
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    const Integer lead = c[k];
    for (std::size_t i = 0; i <= d; ++i) c[k - d + i] -= lead * phi_[i];
  }
  c.resize(d, 0);
  return c;
}

CyclotomicField::Element CyclotomicField::zeta_power(std::int64_t k) const {
  const std::int64_t m = order_;
  const std::int64_t r = ((k % m) + m) % m;
  std::vector<Integer> c(static_cast<std::size_t>(r) + 1, 0);
  c[r] = 1;
  return reduce(std::move(c));
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  std::vector<Integer> c(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return reduce(std::move(c));
}

bool CyclotomicField::is_zero(const Element& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

CyclotomicField::Element CyclotomicField::evaluate(const LaurentPoly& f,
                                                   std::span<const std::int64_t> powers) const {
  if (powers.size() != f.arity()) throw ArityError("CyclotomicField::evaluate: arity mismatch");
  const std::int64_t m = order_;
  std::vector<Integer> acc(order_, 0);
  for (const auto& [e, c] : f.terms()) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k = (k + (e[i] % m) * (powers[i] % m)) % m;
    k = (k + m) % m;
    acc[static_cast<std::size_t>(k)] += c;
  }
  return reduce(std::move(acc));
}

std::size_t CyclotomicField::rank(Matrix<Element> m) const {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    const Element p = m(rank, col);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const Element factor = m(i, col);
      Integer content = 0;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = sub(mul(p, m(i, j)), mul(factor, m(rank, j)));
        for (const auto& x : m(i, j)) content = integer_gcd(content, x);
      }
      if (content > 1)
        for (std::size_t j = col; j < m.cols(); ++j)
          for (auto& x : m(i, j)) x /= content;
    }
    ++rank;
  }
  return rank;
}

}  // namespace alexinv
