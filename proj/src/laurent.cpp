#include <alexinv/errors.hpp>
#include <alexinv/laurent.hpp>

#include <algorithm>
#include <stdexcept>

namespace alexinv {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_same_arity(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.arity() != b.arity())
    throw ArityError(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()) + ")");
}

Exponent checked_add(Exponent a, Exponent b) {
  const Exponent r = a + b;  // |a|,|b| <= 2^31, cannot overflow int64
  if (r > kMaxExponent || r < -kMaxExponent) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw ArityError("LaurentPoly: arity must be at least 1");
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const Integer& c) {
  LaurentPoly p(arity);
  p.add_term(ExponentVector(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exponents, const Integer& c) {
  LaurentPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityError("LaurentPoly::variable: index out of range");
  ExponentVector e(arity, 0);
  e[index] = 1;
  return monomial(e, 1);
}

Integer LaurentPoly::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

void LaurentPoly::add_term(const ExponentVector& exponents, const Integer& c) {
  if (exponents.size() != arity_)
    throw ArityError("LaurentPoly::add_term: exponent vector has wrong length");
  if (c == 0) return;
  for (Exponent x : exponents)
    if (x > kMaxExponent || x < -kMaxExponent) throw std::overflow_error("exponent overflow");
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw PreconditionError("min_exponents of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw PreconditionError("max_exponents of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

Exponent LaurentPoly::degree_span(std::size_t index) const {
  if (terms_.empty()) return 0;
  return max_exponents().at(index) - min_exponents().at(index);
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  if (shift.size() != arity_) throw ArityError("LaurentPoly::shifted: arity mismatch");
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    ExponentVector s(arity_);
    for (std::size_t i = 0; i < arity_; ++i) s[i] = checked_add(e[i], shift[i]);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_arity(*this, other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_arity(*this, other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b, "multiply");
  LaurentPoly out(a.arity_);
  ExponentVector s(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.arity_; ++i) s[i] = checked_add(ea[i], eb[i]);
      out.add_term(s, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly MonomialUnit::as_poly() const { return LaurentPoly::monomial(shift, sign); }

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "Symmetric";
    case Symmetry::UnitSymmetric: return "UnitSymmetric";
    case Symmetry::ModUnitSymmetric: return "ModUnitSymmetric";
    case Symmetry::Asymmetric: return "Asymmetric";
  }
  return "Asymmetric";
}

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly involution(const LaurentPoly& f) {
  LaurentPoly out(f.arity());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector n(e.size());
    std::transform(e.begin(), e.end(), n.begin(), [](Exponent x) { return -x; });
    out.add_term(n, c);
  }
  return out;
}

Integer trace(const LaurentPoly& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) sum += c;
  return sum;
}

LaurentPoly normalize(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  ExponentVector shift = f.min_exponents();
  for (auto& x : shift) x = -x;
  LaurentPoly g = f.shifted(shift);
  if (g.terms().begin()->second < 0) return -g;
  return g;
}

SymmetryClass classify_symmetry(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("classify_symmetry: zero polynomial has no unit orbit");
  const ExponentVector lo = f.min_exponents();
  const ExponentVector hi = f.max_exponents();
  ExponentVector shift(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) shift[i] = -(lo[i] + hi[i]);

  // involution(f) = +-t^J f can only hold for this J: both sides must have the
  // same support box.
  const LaurentPoly inv = involution(f);
  const LaurentPoly moved = f.shifted(shift);
  int sign = 0;
  if (inv == moved)
    sign = 1;
  else if (inv == -moved)
    sign = -1;
  if (sign == 0) return {Symmetry::Asymmetric, std::nullopt};

  const bool zero_shift = std::all_of(shift.begin(), shift.end(), [](Exponent x) { return x == 0; });
  const bool even_shift = std::all_of(shift.begin(), shift.end(), [](Exponent x) { return x % 2 == 0; });
  if (sign == 1 && zero_shift)
    return {Symmetry::Symmetric, MonomialUnit{1, ExponentVector(f.arity(), 0)}};
  if (sign == 1 && even_shift) {
    ExponentVector half(shift);
    for (auto& x : half) x /= 2;
    return {Symmetry::UnitSymmetric, MonomialUnit{1, half}};
  }
  return {Symmetry::ModUnitSymmetric, MonomialUnit{sign, shift}};
}

namespace {

// Lexicographic-leading-term division in Z[t1..tn] (nonnegative exponents).
// Succeeds exactly when b divides a.
std::optional<LaurentPoly> divide_polynomial(LaurentPoly a, const LaurentPoly& b) {
  const auto& [lead_exp, lead_coef] = *b.terms().rbegin();
  LaurentPoly quotient(a.arity());
  ExponentVector q_exp(a.arity());
  while (!a.is_zero()) {
    const auto& [e, c] = *a.terms().rbegin();
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (e[i] < lead_exp[i]) return std::nullopt;
      q_exp[i] = e[i] - lead_exp[i];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    const Integer q_coef = c / lead_coef;
    const LaurentPoly step = LaurentPoly::monomial(q_exp, q_coef);
    quotient += step;
    a -= step * b;
  }
  return quotient;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_arity(a, b, "divide_exact");
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return a;
  // Shift both into Z[t] with every minimum exponent 0; the quotient of such
  // polynomials, when it exists, is again such a polynomial.
  ExponentVector a_min = a.min_exponents();
  ExponentVector b_min = b.min_exponents();
  ExponentVector a_shift(a.arity()), b_shift(a.arity()), back(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    a_shift[i] = -a_min[i];
    b_shift[i] = -b_min[i];
    back[i] = a_min[i] - b_min[i];
  }
  auto q = divide_polynomial(a.shifted(a_shift), b.shifted(b_shift));
  if (!q) return std::nullopt;
  return q->shifted(back);
}

namespace {

// Elements of Z[x1..xn]/(Phi_p1(x1), ..., Phi_pn(xn)) stored as LaurentPoly
// with exponents reduced into [0, p_i - 2].
LaurentPoly reduce_cyclotomic(const LaurentPoly& f, std::span<const unsigned> primes) {
  LaurentPoly current(f.arity());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Exponent p = primes[i];
      r[i] = ((e[i] % p) + p) % p;
    }
    current.add_term(r, c);
  }
  // x^(p-1) = -(1 + x + ... + x^(p-2)) modulo Phi_p.
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const Exponent top = static_cast<Exponent>(primes[i]) - 1;
    LaurentPoly next(f.arity());
    for (const auto& [e, c] : current.terms()) {
      if (e[i] != top) {
        next.add_term(e, c);
        continue;
      }
      ExponentVector r(e);
      for (Exponent k = 0; k < top; ++k) {
        r[i] = k;
        next.add_term(r, -c);
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

Integer root_of_unity_norm(const LaurentPoly& f, std::span<const unsigned> primes) {
  if (primes.size() != f.arity())
    throw ArityError("root_of_unity_norm: need one prime per variable");
  for (unsigned p : primes)
    if (!is_prime(p)) throw std::invalid_argument("root_of_unity_norm: " + std::to_string(p) + " is not prime");
  if (f.is_zero()) return 0;

  const std::size_t n = f.arity();
  std::vector<unsigned> e(n, 0);
  LaurentPoly product = LaurentPoly::constant(n, 1);
  while (true) {
    // f(x1^e1, ..., xn^en)
    LaurentPoly factor(n);
    for (const auto& [exp, c] : f.terms()) {
      ExponentVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (exp[i] % static_cast<Exponent>(primes[i])) * e[i];
      factor.add_term(s, c);
    }
    product = reduce_cyclotomic(product * reduce_cyclotomic(factor, primes), primes);
    if (product.is_zero()) return 0;

    std::size_t i = 0;
    while (i < n && ++e[i] == primes[i]) e[i++] = 0;
    if (i == n) break;
  }
  if (!product.is_constant())
    throw std::logic_error("root_of_unity_norm: product of conjugates is not rational");
  return product.coefficient(ExponentVector(n, 0));
}

}  // namespace alexinv
