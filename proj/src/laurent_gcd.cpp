// Greatest common divisors in Z[t1^+-1, ..., tn^+-1].
//
// Monomial content is cleared first so everything below works in the
// polynomial ring Z[t1..tn]; that ring is handled recursively as
// Z[t1..t(v-1)][tv] with a primitive pseudo-remainder sequence in the main
// variable tv.

#include <alexinv/errors.hpp>
#include <alexinv/laurent.hpp>

#include <stdexcept>

namespace alexinv {
namespace {

constexpr std::size_t kNoVariable = static_cast<std::size_t>(-1);

Exponent degree_in(const LaurentPoly& f, std::size_t v) {
  Exponent d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[v]);
  return d;
}

// Highest-index variable that occurs with positive exponent in f or g.
std::size_t main_variable(const LaurentPoly& f, const LaurentPoly& g) {
  for (std::size_t v = f.arity(); v-- > 0;)
    if (degree_in(f, v) > 0 || degree_in(g, v) > 0) return v;
  return kNoVariable;
}

// Coefficient of tv^k, as a polynomial free of tv.
LaurentPoly coefficient_in(const LaurentPoly& f, std::size_t v, Exponent k) {
  LaurentPoly out(f.arity());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] != k) continue;
    ExponentVector r(e);
    r[v] = 0;
    out.add_term(r, c);
  }
  return out;
}

Integer integer_content(const LaurentPoly& f) {
  Integer g = 0;
  for (const auto& [e, c] : f.terms()) g = integer_gcd(g, c);
  return g;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division failed");
  return *q;
}

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

// gcd of the coefficients of f viewed as a polynomial in tv.
LaurentPoly content_in(const LaurentPoly& f, std::size_t v) {
  LaurentPoly g(f.arity());
  for (Exponent k = 0, d = degree_in(f, v); k <= d; ++k) {
    LaurentPoly c = coefficient_in(f, v, k);
    if (c.is_zero()) continue;
    g = polynomial_gcd(g, c);
    if (g.is_constant() && abs_value(g.coefficient(ExponentVector(f.arity(), 0))) == 1) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& f, std::size_t v) {
  if (f.is_zero()) return f;
  return exact_quotient(f, content_in(f, v));
}

// lc(b)^k * a  reduced modulo b in tv, for whatever k the elimination needs.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const Exponent db = degree_in(b, v);
  const LaurentPoly lb = coefficient_in(b, v, db);
  while (!a.is_zero()) {
    const Exponent da = degree_in(a, v);
    if (da < db) break;
    const LaurentPoly la = coefficient_in(a, v, da);
    ExponentVector shift(a.arity(), 0);
    shift[v] = da - db;
    a = lb * a - la * b.shifted(shift);
  }
  return a;
}

// gcd in Z[t1..tn] of polynomials with nonnegative exponents, up to sign.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t v = main_variable(a, b);
  if (v == kNoVariable)
    return LaurentPoly::constant(a.arity(), integer_gcd(integer_content(a), integer_content(b)));
  if (degree_in(a, v) == 0) return polynomial_gcd(a, content_in(b, v));
  if (degree_in(b, v) == 0) return polynomial_gcd(content_in(a, v), b);

  const LaurentPoly ca = content_in(a, v);
  const LaurentPoly cb = content_in(b, v);
  const LaurentPoly common_content = polynomial_gcd(ca, cb);
  LaurentPoly p = exact_quotient(a, ca);
  LaurentPoly q = exact_quotient(b, cb);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);

  while (true) {
    LaurentPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      q = LaurentPoly::constant(a.arity(), 1);
      break;
    }
    p = std::move(q);
    q = primitive_part(r, v);
  }
  return common_content * q;
}

LaurentPoly to_polynomial(const LaurentPoly& f) {
  ExponentVector shift = f.min_exponents();
  for (auto& x : shift) x = -x;
  return f.shifted(shift);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.arity() != g.arity()) throw ArityError("gcd: arity mismatch");
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  return normalize(polynomial_gcd(to_polynomial(f), to_polynomial(g)));
}

}  // namespace alexinv
