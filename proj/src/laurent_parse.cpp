#include <alexinv/errors.hpp>
#include <alexinv/laurent.hpp>

#include <cctype>
#include <limits>

namespace alexinv {

std::string variable_name(std::size_t arity, std::size_t index) {
  if (arity == 1) return "t";
  return "t" + std::to_string(index + 1);
}

namespace {

// Largest power applied to a polynomial that is not a single monomial.
constexpr Exponent kMaxPolynomialPower = 256;

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  LaurentPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    LaurentPoly result = expression();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  // expression := term (('+' | '-') term)*
  LaurentPoly expression() {
    LaurentPoly acc = term();
    while (true) {
      skip_space();
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  // term := unary ('*' unary)*
  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (true) {
      skip_space();
      if (!consume('*')) return acc;
      acc = acc * unary();
    }
  }

  // unary := ('-' | '+') unary | power
  LaurentPoly unary() {
    skip_space();
    if (consume('-')) return -unary();
    if (consume('+')) return unary();
    return power();
  }

  // power := primary ('^' signed-integer)?
  LaurentPoly power() {
    LaurentPoly base = primary();
    skip_space();
    if (!consume('^')) return base;
    skip_space();
    const std::size_t where = pos_;
    bool negative = false;
    if (consume('-'))
      negative = true;
    else
      consume('+');
    Integer magnitude = digits();
    if (magnitude > kMaxExponent) throw ParseError("exponent overflow", where);
    Exponent e = magnitude.get_si();
    if (negative) e = -e;
    return raise(base, e, where);
  }

  LaurentPoly primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      skip_space();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(arity_, digits());
    if (c == 't') return variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  LaurentPoly variable() {
    const std::size_t where = pos_;
    ++pos_;  // 't'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (arity_ != 1) throw ParseError("bare 't' is only valid in one variable; use t1..tn", where);
      return LaurentPoly::variable(arity_, 0);
    }
    const Integer index = digits();
    if (index < 1 || index > arity_)
      throw ParseError("variable index out of range for arity " + std::to_string(arity_), where);
    return LaurentPoly::variable(arity_, index.get_ui() - 1);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly raise(const LaurentPoly& base, Exponent e, std::size_t where) {
    if (base.is_monomial()) {
      const auto& [exp, c] = *base.terms().begin();
      if (e < 0 && abs_value(c) != 1)
        throw ParseError("negative power of a non-unit", where);
      ExponentVector scaled(exp.size());
      for (std::size_t i = 0; i < exp.size(); ++i) {
        Exponent r;
        if (__builtin_mul_overflow(exp[i], e, &r) || r > kMaxExponent || r < -kMaxExponent)
          throw ParseError("exponent overflow", where);
        scaled[i] = r;
      }
      Integer coef;
      mpz_pow_ui(coef.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      return LaurentPoly::monomial(scaled, coef);
    }
    if (base.is_zero()) {
      if (e < 0) throw ParseError("negative power of zero", where);
      return e == 0 ? LaurentPoly::constant(arity_, 1) : base;
    }
    if (e < 0) throw ParseError("negative power of a non-unit", where);
    if (e > kMaxPolynomialPower) throw ParseError("exponent too large for a polynomial base", where);
    LaurentPoly out = LaurentPoly::constant(arity_, 1);
    for (Exponent k = 0; k < e; ++k) out = out * base;
    return out;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::size_t arity) {
  if (arity == 0) throw ArityError("parse_poly: arity must be at least 1");
  return PolyParser(text, arity).parse();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variable_name(f.arity(), i);
      if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
    }
    const Integer magnitude = abs_value(c);
    if (monomial.empty())
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += monomial;
    else
      out += magnitude.get_str() + "*" + monomial;
  }
  return out;
}

}  // namespace alexinv
