#include <alexinv/alexander.hpp>
#include <alexinv/errors.hpp>
#include <alexinv/fox.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace alexinv {
namespace {

// Calls fn on every k-subset of {0..n-1}, in lexicographic order, until fn
// returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

LaurentPoly minor(const AlexanderMatrix& a, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  Matrix<LaurentPoly> sub(rows.size(), cols.size(), LaurentPoly(a.arity()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a.at(rows[i], cols[j]);
  return determinant(sub, a.arity());
}

// Visits every size x size minor until fn returns false.
void for_each_minor(const AlexanderMatrix& a, std::size_t size,
                    const std::function<bool(const LaurentPoly&)>& fn) {
  if (size > a.rows() || size > a.cols()) return;
  bool running = true;
  for_each_subset(a.rows(), size, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), size, [&](const std::vector<std::size_t>& cols) {
      running = fn(minor(a, rows, cols));
      return running;
    });
    return running;
  });
}

bool is_one(const LaurentPoly& f) { return f == LaurentPoly::constant(f.arity(), 1); }

}  // namespace

std::string to_string(Convention c) {
  return c == Convention::RelativeFirstMinors ? "relative-first-minors" : "order-zero-direct";
}

std::vector<LaurentPoly> elementary_minors(const AlexanderMatrix& a, std::size_t size) {
  std::vector<LaurentPoly> out;
  for_each_minor(a, size, [&](const LaurentPoly& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

LaurentPoly minors_gcd(const AlexanderMatrix& a, std::size_t size) {
  LaurentPoly g(a.arity());
  for_each_minor(a, size, [&](const LaurentPoly& m) {
    g = gcd(g, m);
    return !is_one(g);
  });
  return g;
}

AlexanderPolynomial relative_first_minors(const AlexanderMatrix& fox) {
  if (fox.cols() == 0) throw PreconditionError("relative_first_minors: matrix has no columns");
  return {minors_gcd(fox, fox.cols() - 1), Convention::RelativeFirstMinors};
}

AlexanderPolynomial alexander_polynomial(const Presentation& p) {
  return relative_first_minors(fox_matrix(p));
}

AlexanderPolynomial order_zero_direct(const AlexanderMatrix& a) {
  return {minors_gcd(a, a.cols()), Convention::OrderZeroDirect};
}

LevineHypotheses check_levine_hypotheses(const LaurentPoly& lambda) {
  LevineHypotheses h;
  h.trace = trace(lambda);
  h.trace_nonzero = h.trace != 0;
  h.is_symmetric = !lambda.is_zero() && involution(lambda) == lambda;
  return h;
}

AlexanderMatrix levine_extend(const AlexanderMatrix& a, const LaurentPoly& lambda) {
  if (lambda.arity() != a.arity()) throw ArityError("levine_extend: arity mismatch");
  const LevineHypotheses h = check_levine_hypotheses(lambda);
  if (!h.satisfied()) {
    std::string failed;
    if (!h.is_symmetric) failed = "lambda is not symmetric";
    if (!h.trace_nonzero) failed += std::string(failed.empty() ? "" : "; ") + "trace(lambda) = 0";
    throw PreconditionError("levine_extend: " + failed);
  }
  AlexanderMatrix out(a.rows() + 1, a.cols() + 1, a.arity());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  out.set(a.rows(), a.cols(), lambda);
  return out;
}

B1OneCharacterization characterize_b1_one(const LaurentPoly& lambda) {
  if (lambda.arity() != 1) throw ArityError("characterize_b1_one: expected one variable");
  B1OneCharacterization out;
  out.symmetry = classify_symmetry(lambda);
  out.trace = trace(lambda);
  out.realizable = out.symmetry.unit_symmetric() && out.trace != 0;
  if (out.realizable) {
    const LaurentPoly symmetric = out.symmetry.witness->as_poly() * lambda;
    AlexanderMatrix seed(1, 1, 1);
    seed.set(0, 0, LaurentPoly::constant(1, 1));
    out.witness = levine_extend(seed, symmetric);
  }
  return out;
}

bool check_blanchfield(const AlexanderPolynomial& delta) {
  return classify_symmetry(delta.poly).mod_unit_symmetric();
}

Integer torsion_order_b1_one(const AlexanderPolynomial& delta) {
  if (delta.poly.arity() != 1) throw ArityError("torsion_order_b1_one: expected one variable");
  return abs_value(trace(delta.poly));
}

Integer InvariantReport::torsion_order() const {
  Integer product = 1;
  for (const auto& t : torsion) product *= t;
  return product;
}

bool InvariantReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

InvariantReport full_report(const Presentation& p) {
  const AbelianizationData ab = abelianize(p);
  if (ab.rank == 0) throw PreconditionError("full_report: first Betti number is 0");
  InvariantReport r;
  r.b1 = ab.rank;
  r.torsion = ab.torsion;
  r.gen_images = ab.gen_images;
  r.delta = relative_first_minors(fox_matrix(p, ab));
  if (r.delta.is_zero()) return r;

  r.symmetry = classify_symmetry(r.delta.poly);
  r.trace = trace(r.delta.poly);
  r.checks["blanchfield"] = r.symmetry->mod_unit_symmetric();
  if (r.b1 == 1) {
    r.checks["torsion_order_matches"] = abs_value(*r.trace) == r.torsion_order();
    if (*r.trace != 0) {
      r.checks["unit_symmetric"] = r.symmetry->unit_symmetric();
      r.checks["even_degree_span"] = r.delta.poly.degree_span(0) % 2 == 0;
    }
  }
  return r;
}

nlohmann::json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return nlohmann::json(x.get_si());
  return nlohmann::json(x.get_str());
}

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["b1"] = r.b1;
  j["torsion"] = nlohmann::json::array();
  for (const auto& t : r.torsion) j["torsion"].push_back(integer_json(t));
  j["delta"] = to_string(r.delta.poly);
  j["convention"] = to_string(r.delta.convention);
  j["normalized"] = true;
  j["symmetry"] = r.symmetry ? nlohmann::json(to_string(r.symmetry->kind)) : nlohmann::json(nullptr);
  j["trace"] = r.trace ? integer_json(*r.trace) : nlohmann::json(nullptr);
  j["gen_images"] = nlohmann::json::array();
  for (const auto& img : r.gen_images) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : img) row.push_back(integer_json(x));
    j["gen_images"].push_back(row);
  }
  j["checks"] = nlohmann::json::object();
  for (const auto& [name, ok] : r.checks) j["checks"][name] = ok;
  return j;
}

}  // namespace alexinv
