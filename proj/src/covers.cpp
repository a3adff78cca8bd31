#include <alexinv/covers.hpp>
#include <alexinv/cyclotomic.hpp>
#include <alexinv/errors.hpp>
#include <alexinv/fox.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace alexinv {

DeckGroup::DeckGroup(std::vector<unsigned> primes) : primes_(std::move(primes)), order_(1) {
  if (primes_.empty()) throw std::invalid_argument("DeckGroup: needs at least one factor");
  for (unsigned p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument("DeckGroup: " + std::to_string(p) + " is not prime");
    if (order_ > std::numeric_limits<std::size_t>::max() / p)
      order_ = std::numeric_limits<std::size_t>::max();
    else
      order_ *= p;
  }
}

DeckElement DeckGroup::add(const DeckElement& a, const DeckElement& b) const {
  DeckElement out(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) out[i] = (a[i] + b[i]) % primes_[i];
  return out;
}

DeckElement DeckGroup::negate(const DeckElement& a) const {
  DeckElement out(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) out[i] = (primes_[i] - a[i]) % primes_[i];
  return out;
}

std::size_t DeckGroup::index_of(const DeckElement& g) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) index = index * primes_[i] + g[i];
  return index;
}

DeckElement DeckGroup::element_at(std::size_t index) const {
  DeckElement g(primes_.size());
  for (std::size_t i = primes_.size(); i-- > 0;) {
    g[i] = static_cast<unsigned>(index % primes_[i]);
    index /= primes_[i];
  }
  return g;
}

CoverMap::CoverMap(Presentation base, DeckGroup deck, std::vector<DeckElement> assignment)
    : base_(std::move(base)), deck_(std::move(deck)), assignment_(std::move(assignment)) {
  if (assignment_.size() != base_.generator_count())
    throw std::invalid_argument("CoverMap: one image per generator required");
  for (const auto& g : assignment_) {
    if (g.size() != deck_.dimension()) throw std::invalid_argument("CoverMap: image has wrong dimension");
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] >= deck_.primes()[i]) throw std::invalid_argument("CoverMap: image coordinate out of range");
  }
  for (std::size_t i = 0; i < base_.relator_count(); ++i)
    if (image(base_.relators()[i]) != deck_.identity())
      throw PreconditionError("CoverMap: relator " + std::to_string(i + 1) + " does not map to 0");

  // Coordinates belonging to different primes are independent, so the images
  // generate iff they span each F_p^k block.
  const std::set<unsigned> distinct(deck_.primes().begin(), deck_.primes().end());
  for (unsigned p : distinct) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < deck_.dimension(); ++i)
      if (deck_.primes()[i] == p) coords.push_back(i);
    IntMatrix m(assignment_.size(), coords.size(), 0);
    for (std::size_t j = 0; j < assignment_.size(); ++j)
      for (std::size_t c = 0; c < coords.size(); ++c) m(j, c) = assignment_[j][coords[c]];
    if (rank_mod_p(m, p) != coords.size())
      throw PreconditionError("CoverMap: generator images do not generate the deck group");
  }
}

DeckElement CoverMap::image(const Word& w) const {
  DeckElement g = deck_.identity();
  for (const auto& l : w.letters())
    g = deck_.add(g, l.exponent > 0 ? assignment_[l.generator] : deck_.negate(assignment_[l.generator]));
  return g;
}

bool Character::trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

std::vector<Character> all_characters(const DeckGroup& deck) {
  std::vector<Character> out;
  out.reserve(deck.order());
  for (std::size_t k = 0; k < deck.order(); ++k) out.push_back(Character{deck.element_at(k)});
  return out;
}

std::size_t mod_p_betti(const Presentation& p, unsigned prime) {
  if (!is_prime(prime)) throw std::invalid_argument("mod_p_betti: " + std::to_string(prime) + " is not prime");
  return p.generator_count() - rank_mod_p(exponent_sum_matrix(p), prime);
}

namespace {

unsigned residue(const Integer& x, unsigned p) {
  return static_cast<unsigned>(floor_mod(x, Integer(p)).get_ui());
}

}  // namespace

CoverMap mod_p_cover(const Presentation& p, unsigned prime) {
  if (!is_prime(prime)) throw std::invalid_argument("mod_p_cover: " + std::to_string(prime) + " is not prime");
  const AbelianizationData ab = abelianize(p);
  std::vector<std::size_t> torsion_coords;
  for (std::size_t k = 0; k < ab.torsion.size(); ++k)
    if (mpz_divisible_ui_p(ab.torsion[k].get_mpz_t(), prime)) torsion_coords.push_back(k);
  const std::size_t d = ab.rank + torsion_coords.size();
  if (d == 0) throw PreconditionError("mod_p_cover: H1(G; F_" + std::to_string(prime) + ") = 0");

  std::vector<DeckElement> assignment(p.generator_count());
  for (std::size_t j = 0; j < p.generator_count(); ++j) {
    for (std::size_t c = 0; c < ab.rank; ++c) assignment[j].push_back(residue(ab.gen_images[j][c], prime));
    for (std::size_t k : torsion_coords) assignment[j].push_back(residue(ab.torsion_images[j][k], prime));
  }
  return CoverMap(p, DeckGroup(std::vector<unsigned>(d, prime)), std::move(assignment));
}

CoverMap free_abelian_cover(const Presentation& p, const std::vector<unsigned>& primes) {
  const AbelianizationData ab = abelianize(p);
  if (ab.rank == 0) throw PreconditionError("free_abelian_cover: first Betti number is 0");
  if (primes.size() != ab.rank)
    throw ArityError("free_abelian_cover: expected " + std::to_string(ab.rank) + " primes, got " +
                     std::to_string(primes.size()));
  DeckGroup deck(primes);
  std::vector<DeckElement> assignment(p.generator_count(), DeckElement(primes.size()));
  for (std::size_t j = 0; j < p.generator_count(); ++j)
    for (std::size_t i = 0; i < primes.size(); ++i) assignment[j][i] = residue(ab.gen_images[j][i], primes[i]);
  return CoverMap(p, std::move(deck), std::move(assignment));
}

AbelianizationData cover_homology(const CoverPresentation& cp) { return abelianize(cp.presentation); }

std::size_t char_rank(const AlexanderMatrix& a, const Character& chi, const DeckGroup& deck) {
  if (a.arity() != deck.dimension() || chi.exponents.size() != deck.dimension())
    throw ArityError("char_rank: matrix arity, character and deck dimension differ");
  unsigned m = 1;
  for (std::size_t i = 0; i < deck.dimension(); ++i)
    if (chi.exponents[i] % deck.primes()[i] != 0) m = std::lcm(m, deck.primes()[i]);
  std::vector<std::int64_t> powers(deck.dimension(), 0);
  for (std::size_t i = 0; i < deck.dimension(); ++i)
    if (m % deck.primes()[i] == 0) powers[i] = std::int64_t{chi.exponents[i]} * (m / deck.primes()[i]);

  const CyclotomicField field(m);
  Matrix<CyclotomicField::Element> evaluated(a.rows(), a.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) evaluated(i, j) = field.evaluate(a.at(i, j), powers);
  return field.rank(std::move(evaluated));
}

AlexanderMatrix cover_fox_matrix(const CoverMap& cm) {
  const std::size_t k = cm.deck().dimension();
  std::vector<std::vector<Integer>> images;
  for (const auto& g : cm.assignment()) images.emplace_back(g.begin(), g.end());
  const Presentation& p = cm.base();
  AlexanderMatrix m(p.relator_count(), p.generator_count(), k);
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (std::size_t j = 0; j < p.generator_count(); ++j)
      m.set(i, j, abelian_image(fox_derivative(p.relators()[i], j), images, k));
  return m;
}

std::size_t hironaka_predicted_betti(const CoverMap& cm) {
  const std::size_t n = cm.base().generator_count();
  const AlexanderMatrix f = cover_fox_matrix(cm);
  std::size_t predicted = abelianize(cm.base()).rank;
  for (const Character& chi : all_characters(cm.deck())) {
    if (chi.trivial()) continue;
    const std::size_t rank = char_rank(f, chi, cm.deck());
    if (rank + 1 < n) predicted += n - 1 - rank;
  }
  return predicted;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j = r.extra;
  j["theorem"] = r.theorem;
  j["inputs"] = r.inputs;
  j["lhs"] = r.lhs ? integer_json(*r.lhs) : nlohmann::json(nullptr);
  j["rhs"] = r.rhs ? integer_json(*r.rhs) : nlohmann::json(nullptr);
  j["status"] = r.status;
  return j;
}

namespace {

nlohmann::json cover_inputs(const CoverMap& cm) {
  nlohmann::json j;
  j["presentation"] = to_string(cm.base());
  j["deck"] = cm.deck().primes();
  j["assignment"] = cm.assignment();
  return j;
}

}  // namespace

TheoremReport verify_torsion_cover_formula(const Presentation& p, const std::vector<unsigned>& primes,
                                           std::size_t max_index) {
  const CoverMap cm = free_abelian_cover(p, primes);
  TheoremReport r;
  r.theorem = "torsion-cover";
  r.inputs = cover_inputs(cm);
  const AlexanderPolynomial delta = alexander_polynomial(p);
  r.extra["delta"] = to_string(delta.poly);
  r.rhs = abs_value(root_of_unity_norm(delta.poly, primes));
  r.lhs = cover_homology(reidemeister_schreier(cm, max_index)).torsion_order();
  if (*r.rhs == 0) {
    r.status = "hypothesis_violated";
    r.passed = true;
  } else {
    r.passed = *r.lhs == *r.rhs;
    r.status = r.passed ? "equal" : "unequal";
  }
  return r;
}

TheoremReport hironaka_check(const CoverMap& cm, std::size_t max_index) {
  TheoremReport r;
  r.theorem = "hironaka";
  r.inputs = cover_inputs(cm);
  const CoverPresentation cp = reidemeister_schreier(cm, max_index);
  r.lhs = Integer(static_cast<unsigned long>(hironaka_predicted_betti(cm)));
  r.rhs = Integer(static_cast<unsigned long>(cover_homology(cp).rank));
  r.passed = *r.lhs == *r.rhs;
  r.status = r.passed ? "equal" : "unequal";
  return r;
}

std::size_t binomial2(std::size_t r) { return r * (r == 0 ? 0 : r - 1) / 2; }

ShalenWagreichResult shalen_wagreich_check(const Presentation& p, unsigned prime, std::size_t max_index) {
  ShalenWagreichResult out;
  out.r = mod_p_betti(p, prime);
  if (out.r == 0) throw PreconditionError("shalen_wagreich_check: d_p = 0");
  std::size_t index = 1;
  for (std::size_t i = 0; i < out.r; ++i) {
    if (index > max_index / prime) throw ResourceLimitError("shalen_wagreich_check: cover index exceeds limit");
    index *= prime;
  }
  if (index > max_index) throw ResourceLimitError("shalen_wagreich_check: cover index exceeds limit");
  const CoverPresentation cp = reidemeister_schreier(mod_p_cover(p, prime), max_index);
  out.cover_dp = mod_p_betti(cp.presentation, prime);
  out.bound = binomial2(out.r);
  out.bound_satisfied = out.cover_dp >= out.bound;
  out.prime_coprime_to_torsion = true;
  for (const auto& t : abelianize(p).torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), prime)) out.prime_coprime_to_torsion = false;
  return out;
}

TheoremReport shalen_wagreich_report(const Presentation& p, unsigned prime, std::size_t max_index) {
  const ShalenWagreichResult s = shalen_wagreich_check(p, prime, max_index);
  TheoremReport r;
  r.theorem = "shalen-wagreich";
  r.inputs["presentation"] = to_string(p);
  r.inputs["prime"] = prime;
  r.lhs = Integer(static_cast<unsigned long>(s.cover_dp));
  r.rhs = Integer(static_cast<unsigned long>(s.bound));
  r.extra["r"] = s.r;
  r.extra["prime_coprime_to_torsion"] = s.prime_coprime_to_torsion;
  r.passed = s.bound_satisfied;
  r.status = r.passed ? "bound_holds" : "bound_violated";
  return r;
}

TheoremReport b1_ge_4_consistency(const Presentation& p) {
  const AbelianizationData ab = abelianize(p);
  if (ab.rank < 4) throw PreconditionError("b1_ge_4_consistency: b1 = " + std::to_string(ab.rank) + " < 4");
  const AlexanderPolynomial delta = alexander_polynomial(p);
  TheoremReport r;
  r.theorem = "b1-ge-4";
  r.inputs["presentation"] = to_string(p);
  r.lhs = Integer(static_cast<unsigned long>(ab.rank));
  r.rhs = Integer(static_cast<unsigned long>(binomial2(ab.rank)));
  r.extra["delta"] = to_string(delta.poly);
  const bool delta_not_one = delta.poly != LaurentPoly::constant(delta.poly.arity(), 1);
  const bool r_below_binomial = ab.rank < binomial2(ab.rank);
  r.extra["delta_not_one"] = delta_not_one;
  r.extra["r_lt_binom"] = r_below_binomial;
  r.passed = delta_not_one && r_below_binomial;
  r.status = r.passed ? "consistent" : "counterexample";
  return r;
}

}  // namespace alexinv
