#pragma once

// Finite abelian covers: deck groups F_p1 + ... + F_pk, Reidemeister-Schreier
// presentations of the kernel, twisted ranks of the Fox matrix, and the
// theorem checks built on them.

#include <alexinv/alexander.hpp>
#include <alexinv/alexander_matrix.hpp>
#include <alexinv/presentation.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace alexinv {

inline constexpr std::size_t kDefaultMaxIndex = 256;

/// Coordinates of a deck-group element, entry i in [0, p_i).
using DeckElement = std::vector<unsigned>;

class DeckGroup {
 public:
  /// Throws std::invalid_argument on an empty list or a non-prime entry.
  explicit DeckGroup(std::vector<unsigned> primes);

  const std::vector<unsigned>& primes() const noexcept { return primes_; }
  std::size_t dimension() const noexcept { return primes_.size(); }
  /// Group order; saturates at SIZE_MAX.
  std::size_t order() const noexcept { return order_; }

  DeckElement identity() const { return DeckElement(primes_.size(), 0); }
  DeckElement add(const DeckElement& a, const DeckElement& b) const;
  DeckElement negate(const DeckElement& a) const;
  /// Mixed-radix position with the first coordinate varying slowest.
  std::size_t index_of(const DeckElement& g) const;
  DeckElement element_at(std::size_t index) const;

  friend bool operator==(const DeckGroup&, const DeckGroup&) = default;

 private:
  std::vector<unsigned> primes_;
  std::size_t order_;
};

/// An epimorphism from the base group onto a deck group, given on generators.
class CoverMap {
 public:
  /// Throws PreconditionError when a relator does not map to 0 or the images
  /// fail to generate the deck group, std::invalid_argument on shape errors.
  CoverMap(Presentation base, DeckGroup deck, std::vector<DeckElement> assignment);

  const Presentation& base() const noexcept { return base_; }
  const DeckGroup& deck() const noexcept { return deck_; }
  const std::vector<DeckElement>& assignment() const noexcept { return assignment_; }

  DeckElement image(const Word& w) const;

 private:
  Presentation base_;
  DeckGroup deck_;
  std::vector<DeckElement> assignment_;
};

/// chi(g) = prod rho_i^(e_i g_i), rho_i = exp(2 pi i / p_i).
struct Character {
  std::vector<unsigned> exponents;

  bool trivial() const;
};

/// Every character of the deck group, trivial one first.
std::vector<Character> all_characters(const DeckGroup& deck);

struct CoverPresentation {
  Presentation presentation;
  /// transversal[k] represents the coset of deck.element_at(k).
  std::vector<Word> transversal;
};

/// dim H1(P; F_p). Throws std::invalid_argument when p is not prime.
std::size_t mod_p_betti(const Presentation& p, unsigned prime);

/// The cover for  G -> H1(G; F_p) = F_p^(d_p). Throws PreconditionError when
/// d_p = 0.
CoverMap mod_p_cover(const Presentation& p, unsigned prime);

/// The cover for  G -> H1/Tor = Z^b1 -> sum F_(p_i), one prime per free
/// coordinate. Throws ArityError when the lengths differ.
CoverMap free_abelian_cover(const Presentation& p, const std::vector<unsigned>& primes);

/// Kernel presentation. Throws ResourceLimitError when the index exceeds
/// max_index.
CoverPresentation reidemeister_schreier(const CoverMap& cm, std::size_t max_index = kDefaultMaxIndex);

AbelianizationData cover_homology(const CoverPresentation& cp);

/// Rank over Q(zeta) of A with t_i -> rho_i^(e_i). Throws ArityError when the
/// arity of A differs from the deck dimension.
std::size_t char_rank(const AlexanderMatrix& a, const Character& chi, const DeckGroup& deck);

/// Fox matrix of the base pushed along the cover map: generator j maps to
/// t^assignment[j] in Z[t1..tk], k the deck dimension.
AlexanderMatrix cover_fox_matrix(const CoverMap& cm);

/// b1 of the base plus, over nontrivial characters, the number of levels
/// i = 1..n-1 with  rank F(chi) < n - i, where F is the cover Fox matrix and
/// n the generator count.
std::size_t hironaka_predicted_betti(const CoverMap& cm);

/// Outcome of one theorem check, serialised as
/// {"theorem", "inputs", "lhs", "rhs", "status", ...extra}.
struct TheoremReport {
  std::string theorem;
  nlohmann::json inputs = nlohmann::json::object();
  std::optional<Integer> lhs;
  std::optional<Integer> rhs;
  std::string status;
  nlohmann::json extra = nlohmann::json::object();
  bool passed = false;
};

nlohmann::json to_json(const TheoremReport& r);

/// |Tor H1(cover)| against |prod delta(rho^e)| over the cover below the
/// free abelian cover given by `primes`.
TheoremReport verify_torsion_cover_formula(const Presentation& p, const std::vector<unsigned>& primes,
                                           std::size_t max_index = kDefaultMaxIndex);

/// Predicted b1 of the cover against the rank of its abelianized
/// Reidemeister-Schreier presentation.
TheoremReport hironaka_check(const CoverMap& cm, std::size_t max_index = kDefaultMaxIndex);

struct ShalenWagreichResult {
  std::size_t r = 0;
  std::size_t bound = 0;
  std::size_t cover_dp = 0;
  bool bound_satisfied = false;
  bool prime_coprime_to_torsion = false;
};

/// Throws PreconditionError when d_p = 0, ResourceLimitError when p^r
/// exceeds max_index.
ShalenWagreichResult shalen_wagreich_check(const Presentation& p, unsigned prime,
                                           std::size_t max_index = kDefaultMaxIndex);
TheoremReport shalen_wagreich_report(const Presentation& p, unsigned prime,
                                     std::size_t max_index = kDefaultMaxIndex);

/// Delta != 1 for b1 >= 4, together with r < binom(r, 2). Throws
/// PreconditionError when b1 < 4.
TheoremReport b1_ge_4_consistency(const Presentation& p);

std::size_t binomial2(std::size_t r);

}  // namespace alexinv
