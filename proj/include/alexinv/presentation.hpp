#pragma once

// Finitely presented groups: words, presentations, abelianization and the
// free-abelianization map onto H1/Tor.

#include <alexinv/integer.hpp>
#include <alexinv/smith.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alexinv {

/// x_generator^exponent with exponent +1 or -1.
struct Letter {
  std::size_t generator;
  int exponent;

  Letter inverse() const { return {generator, -exponent}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word reduce_word(std::span<const Letter> letters);
  std::vector<Letter> letters_;
};

/// Cancels adjacent x x^-1 pairs until none remain.
Word reduce_word(std::span<const Letter> letters);

/// x_generator^power as a reduced word.
Word generator_power(std::size_t generator, long power);

/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

class Presentation {
 public:
  /// Names must be unique, nonempty, and of the form [a-z][0-9]*; relators
  /// may only mention existing generators.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return names_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }

  std::optional<std::size_t> generator_index(std::string_view name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

bool is_valid_generator_name(std::string_view name);

/// `<g1,g2,... | r1, r2, ...>` with `#` line comments. Lowercase names are
/// generators, the same name capitalised is the inverse; `*` is optional
/// concatenation, `[u,v]` is u v u^-1 v^-1, `^n` raises the preceding
/// letter, bracket or parenthesised group, `1` is the empty word and
/// `u = v` stands for u v^-1.
Presentation parse_presentation(std::string_view text);

std::string format_word(const Word& w, const Presentation& p);
std::string to_string(const Presentation& p);

/// Row i holds the exponent sums of relator i.
IntMatrix exponent_sum_matrix(const Presentation& p);

/// H1 of the group: Z^rank + torsion, together with the image of each
/// generator under  G -> H1 -> H1/Tor = Z^rank  and its residues in the
/// torsion summands.
struct AbelianizationData {
  std::size_t rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;
  /// gen_images[j] in Z^rank. The basis of Z^rank is normalised so the
  /// generators' images form a column Hermite normal form.
  std::vector<std::vector<Integer>> gen_images;
  /// torsion_images[j][k] in [0, torsion[k]).
  std::vector<std::vector<Integer>> torsion_images;

  Integer torsion_order() const;
  /// Dimension of H1 tensor F_p.
  std::size_t mod_p_rank(unsigned p) const;
};

AbelianizationData abelianize(const Presentation& p);

}  // namespace alexinv
