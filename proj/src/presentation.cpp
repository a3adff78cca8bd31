#include <alexinv/errors.hpp>
#include <alexinv/presentation.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace alexinv {

Word reduce_word(std::span<const Letter> letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("reduce_word: letter exponent must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return reduce_word(inv);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined(a.letters_);
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return reduce_word(joined);
}

Word generator_power(std::size_t generator, long power) {
  const int sign = power < 0 ? -1 : 1;
  std::vector<Letter> letters(static_cast<std::size_t>(power < 0 ? -power : power),
                              Letter{generator, sign});
  return reduce_word(letters);
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_valid_generator_name(name))
      throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name '" + name + "'");
  }
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (l.generator >= names_.size())
        throw std::invalid_argument("relator mentions generator index out of range");
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string format_word(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out += '*';
    std::string name = p.generator_names()[w.letters()[i].generator];
    if (w.letters()[i].exponent < 0)
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i > 0) out += ",";
    out += p.generator_names()[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i > 0) out += ", ";
    out += format_word(p.relators()[i], p);
  }
  out += ">";
  return out;
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count(), 0);
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (const auto& l : p.relators()[i].letters()) m(i, l.generator) += l.exponent;
  return m;
}

Integer AbelianizationData::torsion_order() const {
  Integer product = 1;
  for (const auto& t : torsion) product *= t;
  return product;
}

std::size_t AbelianizationData::mod_p_rank(unsigned p) const {
  std::size_t r = rank;
  for (const auto& t : torsion)
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++r;
  return r;
}

namespace {

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Column Hermite normal form of an n x r integer matrix of full column rank,
// given as rows. Column operations are changes of basis of Z^r.
void column_hermite_form(std::vector<std::vector<Integer>>& g, std::size_t r) {
  auto col_axpy = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (auto& row : g) row[target] -= q * row[source];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : g) std::swap(row[a], row[b]);
  };

  std::size_t pivot_col = 0;
  for (std::size_t j = 0; j < g.size() && pivot_col < r; ++j) {
    auto& row = g[j];
    while (true) {
      std::size_t best = r;
      for (std::size_t c = pivot_col; c < r; ++c)
        if (row[c] != 0 && (best == r || abs_value(row[c]) < abs_value(row[best]))) best = c;
      if (best == r) break;
      swap_cols(pivot_col, best);
      bool clear = true;
      for (std::size_t c = pivot_col + 1; c < r; ++c) {
        col_axpy(c, pivot_col, floor_quotient(row[c], row[pivot_col]));
        if (row[c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (row[pivot_col] == 0) continue;
    if (row[pivot_col] < 0)
      for (auto& rr : g) rr[pivot_col] = -rr[pivot_col];
    for (std::size_t c = 0; c < pivot_col; ++c)
      col_axpy(c, pivot_col, floor_quotient(row[c], row[pivot_col]));
    ++pivot_col;
  }
}

}  // namespace

AbelianizationData abelianize(const Presentation& p) {
  const std::size_t n = p.generator_count();
  const SmithDecomposition smith = smith_normal_form(exponent_sum_matrix(p));

  // Coordinates of generator j in the Smith basis: row j of V.
  std::vector<Integer> diag(n, 0);
  const auto d = smith.diagonal();
  std::copy(d.begin(), d.end(), diag.begin());

  AbelianizationData out;
  std::vector<std::size_t> free_coords, torsion_coords;
  for (std::size_t k = 0; k < n; ++k) {
    if (diag[k] == 0)
      free_coords.push_back(k);
    else if (diag[k] > 1)
      torsion_coords.push_back(k);
  }
  out.rank = free_coords.size();
  for (std::size_t k : torsion_coords) out.torsion.push_back(diag[k]);

  out.gen_images.assign(n, std::vector<Integer>(out.rank, 0));
  out.torsion_images.assign(n, std::vector<Integer>(torsion_coords.size(), 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < free_coords.size(); ++c) out.gen_images[j][c] = smith.V(j, free_coords[c]);
    for (std::size_t c = 0; c < torsion_coords.size(); ++c)
      out.torsion_images[j][c] = floor_mod(smith.V(j, torsion_coords[c]), diag[torsion_coords[c]]);
  }
  column_hermite_form(out.gen_images, out.rank);
  return out;
}

}  // namespace alexinv
