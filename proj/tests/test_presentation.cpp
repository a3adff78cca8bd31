#include <alexinv/errors.hpp>
#include <alexinv/fox.hpp>
#include <alexinv/presentation.hpp>
#include <alexinv/random_instances.hpp>
#include <alexinv/smith.hpp>

#include "oracles.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

using namespace alexinv;

namespace {

Word W(std::initializer_list<std::pair<std::size_t, int>> letters) {
  std::vector<Letter> v;
  for (auto [g, e] : letters) v.push_back(Letter{g, e});
  return reduce_word(v);
}

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), cols, 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

bool is_unimodular(const IntMatrix& m) { return abs_value(oracle::cofactor_determinant(m)) == 1; }

}  // namespace

TEST(PresentationParse, Examples) {
  const Presentation a = parse_presentation("<x | >");
  EXPECT_EQ(a.generator_count(), 1u);
  EXPECT_EQ(a.relator_count(), 0u);

  const Presentation t3 = parse_presentation("<x,y,z | [x,y], [x,z], [y,z]>");
  EXPECT_EQ(t3.generator_count(), 3u);
  ASSERT_EQ(t3.relator_count(), 3u);
  EXPECT_EQ(t3.relators()[0], W({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));

  const Presentation trefoil = parse_presentation("<x,y | x*y*x*Y*X*Y>");
  EXPECT_EQ(trefoil.relators()[0].length(), 6u);
}

TEST(PresentationParse, Sugar) {
  const Presentation p = parse_presentation(
      "# a comment\n<a, b1 | a^3 b1^-2, (a b1)^2 = b1 a, 1, [a, b1]^-1  # trailing\n>");
  ASSERT_EQ(p.relator_count(), 4u);
  EXPECT_EQ(p.relators()[0], W({{0, 1}, {0, 1}, {0, 1}, {1, -1}, {1, -1}}));
  // (a b)^2 (b a)^-1 = a b a b A B
  EXPECT_EQ(p.relators()[1], W({{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, -1}, {1, -1}}));
  EXPECT_TRUE(p.relators()[2].empty());
  EXPECT_EQ(p.relators()[3], commutator(W({{0, 1}}), W({{1, 1}})).inverse());
}

TEST(PresentationParse, Errors) {
  EXPECT_THROW(parse_presentation("<x | y>"), ParseError);
  EXPECT_THROW(parse_presentation("<x, x | >"), ParseError);
  EXPECT_THROW(parse_presentation("<X | >"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x^>"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x> junk"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x^1000001>"), ParseError);
  try {
    parse_presentation("<x | y>");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(PresentationPrint, RoundTrip) {
  const std::string text = "<x,y,z | Z*x*y*X*Y, x*z*X*Z, 1>";
  const Presentation p = parse_presentation(text);
  EXPECT_EQ(to_string(p), text);
  EXPECT_EQ(parse_presentation(to_string(p)), p);
}

TEST(Words, Reduction) {
  EXPECT_TRUE(W({{0, 1}, {0, -1}}).empty());
  EXPECT_EQ(W({{0, 1}, {1, 1}, {1, -1}, {0, 1}}), W({{0, 1}, {0, 1}}));
  const Word w = W({{0, 1}, {1, -1}, {0, 1}});
  EXPECT_EQ(reduce_word(w.letters()), w);
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(generator_power(2, -3), W({{2, -1}, {2, -1}, {2, -1}}));
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(M({{2, 0}, {0, 3}})).diagonal(), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(identity_matrix(3)).D, identity_matrix(3));
  EXPECT_EQ(smith_normal_form(M({{2, 4}, {6, 8}})).diagonal(), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 3, 0)).diagonal().size(), 0u);
}

TEST(Smith, DecompositionIdentity) {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const std::size_t cols = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const IntMatrix a = random_int_matrix(rng, rows, cols, 9);
    const SmithDecomposition s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(s.V * s.V_inverse, identity_matrix(cols));
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      if (d[i] != 0) EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
      else EXPECT_EQ(d[i + 1], 0);
    }
  }
}

TEST(Smith, InvariantFactorsMatchMinorGcds) {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const IntMatrix a = random_int_matrix(rng, 4, 4, 9);
    std::vector<Integer> diag = smith_diagonal(a);
    while (!diag.empty() && diag.back() == 0) diag.pop_back();
    EXPECT_EQ(diag, oracle::invariant_factors(a));
  }
}

TEST(Smith, RankModPAndDeterminant) {
  EXPECT_EQ(rank_mod_p(M({{2, 2, 0}, {1, 0, 0}}), 2), 1u);
  EXPECT_EQ(rank_mod_p(M({{2, 2, 0}, {1, 0, 0}}), 3), 2u);
  Rng rng(13);
  for (int k = 0; k < 30; ++k) {
    const IntMatrix a = random_int_matrix(rng, 4, 4, 9);
    EXPECT_EQ(determinant(a), oracle::cofactor_determinant(a));
  }
}

TEST(Abelianize, Examples) {
  const AbelianizationData t3 = abelianize(parse_presentation("<x,y,z | [x,y], [x,z], [y,z]>"));
  EXPECT_EQ(t3.rank, 3u);
  EXPECT_TRUE(t3.torsion.empty());

  const AbelianizationData heis = abelianize(parse_presentation("<x,y,z | Z*[x,y], [x,z], [y,z]>"));
  EXPECT_EQ(heis.rank, 2u);
  EXPECT_TRUE(heis.torsion.empty());

  const AbelianizationData mt = abelianize(parse_presentation("<x,y,h | [x,y], h x H Y X X X, h y H Y X X>"));
  EXPECT_EQ(mt.rank, 1u);
  EXPECT_EQ(mt.torsion, std::vector<Integer>{2});
  EXPECT_EQ(mt.mod_p_rank(2), 2u);
  EXPECT_EQ(mt.mod_p_rank(3), 1u);

  const AbelianizationData z6 = abelianize(parse_presentation("<a, b | a^2, b^3, [a,b]>"));
  EXPECT_EQ(z6.rank, 0u);
  EXPECT_EQ(z6.torsion, std::vector<Integer>{6});
}

namespace {

void expect_images_kill_relators(const Presentation& p) {
  const AbelianizationData ab = abelianize(p);
  const IntMatrix e = exponent_sum_matrix(p);
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (std::size_t c = 0; c < ab.rank; ++c) {
      Integer s = 0;
      for (std::size_t j = 0; j < p.generator_count(); ++j) s += e(i, j) * ab.gen_images[j][c];
      EXPECT_EQ(s, 0);
    }
    for (std::size_t c = 0; c < ab.torsion.size(); ++c) {
      Integer s = 0;
      for (std::size_t j = 0; j < p.generator_count(); ++j) s += e(i, j) * ab.torsion_images[j][c];
      EXPECT_EQ(floor_mod(s, ab.torsion[c]), 0);
    }
  }
  // The images generate Z^rank: the rank x rank minors have gcd 1.
  if (ab.rank > 0) {
    IntMatrix g(p.generator_count(), ab.rank, 0);
    for (std::size_t j = 0; j < p.generator_count(); ++j)
      for (std::size_t c = 0; c < ab.rank; ++c) g(j, c) = ab.gen_images[j][c];
    EXPECT_EQ(oracle::minors_gcd(g, ab.rank), 1);
  }
}

Presentation random_presentation(Rng& rng, std::size_t gens, std::size_t rels, bool abelian_heavy) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens; ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<Word> relators;
  for (std::size_t r = 0; r < rels; ++r) {
    Word w = random_word(rng, gens, 8);
    if (abelian_heavy) w = w * generator_power(static_cast<std::size_t>(uniform_int(rng, 0, gens - 1)), uniform_int(rng, -4, 4));
    relators.push_back(w);
  }
  return Presentation(names, relators);
}

}  // namespace

TEST(Abelianize, ImagesKillRelatorsAndGenerate) {
  Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    const std::size_t gens = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    expect_images_kill_relators(random_presentation(rng, gens, static_cast<std::size_t>(uniform_int(rng, 0, 4)), true));
  }
  expect_images_kill_relators(parse_presentation("<x,y,h | [x,y], h x H Y X X X, h y H Y X X>"));
}

TEST(Abelianize, TietzeInvariance) {
  Rng rng(15);
  for (int k = 0; k < 40; ++k) {
    const std::size_t gens = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const Presentation p = random_presentation(rng, gens, static_cast<std::size_t>(uniform_int(rng, 1, 4)), true);
    const AbelianizationData base = abelianize(p);

    // Add a consequence: a conjugate of a product of relators.
    std::vector<Word> more = p.relators();
    const Word c = random_word(rng, gens, 5);
    more.push_back(c * p.relators()[0] * p.relators().back().inverse() * c.inverse());
    const AbelianizationData plus_relator = abelianize(Presentation(p.generator_names(), more));
    EXPECT_EQ(plus_relator.rank, base.rank);
    EXPECT_EQ(plus_relator.torsion, base.torsion);

    // Add a generator g with defining relator g = w.
    std::vector<std::string> names = p.generator_names();
    names.push_back("g");
    std::vector<Word> defined = p.relators();
    defined.push_back(W({{gens, 1}}) * random_word(rng, gens, 6).inverse());
    const AbelianizationData plus_generator = abelianize(Presentation(names, defined));
    EXPECT_EQ(plus_generator.rank, base.rank);
    EXPECT_EQ(plus_generator.torsion, base.torsion);
  }
}

TEST(Fox, HandComputedDerivatives) {
  // d(x y X Y)/dx = 1 - x y X
  FreeGroupRingElement expected;
  expected.add(Word(), 1);
  expected.add(W({{0, 1}, {1, 1}, {0, -1}}), -1);
  EXPECT_EQ(fox_derivative(W({{0, 1}, {1, 1}, {0, -1}, {1, -1}}), 0), expected);

  FreeGroupRingElement cube;
  cube.add(Word(), 1);
  cube.add(W({{0, 1}}), 1);
  cube.add(W({{0, 1}, {0, 1}}), 1);
  EXPECT_EQ(fox_derivative(generator_power(0, 3), 0), cube);

  EXPECT_TRUE(fox_derivative(W({{1, 1}}), 0).is_zero());
}

TEST(Fox, FundamentalIdentity) {
  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const std::size_t gens = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const Word w = random_word(rng, gens, 12);
    FreeGroupRingElement lhs;
    for (std::size_t j = 0; j < gens; ++j) {
      const FreeGroupRingElement d = fox_derivative(w, j);
      lhs += d.times(W({{j, 1}}));
      lhs -= d;
    }
    FreeGroupRingElement rhs;
    rhs.add(w, 1);
    rhs.add(Word(), -1);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Fox, MatrixExamples) {
  const AlexanderMatrix z2 = fox_matrix(parse_presentation("<x,y | x*y*X*Y>"));
  ASSERT_EQ(z2.rows(), 1u);
  EXPECT_EQ(z2.at(0, 0), parse_poly("1 - t2", 2));
  EXPECT_EQ(z2.at(0, 1), parse_poly("t1 - 1", 2));

  const AlexanderMatrix trefoil = fox_matrix(parse_presentation("<x,y | x*y*x*Y*X*Y>"));
  EXPECT_EQ(trefoil.arity(), 1u);
  EXPECT_EQ(trefoil.at(0, 0), parse_poly("1 - t + t^2", 1));

  const AlexanderMatrix free1 = fox_matrix(parse_presentation("<x | >"));
  EXPECT_EQ(free1.rows(), 0u);
  EXPECT_EQ(free1.cols(), 1u);

  EXPECT_THROW(fox_matrix(parse_presentation("<x | x^2>")), PreconditionError);
}

TEST(LaurentDeterminant, MatchesCofactorExpansion) {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const AlexanderMatrix a = random_alexander_matrix(rng, n, n, 1, 4);
    // Cofactor expansion on the same entries.
    struct Expand {
      static LaurentPoly det(const Matrix<LaurentPoly>& m) {
        const std::size_t n = m.rows();
        if (n == 1) return m(0, 0);
        LaurentPoly total(1);
        for (std::size_t j = 0; j < n; ++j) {
          Matrix<LaurentPoly> minor(n - 1, n - 1, LaurentPoly(1));
          for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
              if (c != j) minor(i - 1, cc++) = m(i, c);
          const LaurentPoly term = m(0, j) * det(minor);
          total = j % 2 == 0 ? total + term : total - term;
        }
        return total;
      }
    };
    EXPECT_EQ(determinant(a.entries(), 1), Expand::det(a.entries()));
  }
}
