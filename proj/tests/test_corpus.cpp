#include <alexinv/alexander.hpp>
#include <alexinv/corpus.hpp>
#include <alexinv/errors.hpp>
#include <alexinv/random_instances.hpp>

#include "oracles.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace alexinv;

TEST(Corpus, EntriesMatchExpectedValues) {
  for (const auto& e : all_entries()) {
    const InvariantReport r = full_report(e.presentation);
    if (e.b1) EXPECT_EQ(r.b1, e.b1->value) << e.name;
    if (e.torsion) EXPECT_EQ(r.torsion, e.torsion->value) << e.name;
    if (e.delta) EXPECT_EQ(to_string(r.delta.poly), e.delta->value) << e.name;
    EXPECT_TRUE(r.all_checks_pass()) << e.name;
  }
}

TEST(Corpus, NamesAreUniqueAndFindable) {
  const std::vector<std::string> names = entry_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  for (const auto& n : names) {
    const auto e = find_entry(n);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->name, n);
    // The printed presentation parses back to itself.
    EXPECT_EQ(parse_presentation(to_string(e->presentation)), e->presentation);
  }
  EXPECT_FALSE(find_entry("lens-space").has_value());
  EXPECT_EQ(names.front(), "s1xs2");
}

TEST(Corpus, MappingTorusDeltaIsCharacteristicPolynomial) {
  Rng rng(41);
  int checked = 0;
  while (checked < 20) {
    const std::size_t n = checked % 2 == 0 ? 2 : 3;
    const IntMatrix a = random_unimodular(rng, n, 4 + n * 2, 5);
    IntMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= 1;
    if (oracle::cofactor_determinant(shifted) == 0) continue;
    const Presentation p = mapping_torus(a).presentation;
    const AlexanderPolynomial delta = alexander_polynomial(p);
    EXPECT_EQ(delta.poly, normalize(oracle::from_dense(oracle::characteristic(a)))) << to_string(p);
    // H1 = Z + coker(A - I).
    const AbelianizationData h = abelianize(p);
    EXPECT_EQ(h.rank, 1u);
    EXPECT_EQ(h.torsion_order(), abs_value(oracle::cofactor_determinant(shifted)));
    ++checked;
  }
}

TEST(Corpus, MappingTorusOfIdentityIsThreeTorus) {
  const Presentation p = mapping_torus(identity_matrix(2)).presentation;
  const InvariantReport r = full_report(p);
  EXPECT_EQ(r.b1, 3u);
  EXPECT_TRUE(r.torsion.empty());
  EXPECT_EQ(r.delta.poly, parse_poly("1", 3));
}

TEST(Corpus, ConstructorsRejectBadInput) {
  IntMatrix two(2, 2, 0);
  two(0, 0) = 2;
  two(1, 1) = 1;
  EXPECT_THROW(mapping_torus(two), PreconditionError);
  EXPECT_THROW(mapping_torus(IntMatrix(2, 3, 0)), std::invalid_argument);
  EXPECT_THROW(connected_sum_s1s2(0), std::invalid_argument);
  EXPECT_EQ(connected_sum_s1s2(3).presentation.generator_count(), 3u);
  EXPECT_EQ(connected_sum_s1s2(3).presentation.relator_count(), 0u);
}

TEST(Corpus, Covers) {
  const std::vector<CorpusCover> covers = corpus_covers();
  EXPECT_FALSE(covers.empty());
  std::set<std::string> labels;
  for (const auto& c : covers) {
    EXPECT_LE(c.cover.deck().order(), kDefaultMaxIndex) << c.label;
    EXPECT_TRUE(labels.insert(c.label).second) << c.label;
    EXPECT_EQ(c.label.rfind(c.entry + "/", 0), 0u) << c.label;
  }
  EXPECT_TRUE(labels.count("mapping-torus-A/mod-2"));
  EXPECT_TRUE(labels.count("mapping-torus-A/mod-3"));
  EXPECT_LT(corpus_covers(8).size(), covers.size());
}

TEST(Corpus, ProvenanceNames) {
  EXPECT_EQ(to_string(Provenance::Literature), "literature");
  EXPECT_EQ(to_string(Provenance::Computed), "computed");
  EXPECT_EQ(to_string(Provenance::Elementary), "elementary");
}
