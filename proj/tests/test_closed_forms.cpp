#include <gtest/gtest.h>

#include <cmath>

#include "sgb/closed_forms.hpp"
#include "sgb/errors.hpp"

using namespace sgb;

namespace {

StarDecomposition decomp(std::uint64_t n) { return build_star_decomposition(CyclicGroupSpec::of_order(n)); }

std::vector<std::uint64_t> sizes_by_order(const StarDecomposition& d) {
  std::vector<std::uint64_t> out;
  for (const auto& e : d.entries()) out.push_back(e.star_size);
  return out;
}

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

}  // namespace

TEST(DetectFamily, Shapes) {
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(8)), FamilyTag(FamilyPn{2, 3}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(12)), FamilyTag(FamilyP2Q{2, 3}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(18)), FamilyTag(FamilyP2Q{3, 2}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(15)), FamilyTag(FamilyPQ{3, 5}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(36)), FamilyTag(FamilyP2Q2{2, 3}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(30)), FamilyTag(FamilyOutside{}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(24)), FamilyTag(FamilyOutside{}));
  EXPECT_EQ(detect_family(CyclicGroupSpec::of_order(1)), FamilyTag(FamilyOutside{}));
}

TEST(FamilyTag, NamesAndValidation) {
  EXPECT_EQ(to_string(FamilyTag(FamilyPn{2, 3})), "pn(2;3)");
  EXPECT_EQ(to_string(FamilyTag(FamilyP2Q{3, 2})), "p2q(3;2)");
  EXPECT_EQ(to_string(FamilyTag(FamilyOutside{})), "outside");
  EXPECT_THROW(validate(FamilyPQ{3, 2}), DomainError);
  EXPECT_THROW(validate(FamilyPQ{4, 5}), DomainError);
  EXPECT_THROW(validate(FamilyP2Q{3, 3}), DomainError);
  EXPECT_THROW(validate(FamilyP2Q2{5, 3}), DomainError);
  EXPECT_THROW(validate(FamilyPn{2, 0}), DomainError);
  EXPECT_NO_THROW(validate(FamilyP2Q{5, 3}));
  EXPECT_EQ(family_order(FamilyP2Q2{2, 3}), 36u);
}

TEST(CatalogStructure, Examples) {
  EXPECT_EQ(catalog_structure(FamilyPQ{2, 3}), StarDecomposition(6, {{1, 1}, {2, 3}, {3, 8}, {6, 24}}));
  // Ascending subgroup orders 1, 2, 3, 4, 6, 12.
  EXPECT_EQ(sizes_by_order(catalog_structure(FamilyP2Q{2, 3})), (std::vector<std::uint64_t>{1, 3, 8, 12, 24, 96}));
  // Orders 1, 2, 3, 4, 6, 9, 12, 18, 36.
  EXPECT_EQ(sizes_by_order(catalog_structure(FamilyP2Q2{2, 3})),
            (std::vector<std::uint64_t>{1, 3, 8, 12, 24, 72, 96, 216, 864}));
  EXPECT_EQ(sizes_by_order(catalog_structure(FamilyPn{2, 1})), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(sizes_by_order(catalog_structure(FamilyPn{2, 2})), (std::vector<std::uint64_t>{1, 3, 12}));
  EXPECT_THROW(catalog_structure(FamilyOutside{}), UnsupportedFamilyError);
}

TEST(CatalogZagreb, Examples) {
  EXPECT_EQ(catalog_zagreb(FamilyPQ{2, 3}), (CatalogZagreb{686, 650}));
  EXPECT_THROW(catalog_zagreb(FamilyOutside{}), UnsupportedFamilyError);
}

TEST(CatalogEnergies, Examples) {
  const auto pq = catalog_energies(FamilyPQ{2, 3});
  EXPECT_EQ(pq.le_exact, Rational(2624, 40));
  EXPECT_EQ(pq.e_cn_exact, Rational(64));
  const auto p = catalog_energies(FamilyPn{2, 1});
  EXPECT_NEAR(p.e, 5.4641016, 1e-7);
  EXPECT_EQ(p.le_exact, Rational(40, 6));
  EXPECT_EQ(p.e_cn_exact, Rational(4));
}

TEST(CatalogDegreeIndices, PrimePowerUnsupported) {
  EXPECT_THROW(catalog_degree_indices(FamilyPn{2, 3}), UnsupportedFamilyError);
  EXPECT_THROW(catalog_degree_indices(FamilyOutside{}), UnsupportedFamilyError);
}

TEST(CatalogDegreeIndices, PrintedFormsAgainstDefinitions) {
  for (const auto& tag : catalog_instances(20000)) {
    if (std::holds_alternative<FamilyPn>(tag)) continue;
    const auto c = catalog_degree_indices(tag);
    const auto d = degree_indices(decomp(family_order(tag)));
    EXPECT_TRUE(rel_close(c.randic, d.randic, 1e-9)) << to_string(tag);
    EXPECT_TRUE(rel_close(c.abc, d.abc, 1e-9)) << to_string(tag);
    EXPECT_TRUE(rel_close(c.ga, d.ga, 1e-9)) << to_string(tag);
    EXPECT_TRUE(rel_close(c.harmonic, d.harmonic, 1e-9)) << to_string(tag);
    // The printed SCI is right for pq only; the p2q and p2q2 forms carry typos.
    EXPECT_EQ(rel_close(c.sci, d.sci, 1e-9), std::holds_alternative<FamilyPQ>(tag)) << to_string(tag);
  }
}

TEST(Catalog, AgreesWithPipelineOnSmallInstances) {
  for (const auto& tag : catalog_instances(5000)) {
    const auto d = decomp(family_order(tag));
    EXPECT_EQ(catalog_structure(tag), d) << to_string(tag);
    const auto z = zagreb(d);
    EXPECT_EQ(catalog_zagreb(tag), (CatalogZagreb{z.m1, z.m2})) << to_string(tag);
    const auto spectra = catalog_spectra(tag);
    for (SpectrumKind k : kAllSpectrumKinds) {
      EXPECT_EQ(spectra.of(k), closed_form_spectrum(d, k)) << to_string(tag) << " " << to_string(k);
    }
    const auto ce = catalog_energies(tag);
    const auto e = energies(d);
    EXPECT_TRUE(rel_close(ce.e, e.e, 1e-9)) << to_string(tag);
    EXPECT_EQ(ce.le_exact, e.le_exact) << to_string(tag);
    EXPECT_EQ(ce.e_cn_exact, e.e_cn_exact) << to_string(tag);
    EXPECT_EQ(ce.avg_degree_shift, e.avg_degree_shift) << to_string(tag);
  }
}

TEST(CatalogInstances, SortedAndBounded) {
  const auto tags = catalog_instances(100);
  ASSERT_FALSE(tags.empty());
  std::uint64_t last = 0;
  for (const auto& t : tags) {
    const auto order = family_order(t);
    EXPECT_LE(order, 100u);
    EXPECT_GE(order, last);
    last = order;
  }
  EXPECT_EQ(tags.front(), FamilyTag(FamilyPn{2, 1}));
  EXPECT_TRUE(catalog_instances(1).empty());
}
