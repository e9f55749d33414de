#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "sgb/errors.hpp"
#include "sgb/spectral.hpp"

using namespace sgb;

namespace {

StarDecomposition decomp(std::uint64_t n) { return build_star_decomposition(CyclicGroupSpec::of_order(n)); }

DenseSymmetricMatrix random_symmetric(std::size_t n, std::uint64_t seed, double density = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(-5.0, 5.0), coin(0.0, 1.0);
  DenseSymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j || coin(rng) < density) m.set(i, j, value(rng));
    }
  }
  return m;
}

std::vector<double> reference_eigenvalues(const DenseSymmetricMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

TEST(ClosedFormSpectrum, K2) {
  EXPECT_EQ(closed_form_spectrum(decomp(1), SpectrumKind::A).to_string(), "(1)^1 (-1)^1");
  EXPECT_EQ(closed_form_spectrum(decomp(1), SpectrumKind::CN).to_string(), "(0)^2");
  EXPECT_EQ(closed_form_spectrum(decomp(1), SpectrumKind::L).to_string(), "(2)^1 (0)^1");
}

TEST(ClosedFormSpectrum, OrderSix) {
  EXPECT_EQ(closed_form_spectrum(decomp(6), SpectrumKind::A).to_string(),
            "(2√6)^1 (2√2)^1 (√3)^1 (1)^1 (0)^32 (-1)^1 (-√3)^1 (-2√2)^1 (-2√6)^1");
  EXPECT_EQ(closed_form_spectrum(decomp(6), SpectrumKind::L).to_string(),
            "(25)^1 (9)^1 (4)^1 (2)^1 (1)^32 (0)^4");
  EXPECT_EQ(closed_form_spectrum(decomp(6), SpectrumKind::CN).to_string(),
            "(23)^1 (7)^1 (2)^1 (0)^5 (-1)^32");
}

TEST(ClosedFormSpectrum, OrderTwoAdjacency) {
  EXPECT_EQ(closed_form_spectrum(decomp(2), SpectrumKind::A).to_string(),
            "(√3)^1 (1)^1 (0)^2 (-1)^1 (-√3)^1");
}

TEST(ClosedFormSpectrum, InvariantsOverOrders) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto d = decomp(n);
    const auto stats = graph_stats(d);
    const Rational two_m(2 * static_cast<i128>(stats.edge_count));
    const auto a = closed_form_spectrum(d, SpectrumKind::A);
    const auto l = closed_form_spectrum(d, SpectrumKind::L);
    const auto q = closed_form_spectrum(d, SpectrumKind::Q);
    const auto cn = closed_form_spectrum(d, SpectrumKind::CN);
    for (const auto* s : {&a, &l, &q, &cn}) ASSERT_EQ(s->total_multiplicity(), stats.vertex_count);
    ASSERT_EQ(l.pairs, q.pairs);
    ASSERT_TRUE(a.exact_sum().empty());
    ASSERT_EQ(a.exact_sum_of_squares(), two_m);
    ASSERT_EQ(l.exact_sum(), (std::map<std::uint64_t, Rational>{{1, two_m}}));
    ASSERT_TRUE(cn.exact_sum().empty());
    // Symmetric about zero.
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
      const auto& mirror = a.pairs[a.pairs.size() - 1 - i];
      ASSERT_EQ(a.pairs[i].first, -mirror.first);
      ASSERT_EQ(a.pairs[i].second, mirror.second);
    }
    // Zero appears in L once per component.
    ASSERT_EQ(l.pairs.back().first, ExactEigenvalue::integer(0));
    ASSERT_EQ(l.pairs.back().second, d.subgroup_count());
    ASSERT_TRUE(l.is_integral() && cn.is_integral());
    ASSERT_EQ(a.has_irrational(), n >= 2);
  }
}

TEST(NumericSpectrum, Examples) {
  EXPECT_EQ(numeric_spectrum(DenseSymmetricMatrix(1), 1e-12), std::vector<double>{0.0});
  const auto k2 = numeric_spectrum(DenseSymmetricMatrix::from_values(2, {0, 1, 1, 0}), 1e-12);
  ASSERT_EQ(k2.size(), 2u);
  EXPECT_NEAR(k2[0], -1.0, 1e-12);
  EXPECT_NEAR(k2[1], 1.0, 1e-12);
  const auto star = numeric_spectrum(assemble_matrix(StarDecomposition(2, {{1, 1}, {2, 3}}),
                                                     MatrixKind::Adjacency),
                                     1e-12);
  const std::vector<double> expected = {-std::sqrt(3.0), -1, 0, 0, 1, std::sqrt(3.0)};
  ASSERT_EQ(star.size(), expected.size());
  for (std::size_t i = 0; i < star.size(); ++i) EXPECT_NEAR(star[i], expected[i], 1e-12);
}

TEST(NumericSpectrum, DenseRandomMatchesReference) {
  for (std::size_t n : {3u, 8u, 17u, 40u, 65u}) {
    const auto m = random_symmetric(n, n * 31 + 1);
    const auto ours = numeric_spectrum(m, 1e-12);
    const auto ref = reference_eigenvalues(m);
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-9) << n << " " << i;
  }
}

TEST(NumericSpectrum, SparseRandomWithComponents) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = random_symmetric(50, seed, 0.04);
    const auto ours = numeric_spectrum(m, 1e-12);
    const auto ref = reference_eigenvalues(m);
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], ref[i], 1e-9);
  }
}

TEST(NumericSpectrum, ZeroToleranceNeverConverges) {
  EXPECT_THROW(numeric_spectrum(DenseSymmetricMatrix::from_values(2, {0, 1, 1, 0}), 0.0), ConvergenceError);
  EXPECT_THROW(numeric_spectrum(random_symmetric(20, 3), 1e-12, 1), ConvergenceError);
  EXPECT_THROW(numeric_spectrum(DenseSymmetricMatrix(2), -1.0), DomainError);
}

TEST(NumericSpectrum, MatchesClosedFormForSmallOrders) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto d = decomp(n);
    for (SpectrumKind kind : kAllSpectrumKinds) {
      const auto numeric = numeric_spectrum(assemble_matrix(d, matrix_kind_of(kind)), 1e-10);
      const auto match = match_spectrum(numeric, closed_form_spectrum(d, kind), 1e-8);
      EXPECT_TRUE(match.ok) << n << " " << to_string(kind) << ": " << match.detail;
    }
  }
}

TEST(MatchSpectrum, DetectsMismatches) {
  const auto exact = closed_form_spectrum(decomp(2), SpectrumKind::L);  // {4, 2, 1, 1, 0, 0}
  EXPECT_TRUE(match_spectrum({0, 0, 1, 1, 2, 4}, exact, 1e-12).ok);
  EXPECT_FALSE(match_spectrum({0, 0, 1, 1, 2}, exact, 1e-12).ok);
  EXPECT_FALSE(match_spectrum({0, 1, 1, 1, 2, 4}, exact, 1e-12).ok);
  EXPECT_FALSE(match_spectrum({0, 0, 1, 1, 2, 4.001}, exact, 1e-6).ok);
  const auto near = match_spectrum({0, 0, 1, 1 + 1e-9, 2, 4}, exact, 1e-8);
  EXPECT_TRUE(near.ok);
  EXPECT_NEAR(near.max_abs_error, 1e-9, 1e-15);
}

TEST(Energies, K2) {
  const auto e = energies(decomp(1));
  EXPECT_DOUBLE_EQ(e.e, 2.0);
  EXPECT_EQ(e.le_exact, Rational(2));
  EXPECT_EQ(e.le_plus_exact, Rational(2));
  EXPECT_EQ(e.e_cn_exact, Rational(0));
  EXPECT_EQ(e.avg_degree_shift, Rational(1));
  const auto v = e_le_check(e, 2);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.chain_holds);
}

TEST(Energies, OrderSix) {
  const auto e = energies(decomp(6));
  EXPECT_NEAR(e.e, 2 + 2 * std::sqrt(3.0) + 2 * std::sqrt(8.0) + 2 * std::sqrt(24.0), 1e-12);
  EXPECT_EQ(e.le_exact, Rational(2624, 40));
  EXPECT_EQ(e.le_plus_exact, Rational(2624, 40));
  EXPECT_EQ(e.e_cn_exact, Rational(64));
  EXPECT_EQ(e.avg_degree_shift, Rational(72, 40));
  EXPECT_TRUE(e.hypoenergetic);
  EXPECT_FALSE(e.hyperenergetic || e.l_hyper || e.q_hyper || e.cn_hyper);
  EXPECT_DOUBLE_EQ(e.e_le_margin, e.le - e.e);
  const auto v = e_le_check(e, 40);
  EXPECT_TRUE(v.holds && v.chain_holds);
}

TEST(Energies, OrderTwo) {
  const auto e = energies(decomp(2));
  EXPECT_NEAR(e.e, 2 + 2 * std::sqrt(3.0), 1e-12);
  // Shift 8/6 over L-spectrum {4, 2, 1, 1, 0, 0}.
  EXPECT_EQ(e.le_exact, Rational(40, 6));
  EXPECT_EQ(e.e_cn_exact, Rational(4));
  EXPECT_TRUE(e_le_check(e, 6).chain_holds);
}

// Energies from numeric eigenvalues of the assembled matrices.
TEST(Energies, AgreeWithNumericSummation) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto d = decomp(n);
    const auto stats = graph_stats(d);
    const double shift = 2.0 * static_cast<double>(stats.edge_count) / static_cast<double>(stats.vertex_count);
    auto sum_abs = [&](MatrixKind kind, double s) {
      double total = 0;
      for (double x : numeric_spectrum(assemble_matrix(d, kind), 1e-12)) total += std::fabs(x - s);
      return total;
    };
    const auto e = energies(d);
    EXPECT_NEAR(e.e, sum_abs(MatrixKind::Adjacency, 0), 1e-8);
    EXPECT_NEAR(e.le, sum_abs(MatrixKind::Laplacian, shift), 1e-8);
    EXPECT_NEAR(e.le_plus, sum_abs(MatrixKind::SignlessLaplacian, shift), 1e-8);
    EXPECT_NEAR(e.e_cn, sum_abs(MatrixKind::CommonNeighborhood, 0), 1e-8);
  }
}

TEST(Energies, LaplacianEqualsSignlessAcrossOrders) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto e = energies(decomp(n));
    ASSERT_EQ(e.le_exact, e.le_plus_exact);
    ASSERT_GE(e.e, 0.0);
    ASSERT_GE(e.e_cn, 0.0);
  }
}

TEST(SpectrumKindNames, RoundTrip) {
  for (SpectrumKind k : kAllSpectrumKinds) EXPECT_EQ(parse_spectrum_kind(to_string(k)), k);
  EXPECT_THROW(parse_spectrum_kind("X"), DomainError);
}
