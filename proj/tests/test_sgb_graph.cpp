#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sgb/errors.hpp"
#include "sgb/sgb_graph.hpp"

using namespace sgb;

namespace {

StarDecomposition decomp(std::uint64_t n) { return build_star_decomposition(CyclicGroupSpec::of_order(n)); }

std::vector<std::uint64_t> sizes(const StarDecomposition& d) {
  std::vector<std::uint64_t> out;
  for (const auto& e : d.entries()) out.push_back(e.star_size);
  return out;
}

}  // namespace

TEST(StarDecomposition, Examples) {
  EXPECT_EQ(decomp(1), StarDecomposition(1, {{1, 1}}));
  EXPECT_EQ(decomp(6), StarDecomposition(6, {{1, 1}, {2, 3}, {3, 8}, {6, 24}}));
  EXPECT_EQ(decomp(4), StarDecomposition(4, {{1, 1}, {2, 3}, {4, 12}}));
}

TEST(StarDecomposition, ConstructorRejectsBrokenInvariants) {
  EXPECT_THROW(StarDecomposition(6, {{1, 1}, {2, 3}, {3, 8}}), DomainError);
  EXPECT_THROW(StarDecomposition(6, {{1, 1}, {3, 8}, {2, 3}, {6, 24}}), DomainError);
  EXPECT_THROW(StarDecomposition(6, {{1, 1}, {2, 3}, {3, 8}, {6, 23}}), DomainError);
  EXPECT_THROW(StarDecomposition(4, {{1, 2}, {2, 2}, {4, 12}}), DomainError);
  EXPECT_THROW(StarDecomposition(4, {{1, 1}, {2, 0}, {4, 15}}), DomainError);
  EXPECT_THROW(StarDecomposition(0, {}), DomainError);
}

TEST(BruteForce, SmallExamples) {
  EXPECT_EQ(brute_force_star_decomposition(CyclicGroupSpec::of_order(1)), decomp(1));
  EXPECT_EQ(sizes(brute_force_star_decomposition(CyclicGroupSpec::of_order(4))),
            (std::vector<std::uint64_t>{1, 3, 12}));
  EXPECT_EQ(sizes(brute_force_star_decomposition(CyclicGroupSpec::of_order(6))),
            (std::vector<std::uint64_t>{1, 3, 8, 24}));
}

TEST(BruteForce, AgreesWithTotientUpTo400) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto spec = CyclicGroupSpec::of_order(n);
    ASSERT_EQ(brute_force_star_decomposition(spec), build_star_decomposition(spec)) << n;
  }
}

TEST(BruteForce, RefusesAboveCap) {
  EXPECT_THROW(brute_force_star_decomposition(CyclicGroupSpec::of_order(kBruteForceMaxOrder + 1)),
               CapExceededError);
  EXPECT_THROW(brute_force_edge_list(CyclicGroupSpec::of_order(kBruteForceMaxOrder + 1)), CapExceededError);
}

TEST(GraphStats, Examples) {
  EXPECT_EQ(graph_stats(decomp(6)), (GraphStats{40, 36}));
  EXPECT_EQ(graph_stats(decomp(1)), (GraphStats{2, 1}));
  EXPECT_EQ(graph_stats(decomp(2)), (GraphStats{6, 4}));
}

TEST(AssembleMatrix, K2Adjacency) {
  const auto a = assemble_matrix(decomp(1), MatrixKind::Adjacency);
  ASSERT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a(0, 0), 0.0);
  EXPECT_EQ(a(0, 1), 1.0);
  EXPECT_EQ(a(1, 0), 1.0);
  EXPECT_EQ(a(1, 1), 0.0);
}

TEST(AssembleMatrix, StarK13BlockLayout) {
  // Order 2: K2 at vertices 0-1, K_{1,3} with hub 2 and leaves 3..5.
  const auto d = decomp(2);
  const auto lap = assemble_matrix(d, MatrixKind::Laplacian);
  const double expected[4][4] = {{3, -1, -1, -1}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(lap(2 + i, 2 + j), expected[i][j]) << i << "," << j;
  }
  const auto cn = assemble_matrix(d, MatrixKind::CommonNeighborhood);
  for (int j = 0; j < 6; ++j) EXPECT_EQ(cn(2, j), 0.0);
  for (int i = 3; i < 6; ++i) {
    for (int j = 3; j < 6; ++j) EXPECT_EQ(cn(i, j), i == j ? 0.0 : 1.0);
  }
}

TEST(AssembleMatrix, StructuralIdentities) {
  for (std::uint64_t n : {1, 2, 6, 8, 12}) {
    const auto d = decomp(n);
    const auto a = assemble_matrix(d, MatrixKind::Adjacency);
    const auto deg = assemble_matrix(d, MatrixKind::Degree);
    const auto l = assemble_matrix(d, MatrixKind::Laplacian);
    const auto q = assemble_matrix(d, MatrixKind::SignlessLaplacian);
    const auto cn = assemble_matrix(d, MatrixKind::CommonNeighborhood);
    const std::size_t dim = a.dimension();
    ASSERT_EQ(dim, graph_stats(d).vertex_count);

    // Hubs sit at the block starts; every other vertex is a leaf pair of degree 1.
    std::vector<bool> hub(dim, false);
    std::size_t at = 0;
    for (const auto& e : d.entries()) {
      hub[at] = true;
      at += e.star_size + 1;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const auto row = a.row(i);
      const double row_sum = std::accumulate(row.begin(), row.end(), 0.0);
      if (!hub[i]) {
        EXPECT_EQ(row_sum, 1.0);
      }
      EXPECT_EQ(deg(i, i), row_sum);
      double lap_sum = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        lap_sum += l(i, j);
        EXPECT_EQ(q(i, j), l(i, j) + 2 * a(i, j));
        if (i != j) {
          EXPECT_EQ(deg(i, j), 0.0);
        }
        // CN of a star: hub isolated, leaves of one star pairwise 1.
        double common = 0.0;
        for (std::size_t k = 0; k < dim; ++k) common += a(i, k) * a(k, j);
        EXPECT_EQ(cn(i, j), i == j ? 0.0 : common);
      }
      EXPECT_EQ(lap_sum, 0.0);
    }
    EXPECT_TRUE(cn.is_symmetric());
  }
}

TEST(AssembleMatrix, Deterministic) {
  const auto d = decomp(12);
  for (auto kind : {MatrixKind::Adjacency, MatrixKind::CommonNeighborhood, MatrixKind::Laplacian}) {
    EXPECT_EQ(assemble_matrix(d, kind), assemble_matrix(d, kind));
  }
}

TEST(AssembleMatrix, CapExceeded) {
  EXPECT_THROW(assemble_matrix(decomp(6), MatrixKind::Adjacency, 39), CapExceededError);
  EXPECT_NO_THROW(assemble_matrix(decomp(6), MatrixKind::Adjacency, 40));
  EXPECT_THROW(assemble_matrix(decomp(100), MatrixKind::Adjacency), CapExceededError);
}

TEST(AssembleMatrix, CapFromEnvironment) {
  ::setenv("SGB_DENSE_CAP", "10", 1);
  EXPECT_EQ(dense_cap(), 10u);
  EXPECT_THROW(assemble_matrix(decomp(6), MatrixKind::Adjacency), CapExceededError);
  ::setenv("SGB_DENSE_CAP", "abc", 1);
  EXPECT_THROW(dense_cap(), DomainError);
  ::unsetenv("SGB_DENSE_CAP");
  EXPECT_EQ(dense_cap(), kDefaultDenseCap);
}

TEST(DenseSymmetricMatrix, SetKeepsSymmetryAndValidates) {
  DenseSymmetricMatrix m(3);
  m.set(0, 2, 4.5);
  EXPECT_EQ(m(2, 0), 4.5);
  EXPECT_THROW(m.set(3, 0, 1.0), DomainError);
  EXPECT_THROW(m.set(0, 0, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(DenseSymmetricMatrix::from_values(2, {0, 1, 2, 0}), DomainError);
  EXPECT_THROW(DenseSymmetricMatrix::from_values(2, {0, 1, 1}), DomainError);
}

TEST(MatrixDump, RoundTrips) {
  const auto m = assemble_matrix(decomp(2), MatrixKind::SignlessLaplacian);
  std::stringstream ss;
  write_matrix(ss, m);
  const std::string text = ss.str();
  EXPECT_EQ(text.substr(0, 6), "dim 6\n");
  EXPECT_EQ(read_matrix(ss), m);
  std::istringstream bad("dim 2\n0 1\n");
  EXPECT_THROW(read_matrix(bad), DomainError);
  std::istringstream no_header("2\n0 1\n1 0\n");
  EXPECT_THROW(read_matrix(no_header), DomainError);
}

TEST(EdgeList, ShapeAndDegrees) {
  const auto spec = CyclicGroupSpec::of_order(6);
  const auto g = brute_force_edge_list(spec);
  EXPECT_EQ(g.vertex_count, 40u);
  ASSERT_EQ(g.edges.size(), 36u);
  std::vector<std::uint64_t> degree(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  EXPECT_EQ(std::vector<std::uint64_t>(degree.begin(), degree.begin() + 4),
            (std::vector<std::uint64_t>{1, 3, 8, 24}));
  for (std::size_t v = 4; v < degree.size(); ++v) EXPECT_EQ(degree[v], 1u);
}
