#pragma once

// The SGB-graph B(Z_n): vertex set Z_n x Z_n plus one vertex per subgroup, with
// (a, b) adjacent to H iff H = <a, b>. For a cyclic group this is a disjoint
// union of stars, one per subgroup, so the graph is stored compressed as a
// multiset of (subgroup order, star size). Dense matrices are only built for
// cross-checking against the closed forms.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sgb/group_core.hpp"

namespace sgb {

/// Orders above this are refused by the O(n^2) enumeration.
inline constexpr std::uint64_t kBruteForceMaxOrder = 3000;

/// Default cap on the dimension of assembled dense matrices.
inline constexpr std::size_t kDefaultDenseCap = 5000;

struct StarEntry {
  std::uint64_t subgroup_order = 0;
  /// deg(H): the number of ordered pairs generating the subgroup.
  std::uint64_t star_size = 0;

  friend bool operator==(const StarEntry&, const StarEntry&) = default;
};

/// B(G) as one star K_{1,s} per subgroup, ascending by subgroup order.
class StarDecomposition {
 public:
  /// Validates every invariant: entries ascending and one per divisor, star sizes
  /// positive, the trivial subgroup has star size 1, and the sizes sum to n^2.
  /// Throws DomainError on violation.
  StarDecomposition(std::uint64_t group_order, std::vector<StarEntry> entries);

  std::uint64_t group_order() const { return group_order_; }
  std::span<const StarEntry> entries() const { return entries_; }
  std::size_t subgroup_count() const { return entries_.size(); }

  friend bool operator==(const StarDecomposition&, const StarDecomposition&) = default;

 private:
  std::uint64_t group_order_;
  std::vector<StarEntry> entries_;
};

/// Star sizes from the second Jordan totient, J2(m) for each divisor m.
StarDecomposition build_star_decomposition(const CyclicGroupSpec& spec);

/// Independent oracle: buckets all n^2 pairs by generated_subgroup_order.
/// Throws CapExceededError above kBruteForceMaxOrder.
StarDecomposition brute_force_star_decomposition(const CyclicGroupSpec& spec);

struct GraphStats {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// vertex_count = n^2 + #subgroups, edge_count = n^2.
GraphStats graph_stats(const StarDecomposition& decomp);

/// Symmetric matrix with row-major storage. Writes go through set() which keeps
/// (i, j) and (j, i) equal.
class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(std::size_t dimension);

  /// Adopts row-major values; throws DomainError unless square, symmetric and finite.
  static DenseSymmetricMatrix from_values(std::size_t dimension, std::vector<double> values);

  std::size_t dimension() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> values() const { return data_; }

  bool is_symmetric() const;

  friend bool operator==(const DenseSymmetricMatrix&, const DenseSymmetricMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

enum class MatrixKind { Adjacency, Degree, Laplacian, SignlessLaplacian, CommonNeighborhood };

std::string_view to_string(MatrixKind kind);

/// Dense cap from SGB_DENSE_CAP, falling back to kDefaultDenseCap.
std::size_t dense_cap();

/// Block-diagonal matrix, one block per star: blocks ascending by subgroup order,
/// hub vertex first within each block, then its leaf pairs. CommonNeighborhood is
/// A^2 with the diagonal zeroed. Throws CapExceededError if the vertex count
/// exceeds `cap`.
DenseSymmetricMatrix assemble_matrix(const StarDecomposition& decomp, MatrixKind kind,
                                     std::size_t cap = dense_cap());

/// Plain-text dump: "dim k" then k lines of space-separated entries.
void write_matrix(std::ostream& out, const DenseSymmetricMatrix& m);
DenseSymmetricMatrix read_matrix(std::istream& in);

/// Explicit B(Z_n) built from pair enumeration. Subgroup vertices come first
/// (index = position of the divisor in ascending order), then pair (a, b) at
/// index subgroup_count + a*n + b. Each edge is (pair vertex, subgroup vertex).
struct EdgeList {
  std::uint64_t vertex_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

EdgeList brute_force_edge_list(const CyclicGroupSpec& spec);

}  // namespace sgb
