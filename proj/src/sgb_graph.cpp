#include "sgb/sgb_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "sgb/checked.hpp"
#include "sgb/errors.hpp"
#include "sgb/format.hpp"
#include "sgb/simd/kernels.hpp"

namespace sgb {

StarDecomposition::StarDecomposition(std::uint64_t group_order, std::vector<StarEntry> entries)
    : group_order_(group_order), entries_(std::move(entries)) {
  if (group_order_ == 0) throw DomainError("star decomposition: group order must be positive");
  const auto subgroups = divisors(CyclicGroupSpec::of_order(group_order_));
  if (subgroups.size() != entries_.size()) {
    throw DomainError("star decomposition: expected " + std::to_string(subgroups.size()) +
                      " stars, got " + std::to_string(entries_.size()));
  }
  i128 total = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.subgroup_order != subgroups[i].subgroup_order) {
      throw DomainError("star decomposition: entries must be ascending, one per divisor");
    }
    if (e.star_size == 0) throw DomainError("star decomposition: star sizes must be positive");
    total = checked_add(total, e.star_size);
  }
  if (entries_.front().star_size != 1) {
    throw DomainError("star decomposition: trivial subgroup must have star size 1");
  }
  const i128 n = group_order_;
  if (total != n * n) {
    throw DomainError("star decomposition: star sizes sum to " + to_string(total) +
                      ", expected n^2 = " + to_string(n * n));
  }
}

StarDecomposition build_star_decomposition(const CyclicGroupSpec& spec) {
  std::vector<StarEntry> entries;
  for (const auto& h : divisors(spec)) {
    entries.push_back({h.subgroup_order, jordan_totient_2(h.subgroup_order)});
  }
  return StarDecomposition(spec.order(), std::move(entries));
}

StarDecomposition brute_force_star_decomposition(const CyclicGroupSpec& spec) {
  const std::uint64_t n = spec.order();
  if (n > kBruteForceMaxOrder) {
    throw CapExceededError("brute force refuses order " + std::to_string(n) + " (cap " +
                           std::to_string(kBruteForceMaxOrder) + ")");
  }
  // Subgroup orders are divisors of n, at most n, so a flat counter suffices.
  std::vector<std::uint64_t> count(n + 1, 0);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) ++count[generated_subgroup_order(a, b, n)];
  }
  std::vector<StarEntry> entries;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (count[m] != 0) entries.push_back({m, count[m]});
  }
  return StarDecomposition(n, std::move(entries));
}

GraphStats graph_stats(const StarDecomposition& decomp) {
  const std::uint64_t n2 = checked_mul_u64(decomp.group_order(), decomp.group_order());
  return {checked_add_u64(n2, decomp.subgroup_count()), n2};
}

DenseSymmetricMatrix::DenseSymmetricMatrix(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension, 0.0) {}

DenseSymmetricMatrix DenseSymmetricMatrix::from_values(std::size_t dimension,
                                                       std::vector<double> values) {
  if (values.size() != dimension * dimension) {
    throw DomainError("matrix: expected " + std::to_string(dimension * dimension) + " values");
  }
  DenseSymmetricMatrix m(0);
  m.dim_ = dimension;
  m.data_ = std::move(values);
  for (double v : m.data_) {
    if (!std::isfinite(v)) throw DomainError("matrix: non-finite entry");
  }
  if (!m.is_symmetric()) throw DomainError("matrix: not symmetric");
  return m;
}

void DenseSymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= dim_ || j >= dim_) throw DomainError("matrix: index out of range");
  if (!std::isfinite(value)) throw DomainError("matrix: non-finite entry");
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = value;
}

bool DenseSymmetricMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (data_[i * dim_ + j] != data_[j * dim_ + i]) return false;
    }
  }
  return true;
}

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Degree: return "degree";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless_laplacian";
    case MatrixKind::CommonNeighborhood: return "common_neighborhood";
  }
  return "unknown";
}

std::size_t dense_cap() {
  if (const char* env = std::getenv("SGB_DENSE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw DomainError(std::string("SGB_DENSE_CAP is not a positive integer: ") + env);
  }
  return kDefaultDenseCap;
}

namespace {

std::vector<double> adjacency_values(const StarDecomposition& decomp, std::size_t dim) {
  std::vector<double> a(dim * dim, 0.0);
  std::size_t hub = 0;
  for (const auto& star : decomp.entries()) {
    for (std::uint64_t leaf = 1; leaf <= star.star_size; ++leaf) {
      const std::size_t v = hub + leaf;
      a[hub * dim + v] = 1.0;
      a[v * dim + hub] = 1.0;
    }
    hub += star.star_size + 1;
  }
  return a;
}

std::vector<double> degree_values(std::span<const double> adjacency, std::size_t dim) {
  std::vector<double> d(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < dim; ++j) deg += adjacency[i * dim + j];
    d[i * dim + i] = deg;
  }
  return d;
}

std::vector<double> square_zero_diagonal(std::span<const double> a, std::size_t dim) {
  const auto& k = simd::active_kernels();
  std::vector<double> c(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::span<double> out(c.data() + i * dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const double aij = a[i * dim + j];
      if (aij != 0.0) k.axpy(aij, a.subspan(j * dim, dim), out);
    }
    c[i * dim + i] = 0.0;
  }
  return c;
}

}  // namespace

DenseSymmetricMatrix assemble_matrix(const StarDecomposition& decomp, MatrixKind kind,
                                     std::size_t cap) {
  const GraphStats stats = graph_stats(decomp);
  if (stats.vertex_count > cap) {
    throw CapExceededError("dense matrix of dimension " + std::to_string(stats.vertex_count) +
                           " exceeds cap " + std::to_string(cap));
  }
  const auto dim = static_cast<std::size_t>(stats.vertex_count);
  std::vector<double> a = adjacency_values(decomp, dim);
  switch (kind) {
    case MatrixKind::Adjacency:
      return DenseSymmetricMatrix::from_values(dim, std::move(a));
    case MatrixKind::Degree:
      return DenseSymmetricMatrix::from_values(dim, degree_values(a, dim));
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian: {
      std::vector<double> m = degree_values(a, dim);
      const double sign = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += sign * a[i];
      return DenseSymmetricMatrix::from_values(dim, std::move(m));
    }
    case MatrixKind::CommonNeighborhood:
      return DenseSymmetricMatrix::from_values(dim, square_zero_diagonal(a, dim));
  }
  throw DomainError("assemble_matrix: unknown matrix kind");
}

void write_matrix(std::ostream& out, const DenseSymmetricMatrix& m) {
  out << "dim " << m.dimension() << '\n';
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j != 0) out << ' ';
      out << format_real(m(i, j));
    }
    out << '\n';
  }
}

DenseSymmetricMatrix read_matrix(std::istream& in) {
  std::string tag;
  std::size_t dim = 0;
  if (!(in >> tag >> dim) || tag != "dim") throw DomainError("matrix dump: missing 'dim k' header");
  std::vector<double> values(dim * dim);
  for (auto& v : values) {
    if (!(in >> v)) throw DomainError("matrix dump: truncated body");
  }
  return DenseSymmetricMatrix::from_values(dim, std::move(values));
}

EdgeList brute_force_edge_list(const CyclicGroupSpec& spec) {
  const std::uint64_t n = spec.order();
  if (n > kBruteForceMaxOrder) {
    throw CapExceededError("brute-force edge list refuses order " + std::to_string(n));
  }
  const auto subgroups = divisors(spec);
  std::map<std::uint64_t, std::uint64_t> vertex_of_order;
  for (std::size_t i = 0; i < subgroups.size(); ++i) vertex_of_order[subgroups[i].subgroup_order] = i;

  EdgeList g;
  g.vertex_count = subgroups.size() + n * n;
  g.edges.reserve(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      const std::uint64_t pair_vertex = subgroups.size() + a * n + b;
      g.edges.emplace_back(pair_vertex, vertex_of_order.at(generated_subgroup_order(a, b, n)));
    }
  }
  return g;
}

}  // namespace sgb
