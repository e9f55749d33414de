#pragma once

// Exact spectra and energies of B(Z_n) from its star decomposition, plus the
// numeric Jacobi eigensolver used to cross-check them.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgb/exact.hpp"
#include "sgb/sgb_graph.hpp"

namespace sgb {

enum class SpectrumKind { A, L, Q, CN };

/// "A", "L", "Q", "CN".
std::string_view to_string(SpectrumKind kind);

/// Parses the names above; throws DomainError otherwise.
SpectrumKind parse_spectrum_kind(std::string_view name);

MatrixKind matrix_kind_of(SpectrumKind kind);

inline constexpr SpectrumKind kAllSpectrumKinds[] = {SpectrumKind::A, SpectrumKind::L,
                                                     SpectrumKind::Q, SpectrumKind::CN};

struct SpectrumMultiset {
  SpectrumKind kind = SpectrumKind::A;
  /// Distinct eigenvalues, strictly descending, with positive multiplicities.
  std::vector<std::pair<ExactEigenvalue, std::uint64_t>> pairs;

  /// Sorts descending and merges equal values.
  void normalize();

  std::uint64_t total_multiplicity() const;
  bool is_integral() const;
  bool has_irrational() const;

  /// Sum of all eigenvalues as {radicand -> rational coefficient}, zero terms dropped.
  std::map<std::uint64_t, Rational> exact_sum() const;
  Rational exact_sum_of_squares() const;

  /// Real values expanded by multiplicity, ascending.
  std::vector<double> sorted_values() const;

  /// "(26)^1 (9)^1 ... (0)^4".
  std::string to_string() const;

  friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;
};

/// Union over stars K_{1,s}: A gives {0^{s-1}, ±√s}; L and Q give {0, 1^{s-1}, s+1};
/// CN gives {0, (-1)^{s-1}, s-1}.
SpectrumMultiset closed_form_spectrum(const StarDecomposition& decomp, SpectrumKind kind);

inline constexpr int kDefaultMaxSweeps = 100;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending. The
/// matrix is first split into the connected components of its nonzero pattern.
/// Iteration on a component stops once its off-diagonal Frobenius norm is below
/// tol * (||A||_F + 1); ConvergenceError after max_sweeps sweeps.
std::vector<double> numeric_spectrum(const DenseSymmetricMatrix& matrix, double tol,
                                     int max_sweeps = kDefaultMaxSweeps);

inline constexpr double kClusterGap = 1e-6;

struct SpectrumMatch {
  bool ok = false;
  double max_abs_error = 0.0;
  std::string detail;
};

/// Groups ascending numeric values into clusters (consecutive gap <= cluster_gap) and
/// requires one cluster per exact eigenvalue with equal multiplicity and every value
/// within tol of its exact counterpart.
SpectrumMatch match_spectrum(const std::vector<double>& numeric, const SpectrumMultiset& exact,
                             double tol, double cluster_gap = kClusterGap);

struct EnergyReport {
  double e = 0.0;
  double le = 0.0;
  double le_plus = 0.0;
  double e_cn = 0.0;
  /// Exact LE, LE+ and E_CN; the L, Q and CN spectra of a union of stars are integral.
  Rational le_exact;
  Rational le_plus_exact;
  Rational e_cn_exact;
  /// 2m / |V|.
  Rational avg_degree_shift;
  bool hypoenergetic = false;
  bool hyperenergetic = false;
  bool l_hyper = false;
  bool q_hyper = false;
  bool cn_hyper = false;
  double e_le_margin = 0.0;
};

/// Energies summed over the closed-form spectra. Flags compare against K_|V|:
/// E, LE, LE+ against 2(|V|-1); E_CN against 2(|V|-1)(|V|-2); hypoenergetic is E < |V|.
EnergyReport energies(const StarDecomposition& decomp);

struct ELeVerdict {
  bool holds = false;
  bool chain_holds = false;
};

/// holds: E <= LE. chain_holds: LE > |V| > E.
ELeVerdict e_le_check(const EnergyReport& report, std::uint64_t vertex_count);

}  // namespace sgb
