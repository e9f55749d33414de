#pragma once

// Degree-based topological indices of B(Z_n). Zagreb quantities are exact
// integers; the radical-bearing indices are doubles.

#include "sgb/checked.hpp"
#include "sgb/sgb_graph.hpp"

namespace sgb {

struct ZagrebReport {
  i128 m1 = 0;
  i128 m2 = 0;
  /// #subgroups * M2 - n^4. The Hansen-Vukicevic inequality M2/|E| >= M1/|V| holds iff this is >= 0.
  i128 hv_margin = 0;
  bool hv_holds = false;

  friend bool operator==(const ZagrebReport&, const ZagrebReport&) = default;
};

ZagrebReport zagreb(const StarDecomposition& decomp);

struct DegreeIndexReport {
  double randic = 0.0;
  double abc = 0.0;
  double ga = 0.0;
  double harmonic = 0.0;
  double sci = 0.0;
};

/// Per-star sums over star sizes s: sqrt(s), sqrt(s^2 - s), 2 s^{3/2} / (1 + s),
/// 2 s / (1 + s) and s / sqrt(1 + s).
DegreeIndexReport degree_indices(const StarDecomposition& decomp);

struct EdgeSumIndices {
  i128 m1 = 0;
  i128 m2 = 0;
  DegreeIndexReport degree;
};

/// Evaluates every index edge by edge from the vertex degrees of an explicit graph.
EdgeSumIndices edge_sum_indices(const EdgeList& graph);

}  // namespace sgb
