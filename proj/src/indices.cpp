#include "sgb/indices.hpp"

#include <cmath>
#include <vector>

namespace sgb {

ZagrebReport zagreb(const StarDecomposition& decomp) {
  i128 sum_sq = 0;
  for (const auto& star : decomp.entries()) {
    const i128 s = star.star_size;
    sum_sq = checked_add(sum_sq, checked_mul(s, s));
  }
  const i128 n = decomp.group_order();
  const i128 n2 = checked_mul(n, n);

  ZagrebReport r;
  r.m1 = checked_add(n2, sum_sq);
  r.m2 = sum_sq;
  r.hv_margin = checked_sub(checked_mul(static_cast<i128>(decomp.subgroup_count()), r.m2),
                            checked_mul(n2, n2));
  r.hv_holds = r.hv_margin >= 0;
  return r;
}

DegreeIndexReport degree_indices(const StarDecomposition& decomp) {
  DegreeIndexReport r;
  for (const auto& star : decomp.entries()) {
    const double s = static_cast<double>(star.star_size);
    const double root = std::sqrt(s);
    r.randic += root;
    r.abc += std::sqrt(s * s - s);
    r.ga += 2.0 * s * root / (1.0 + s);
    r.harmonic += 2.0 * s / (1.0 + s);
    r.sci += s / std::sqrt(1.0 + s);
  }
  return r;
}

EdgeSumIndices edge_sum_indices(const EdgeList& graph) {
  std::vector<std::uint64_t> degree(graph.vertex_count, 0);
  for (const auto& [u, v] : graph.edges) {
    ++degree.at(u);
    ++degree.at(v);
  }

  EdgeSumIndices out;
  for (std::uint64_t d : degree) out.m1 = checked_add(out.m1, checked_mul(d, d));

  long double randic = 0, abc = 0, ga = 0, harmonic = 0, sci = 0;
  for (const auto& [u, v] : graph.edges) {
    const std::uint64_t du = degree[u];
    const std::uint64_t dv = degree[v];
    out.m2 = checked_add(out.m2, checked_mul(du, dv));
    const long double prod = static_cast<long double>(du) * dv;
    const long double sum = static_cast<long double>(du) + dv;
    randic += 1.0L / std::sqrt(prod);
    abc += std::sqrt((sum - 2.0L) / prod);
    ga += 2.0L * std::sqrt(prod) / sum;
    harmonic += 2.0L / sum;
    sci += 1.0L / std::sqrt(sum);
  }
  out.degree = {static_cast<double>(randic), static_cast<double>(abc), static_cast<double>(ga),
                static_cast<double>(harmonic), static_cast<double>(sci)};
  return out;
}

}  // namespace sgb
