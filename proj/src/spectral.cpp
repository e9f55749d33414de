#include "sgb/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sgb/errors.hpp"
#include "sgb/format.hpp"

namespace sgb {

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::A: return "A";
    case SpectrumKind::L: return "L";
    case SpectrumKind::Q: return "Q";
    case SpectrumKind::CN: return "CN";
  }
  return "?";
}

SpectrumKind parse_spectrum_kind(std::string_view name) {
  for (SpectrumKind k : kAllSpectrumKinds) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown spectrum kind '" + std::string(name) + "' (expected A, L, Q or CN)");
}

MatrixKind matrix_kind_of(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::A: return MatrixKind::Adjacency;
    case SpectrumKind::L: return MatrixKind::Laplacian;
    case SpectrumKind::Q: return MatrixKind::SignlessLaplacian;
    case SpectrumKind::CN: return MatrixKind::CommonNeighborhood;
  }
  throw DomainError("unknown spectrum kind");
}

void SpectrumMultiset::normalize() {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<std::pair<ExactEigenvalue, std::uint64_t>> merged;
  for (const auto& [value, mult] : pairs) {
    if (mult == 0) continue;
    if (!merged.empty() && merged.back().first == value) {
      merged.back().second = checked_add_u64(merged.back().second, mult);
    } else {
      merged.emplace_back(value, mult);
    }
  }
  pairs = std::move(merged);
}

std::uint64_t SpectrumMultiset::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& p : pairs) total = checked_add_u64(total, p.second);
  return total;
}

bool SpectrumMultiset::is_integral() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) {
    return p.first.is_rational() && p.first.coefficient().is_integer();
  });
}

bool SpectrumMultiset::has_irrational() const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [](const auto& p) { return !p.first.is_rational(); });
}

std::map<std::uint64_t, Rational> SpectrumMultiset::exact_sum() const {
  std::map<std::uint64_t, Rational> sum;
  for (const auto& [value, mult] : pairs) {
    Rational& slot = sum[value.radicand()];
    slot = slot + value.coefficient() * Rational(static_cast<i128>(mult));
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second.sign() == 0; });
  return sum;
}

Rational SpectrumMultiset::exact_sum_of_squares() const {
  Rational total;
  for (const auto& [value, mult] : pairs) {
    total = total + value.square() * Rational(static_cast<i128>(mult));
  }
  return total;
}

std::vector<double> SpectrumMultiset::sorted_values() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    out.insert(out.end(), it->second, it->first.value());
  }
  return out;
}

std::string SpectrumMultiset::to_string() const {
  std::string out;
  for (const auto& [value, mult] : pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + value.to_string() + ")^" + std::to_string(mult);
  }
  return out;
}

SpectrumMultiset closed_form_spectrum(const StarDecomposition& decomp, SpectrumKind kind) {
  SpectrumMultiset spec{kind, {}};
  auto add = [&](ExactEigenvalue v, std::uint64_t mult) {
    if (mult != 0) spec.pairs.emplace_back(std::move(v), mult);
  };
  for (const auto& star : decomp.entries()) {
    const i128 s = star.star_size;
    switch (kind) {
      case SpectrumKind::A:
        add(ExactEigenvalue::sqrt_of(s), 1);
        add(-ExactEigenvalue::sqrt_of(s), 1);
        add(ExactEigenvalue::integer(0), star.star_size - 1);
        break;
      case SpectrumKind::L:
      case SpectrumKind::Q:
        add(ExactEigenvalue::integer(0), 1);
        add(ExactEigenvalue::integer(1), star.star_size - 1);
        add(ExactEigenvalue::integer(s + 1), 1);
        break;
      case SpectrumKind::CN:
        add(ExactEigenvalue::integer(0), 1);
        add(ExactEigenvalue::integer(-1), star.star_size - 1);
        add(ExactEigenvalue::integer(s - 1), 1);
        break;
    }
  }
  spec.normalize();
  return spec;
}

SpectrumMatch match_spectrum(const std::vector<double>& numeric, const SpectrumMultiset& exact,
                             double tol, double cluster_gap) {
  SpectrumMatch m;
  if (numeric.size() != exact.total_multiplicity()) {
    m.detail = "eigenvalue count " + std::to_string(numeric.size()) + " != " +
               std::to_string(exact.total_multiplicity());
    return m;
  }
  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    if (i == 0 || numeric[i] - numeric[i - 1] > cluster_gap) clusters.emplace_back(i, i);
    clusters.back().second = i + 1;
  }
  if (clusters.size() != exact.pairs.size()) {
    m.detail = std::to_string(clusters.size()) + " numeric clusters vs " +
               std::to_string(exact.pairs.size()) + " distinct exact eigenvalues";
    return m;
  }
  bool ok = true;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& [value, mult] = exact.pairs[exact.pairs.size() - 1 - c];
    const auto [begin, end] = clusters[c];
    const double target = value.value();
    if (end - begin != mult && ok) {
      m.detail = "multiplicity of " + value.to_string() + ": numeric " +
                 std::to_string(end - begin) + " vs exact " + std::to_string(mult);
      ok = false;
    }
    for (std::size_t i = begin; i < end; ++i) {
      m.max_abs_error = std::max(m.max_abs_error, std::fabs(numeric[i] - target));
    }
  }
  if (ok && !(m.max_abs_error <= tol)) {
    m.detail = "max abs error " + format_real(m.max_abs_error) + " exceeds " + format_real(tol);
    ok = false;
  }
  m.ok = ok;
  return m;
}

namespace {

Rational shifted_abs_sum(const SpectrumMultiset& spec, const Rational& shift) {
  Rational total;
  for (const auto& [value, mult] : spec.pairs) {
    if (!value.is_rational()) {
      throw DomainError(std::string(to_string(spec.kind)) + "-spectrum is not rational");
    }
    total = total + (value.coefficient() - shift).abs() * Rational(static_cast<i128>(mult));
  }
  return total;
}

}  // namespace

EnergyReport energies(const StarDecomposition& decomp) {
  const GraphStats stats = graph_stats(decomp);
  const i128 v = stats.vertex_count;
  const i128 m = stats.edge_count;

  EnergyReport r;
  r.avg_degree_shift = Rational(checked_mul(2, m), v);

  for (const auto& [value, mult] : closed_form_spectrum(decomp, SpectrumKind::A).pairs) {
    r.e += static_cast<double>(mult) * std::fabs(value.value());
  }
  r.le_exact = shifted_abs_sum(closed_form_spectrum(decomp, SpectrumKind::L), r.avg_degree_shift);
  r.le_plus_exact =
      shifted_abs_sum(closed_form_spectrum(decomp, SpectrumKind::Q), r.avg_degree_shift);
  r.e_cn_exact = shifted_abs_sum(closed_form_spectrum(decomp, SpectrumKind::CN), Rational(0));
  r.le = r.le_exact.to_double();
  r.le_plus = r.le_plus_exact.to_double();
  r.e_cn = r.e_cn_exact.to_double();

  const i128 complete = checked_mul(2, v - 1);
  const i128 complete_cn = checked_mul(complete, v - 2);
  r.hypoenergetic = r.e < static_cast<double>(v);
  r.hyperenergetic = r.e > static_cast<double>(complete);
  r.l_hyper = r.le_exact > Rational(complete);
  r.q_hyper = r.le_plus_exact > Rational(complete);
  r.cn_hyper = r.e_cn_exact > Rational(complete_cn);
  r.e_le_margin = r.le - r.e;
  return r;
}

ELeVerdict e_le_check(const EnergyReport& report, std::uint64_t vertex_count) {
  const double v = static_cast<double>(vertex_count);
  return {report.e <= report.le, report.le > v && v > report.e};
}

}  // namespace sgb
