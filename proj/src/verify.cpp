#include "sgb/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sgb/closed_forms.hpp"
#include "sgb/errors.hpp"
#include "sgb/format.hpp"
#include "sgb/indices.hpp"
#include "sgb/spectral.hpp"

namespace sgb {

namespace {

constexpr std::size_t kMaxNotes = 5;

class Group {
 public:
  explicit Group(std::string name) { result_.name = std::move(name); }

  void fail(const std::string& what) {
    result_.passed = false;
    ++failures_;
    if (result_.notes.size() < kMaxNotes) result_.notes.push_back(what);
  }
  void note(const std::string& what) {
    if (result_.notes.size() < kMaxNotes) result_.notes.push_back(what);
  }
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }

  CheckGroupResult finish(std::string summary) {
    result_.summary = std::move(summary) + ", " + std::to_string(checks_) + " checks";
    if (failures_ != 0) result_.summary += ", " + std::to_string(failures_) + " failed";
    return std::move(result_);
  }

 private:
  CheckGroupResult result_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

StarDecomposition decomposition(std::uint64_t n) {
  return build_star_decomposition(CyclicGroupSpec::of_order(n));
}

std::string range(std::uint64_t hi) { return "orders 1.." + std::to_string(hi); }

CheckGroupResult structure_oracle(std::uint64_t max_order, const std::vector<FamilyTag>& catalog) {
  Group g("structure-oracle");
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto spec = CyclicGroupSpec::of_order(n);
    g.check(brute_force_star_decomposition(spec) == build_star_decomposition(spec),
            "order " + std::to_string(n) + ": brute force differs from J2 decomposition");
  }
  for (const auto& tag : catalog) {
    g.check(catalog_structure(tag) == decomposition(family_order(tag)),
            to_string(tag) + ": printed structure differs");
  }
  return g.finish(range(max_order) + ", " + std::to_string(catalog.size()) + " catalog instances");
}

CheckGroupResult degree_oracle(std::uint64_t max_order) {
  Group g("degree-index-oracle");
  const std::uint64_t hi = std::min<std::uint64_t>(max_order, 200);
  for (std::uint64_t n = 1; n <= hi; ++n) {
    const auto spec = CyclicGroupSpec::of_order(n);
    const auto decomp = build_star_decomposition(spec);
    const auto edge = edge_sum_indices(brute_force_edge_list(spec));
    const auto z = zagreb(decomp);
    const auto d = degree_indices(decomp);
    const std::string at = "order " + std::to_string(n) + ": ";
    g.check(edge.m1 == z.m1 && edge.m2 == z.m2, at + "Zagreb indices differ from edge sums");
    g.check(rel_close(edge.degree.randic, d.randic, 1e-10), at + "Randic differs");
    g.check(rel_close(edge.degree.abc, d.abc, 1e-10) || (edge.degree.abc == 0 && d.abc == 0),
            at + "ABC differs");
    g.check(rel_close(edge.degree.ga, d.ga, 1e-10), at + "GA differs");
    g.check(rel_close(edge.degree.harmonic, d.harmonic, 1e-10), at + "harmonic differs");
    g.check(rel_close(edge.degree.sci, d.sci, 1e-10), at + "SCI differs");
  }
  return g.finish(range(hi));
}

CheckGroupResult catalog_agreement(const std::vector<FamilyTag>& catalog, double rel_tol) {
  Group g("catalog-agreement");
  for (const auto& tag : catalog) {
    const auto decomp = decomposition(family_order(tag));
    const std::string at = to_string(tag) + ": ";

    const auto z = zagreb(decomp);
    const auto cz = catalog_zagreb(tag);
    g.check(cz.m1 == z.m1 && cz.m2 == z.m2, at + "Zagreb M1=" + to_string(cz.m1) + " M2=" +
                                                to_string(cz.m2) + " vs pipeline " +
                                                to_string(z.m1) + "/" + to_string(z.m2));

    const auto spectra = catalog_spectra(tag);
    for (SpectrumKind kind : kAllSpectrumKinds) {
      g.check(spectra.of(kind) == closed_form_spectrum(decomp, kind),
              at + std::string(to_string(kind)) + "-spectrum differs");
    }

    const auto e = energies(decomp);
    const auto ce = catalog_energies(tag);
    g.check(rel_close(ce.e, e.e, rel_tol), at + "E " + format_real(ce.e) + " vs " + format_real(e.e));
    g.check(rel_close(ce.le, e.le, rel_tol) && rel_close(ce.le_plus, e.le_plus, rel_tol),
            at + "LE " + ce.le_exact.to_string() + " vs " + e.le_exact.to_string());
    g.check(rel_close(ce.e_cn, e.e_cn, rel_tol),
            at + "E_CN " + ce.e_cn_exact.to_string() + " vs " + e.e_cn_exact.to_string());

    if (std::holds_alternative<FamilyPn>(tag)) continue;
    const auto d = degree_indices(decomp);
    const auto cd = catalog_degree_indices(tag);
    g.check(rel_close(cd.randic, d.randic, rel_tol), at + "R differs");
    g.check(rel_close(cd.abc, d.abc, rel_tol), at + "ABC differs");
    g.check(rel_close(cd.ga, d.ga, rel_tol), at + "GA differs");
    g.check(rel_close(cd.harmonic, d.harmonic, rel_tol), at + "H differs");
    if (!rel_close(cd.sci, d.sci, rel_tol)) {
      g.note("DISCREPANCY " + at + "printed SCI " + format_real(cd.sci) + " vs definitional " +
             format_real(d.sci));
    }
  }
  return g.finish(std::to_string(catalog.size()) + " catalog instances");
}

CheckGroupResult spectral_cross_check(std::uint64_t max_order, std::uint64_t spectral_max,
                                      double tol) {
  Group g("spectral-cross-check");
  const std::uint64_t hi = std::min(max_order, spectral_max);
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= hi; ++n) {
    const auto decomp = decomposition(n);
    for (SpectrumKind kind : kAllSpectrumKinds) {
      const std::string at = "order " + std::to_string(n) + " " + std::string(to_string(kind)) + ": ";
      try {
        const auto numeric = numeric_spectrum(assemble_matrix(decomp, matrix_kind_of(kind)), tol);
        const auto match = match_spectrum(numeric, closed_form_spectrum(decomp, kind), tol);
        worst = std::max(worst, match.max_abs_error);
        g.check(match.ok, at + match.detail);
      } catch (const ConvergenceError& e) {
        g.check(false, at + e.what());
      }
    }
  }
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto decomp = decomposition(n);
    const auto l = closed_form_spectrum(decomp, SpectrumKind::L);
    const auto q = closed_form_spectrum(decomp, SpectrumKind::Q);
    g.check(l.pairs == q.pairs, "order " + std::to_string(n) + ": L-spectrum != Q-spectrum");
  }
  return g.finish("numeric " + range(hi) + " at tol " + format_real(tol) + " (max error " +
                  format_real(worst) + "), L=Q " + range(max_order));
}

CheckGroupResult trace_identities(std::uint64_t max_order) {
  Group g("trace-identities");
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto decomp = decomposition(n);
    const auto stats = graph_stats(decomp);
    const Rational two_m(2 * static_cast<i128>(stats.edge_count));
    const std::map<std::uint64_t, Rational> rational_two_m{{1, two_m}};
    const std::string at = "order " + std::to_string(n) + ": ";
    const auto a = closed_form_spectrum(decomp, SpectrumKind::A);
    const auto l = closed_form_spectrum(decomp, SpectrumKind::L);
    const auto q = closed_form_spectrum(decomp, SpectrumKind::Q);
    const auto cn = closed_form_spectrum(decomp, SpectrumKind::CN);
    g.check(a.exact_sum().empty(), at + "sum of A eigenvalues is not 0");
    g.check(l.exact_sum() == rational_two_m, at + "sum of L eigenvalues is not 2m");
    g.check(q.exact_sum() == rational_two_m, at + "sum of Q eigenvalues is not 2m");
    g.check(a.exact_sum_of_squares() == two_m, at + "sum of squared A eigenvalues is not 2m");
    g.check(cn.exact_sum().empty(), at + "sum of CN eigenvalues is not 0");
    for (const auto* s : {&a, &l, &q, &cn}) {
      g.check(s->total_multiplicity() == stats.vertex_count,
              at + std::string(to_string(s->kind)) + " multiplicities do not sum to |V|");
    }
  }
  return g.finish(range(max_order));
}

CheckGroupResult hv_margins(std::uint64_t max_order, const std::vector<FamilyTag>& catalog) {
  Group g("hv-margins");
  for (const auto& tag : catalog) {
    const auto z = zagreb(decomposition(family_order(tag)));
    g.check(z.hv_margin > 0, to_string(tag) + ": margin " + to_string(z.hv_margin) + " not > 0");
  }
  if (max_order >= 1) {
    const auto z = zagreb(decomposition(1));
    g.check(z.hv_margin == 0 && z.hv_holds, "order 1: margin " + to_string(z.hv_margin) + " != 0");
  }
  std::size_t holds = 0;
  for (std::uint64_t n = 1; n <= max_order; ++n) holds += zagreb(decomposition(n)).hv_holds;
  return g.finish(std::to_string(catalog.size()) + " catalog instances strict, order 1 equality; " +
                  std::to_string(holds) + "/" + std::to_string(max_order) + " orders satisfy the inequality");
}

CheckGroupResult e_le_chain(std::uint64_t max_order, const std::vector<FamilyTag>& catalog) {
  Group g("e-le-chain");
  for (const auto& tag : catalog) {
    const auto decomp = decomposition(family_order(tag));
    const auto e = energies(decomp);
    const auto verdict = e_le_check(e, graph_stats(decomp).vertex_count);
    g.check(verdict.chain_holds, to_string(tag) + ": LE > |V| > E fails (LE " + format_real(e.le) +
                                     ", E " + format_real(e.e) + ")");
  }
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto decomp = decomposition(n);
    const auto verdict = e_le_check(energies(decomp), graph_stats(decomp).vertex_count);
    g.check(verdict.holds, "order " + std::to_string(n) + ": E > LE");
  }
  return g.finish(std::to_string(catalog.size()) + " catalog chains, E <= LE " + range(max_order));
}

CheckGroupResult flag_classification(const std::vector<FamilyTag>& catalog) {
  Group g("flag-classification");
  for (const auto& tag : catalog) {
    const auto e = energies(decomposition(family_order(tag)));
    g.check(e.hypoenergetic && !e.hyperenergetic && !e.l_hyper && !e.q_hyper && !e.cn_hyper,
            to_string(tag) + ": expected hypoenergetic and no hyper flags");
  }
  return g.finish(std::to_string(catalog.size()) + " catalog instances");
}

CheckGroupResult integrality(const std::vector<FamilyTag>& catalog) {
  Group g("integrality");
  for (const auto& tag : catalog) {
    const auto decomp = decomposition(family_order(tag));
    const std::string at = to_string(tag) + ": ";
    g.check(closed_form_spectrum(decomp, SpectrumKind::A).has_irrational(),
            at + "A-spectrum is integral");
    for (SpectrumKind kind : {SpectrumKind::L, SpectrumKind::Q, SpectrumKind::CN}) {
      g.check(closed_form_spectrum(decomp, kind).is_integral(),
              at + std::string(to_string(kind)) + "-spectrum is not integral");
    }
  }
  return g.finish(std::to_string(catalog.size()) + " catalog instances");
}

}  // namespace

bool VerifyResult::all_passed() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.passed; });
}

VerifyResult run_verify(const VerifyOptions& options) {
  if (options.max_order > kBruteForceMaxOrder) {
    throw CapExceededError("verify max order " + std::to_string(options.max_order) +
                           " exceeds the brute-force cap " + std::to_string(kBruteForceMaxOrder));
  }
  if (!(options.tol >= 0.0)) throw DomainError("tolerance must be non-negative");
  const auto catalog = catalog_instances(options.max_order);
  VerifyResult r;
  r.groups.push_back(structure_oracle(options.max_order, catalog));
  r.groups.push_back(degree_oracle(options.max_order));
  r.groups.push_back(catalog_agreement(catalog, options.rel_tol));
  r.groups.push_back(spectral_cross_check(options.max_order, options.spectral_max_order, options.tol));
  r.groups.push_back(trace_identities(options.max_order));
  r.groups.push_back(hv_margins(options.max_order, catalog));
  r.groups.push_back(e_le_chain(options.max_order, catalog));
  r.groups.push_back(flag_classification(catalog));
  r.groups.push_back(integrality(catalog));
  return r;
}

void print_verify(std::ostream& out, const VerifyResult& result) {
  for (const auto& g : result.groups) {
    out << (g.passed ? "PASS " : "FAIL ") << g.name << ": " << g.summary << '\n';
    for (const auto& n : g.notes) out << "  " << n << '\n';
  }
}

}  // namespace sgb
