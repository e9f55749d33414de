#include "sgb/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sgb/errors.hpp"

namespace sgb {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

i128 pw(std::uint64_t base, unsigned e) { return checked_pow(static_cast<i128>(base), e); }

// Evaluates an integer polynomial given as (coefficient, p exponent, q exponent) terms.
struct Term {
  i128 c;
  unsigned ep, eq;
};

i128 poly(std::uint64_t p, std::uint64_t q, std::initializer_list<Term> terms) {
  i128 total = 0;
  for (const auto& t : terms) total = checked_add(total, checked_mul(t.c, checked_mul(pw(p, t.ep), pw(q, t.eq))));
  return total;
}

double rt(i128 v) { return std::sqrt(static_cast<double>(v)); }
double dbl(i128 v) { return static_cast<double>(v); }

[[noreturn]] void outside() {
  throw UnsupportedFamilyError("group lies outside the closed-form catalog");
}

}  // namespace

std::string to_string(const FamilyTag& tag) {
  return std::visit(
      Overloaded{
          [](const FamilyPn& t) { return "pn(" + std::to_string(t.p) + ";" + std::to_string(t.n) + ")"; },
          [](const FamilyPQ& t) { return "pq(" + std::to_string(t.p) + ";" + std::to_string(t.q) + ")"; },
          [](const FamilyP2Q& t) { return "p2q(" + std::to_string(t.p) + ";" + std::to_string(t.q) + ")"; },
          [](const FamilyP2Q2& t) {
            return "p2q2(" + std::to_string(t.p) + ";" + std::to_string(t.q) + ")";
          },
          [](const FamilyOutside&) { return std::string("outside"); },
      },
      tag);
}

void validate(const FamilyTag& tag) {
  auto need_prime = [](std::uint64_t v, const char* name) {
    if (!is_prime(v)) throw DomainError(std::string(name) + " = " + std::to_string(v) + " is not prime");
  };
  std::visit(Overloaded{
                 [&](const FamilyPn& t) {
                   need_prime(t.p, "p");
                   if (t.n < 1) throw DomainError("pn family needs n >= 1");
                 },
                 [&](const FamilyPQ& t) {
                   need_prime(t.p, "p");
                   need_prime(t.q, "q");
                   if (!(t.p < t.q)) throw DomainError("pq family needs p < q");
                 },
                 [&](const FamilyP2Q& t) {
                   need_prime(t.p, "p");
                   need_prime(t.q, "q");
                   if (t.p == t.q) throw DomainError("p2q family needs p != q");
                 },
                 [&](const FamilyP2Q2& t) {
                   need_prime(t.p, "p");
                   need_prime(t.q, "q");
                   if (!(t.p < t.q)) throw DomainError("p2q2 family needs p < q");
                 },
                 [](const FamilyOutside&) {},
             },
             tag);
}

std::uint64_t family_order(const FamilyTag& tag) {
  validate(tag);
  const i128 order = std::visit(Overloaded{
                                    [](const FamilyPn& t) { return pw(t.p, t.n); },
                                    [](const FamilyPQ& t) { return checked_mul(t.p, t.q); },
                                    [](const FamilyP2Q& t) { return checked_mul(pw(t.p, 2), t.q); },
                                    [](const FamilyP2Q2& t) { return checked_mul(pw(t.p, 2), pw(t.q, 2)); },
                                    [](const FamilyOutside&) -> i128 { outside(); },
                                },
                                tag);
  return to_u64(order);
}

FamilyTag detect_family(const CyclicGroupSpec& spec) {
  const auto f = spec.factorization();
  if (f.size() == 1) return FamilyPn{f[0].prime, f[0].exponent};
  if (f.size() != 2) return FamilyOutside{};
  const auto [a, b] = std::pair{f[0], f[1]};
  if (a.exponent == 1 && b.exponent == 1) return FamilyPQ{a.prime, b.prime};
  if (a.exponent == 2 && b.exponent == 2) return FamilyP2Q2{a.prime, b.prime};
  if (a.exponent == 2 && b.exponent == 1) return FamilyP2Q{a.prime, b.prime};
  if (a.exponent == 1 && b.exponent == 2) return FamilyP2Q{b.prime, a.prime};
  return FamilyOutside{};
}

StarDecomposition catalog_structure(const FamilyTag& tag) {
  const std::uint64_t order = family_order(tag);
  std::vector<std::pair<i128, i128>> stars = std::visit(
      Overloaded{
          [](const FamilyPn& t) {
            std::vector<std::pair<i128, i128>> s{{1, 1}};
            for (unsigned k = 1; k <= t.n; ++k) {
              s.emplace_back(pw(t.p, k), checked_mul(pw(t.p, 2 * k - 2), pw(t.p, 2) - 1));
            }
            return s;
          },
          [](const FamilyPQ& t) {
            const auto p = t.p, q = t.q;
            return std::vector<std::pair<i128, i128>>{
                {1, 1},
                {p, poly(p, q, {{1, 2, 0}, {-1, 0, 0}})},
                {q, poly(p, q, {{1, 0, 2}, {-1, 0, 0}})},
                {p * q, poly(p, q, {{1, 2, 2}, {-1, 2, 0}, {-1, 0, 2}, {1, 0, 0}})},
            };
          },
          [](const FamilyP2Q& t) {
            const auto p = t.p, q = t.q;
            return std::vector<std::pair<i128, i128>>{
                {1, 1},
                {p, poly(p, q, {{1, 2, 0}, {-1, 0, 0}})},
                {p * p, poly(p, q, {{1, 4, 0}, {-1, 2, 0}})},
                {q, poly(p, q, {{1, 0, 2}, {-1, 0, 0}})},
                {p * q, poly(p, q, {{1, 2, 2}, {-1, 2, 0}, {-1, 0, 2}, {1, 0, 0}})},
                {p * p * q, poly(p, q, {{1, 4, 2}, {-1, 2, 2}, {-1, 4, 0}, {1, 2, 0}})},
            };
          },
          [](const FamilyP2Q2& t) {
            const auto p = t.p, q = t.q;
            return std::vector<std::pair<i128, i128>>{
                {1, 1},
                {p, poly(p, q, {{1, 2, 0}, {-1, 0, 0}})},
                {p * p, poly(p, q, {{1, 4, 0}, {-1, 2, 0}})},
                {q, poly(p, q, {{1, 0, 2}, {-1, 0, 0}})},
                {q * q, poly(p, q, {{1, 0, 4}, {-1, 0, 2}})},
                {p * q, poly(p, q, {{1, 2, 2}, {-1, 2, 0}, {-1, 0, 2}, {1, 0, 0}})},
                {p * q * q, poly(p, q, {{1, 2, 4}, {-1, 2, 2}, {-1, 0, 4}, {1, 0, 2}})},
                {p * p * q, poly(p, q, {{1, 4, 2}, {-1, 2, 2}, {-1, 4, 0}, {1, 2, 0}})},
                {p * p * q * q, poly(p, q, {{1, 4, 4}, {-1, 2, 4}, {-1, 4, 2}, {1, 2, 2}})},
            };
          },
          [](const FamilyOutside&) -> std::vector<std::pair<i128, i128>> { outside(); },
      },
      tag);
  std::sort(stars.begin(), stars.end());
  std::vector<StarEntry> entries;
  for (const auto& [m, s] : stars) entries.push_back({to_u64(m), to_u64(s)});
  return StarDecomposition(order, std::move(entries));
}

CatalogZagreb catalog_zagreb(const FamilyTag& tag) {
  validate(tag);
  return std::visit(
      Overloaded{
          [&](const FamilyPn& t) {
            // No family formula: M1 = |G|^2 + sum of squared star sizes, M2 = M1 - |G|^2.
            i128 sum_sq = 1;
            const i128 base = pw(t.p, 2) - 1;
            for (unsigned k = 0; k < t.n; ++k) {
              const i128 s = checked_mul(pw(t.p, 2 * k), base);
              sum_sq = checked_add(sum_sq, checked_mul(s, s));
            }
            return CatalogZagreb{checked_add(pw(t.p, 2 * t.n), sum_sq), sum_sq};
          },
          [](const FamilyPQ& t) {
            const auto p = t.p, q = t.q;
            return CatalogZagreb{
                poly(p, q, {{1, 4, 4}, {-2, 4, 2}, {-2, 2, 4}, {5, 2, 2}, {2, 4, 0}, {2, 0, 4},
                            {-4, 2, 0}, {-4, 0, 2}, {4, 0, 0}}),
                poly(p, q, {{1, 4, 4}, {-2, 4, 2}, {-2, 2, 4}, {4, 2, 2}, {2, 4, 0}, {2, 0, 4},
                            {-4, 2, 0}, {-4, 0, 2}, {4, 0, 0}}),
            };
          },
          [](const FamilyP2Q& t) {
            const auto p = t.p, q = t.q;
            return CatalogZagreb{
                poly(p, q, {{1, 8, 4}, {2, 4, 4}, {4, 6, 2}, {-2, 6, 4}, {2, 8, 0}, {4, 4, 0},
                            {-2, 8, 2}, {-3, 4, 2}, {-4, 6, 0}, {-2, 2, 4}, {4, 2, 2}, {2, 0, 4},
                            {-4, 2, 0}, {-4, 0, 2}, {4, 0, 0}}),
                poly(p, q, {{1, 8, 4}, {2, 4, 4}, {4, 6, 2}, {-2, 6, 4}, {2, 8, 0}, {4, 4, 0},
                            {-2, 8, 2}, {-4, 4, 2}, {-4, 6, 0}, {-2, 2, 4}, {4, 2, 2}, {2, 0, 4},
                            {-4, 2, 0}, {-4, 0, 2}, {4, 0, 0}}),
            };
          },
          [](const FamilyP2Q2& t) {
            const auto p = t.p, q = t.q;
            return CatalogZagreb{
                poly(p, q, {{1, 8, 8},  {-2, 6, 8}, {-2, 8, 6}, {-4, 4, 6}, {-4, 6, 4}, {-2, 2, 8},
                            {-2, 8, 2}, {2, 4, 8},  {2, 8, 4},  {4, 6, 6},  {5, 4, 4},  {4, 2, 6},
                            {4, 6, 2},  {-4, 2, 4}, {-4, 4, 2}, {4, 2, 2},  {2, 0, 8},  {2, 8, 0},
                            {-4, 0, 6}, {-4, 6, 0}, {4, 0, 4},  {4, 4, 0},  {-4, 2, 0}, {-4, 0, 2},
                            {4, 0, 0}}),
                poly(p, q, {{1, 8, 8},  {-2, 6, 8}, {-2, 8, 6}, {-4, 4, 6}, {-4, 6, 4}, {-2, 2, 8},
                            {-2, 8, 2}, {2, 4, 8},  {2, 8, 4},  {4, 6, 6},  {4, 4, 4},  {4, 2, 6},
                            {4, 6, 2},  {-4, 2, 4}, {-4, 4, 2}, {4, 2, 2},  {2, 0, 8},  {2, 8, 0},
                            {-4, 0, 6}, {-4, 6, 0}, {4, 0, 4},  {4, 4, 0},  {-4, 2, 0}, {-4, 0, 2},
                            {4, 0, 0}}),
            };
          },
          [](const FamilyOutside&) -> CatalogZagreb { outside(); },
      },
      tag);
}

DegreeIndexReport catalog_degree_indices(const FamilyTag& tag) {
  validate(tag);
  return std::visit(
      Overloaded{
          [](const FamilyPn&) -> DegreeIndexReport {
            throw UnsupportedFamilyError("no closed-form degree indices for prime-power orders");
          },
          [](const FamilyPQ& t) {
            const i128 p = t.p, q = t.q;
            const i128 p2 = p * p, q2 = q * q;
            const i128 mid = p2 * q2 - p2 - q2;
            DegreeIndexReport r;
            r.randic = 1 + rt(p2 - 1) * (1 + rt(q2 - 1)) + rt(q2 - 1);
            r.abc = rt(p2 - 1) * (rt(p2 - 2) + rt((q2 - 1) * mid)) + rt((q2 - 1) * (q2 - 2));
            const double p2c = std::pow(dbl(p2 - 1), 1.5), q2c = std::pow(dbl(q2 - 1), 1.5);
            r.ga = 1 + 2 * p2c * (1 / dbl(p2) + q2c / dbl(mid + 2)) + 2 * q2c / dbl(q2);
            r.harmonic = 1 + 2 * dbl(p2 - 1) * (1 / dbl(p2) + dbl(q2 - 1) / dbl(mid + 2)) +
                         2 * dbl(q2 - 1) / dbl(q2);
            r.sci = 1 / std::sqrt(2.0) + dbl(p2 - 1) * (1 / dbl(p) + dbl(q2 - 1) / rt(mid + 2)) +
                    dbl(q2 - 1) / dbl(q);
            return r;
          },
          [](const FamilyP2Q& t) {
            const i128 p = t.p, q = t.q;
            const i128 p2 = p * p, q2 = q * q, p4 = p2 * p2;
            const i128 mid = p2 * q2 - p2 - q2;
            const i128 top = checked_sub(checked_add(checked_sub(checked_mul(p4, q2), p2 * q2), p2), p4);
            DegreeIndexReport r;
            r.randic = 1 + rt(p2 - 1) * dbl(p + 1) * (1 + rt(q2 - 1)) + rt(q2 - 1);
            r.abc = rt(p2 - 1) * (rt(p2 - 2) + dbl(p) * rt(p4 - p2 - 1) + rt((q2 - 1) * mid) +
                                  dbl(p) * rt(checked_mul(q2 - 1, top - 1))) +
                    rt((q2 - 1) * (q2 - 2));
            const double p2c = std::pow(dbl(p2 - 1), 1.5), q2c = std::pow(dbl(q2 - 1), 1.5);
            const double p3 = dbl(p * p2);
            r.ga = 1 +
                   2 * p2c *
                       (1 / dbl(p2) + p3 / dbl(p4 - p2 + 1) + q2c / dbl(mid + 2) +
                        p3 * q2c / dbl(top + 1)) +
                   2 * q2c / dbl(q2);
            r.harmonic = 1 +
                         2 * dbl(p2 - 1) *
                             (1 / dbl(p2) + dbl(p2) / dbl(p4 - p2 + 1) + dbl(q2 - 1) / dbl(mid + 2) +
                              dbl(p2 * (q2 - 1)) / dbl(top + 1)) +
                         2 * dbl(q2 - 1) / dbl(q2);
            r.sci = 1 / std::sqrt(2.0) +
                    dbl(p2 - 1) * (1 / dbl(p) + dbl(p2) / rt(p4 - p2 + 1) + dbl(q2 - 1) / rt(mid + 2) +
                                   dbl(p2 * (q2 - 1)) / dbl(top + 2)) +
                    dbl(q2 - 1) / dbl(q);
            return r;
          },
          [](const FamilyP2Q2& t) {
            const i128 p = t.p, q = t.q;
            const i128 p2 = p * p, q2 = q * q, p4 = p2 * p2, q4 = q2 * q2;
            const i128 mid = p2 * q2 - p2 - q2;
            const i128 top_p = checked_add(checked_sub(checked_sub(checked_mul(p4, q2), p2 * q2), p4), p2);
            const i128 top_q = checked_add(checked_sub(checked_sub(checked_mul(p2, q4), p2 * q2), q4), q2);
            const i128 full = checked_add(
                checked_sub(checked_sub(checked_mul(p4, q4), checked_mul(p2, q4)), checked_mul(p4, q2)),
                p2 * q2);
            const double dp = dbl(p), dq = dbl(q);
            DegreeIndexReport r;
            r.randic = 1 + rt(p2 - 1) * (dp + 1 + rt(q2 - 1) * (1 + dp + dq + dp * dq)) + rt(q2 - 1) * (dq + 1);
            r.abc = rt(p2 - 1) * (rt(p2 - 2) + dp * rt(p4 - p2 - 1) + rt((q2 - 1) * mid) +
                                  dq * rt(checked_mul(q2 - 1, top_q - 1)) +
                                  dp * rt(checked_mul(q2 - 1, top_p - 1)) +
                                  dp * dq * rt(checked_mul(q2 - 1, full - 1))) +
                    rt(q2 - 1) * (rt(q2 - 2) + dq * rt(q4 - q2 - 1));
            const double p2c = std::pow(dbl(p2 - 1), 1.5), q2c = std::pow(dbl(q2 - 1), 1.5);
            const double p3 = dp * dp * dp, q3 = dq * dq * dq;
            r.ga = 1 +
                   2 * p2c *
                       (1 / dbl(p2) + p3 / dbl(p4 - p2 + 1) + q2c / dbl(mid + 2) +
                        q3 * q2c / dbl(top_q + 1) + p3 * q2c / dbl(top_p + 1) +
                        p3 * q3 * q2c / dbl(full + 1)) +
                   2 * q2c * (1 / dbl(q2) + q3 / dbl(q4 - q2 + 1));
            r.harmonic = 1 +
                         2 * dbl(p2 - 1) *
                             (1 / dbl(p2) + dbl(p2) / dbl(p4 - p2 + 1) + dbl(q2 - 1) / dbl(mid + 2) +
                              dbl(p2 * (q2 - 1)) / dbl(top_p + 1) + dbl(q2 * (q2 - 1)) / dbl(top_q + 1) +
                              dbl(p2 * q2 * (q2 - 1)) / dbl(full + 1)) +
                         2 * dbl(q2 - 1) * (1 / dbl(q2) + dbl(q2) / dbl(q4 - q2 + 1));
            r.sci = 1 / std::sqrt(2.0) +
                    dbl(p2 - 1) * (1 / dp + dbl(p2) / rt(p4 - p2 + 1) + dbl(q2 - 1) / rt(mid + 2) +
                                   dbl(p2 * (q2 - 1)) / dbl(top_p + 2) +
                                   dbl(q2 * (q2 - 1)) / rt(top_q + 1) +
                                   dbl(p2 * q2 * (q2 - 1)) / rt(full + 1)) +
                    dbl(q2 - 1) * (1 / dq + dbl(q2 - 1) / rt(q4 - q2 + 1));
            return r;
          },
          [](const FamilyOutside&) -> DegreeIndexReport { outside(); },
      },
      tag);
}

const SpectrumMultiset& CatalogSpectra::of(SpectrumKind kind) const {
  switch (kind) {
    case SpectrumKind::A: return a;
    case SpectrumKind::L: return l;
    case SpectrumKind::Q: return q;
    case SpectrumKind::CN: return cn;
  }
  throw DomainError("unknown spectrum kind");
}

namespace {

// Printed spectra share one layout: the A-spectrum lists ±c√k pairs and a zero block,
// L lists (0)^z (1)^o and single large eigenvalues, CN lists (0)^z (-1)^o and singles.
struct PrintedSpectra {
  i128 a_zero = 0;
  std::vector<std::pair<i128, i128>> a_pm;  // (coefficient, radicand) of ±c√k
  i128 l_zero = 0, l_one = 0;
  std::vector<i128> l_single;
  i128 cn_zero = 0, cn_minus_one = 0;
  std::vector<i128> cn_single;
};

PrintedSpectra printed_spectra(const FamilyTag& tag) {
  return std::visit(
      Overloaded{
          [](const FamilyPn& t) {
            const std::uint64_t p = t.p;
            const unsigned n = t.n;
            const i128 p2n = pw(p, 2 * n);
            PrintedSpectra s;
            s.a_zero = p2n - n - 1;
            s.a_pm = {{1, 1}};
            for (unsigned k = 0; k < n; ++k) s.a_pm.emplace_back(pw(p, k), pw(p, 2) - 1);
            s.l_zero = n + 1;
            s.l_one = p2n - n - 1;
            s.l_single = {2, pw(p, 2)};
            for (unsigned k = 2; k <= n; ++k) s.l_single.push_back(pw(p, 2 * k) - pw(p, 2 * k - 2) + 1);
            s.cn_zero = n + 2;
            s.cn_minus_one = p2n - n - 1;
            s.cn_single = {pw(p, 2) - 2};
            for (unsigned k = 2; k <= n; ++k) s.cn_single.push_back(pw(p, 2 * k) - pw(p, 2 * k - 2) - 1);
            return s;
          },
          [](const FamilyPQ& t) {
            const auto p = t.p, q = t.q;
            const i128 p2 = pw(p, 2), q2 = pw(q, 2);
            PrintedSpectra s;
            s.a_zero = p2 * q2 - 4;
            s.a_pm = {{1, 1}, {1, p2 - 1}, {1, q2 - 1}, {1, (p2 - 1) * (q2 - 1)}};
            s.l_zero = 4;
            s.l_one = p2 * q2 - 4;
            s.l_single = {2, p2, q2, p2 * q2 - p2 - q2 + 2};
            s.cn_zero = 5;
            s.cn_minus_one = p2 * q2 - 4;
            s.cn_single = {p2 - 2, q2 - 2, p2 * q2 - p2 - q2};
            return s;
          },
          [](const FamilyP2Q& t) {
            const auto p = t.p, q = t.q;
            const i128 pp = p, p2 = pw(p, 2), q2 = pw(q, 2), p4 = pw(p, 4);
            PrintedSpectra s;
            s.a_zero = p4 * q2 - 6;
            s.a_pm = {{1, 1},      {1, p2 - 1},  {1, q2 - 1}, {pp, p2 - 1}, {1, (p2 - 1) * (q2 - 1)},
                      {pp, (p2 - 1) * (q2 - 1)}};
            s.l_zero = 6;
            s.l_one = p4 * q2 - 6;
            s.l_single = {2, p2, q2, p4 - p2 + 1, p2 * q2 - p2 - q2 + 2, p4 * q2 - p2 * q2 - p4 + p2 + 1};
            s.cn_zero = 7;
            s.cn_minus_one = p4 * q2 - 6;
            s.cn_single = {p2 - 2, q2 - 2, p4 - p2 - 1, p2 * q2 - p2 - q2, p4 * q2 - p2 * q2 - p4 + p2 - 1};
            return s;
          },
          [](const FamilyP2Q2& t) {
            const auto p = t.p, q = t.q;
            const i128 pp = p, qq = q, p2 = pw(p, 2), q2 = pw(q, 2), p4 = pw(p, 4), q4 = pw(q, 4);
            const i128 pq_rad = (p2 - 1) * (q2 - 1);
            PrintedSpectra s;
            s.a_zero = checked_mul(p4, q4) - 9;
            s.a_pm = {{1, 1},       {1, p2 - 1},      {1, q2 - 1},      {pp, p2 - 1},          {qq, q2 - 1},
                      {1, pq_rad},  {pp, pq_rad},     {qq, pq_rad},     {pp * qq, pq_rad}};
            s.l_zero = 9;
            s.l_one = checked_mul(p4, q4) - 9;
            s.l_single = {2,
                          p2,
                          q2,
                          p4 - p2 + 1,
                          q4 - q2 + 1,
                          p2 * q2 - p2 - q2 + 2,
                          p4 * q2 - p2 * q2 - p4 + p2 + 1,
                          p2 * q4 - p2 * q2 - q4 + q2 + 1,
                          checked_mul(p4, q4) - p2 * q4 - p4 * q2 + p2 * q2 + 1};
            s.cn_zero = 10;
            s.cn_minus_one = checked_mul(p4, q4) - 9;
            s.cn_single = {p2 - 2,
                           q2 - 2,
                           p4 - p2 - 1,
                           q4 - q2 - 1,
                           p2 * q2 - p2 - q2,
                           p4 * q2 - p2 * q2 - p4 + p2 - 1,
                           p2 * q4 - p2 * q2 - q4 + q2 - 1,
                           checked_mul(p4, q4) - p2 * q4 - p4 * q2 + p2 * q2 - 1};
            return s;
          },
          [](const FamilyOutside&) -> PrintedSpectra { outside(); },
      },
      tag);
}

}  // namespace

CatalogSpectra catalog_spectra(const FamilyTag& tag) {
  validate(tag);
  const PrintedSpectra printed = printed_spectra(tag);
  CatalogSpectra out;
  out.a.kind = SpectrumKind::A;
  out.a.pairs.emplace_back(ExactEigenvalue::integer(0), to_u64(printed.a_zero));
  for (const auto& [c, k] : printed.a_pm) {
    const ExactEigenvalue v(Rational(c), k);
    out.a.pairs.emplace_back(v, 1);
    out.a.pairs.emplace_back(-v, 1);
  }
  out.l.kind = SpectrumKind::L;
  out.l.pairs.emplace_back(ExactEigenvalue::integer(0), to_u64(printed.l_zero));
  out.l.pairs.emplace_back(ExactEigenvalue::integer(1), to_u64(printed.l_one));
  for (i128 v : printed.l_single) out.l.pairs.emplace_back(ExactEigenvalue::integer(v), 1);
  out.cn.kind = SpectrumKind::CN;
  out.cn.pairs.emplace_back(ExactEigenvalue::integer(0), to_u64(printed.cn_zero));
  out.cn.pairs.emplace_back(ExactEigenvalue::integer(-1), to_u64(printed.cn_minus_one));
  for (i128 v : printed.cn_single) out.cn.pairs.emplace_back(ExactEigenvalue::integer(v), 1);
  out.a.normalize();
  out.l.normalize();
  out.cn.normalize();
  out.q = out.l;
  out.q.kind = SpectrumKind::Q;
  return out;
}

EnergyReport catalog_energies(const FamilyTag& tag) {
  validate(tag);
  struct Printed {
    double e;
    i128 le_num, le_den;
    i128 e_cn;
    i128 vertices;
  };
  const Printed f = std::visit(
      Overloaded{
          [](const FamilyPn& t) {
            const i128 n = t.n;
            const i128 p2n = pw(t.p, 2 * t.n);
            const double geometric = dbl(pw(t.p, t.n) - 1) / dbl(static_cast<i128>(t.p) - 1);
            return Printed{2 + 2 * rt(pw(t.p, 2) - 1) * geometric,
                           checked_add(checked_mul(2, pw(t.p, 4 * t.n)), 2 * n * n + 4 * n + 2),
                           p2n + n + 1, 2 * p2n - 2 * n - 2, p2n + n + 1};
          },
          [](const FamilyPQ& t) {
            const i128 p2 = pw(t.p, 2), q2 = pw(t.q, 2);
            return Printed{2 + 2 * rt(p2 - 1) * (1 + rt(q2 - 1)) + 2 * rt(q2 - 1),
                           checked_mul(2, pw(t.p, 4) * pw(t.q, 4)) + 32, p2 * q2 + 4, 2 * p2 * q2 - 8,
                           p2 * q2 + 4};
          },
          [](const FamilyP2Q& t) {
            const i128 p2 = pw(t.p, 2), q2 = pw(t.q, 2), p4 = pw(t.p, 4);
            return Printed{2 + 2 * rt(p2 - 1) * (dbl(1 + static_cast<i128>(t.p)) * (1 + rt(q2 - 1))) +
                               2 * rt(q2 - 1),
                           checked_add(checked_mul(2, checked_mul(pw(t.p, 8), pw(t.q, 4))), 72),
                           p4 * q2 + 6, 2 * p4 * q2 - 12, p4 * q2 + 6};
          },
          [](const FamilyP2Q2& t) {
            const i128 p = t.p, q = t.q;
            const i128 p2 = p * p, q2 = q * q;
            const i128 p4q4 = checked_mul(pw(t.p, 4), pw(t.q, 4));
            return Printed{2 + 2 * dbl(1 + p) * rt(p2 - 1) + 2 * dbl(1 + q) * rt(q2 - 1) +
                               2 * dbl(1 + p + q + p * q) * rt((p2 - 1) * (q2 - 1)),
                           checked_add(checked_mul(2, checked_mul(p4q4, p4q4)), 162), p4q4 + 9,
                           checked_mul(2, p4q4) - 18, p4q4 + 9};
          },
          [](const FamilyOutside&) -> Printed { outside(); },
      },
      tag);

  EnergyReport r;
  r.e = f.e;
  r.le_exact = Rational(f.le_num, f.le_den);
  r.le_plus_exact = r.le_exact;
  r.e_cn_exact = Rational(f.e_cn);
  r.le = r.le_exact.to_double();
  r.le_plus = r.le;
  r.e_cn = r.e_cn_exact.to_double();
  const i128 order = family_order(tag);
  r.avg_degree_shift = Rational(checked_mul(2, checked_mul(order, order)), f.vertices);
  const i128 complete = 2 * (f.vertices - 1);
  r.hypoenergetic = r.e < dbl(f.vertices);
  r.hyperenergetic = r.e > dbl(complete);
  r.l_hyper = r.le_exact > Rational(complete);
  r.q_hyper = r.l_hyper;
  r.cn_hyper = r.e_cn_exact > Rational(checked_mul(complete, f.vertices - 2));
  r.e_le_margin = r.le - r.e;
  return r;
}

std::vector<FamilyTag> catalog_instances(std::uint64_t max_order) {
  std::vector<std::pair<std::uint64_t, FamilyTag>> found;
  auto consider = [&](FamilyTag tag) {
    const std::uint64_t order = family_order(tag);
    if (order <= max_order) found.emplace_back(order, tag);
  };
  for (std::uint64_t p : kCatalogPrimes) {
    for (unsigned n = 1; pw(p, n) <= static_cast<i128>(max_order); ++n) consider(FamilyPn{p, n});
  }
  for (std::uint64_t p : kCatalogPrimes) {
    for (std::uint64_t q : kCatalogPrimes) {
      if (p < q) consider(FamilyPQ{p, q});
      if (p != q) consider(FamilyP2Q{p, q});
      if (p < q) consider(FamilyP2Q2{p, q});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.index() < y.second.index();
  });
  std::vector<FamilyTag> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace sgb
