#include "sgb/group_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgb/checked.hpp"
#include "sgb/errors.hpp"

namespace sgb {

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

CyclicGroupSpec CyclicGroupSpec::of_order(std::uint64_t n) {
  if (n == 0) throw DomainError("group order must be positive");
  if (n > kMaxGroupOrder) {
    throw CapExceededError("group order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxGroupOrder));
  }
  return CyclicGroupSpec(n, factorize(n));
}

namespace {

void expand_divisors(std::span<const PrimePower> factors, std::size_t at, std::uint64_t acc,
                     std::vector<std::uint64_t>& out) {
  if (at == factors.size()) {
    out.push_back(acc);
    return;
  }
  std::uint64_t power = 1;
  for (unsigned e = 0; e <= factors[at].exponent; ++e) {
    expand_divisors(factors, at + 1, acc * power, out);
    power *= factors[at].prime;
  }
}

std::vector<std::uint64_t> divisor_values(std::uint64_t m) {
  std::vector<std::uint64_t> ds;
  const auto f = factorize(m);
  expand_divisors(f, 0, 1, ds);
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<SubgroupDescriptor> divisors(const CyclicGroupSpec& spec) {
  std::vector<std::uint64_t> ds;
  expand_divisors(spec.factorization(), 0, 1, ds);
  std::sort(ds.begin(), ds.end());
  std::vector<SubgroupDescriptor> out;
  out.reserve(ds.size());
  for (auto d : ds) out.push_back({d, spec.order() / d});
  return out;
}

int mobius(std::uint64_t m) {
  if (m == 0) throw DomainError("mobius: m must be positive");
  int sign = 1;
  for (const auto& pp : factorize(m)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t jordan_totient_2(std::uint64_t m) {
  if (m == 0) throw DomainError("jordan_totient_2: m must be positive");
  i128 total = 0;
  for (auto d : divisor_values(m)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const i128 q = static_cast<i128>(m / d);
    total = checked_add(total, checked_mul(mu, checked_mul(q, q)));
  }
  return to_u64(total);
}

std::uint64_t generated_subgroup_order(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (n == 0 || a >= n || b >= n) {
    throw DomainError("generated_subgroup_order: elements must lie in [0, n)");
  }
  return n / std::gcd(std::gcd(a, b), n);
}

}  // namespace sgb
