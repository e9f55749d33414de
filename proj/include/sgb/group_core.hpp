#pragma once

// Number theory and cyclic-group arithmetic for Z_n (additive residues 0..n-1, identity 0).

#include <cstdint>
#include <span>
#include <vector>

namespace sgb {

/// Largest group order accepted by CyclicGroupSpec.
inline constexpr std::uint64_t kMaxGroupOrder = 1'000'000;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending prime-power factorization by trial division. Throws DomainError for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

/// The cyclic group Z_n together with its factorization.
class CyclicGroupSpec {
 public:
  /// Throws DomainError for n = 0 and CapExceededError above kMaxGroupOrder.
  static CyclicGroupSpec of_order(std::uint64_t n);

  std::uint64_t order() const { return order_; }
  std::span<const PrimePower> factorization() const { return factorization_; }

  friend bool operator==(const CyclicGroupSpec&, const CyclicGroupSpec&) = default;

 private:
  CyclicGroupSpec(std::uint64_t order, std::vector<PrimePower> factorization)
      : order_(order), factorization_(std::move(factorization)) {}

  std::uint64_t order_;
  std::vector<PrimePower> factorization_;
};

/// One subgroup of Z_n; Z_n has exactly one subgroup for each divisor of n.
struct SubgroupDescriptor {
  std::uint64_t subgroup_order = 0;
  std::uint64_t index = 0;

  friend bool operator==(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;
};

/// All subgroups of Z_n, ascending by order (first is {0}, last is Z_n).
std::vector<SubgroupDescriptor> divisors(const CyclicGroupSpec& spec);

/// Möbius function. Throws DomainError for m = 0.
int mobius(std::uint64_t m);

/// Second Jordan totient J2(m) = sum over d | m of mu(d) (m/d)^2, the number of
/// ordered pairs generating Z_m. Throws OverflowError instead of wrapping.
std::uint64_t jordan_totient_2(std::uint64_t m);

/// |<a, b>| in Z_n, i.e. n / gcd(a, b, n). Throws DomainError unless 0 <= a, b < n.
std::uint64_t generated_subgroup_order(std::uint64_t a, std::uint64_t b, std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace sgb
