#pragma once

// Family-specific closed forms for cyclic groups of order p^n, pq, p^2q and
// p^2q^2, transcribed as printed. Nothing here calls into the general
// decomposition pipeline, so the catalog can be used to check it.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sgb/checked.hpp"
#include "sgb/group_core.hpp"
#include "sgb/indices.hpp"
#include "sgb/sgb_graph.hpp"
#include "sgb/spectral.hpp"

namespace sgb {

struct FamilyPn {
  std::uint64_t p = 0;
  unsigned n = 0;
  friend bool operator==(const FamilyPn&, const FamilyPn&) = default;
};

/// Requires p < q.
struct FamilyPQ {
  std::uint64_t p = 0, q = 0;
  friend bool operator==(const FamilyPQ&, const FamilyPQ&) = default;
};

/// Order p^2 q; only p != q is required.
struct FamilyP2Q {
  std::uint64_t p = 0, q = 0;
  friend bool operator==(const FamilyP2Q&, const FamilyP2Q&) = default;
};

/// Requires p < q.
struct FamilyP2Q2 {
  std::uint64_t p = 0, q = 0;
  friend bool operator==(const FamilyP2Q2&, const FamilyP2Q2&) = default;
};

struct FamilyOutside {
  friend bool operator==(const FamilyOutside&, const FamilyOutside&) = default;
};

using FamilyTag = std::variant<FamilyPn, FamilyPQ, FamilyP2Q, FamilyP2Q2, FamilyOutside>;

/// "pn(2;3)", "pq(2;3)", "p2q(3;2)", "p2q2(2;3)", "outside".
std::string to_string(const FamilyTag& tag);

/// Throws DomainError when the parameters are not primes in the required relation.
void validate(const FamilyTag& tag);

/// Group order of a catalog tag; throws UnsupportedFamilyError for FamilyOutside.
std::uint64_t family_order(const FamilyTag& tag);

FamilyTag detect_family(const CyclicGroupSpec& spec);

StarDecomposition catalog_structure(const FamilyTag& tag);

struct CatalogZagreb {
  i128 m1 = 0;
  i128 m2 = 0;
  friend bool operator==(const CatalogZagreb&, const CatalogZagreb&) = default;
};

CatalogZagreb catalog_zagreb(const FamilyTag& tag);

/// There is no prime-power closed form for these indices: FamilyPn throws UnsupportedFamilyError.
DegreeIndexReport catalog_degree_indices(const FamilyTag& tag);

struct CatalogSpectra {
  SpectrumMultiset a, l, q, cn;
  const SpectrumMultiset& of(SpectrumKind kind) const;
};

CatalogSpectra catalog_spectra(const FamilyTag& tag);

EnergyReport catalog_energies(const FamilyTag& tag);

inline constexpr std::uint64_t kCatalogPrimes[] = {2, 3, 5, 7, 11, 13};

/// Every catalog tag built from kCatalogPrimes with order <= max_order, ascending by
/// order (ties: pn, pq, p2q, p2q2).
std::vector<FamilyTag> catalog_instances(std::uint64_t max_order);

}  // namespace sgb
