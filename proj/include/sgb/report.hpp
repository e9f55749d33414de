#pragma once

// One row of derived quantities per group order, and CSV/JSON emitters.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgb/closed_forms.hpp"
#include "sgb/indices.hpp"
#include "sgb/spectral.hpp"

namespace sgb {

struct CatalogColumns {
  i128 m1 = 0;
  i128 m2 = 0;
  double energy = 0.0;
  double laplacian_energy = 0.0;
  double cn_energy = 0.0;
};

struct ReportRow {
  std::uint64_t order = 0;
  FamilyTag family = FamilyOutside{};
  GraphStats stats;
  ZagrebReport zagreb;
  DegreeIndexReport degree;
  EnergyReport energy;
  ELeVerdict e_le;
  /// Empty outside the catalog families.
  std::optional<CatalogColumns> catalog;
};

ReportRow make_report_row(std::uint64_t order);

/// Field names shared by the CSV header and the JSON objects.
const std::vector<std::string>& report_columns();

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_json(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace sgb
