#include "sgb/report.hpp"

#include "sgb/format.hpp"

namespace sgb {

ReportRow make_report_row(std::uint64_t order) {
  const auto spec = CyclicGroupSpec::of_order(order);
  const auto decomp = build_star_decomposition(spec);
  ReportRow row;
  row.order = order;
  row.family = detect_family(spec);
  row.stats = graph_stats(decomp);
  row.zagreb = zagreb(decomp);
  row.degree = degree_indices(decomp);
  row.energy = energies(decomp);
  row.e_le = e_le_check(row.energy, row.stats.vertex_count);
  if (!std::holds_alternative<FamilyOutside>(row.family)) {
    const auto z = catalog_zagreb(row.family);
    const auto e = catalog_energies(row.family);
    row.catalog = CatalogColumns{z.m1, z.m2, e.e, e.le, e.e_cn};
  }
  return row;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> columns = {
      "order",          "family",          "vertex_count",       "edge_count",
      "m1",             "m2",              "hv_margin",          "hv_holds",
      "randic",         "abc",             "ga",                 "harmonic",
      "sci",            "energy",          "laplacian_energy",   "signless_laplacian_energy",
      "cn_energy",      "hypoenergetic",   "hyperenergetic",     "l_hyperenergetic",
      "q_hyperenergetic", "cn_hyperenergetic", "e_le_holds",     "e_le_chain",
      "catalog_m1",     "catalog_m2",      "catalog_energy",     "catalog_laplacian_energy",
      "catalog_cn_energy"};
  return columns;
}

namespace {

// Cell values in column order. Strings are pre-rendered; `quoted` marks the ones
// that need JSON quotes and `blank` the missing catalog cells.
struct Cell {
  std::string text;
  bool quoted = false;
  bool blank = false;
};

std::vector<Cell> cells(const ReportRow& r) {
  auto num = [](const std::string& s) { return Cell{s}; };
  auto real = [](double v) { return Cell{format_real(v)}; };
  auto flag = [](bool b) { return Cell{b ? "true" : "false"}; };
  std::vector<Cell> c = {
      num(std::to_string(r.order)),
      Cell{to_string(r.family), true},
      num(std::to_string(r.stats.vertex_count)),
      num(std::to_string(r.stats.edge_count)),
      num(to_string(r.zagreb.m1)),
      num(to_string(r.zagreb.m2)),
      num(to_string(r.zagreb.hv_margin)),
      flag(r.zagreb.hv_holds),
      real(r.degree.randic),
      real(r.degree.abc),
      real(r.degree.ga),
      real(r.degree.harmonic),
      real(r.degree.sci),
      real(r.energy.e),
      real(r.energy.le),
      real(r.energy.le_plus),
      real(r.energy.e_cn),
      flag(r.energy.hypoenergetic),
      flag(r.energy.hyperenergetic),
      flag(r.energy.l_hyper),
      flag(r.energy.q_hyper),
      flag(r.energy.cn_hyper),
      flag(r.e_le.holds),
      flag(r.e_le.chain_holds),
  };
  if (r.catalog) {
    c.push_back(num(to_string(r.catalog->m1)));
    c.push_back(num(to_string(r.catalog->m2)));
    c.push_back(real(r.catalog->energy));
    c.push_back(real(r.catalog->laplacian_energy));
    c.push_back(real(r.catalog->cn_energy));
  } else {
    c.insert(c.end(), 5, Cell{"", false, true});
  }
  return c;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  const auto& columns = report_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    const auto c = cells(row);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i].text;
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ReportRow>& rows) {
  const auto& columns = report_columns();
  out << "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto c = cells(rows[r]);
    out << (r ? ",\n  {" : "\n  {");
    for (std::size_t i = 0; i < c.size(); ++i) {
      out << (i ? ", " : "") << '"' << columns[i] << "\": ";
      if (c[i].blank) {
        out << "null";
      } else if (c[i].quoted) {
        out << '"' << c[i].text << '"';
      } else {
        out << c[i].text;
      }
    }
    out << "}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace sgb
