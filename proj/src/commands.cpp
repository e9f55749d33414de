#include "sgb/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "sgb/closed_forms.hpp"
#include "sgb/errors.hpp"
#include "sgb/format.hpp"
#include "sgb/report.hpp"
#include "sgb/spectral.hpp"
#include "sgb/verify.hpp"

namespace sgb {

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_value_list(std::string_view text, bool primes_only) {
  std::set<std::uint64_t> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::uint64_t lo = parse_u64(item.substr(0, dots));
      const std::uint64_t hi = parse_u64(item.substr(dots + 2));
      if (lo > hi) throw DomainError("empty range '" + std::string(item) + "'");
      if (hi - lo > kMaxGroupOrder) throw CapExceededError("range too long: '" + std::string(item) + "'");
      for (std::uint64_t v = lo; v <= hi; ++v) {
        if (!primes_only || is_prime(v)) values.insert(v);
      }
    } else {
      const std::uint64_t v = parse_u64(item);
      if (primes_only && !is_prime(v)) throw DomainError(std::to_string(v) + " is not prime");
      values.insert(v);
    }
  }
  if (values.empty()) throw DomainError("parameter list selects no values");
  return {values.begin(), values.end()};
}

namespace {

struct ReportArgs {
  std::string family;
  std::string p, q, n;
  std::uint64_t max_order = 0;
  std::string format = "csv";
  std::string out_path;
};

std::vector<std::uint64_t> report_orders(const ReportArgs& a) {
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw DomainError("--family " + a.family + " requires " + flag);
  };
  std::vector<FamilyTag> tags;
  if (a.family == "all") {
    if (a.max_order < 2) throw DomainError("--family all requires --max-order >= 2");
    std::vector<std::uint64_t> orders;
    for (std::uint64_t n = 2; n <= a.max_order; ++n) orders.push_back(n);
    return orders;
  }
  need(a.p, "--p");
  const auto ps = parse_value_list(a.p, true);
  if (a.family == "pn") {
    need(a.n, "--n");
    for (auto p : ps) {
      for (auto n : parse_value_list(a.n, false)) {
        if (n == 0) throw DomainError("--n values must be >= 1");
        if (n > 64) throw CapExceededError("--n value " + std::to_string(n) + " is too large");
        tags.push_back(FamilyPn{p, static_cast<unsigned>(n)});
      }
    }
  } else {
    need(a.q, "--q");
    const auto qs = parse_value_list(a.q, true);
    for (auto p : ps) {
      for (auto q : qs) {
        // Combinations outside a family's hypothesis (p >= q, or p = q) are skipped.
        if (a.family == "pq" && p < q) tags.push_back(FamilyPQ{p, q});
        if (a.family == "p2q" && p != q) tags.push_back(FamilyP2Q{p, q});
        if (a.family == "p2q2" && p < q) tags.push_back(FamilyP2Q2{p, q});
      }
    }
  }
  std::set<std::uint64_t> orders;
  for (const auto& t : tags) {
    const std::uint64_t order = family_order(t);
    if (order > kMaxGroupOrder) {
      throw CapExceededError(to_string(t) + " has order " + std::to_string(order) +
                             " above the cap " + std::to_string(kMaxGroupOrder));
    }
    if (a.max_order == 0 || order <= a.max_order) orders.insert(order);
  }
  if (orders.empty()) throw DomainError("the parameters select no group of family " + a.family);
  return {orders.begin(), orders.end()};
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  std::vector<ReportRow> rows;
  for (std::uint64_t order : report_orders(a)) rows.push_back(make_report_row(order));
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot open output file " + a.out_path);
    sink = &file;
  }
  if (a.format == "json") {
    write_json(*sink, rows);
  } else {
    write_csv(*sink, rows);
  }
  sink->flush();
  if (!*sink) throw Error("write failed");
  return kExitOk;
}

struct SpectrumArgs {
  std::uint64_t order = 0;
  std::string kind = "A";
  std::string format = "text";
  bool numeric = false;
  double tol = 1e-8;
  std::string dump_path;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const auto kind = parse_spectrum_kind(a.kind);
  const auto decomp = build_star_decomposition(CyclicGroupSpec::of_order(a.order));
  const auto spectrum = closed_form_spectrum(decomp, kind);

  std::vector<double> cluster_value;  // numeric mean per distinct eigenvalue, descending
  int code = kExitOk;
  if (a.numeric || !a.dump_path.empty()) {
    const auto matrix = assemble_matrix(decomp, matrix_kind_of(kind));
    if (!a.dump_path.empty()) {
      std::ofstream file(a.dump_path, std::ios::binary | std::ios::trunc);
      if (!file) throw DomainError("cannot open matrix dump file " + a.dump_path);
      write_matrix(file, matrix);
    }
    if (a.numeric) {
      const auto numeric = numeric_spectrum(matrix, a.tol);
      const auto match = match_spectrum(numeric, spectrum, a.tol);
      if (!match.ok) {
        err << "numeric spectrum does not match: " << match.detail << '\n';
        code = kExitVerifyFailed;
      }
      std::size_t end = numeric.size();
      for (const auto& [value, mult] : spectrum.pairs) {
        const std::size_t begin = end >= mult ? end - mult : 0;
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) sum += numeric[i];
        cluster_value.push_back(end > begin ? sum / static_cast<double>(end - begin) : 0.0);
        end = begin;
      }
    }
  }

  if (a.format == "text") {
    if (!a.numeric) {
      out << spectrum.to_string() << '\n';
    } else {
      for (std::size_t i = 0; i < spectrum.pairs.size(); ++i) {
        const auto& [value, mult] = spectrum.pairs[i];
        out << "(" << value.to_string() << ")^" << mult << ' ' << format_real(cluster_value[i]) << '\n';
      }
    }
  } else if (a.format == "csv") {
    out << "value,multiplicity,real" << (a.numeric ? ",numeric" : "") << '\n';
    for (std::size_t i = 0; i < spectrum.pairs.size(); ++i) {
      const auto& [value, mult] = spectrum.pairs[i];
      out << value.to_string() << ',' << mult << ',' << format_real(value.value());
      if (a.numeric) out << ',' << format_real(cluster_value[i]);
      out << '\n';
    }
  } else {
    out << "{\"order\": " << a.order << ", \"kind\": \"" << to_string(kind) << "\", \"spectrum\": [";
    for (std::size_t i = 0; i < spectrum.pairs.size(); ++i) {
      const auto& [value, mult] = spectrum.pairs[i];
      out << (i ? ", " : "") << "{\"value\": \"" << value.to_string() << "\", \"multiplicity\": " << mult
          << ", \"real\": " << format_real(value.value());
      if (a.numeric) out << ", \"numeric\": " << format_real(cluster_value[i]);
      out << "}";
    }
    out << "]}\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SGB-graphs of finite cyclic groups: indices, spectra, energies, verification", "sgb"};
  app.require_subcommand(1);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Tabulate every quantity over a parameter sweep");
  report_cmd->add_option("--family", report.family, "Group family")
      ->required()
      ->check(CLI::IsMember({"pn", "pq", "p2q", "p2q2", "all"}));
  report_cmd->add_option("--p", report.p, "Primes p: list a,b,c and/or range a..b");
  report_cmd->add_option("--q", report.q, "Primes q: list and/or range");
  report_cmd->add_option("--n", report.n, "Exponents n for the pn family: list and/or range");
  report_cmd->add_option("--max-order", report.max_order, "Largest group order (required for --family all)");
  report_cmd->add_option("--format", report.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  report_cmd->add_option("--out", report.out_path, "Output file (default: stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant check and print PASS/FAIL per group");
  verify_cmd->add_option("--max-order", verify.max_order, "Largest group order checked")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "Absolute tolerance of the numeric spectral check")
      ->capture_default_str();
  verify_cmd->add_option("--spectral-max-order", verify.spectral_max_order,
                         "Largest order for the dense eigensolver cross-check")
      ->capture_default_str();

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the exact spectrum of one group");
  spectrum_cmd->add_option("--order", spectrum.order, "Group order")->required();
  spectrum_cmd->add_option("--kind", spectrum.kind, "Matrix kind")
      ->check(CLI::IsMember({"A", "L", "Q", "CN"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--format", spectrum.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  spectrum_cmd->add_flag("--numeric", spectrum.numeric, "Cross-check with the Jacobi eigensolver");
  spectrum_cmd->add_option("--tol", spectrum.tol, "Eigensolver tolerance")->capture_default_str();
  spectrum_cmd->add_option("--dump-matrix", spectrum.dump_path, "Write the assembled matrix to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*report_cmd) return cmd_report(report, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum, out, err);
    const auto result = run_verify(verify);
    print_verify(out, result);
    return result.all_passed() ? kExitOk : kExitVerifyFailed;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sgb
