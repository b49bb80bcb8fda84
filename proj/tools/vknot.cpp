// vknot: command-line front end for the virtual-knot invariant library.
//
// Subcommands: validate, invariants, smooth, flat-check, tft, census.
// Exit codes: 0 success, 1 bad input, 2 internal inconsistency.
// The environment variable VKNOT_BUDGET overrides the default search budget;
// an explicit --budget flag overrides the environment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vknot/vknot.hpp"

namespace {

using namespace vknot;

long long default_budget() {
  const char* raw = std::getenv("VKNOT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultFlatBudget;
  try {
    std::size_t used = 0;
    long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value < 0)
      throw std::invalid_argument("trailing text");
    return value;
  } catch (const std::exception&) {
    throw Error(errc::malformed_token,
                std::string("VKNOT_BUDGET is not a nonnegative integer: '") +
                    raw + "'");
  }
}

bool is_readable_file(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

std::vector<CensusEntry> ingest_census_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(errc::io_error, "cannot open '" + path + "'");
  return ingest_census(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw Error(errc::io_error, "cannot write '" + out_path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  std::cout << "wrote " << out_path << "\n";
}

void print_report_text(const InvariantReport& r, std::ostream& out) {
  if (!r.name.empty()) out << "name: " << r.name << "\n";
  out << "code: " << r.code << "\n";
  out << "affine index polynomial: " << r.p.render() << "\n";
  out << "index bound: " << r.n_bound << " (evaluated for n up to " << r.n_max
      << ")\n";
  for (long long n = 1; n <= r.n_max; ++n)
    out << "J_" << n << " = " << r.j.at(n) << ", J_-" << n << " = "
        << r.j.at(-n) << ", dJ_" << n << " = " << r.dj.at(n) << "\n";
  for (long long n = 1; n <= r.n_max; ++n)
    out << "L^" << n << " = " << r.l_polys.at(n).render() << "\n";
  for (long long n = 1; n <= r.n_max; ++n)
    out << "F^" << n << " = " << r.f_polys.at(n).render() << "\n";
  out << "totally flat trivial: " << to_string(r.tft.status) << "\n";
}

void print_flat_verdict(const FlatVerdict& v, const std::string& prefix,
                        std::ostream& out) {
  out << prefix << "verdict: " << to_string(v.status) << "\n";
  out << prefix << "budget used: " << v.budget_used << "\n";
  if (v.certificate)
    out << prefix << "certificate: dJ_" << v.certificate->n << " = "
        << v.certificate->dwrithe << "\n";
  if (v.status == FlatStatus::Trivial)
    out << prefix << "trace: " << v.trace.size() << " move(s)\n";
}

int run(int argc, char** argv) {
  CLI::App app{"virtual-knot invariants: Gauss codes, affine index polynomial, "
               "flat-move search, census classification"};
  app.require_subcommand(1);

  // validate
  std::string validate_arg;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "validate a Gauss code or a census file");
  validate_cmd->add_option("input", validate_arg,
                           "Gauss code, or path to a name<TAB>code census file")
      ->required();

  // invariants
  std::string inv_arg;
  int inv_n_max = 0;
  bool inv_json = false;
  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "full invariant report for a diagram");
  inv_cmd->add_option("input", inv_arg,
                      "Gauss code, or path to a census file (one report per entry)")
      ->required();
  inv_cmd->add_option("--n-max", inv_n_max,
                      "largest n for J_n, dJ_n, L^n, F^n (default: the "
                      "diagram's index bound)");
  inv_cmd->add_flag("--json", inv_json, "emit JSON instead of text");

  // smooth
  std::string smooth_code;
  int smooth_at = 0;
  CLI::App* smooth_cmd = app.add_subcommand(
      "smooth", "smooth one crossing against orientation and print the result");
  smooth_cmd->add_option("code", smooth_code, "Gauss code")->required();
  smooth_cmd->add_option("--at", smooth_at, "crossing id to smooth")->required();

  // flat-check
  std::string flat_code_arg;
  long long flat_budget = -1;
  CLI::App* flat_cmd = app.add_subcommand(
      "flat-check", "flat-triviality verdict for the diagram's flat code");
  flat_cmd->add_option("code", flat_code_arg, "Gauss code")->required();
  flat_cmd->add_option("--budget", flat_budget,
                       "search budget in expanded nodes");

  // tft
  std::string tft_code_arg;
  long long tft_budget = -1;
  CLI::App* tft_cmd = app.add_subcommand(
      "tft", "totally-flat-trivial report (base diagram and all smoothings)");
  tft_cmd->add_option("code", tft_code_arg, "Gauss code")->required();
  tft_cmd->add_option("--budget", tft_budget,
                      "search budget in expanded nodes");

  // census
  std::string census_file;
  std::string census_group;
  bool census_json_flag = false;
  int census_scramble = 0;
  std::uint64_t census_seed = 0;
  std::string census_out;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "invariant reports and grouping for a census file");
  census_cmd->add_option("file", census_file, "name<TAB>code census file")
      ->required();
  census_cmd->add_option("--group", census_group,
                         "also group entries: 'poly' or 'flat'")
      ->check(CLI::IsMember({"poly", "flat"}));
  census_cmd->add_flag("--json", census_json_flag, "emit JSON instead of text");
  census_cmd
      ->add_option("--scramble", census_scramble,
                   "apply this many random moves to each entry first")
      ->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--seed", census_seed, "seed for --scramble");
  census_cmd->add_option("--out", census_out,
                         "write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (validate_cmd->parsed()) {
    if (is_readable_file(validate_arg)) {
      std::vector<CensusEntry> entries = ingest_census_file(validate_arg);
      std::cout << "valid census file: " << entries.size() << " entr"
                << (entries.size() == 1 ? "y" : "ies") << "\n";
    } else {
      Diagram d{parse(validate_arg)};
      std::cout << "valid: " << d.crossing_count() << " crossing(s), "
                << d.arc_count() << " arc(s)\n";
    }
    return 0;
  }

  if (inv_cmd->parsed()) {
    ReportConfig cfg;
    cfg.n_max = inv_n_max;
    cfg.budget = default_budget();
    std::vector<InvariantReport> reports;
    if (is_readable_file(inv_arg)) {
      reports = compute_reports(ingest_census_file(inv_arg), cfg);
    } else {
      reports.push_back(compute_report(Diagram{parse(inv_arg)}, cfg));
    }
    if (inv_json) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const InvariantReport& r : reports) arr.push_back(report_json(r));
      std::cout << (reports.size() == 1 ? arr.front().dump(2) : arr.dump(2))
                << "\n";
    } else {
      bool first = true;
      for (const InvariantReport& r : reports) {
        if (!first) std::cout << "\n";
        first = false;
        print_report_text(r, std::cout);
      }
    }
    return 0;
  }

  if (smooth_cmd->parsed()) {
    Diagram d{parse(smooth_code)};
    SmoothedDiagram s = smooth_against_orientation(d, smooth_at);
    std::cout << serialize(s.result.code()) << "\n";
    std::cout << "reversed positions:";
    for (std::size_t pos : s.reversed_positions) std::cout << " " << pos;
    std::cout << "\n";
    return 0;
  }

  if (flat_cmd->parsed()) {
    long long budget = flat_budget >= 0 ? flat_budget : default_budget();
    FlatCode f = flatten(Diagram{parse(flat_code_arg)});
    std::cout << "flat code: " << serialize_flat(f) << "\n";
    FlatVerdict v = is_flat_trivial(f, budget);
    print_flat_verdict(v, "", std::cout);
    return 0;
  }

  if (tft_cmd->parsed()) {
    long long budget = tft_budget >= 0 ? tft_budget : default_budget();
    Diagram d{parse(tft_code_arg)};
    TftReport r = is_totally_flat_trivial(d, budget);
    std::cout << "totally flat trivial: " << to_string(r.status) << "\n";
    std::cout << "base\n";
    print_flat_verdict(r.base, "  ", std::cout);
    for (const auto& [id, v] : r.smoothings) {
      std::cout << "smoothing at crossing " << id << "\n";
      print_flat_verdict(v, "  ", std::cout);
    }
    return 0;
  }

  // census
  ReportConfig cfg;
  cfg.budget = default_budget();
  if (census_scramble > 0)
    cfg.scramble = ScrambleConfig{census_scramble, census_seed, 12};
  std::vector<CensusEntry> entries = ingest_census_file(census_file);
  std::vector<InvariantReport> reports = compute_reports(entries, cfg);

  std::vector<PolynomialGroup> poly_groups;
  std::vector<FlatClassGroup> flat_groups;
  bool want_poly = census_group == "poly";
  bool want_flat = census_group == "flat";
  if (want_poly) poly_groups = group_by_polynomial(reports);
  if (want_flat) flat_groups = group_by_flat_class(entries, cfg);

  std::string text;
  if (census_json_flag) {
    text = census_json(reports, cfg, want_poly ? &poly_groups : nullptr,
                       want_flat ? &flat_groups : nullptr)
               .dump(2);
  } else {
    std::ostringstream out;
    out << census_table(reports);
    if (want_poly) out << "\n" << polynomial_group_table(poly_groups);
    if (want_flat) out << "\n" << flat_group_table(flat_groups);
    text = out.str();
  }
  emit(text, census_out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == errc::internal_inconsistency ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
