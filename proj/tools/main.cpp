#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "milnor/catalog.hpp"
#include "milnor/errors.hpp"
#include "milnor/parser.hpp"
#include "milnor/report.hpp"
#include "milnor/syzygy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNonIsolated = 3;
constexpr int kExitLimit = 4;

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::string current;
  for (char c : list) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  names.push_back(current);
  return names;
}

int cmd_analyze(const std::string& vars_list, const std::string& polynomial, bool json,
                std::uint64_t seed, bool syzygies, std::optional<int> degree_cap) {
  milnor::VariableSet vars(split_names(vars_list));
  milnor::Polynomial f = milnor::parse_polynomial(polynomial, vars);

  milnor::AnalyzeOptions options;
  options.seed = seed;
  options.degree_cap = degree_cap;
  milnor::InvariantReport report = milnor::analyze_hypersurface(f, options);

  std::vector<milnor::SyzygyVector> syzygy_basis;
  if (syzygies) {
    if (vars.size() != 3) {
      throw std::invalid_argument("--syzygies is available for plane curves only");
    }
    if (report.smooth) {
      throw std::invalid_argument("--syzygies needs a singular curve (no mdr for smooth input)");
    }
    syzygy_basis = milnor::nontrivial_syzygy_basis(f, *report.mdr);
  }

  if (json) {
    std::string text = milnor::render_report(report, milnor::ReportFormat::Json);
    if (syzygies) {
      auto doc = nlohmann::ordered_json::parse(text);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& v : syzygy_basis) {
        nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
        for (const auto& c : v.components) tuple.push_back(milnor::to_string(c, vars));
        arr.push_back(std::move(tuple));
      }
      doc["syzygies"] = std::move(arr);
      text = doc.dump(2) + "\n";
    }
    std::cout << text;
  } else {
    std::cout << milnor::render_report(report, milnor::ReportFormat::Text);
    if (syzygies) {
      std::cout << "nontrivial syzygies of degree " << *report.mdr << ":\n";
      for (const auto& v : syzygy_basis) {
        std::cout << "  (";
        for (std::size_t i = 0; i < v.components.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << milnor::to_string(v.components[i], vars);
        }
        std::cout << ")\n";
      }
    }
  }
  return kExitOk;
}

int cmd_catalog(const std::string& path, const std::string& report_path, int jobs,
                std::uint64_t seed) {
  std::vector<milnor::CatalogEntry> entries = milnor::load_catalog_file(path);
  milnor::CatalogRunOptions options;
  options.jobs = jobs;
  options.seed = seed;
  std::vector<milnor::CatalogResult> results = milnor::run_catalog(entries, options);

  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (r.report) {
      const auto& rep = *r.report;
      std::ostringstream line;
      if (rep.smooth) {
        line << "smooth";
      } else {
        line << "tau=" << rep.tau << " ct=" << *rep.ct << " st=" << *rep.st << " mdr=" << *rep.mdr
             << " def=" << *rep.def_value << " lc="
             << (rep.lc->infinite ? std::string("infinity") : std::to_string(rep.lc->value))
             << " nodal=" << (*rep.nodal ? "yes" : "no");
        if (rep.projectively_rigid) line << " rigid=" << (*rep.projectively_rigid ? "yes" : "no");
      }
      line << "  (" << std::fixed << std::setprecision(0) << rep.timings.total_ms << " ms)";
      std::cout << "  " << line.str();
    }
    std::cout << "\n";
    if (!r.error.empty()) std::cout << "      error: " << r.error << "\n";
    for (const auto& m : r.mismatches) std::cout << "      mismatch: " << m << "\n";
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " entries passed\n";

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot write report file " + report_path);
    out << "| name | tau | ct | st | mdr | def | lc | nodal | rigid |\n";
    out << "|------|-----|----|----|-----|-----|----|-------|-------|\n";
    for (const auto& r : results) {
      if (r.report) out << milnor::render_report(*r.report, milnor::ReportFormat::MarkdownRow) << "\n";
    }
  }
  return passed == results.size() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series and singularity invariants of projective hypersurfaces"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one homogeneous polynomial");
  std::string vars_list;
  std::string polynomial;
  bool json = false;
  bool syzygies = false;
  std::uint64_t seed = 0;
  int degree_cap = -1;
  analyze->add_option("--vars", vars_list, "comma-separated variable names")->required();
  analyze->add_flag("--json", json, "emit a JSON report");
  analyze->add_option("--seed", seed, "chart selection seed");
  analyze->add_flag("--syzygies", syzygies, "print a nontrivial syzygy basis (plane curves)");
  analyze->add_option("--degree-cap", degree_cap, "abort if the working degree T+1 exceeds this");
  analyze->add_option("polynomial", polynomial, "polynomial in the input grammar")->required();

  auto* catalog = app.add_subcommand("catalog", "run a catalog of hypersurfaces");
  std::string catalog_path;
  std::string report_path;
  int jobs = 0;
  std::uint64_t catalog_seed = 0;
  catalog->add_option("file", catalog_path, "catalog JSON file")->required();
  catalog->add_option("--report", report_path, "write a markdown table to this file");
  catalog->add_option("--jobs", jobs, "parallel analyses (default: processor count)");
  catalog->add_option("--seed", catalog_seed, "chart selection seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }

  try {
    if (analyze->parsed()) {
      std::optional<int> cap;
      if (degree_cap >= 0) cap = degree_cap;
      return cmd_analyze(vars_list, polynomial, json, seed, syzygies, cap);
    }
    return cmd_catalog(catalog_path, report_path, jobs, catalog_seed);
  } catch (const milnor::NonIsolatedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonIsolated;
  } catch (const milnor::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
