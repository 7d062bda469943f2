#include "milnor/report.hpp"

#include <json.hpp>

#include <sstream>

namespace milnor {

namespace {

std::string series_term(long long c, int k) {
  std::string out;
  if (k == 0) return std::to_string(c);
  if (c != 1) out += std::to_string(c);
  out += "t";
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

nlohmann::ordered_json matrix_to_json(const QMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) {
      if (is_integer(c) && c.get_num().fits_slong_p()) {
        r.push_back(c.get_num().get_si());
      } else {
        r.push_back(to_string(c));
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string lc_string(const LogConcavity& lc) {
  return lc.infinite ? "infinity" : std::to_string(lc.value);
}

}  // namespace

std::string series_to_string(const std::vector<long long>& dims, int stable_from) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < stable_from; ++k) {
    long long c = dims[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) out << "+";
    out << series_term(c, k);
    first = false;
  }
  if (!first) out << "+";
  long long tail = dims[static_cast<std::size_t>(stable_from)];
  if (tail != 1) out << tail;
  out << "(t";
  if (stable_from != 1) out << "^" << stable_from;
  out << "+...";
  return out.str();
}

std::string series_to_string(const std::vector<long long>& dims) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    long long c = dims[k];
    if (c == 0) continue;
    if (!first) out << "+";
    out << series_term(c, static_cast<int>(k));
    first = false;
  }
  return first ? "0" : out.str();
}

std::string render_report(const InvariantReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: {
      std::ostringstream out;
      if (!report.name.empty()) out << report.name << "\n";
      out << "n=" << report.n << " d=" << report.d << " T=" << report.T << "\n";
      if (report.smooth) {
        out << "smooth hypersurface; S(t) = F(t)\n";
        out << "F(t) = " << series_to_string(report.smooth_dims) << "\n";
        out << "tau=0\n";
      } else {
        out << "S(t) = " << series_to_string(report.dims, *report.st) << "\n";
        out << "F(t) = " << series_to_string(report.smooth_dims) << "\n";
        out << "tau=" << report.tau << " ct=" << *report.ct << " st=" << *report.st
            << " mdr=" << *report.mdr << " def=" << *report.def_value
            << " lc=" << lc_string(*report.lc) << "\n";
        if (report.lc->infinite) {
          out << "log-concavity: lc = infinity (log-concave through the stable range)\n";
        }
        out << "singular points: " << *report.num_singularities << "\n";
        out << "nodal: " << yes_no(*report.nodal) << "\n";
        if (report.rigidity_dimension) {
          out << "projectively rigid: " << yes_no(*report.projectively_rigid)
              << " (deformation space dimension " << *report.rigidity_dimension << ")\n";
        } else {
          out << "projectively rigid: not computed (d > T)\n";
        }
      }
      out << "seed=" << report.seed << "\n";
      return out.str();
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      if (!report.name.empty()) j["name"] = report.name;
      j["n"] = report.n;
      j["d"] = report.d;
      j["T"] = report.T;
      j["smooth"] = report.smooth;
      j["dims"] = report.dims;
      j["smooth_dims"] = report.smooth_dims;
      j["tau"] = report.tau;
      if (!report.smooth) {
        j["ct"] = *report.ct;
        j["st"] = *report.st;
        j["mdr"] = *report.mdr;
        j["def"] = *report.def_value;
        if (report.lc->infinite) {
          j["lc"] = "infinity";
        } else {
          j["lc"] = report.lc->value;
        }
        j["num_singularities"] = *report.num_singularities;
        j["nodal"] = *report.nodal;
        if (report.rigidity_dimension) {
          j["rigidity_dimension"] = *report.rigidity_dimension;
          j["projectively_rigid"] = *report.projectively_rigid;
        } else {
          j["rigidity_dimension"] = nullptr;
          j["projectively_rigid"] = nullptr;
        }
      }
      j["seed"] = report.seed;
      if (report.chart_matrix) j["chart_matrix"] = matrix_to_json(*report.chart_matrix);
      j["timings_ms"] = {{"groebner", report.timings.groebner_ms},
                         {"hilbert", report.timings.hilbert_ms},
                         {"census", report.timings.census_ms},
                         {"total", report.timings.total_ms}};
      return j.dump(2) + "\n";
    }
    case ReportFormat::MarkdownRow: {
      std::ostringstream out;
      out << "| " << (report.name.empty() ? "?" : report.name) << " | " << report.tau;
      if (report.smooth) {
        out << " | - | - | - | - | - | - | - |";
      } else {
        out << " | " << *report.ct << " | " << *report.st << " | " << *report.mdr << " | "
            << *report.def_value << " | " << lc_string(*report.lc) << " | "
            << yes_no(*report.nodal) << " | "
            << (report.projectively_rigid ? yes_no(*report.projectively_rigid) : "n/a") << " |";
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace milnor
