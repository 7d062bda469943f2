#include "milnor/catalog.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "milnor/parser.hpp"

namespace milnor {

namespace {

using nlohmann::json;

LogConcavity parse_lc(const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "infinity") return {true, 0};
    throw std::invalid_argument("catalog: lc must be an integer or \"infinity\"");
  }
  if (!value.is_number_integer()) {
    throw std::invalid_argument("catalog: lc must be an integer or \"infinity\"");
  }
  return {false, value.get<int>()};
}

CatalogEntry parse_entry(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("catalog: entry must be an object");
  CatalogEntry entry;
  if (!j.contains("name") || !j.at("name").is_string()) {
    throw std::invalid_argument("catalog: entry requires a string 'name'");
  }
  entry.name = j.at("name").get<std::string>();
  if (!j.contains("vars") || !j.at("vars").is_array()) {
    throw std::invalid_argument("catalog: entry '" + entry.name + "' requires a 'vars' array");
  }
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) throw std::invalid_argument("catalog: variable names must be strings");
    entry.vars.push_back(v.get<std::string>());
  }
  if (!j.contains("polynomial") || !j.at("polynomial").is_string()) {
    throw std::invalid_argument("catalog: entry '" + entry.name + "' requires a 'polynomial'");
  }
  entry.polynomial = j.at("polynomial").get<std::string>();
  if (j.contains("tags")) {
    for (const auto& t : j.at("tags")) entry.tags.push_back(t.get<std::string>());
  }
  if (j.contains("expected")) {
    const json& e = j.at("expected");
    if (!e.is_object()) throw std::invalid_argument("catalog: 'expected' must be an object");
    if (e.contains("tau")) entry.expected.tau = e.at("tau").get<long long>();
    if (e.contains("ct")) entry.expected.ct = e.at("ct").get<int>();
    if (e.contains("st")) entry.expected.st = e.at("st").get<int>();
    if (e.contains("mdr")) entry.expected.mdr = e.at("mdr").get<int>();
    if (e.contains("def")) entry.expected.def_value = e.at("def").get<long long>();
    if (e.contains("lc")) entry.expected.lc = parse_lc(e.at("lc"));
    if (e.contains("nodal")) entry.expected.nodal = e.at("nodal").get<bool>();
    if (e.contains("rigid")) entry.expected.rigid = e.at("rigid").get<bool>();
    if (e.contains("smooth")) entry.expected.smooth = e.at("smooth").get<bool>();
  }
  return entry;
}

template <typename T>
void compare_field(std::vector<std::string>& mismatches, const char* label,
                   const std::optional<T>& expected, const std::optional<T>& actual) {
  if (!expected) return;
  if (!actual) {
    mismatches.push_back(std::string(label) + ": expected a value, none computed");
    return;
  }
  if (*expected != *actual) {
    std::ostringstream msg;
    msg << label << ": expected " << *expected << ", got " << *actual;
    mismatches.push_back(msg.str());
  }
}

void compare_lc(std::vector<std::string>& mismatches, const std::optional<LogConcavity>& expected,
                const std::optional<LogConcavity>& actual) {
  if (!expected) return;
  auto str = [](const LogConcavity& lc) {
    return lc.infinite ? std::string("infinity") : std::to_string(lc.value);
  };
  if (!actual) {
    mismatches.push_back("lc: expected a value, none computed");
  } else if (!(*expected == *actual)) {
    mismatches.push_back("lc: expected " + str(*expected) + ", got " + str(*actual));
  }
}

CatalogResult analyze_entry(const CatalogEntry& entry, std::uint64_t seed) {
  CatalogResult result;
  result.name = entry.name;
  try {
    VariableSet vars(entry.vars);
    Polynomial f = parse_polynomial(entry.polynomial, vars);
    AnalyzeOptions options;
    options.seed = seed;
    InvariantReport report = analyze_hypersurface(f, options);
    report.name = entry.name;

    const CatalogExpected& e = entry.expected;
    if (e.smooth && *e.smooth != report.smooth) {
      result.mismatches.push_back(std::string("smooth: expected ") +
                                  (*e.smooth ? "true" : "false"));
    }
    compare_field(result.mismatches, "tau", e.tau, std::optional<long long>(report.tau));
    compare_field(result.mismatches, "ct", e.ct, report.ct);
    compare_field(result.mismatches, "st", e.st, report.st);
    compare_field(result.mismatches, "mdr", e.mdr, report.mdr);
    compare_field(result.mismatches, "def", e.def_value, report.def_value);
    compare_lc(result.mismatches, e.lc, report.lc);
    compare_field(result.mismatches, "nodal", e.nodal, report.nodal);
    compare_field(result.mismatches, "rigid", e.rigid, report.projectively_rigid);

    result.report = std::move(report);
    result.passed = result.mismatches.empty();
  } catch (const std::exception& ex) {
    result.error = ex.what();
    result.passed = false;
  }
  return result;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw std::invalid_argument(std::string("catalog: invalid JSON: ") + ex.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("catalog: top level must be a list");
  std::vector<CatalogEntry> entries;
  entries.reserve(doc.size());
  for (const auto& item : doc) entries.push_back(parse_entry(item));
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("catalog: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_catalog(buffer.str());
}

std::vector<CatalogResult> run_catalog(const std::vector<CatalogEntry>& entries,
                                       const CatalogRunOptions& options) {
  std::vector<CatalogResult> results(entries.size());
  if (entries.empty()) return results;

  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(entries.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      results[i] = analyze_entry(entries[i], options.seed);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace milnor
