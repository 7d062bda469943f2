#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/invariants.hpp"

namespace milnor {

// Expected values for a catalog entry; any subset may be present.
struct CatalogExpected {
  std::optional<long long> tau;
  std::optional<int> ct;
  std::optional<int> st;
  std::optional<int> mdr;
  std::optional<long long> def_value;
  std::optional<LogConcavity> lc;
  std::optional<bool> nodal;
  std::optional<bool> rigid;
  std::optional<bool> smooth;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> vars;
  std::string polynomial;
  CatalogExpected expected;
  std::vector<std::string> tags;
};

struct CatalogResult {
  std::string name;
  std::optional<InvariantReport> report;
  std::string error;                    // nonempty when analysis failed
  std::vector<std::string> mismatches;  // expected-vs-actual differences
  bool passed = false;
};

// Parses the JSON catalog format (a top-level list of entries). Throws
// std::invalid_argument on malformed documents.
std::vector<CatalogEntry> load_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

struct CatalogRunOptions {
  std::uint64_t seed = 0;
  int jobs = 0;  // 0: number of processors
};

// Analyzes every entry (concurrently up to `jobs`) and compares against the
// expected fields. Results come back in catalog order.
std::vector<CatalogResult> run_catalog(const std::vector<CatalogEntry>& entries,
                                       const CatalogRunOptions& options = {});

}  // namespace milnor
