#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "milnor/hilbert.hpp"
#include "milnor/singlocus.hpp"

namespace milnor {

// Log-concavity threshold: a plain integer or infinity.
struct LogConcavity {
  bool infinite = false;
  int value = 0;

  bool operator==(const LogConcavity&) const = default;
};

struct Timings {
  double groebner_ms = 0;
  double hilbert_ms = 0;
  double census_ms = 0;
  double total_ms = 0;
};

struct InvariantReport {
  std::string name;  // optional label, set by catalog runs
  int n = 0;
  int d = 0;
  int T = 0;
  long long tau = 0;
  bool smooth = false;

  // Singular-only fields.
  std::optional<int> ct;
  std::optional<int> st;
  std::optional<int> mdr;
  std::optional<long long> def_value;
  std::optional<LogConcavity> lc;
  std::optional<long long> num_singularities;
  std::optional<bool> nodal;
  // Absent when d > T (the dimension formula does not apply).
  std::optional<long long> rigidity_dimension;
  std::optional<bool> projectively_rigid;

  std::vector<long long> dims;
  std::vector<long long> smooth_dims;

  std::uint64_t seed = 0;
  std::optional<QMatrix> chart_matrix;
  Timings timings;
};

// dims[T+1], with the dims[T] == dims[T+1] stabilization check; a mismatch
// signals non-isolated singularities (NonIsolatedError).
long long global_tjurina(const HilbertData& h);

// Largest q with dims[k] == smooth_dims[k] for all k <= q.
int coincidence_threshold(const HilbertData& h);

// Least q with dims[k] == tau for all q <= k <= T+1.
int stability_threshold(const HilbertData& h, long long tau);

// ct - (d - 2); throws std::invalid_argument when ct < d-2 (inconsistent
// input, flagged rather than clamped).
int minimal_syzygy_degree(int ct, int d);

// dims[ct+1] - smooth_dims[ct+1]; nonzero by maximality of ct.
long long defect_invariant(const HilbertData& h, int ct);

// Maximal q such that dims[0..q] is log-concave; infinite once q >= st+1.
LogConcavity log_concavity_threshold(const HilbertData& h, int st);

// dims[d] - smooth_dims[d] + dims[T-d] - tau; requires d <= T.
long long rigidity_dimension(const HilbertData& h, long long tau, int d);

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  int chart_max_retries = 8;
  // Upper bound on the internal working degree T+1; exceeded means
  // LimitError. The Groebner run itself is always truncated at T+1.
  std::optional<int> degree_cap;
};

// Full pipeline: Jacobian ideal, Groebner basis, Hilbert data, invariants,
// singular-locus census, rigidity.
InvariantReport analyze_hypersurface(const Polynomial& f, const AnalyzeOptions& options = {});

}  // namespace milnor
