#include "milnor/invariants.hpp"

#include <chrono>
#include <stdexcept>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

void require_singular(const HilbertData& h) {
  if (h.stable_value < 1) {
    throw std::invalid_argument("invariant undefined for smooth hypersurfaces (tau = 0)");
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

long long global_tjurina(const HilbertData& h) {
  const std::size_t T = static_cast<std::size_t>(h.T);
  if (h.dims[T] != h.dims[T + 1]) {
    throw NonIsolatedError("Hilbert function not stable at degree T+1 (dim " +
                           std::to_string(h.dims[T]) + " vs " + std::to_string(h.dims[T + 1]) +
                           "): the singular locus is not isolated");
  }
  return h.dims[T + 1];
}

int coincidence_threshold(const HilbertData& h) {
  require_singular(h);
  int q = -1;
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    if (h.dims[k] != h.smooth_dims[k]) break;
    q = static_cast<int>(k);
  }
  // dims[T+1] = tau >= 1 while the smooth series vanishes there, so q <= T.
  return q;
}

int stability_threshold(const HilbertData& h, long long tau) {
  require_singular(h);
  int q = static_cast<int>(h.dims.size()) - 1;
  while (q > 0 && h.dims[static_cast<std::size_t>(q - 1)] == tau) --q;
  return q;
}

int minimal_syzygy_degree(int ct, int d) {
  if (ct < d - 2) {
    throw std::invalid_argument("coincidence threshold " + std::to_string(ct) +
                                " below d-2 = " + std::to_string(d - 2) +
                                ": inconsistent with the syzygy relation, flagging for review");
  }
  return ct - (d - 2);
}

long long defect_invariant(const HilbertData& h, int ct) {
  require_singular(h);
  const std::size_t k = static_cast<std::size_t>(ct) + 1;
  if (k >= h.dims.size()) {
    throw std::invalid_argument("defect undefined: ct+1 exceeds the computed range");
  }
  return h.dims[k] - h.smooth_dims[k];
}

LogConcavity log_concavity_threshold(const HilbertData& h, int st) {
  require_singular(h);
  // Largest q (within the computed range) such that dims[i-1]*dims[i+1] <=
  // dims[i]^2 for all 1 <= i <= q-1.
  int q = static_cast<int>(h.dims.size()) - 1;
  for (std::size_t i = 1; i + 1 < h.dims.size(); ++i) {
    if (h.dims[i - 1] * h.dims[i + 1] > h.dims[i] * h.dims[i]) {
      q = static_cast<int>(i);
      break;
    }
  }
  if (q >= st + 1) return {true, 0};
  return {false, q};
}

long long rigidity_dimension(const HilbertData& h, long long tau, int d) {
  require_singular(h);
  if (d > h.T) {
    throw std::invalid_argument("rigidity dimension formula requires d <= T");
  }
  return h.dims[static_cast<std::size_t>(d)] - h.smooth_dims[static_cast<std::size_t>(d)] +
         h.dims[static_cast<std::size_t>(h.T - d)] - tau;
}

InvariantReport analyze_hypersurface(const Polynomial& f, const AnalyzeOptions& options) {
  const auto t_start = std::chrono::steady_clock::now();
  if (f.is_zero()) throw std::invalid_argument("cannot analyze the zero polynomial");
  auto info = degree_and_homogeneity(f);
  if (!info.homogeneous) {
    throw std::invalid_argument("analysis requires a homogeneous polynomial");
  }
  const int d = info.degree;
  const int n = f.nvars() - 1;
  if (d < 2) throw std::invalid_argument("analysis requires degree >= 2");
  if (n < 1) throw std::invalid_argument("analysis requires at least two variables");
  const int T = (n + 1) * (d - 2);
  if (options.degree_cap && T + 1 > *options.degree_cap) {
    throw LimitError("working degree T+1 = " + std::to_string(T + 1) +
                     " exceeds the degree cap " + std::to_string(*options.degree_cap));
  }

  InvariantReport report;
  report.n = n;
  report.d = d;
  report.T = T;
  report.seed = options.seed;

  std::vector<Polynomial> jacobian;
  for (int i = 0; i <= n; ++i) {
    Polynomial p = partial_derivative(f, i);
    if (!p.is_zero()) jacobian.push_back(std::move(p));
  }
  if (jacobian.empty()) throw std::invalid_argument("all partial derivatives vanish");

  auto t_gb = std::chrono::steady_clock::now();
  BuchbergerOptions gb_options;
  gb_options.degree_cap = T + 1;  // the pipeline only reads degrees <= T+1
  GroebnerBasis G = buchberger(jacobian, gb_options);
  report.timings.groebner_ms = ms_since(t_gb);

  auto t_hilbert = std::chrono::steady_clock::now();
  HilbertData h = make_hilbert_data(hilbert_function(G, T + 1), n, d);
  report.timings.hilbert_ms = ms_since(t_hilbert);
  report.dims = h.dims;
  report.smooth_dims = h.smooth_dims;

  const long long tau = global_tjurina(h);
  report.tau = tau;
  if (tau == 0) {
    report.smooth = true;
    report.timings.total_ms = ms_since(t_start);
    return report;
  }

  const int ct = coincidence_threshold(h);
  const int st = stability_threshold(h, tau);
  report.ct = ct;
  report.st = st;
  report.mdr = minimal_syzygy_degree(ct, d);
  report.def_value = defect_invariant(h, ct);
  report.lc = log_concavity_threshold(h, st);

  auto t_census = std::chrono::steady_clock::now();
  SingularLocusSummary census =
      singularity_census(f, tau, options.seed, options.chart_max_retries);
  report.timings.census_ms = ms_since(t_census);
  report.num_singularities = census.num_points;
  report.nodal = census.nodal;
  report.chart_matrix = census.chart.matrix;

  if (d <= T) {
    long long rig = rigidity_dimension(h, tau, d);
    report.rigidity_dimension = rig;
    report.projectively_rigid = (rig == 0);
  }

  report.timings.total_ms = ms_since(t_start);
  return report;
}

}  // namespace milnor
