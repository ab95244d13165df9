#pragma once

#include "qaoamps/optimize.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qaoamps {

struct ExactRef {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int n_instances = 0;
};

struct EnsembleRow {
  int n = 0;
  long chi = 0;
  double mean_cost = 0.0;
  double stderr_cost = 0.0;
  int n_instances = 0;
  double n_edges = 0.0;  // NaN when unknown
  std::optional<double> mean_exact;
  std::optional<double> stderr_exact;
  std::optional<double> mean_pmin;
  std::optional<double> stderr_pmin;
  std::optional<double> mean_entropy;
  std::optional<double> mean_cmin;
};

struct EnsembleTable {
  std::string family;
  int p = 1;
  std::vector<EnsembleRow> rows;  // sorted by (n, chi)

  const EnsembleRow* find(int n, long chi) const;
  std::vector<int> sizes() const;
};

// Groups records by (N, chi); joins exact references from `exact_refs` (per
// N), falling back to chi = chi_exact rows present in the records themselves.
EnsembleTable build_ensemble(const std::vector<RunRecord>& records,
                             const std::map<int, ExactRef>& exact_refs = {});

// Mean/stderr of best_cost per N over rows at chi_exact (e.g. from an
// sv-method run file), for use as the exact_refs argument above.
std::map<int, ExactRef> exact_refs_from_records(const std::vector<RunRecord>& records);

struct CollapsePoint {
  double x = 0.0;
  double y = 0.0;
  double weight = 1.0;
  int n = 0;
  long chi = 0;
};

std::vector<CollapsePoint> collapse_cost(const EnsembleTable& table);
std::vector<CollapsePoint> collapse_entropy(const EnsembleTable& table);
std::vector<CollapsePoint> collapse_vs_cmin(const EnsembleTable& table);

struct LinearFit {
  double intercept = 0.0, slope = 0.0;
  double intercept_err = 0.0, slope_err = 0.0;
  double residual_rms = 0.0;
  int n_points = 0;
};
LinearFit weighted_linear_fit(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& w);

struct PowerLawOptions {
  double x_max = 0.1;
  std::vector<int> exclude_n = {8};
};
struct PowerLawFit {
  double a = 0.0, alpha = 0.0;
  double a_err = 0.0, alpha_err = 0.0;
  double residual_rms = 0.0;
  int n_points = 0;
};
// Weighted least squares of ln y on ln x over the small-x tail.
PowerLawFit fit_power_law(const std::vector<CollapsePoint>& points,
                          const PowerLawOptions& opts = {});

struct ExtrapolationFit {
  double c0 = 0.0, c1 = 0.0;
  double c0_err = 0.0, c1_err = 0.0;
  double residual_rms = 0.0;
  int n_points = 0;
};
// Weighted linear fit of C(N, chi_exact)/|E| against 1/N.
ExtrapolationFit fit_extrapolation(const EnsembleTable& table);

struct InversionResult {
  double x_target = 0.0;
  double chi_estimate = 0.0;
};
// Monotone piecewise-linear inversion of the binned collapse curve;
// refuses y targets outside the observed range.
InversionResult invert_scaling(const std::vector<CollapsePoint>& points, double y_target,
                               int n, int bins = 20);

struct FidelityChi {
  double chi = 0.0;
  double global_fidelity = 0.0;
  bool in_regime = true;  // ln(chi)/n <= 0.1
};
FidelityChi chi_from_fidelity(double f, int k_ops, int n, double a, double alpha);

std::vector<std::pair<int, double>> approximation_ratio(const EnsembleTable& table);

struct FlatnessResult {
  double slope = 0.0;
  double slope_err = 0.0;
  bool flat = false;
  int n_points = 0;
};
FlatnessResult flatness_check(const EnsembleTable& table, long chi);

struct PminCollapseOptions {
  int bins = 20;
  double tail_x_max = 1.0;
  double omega_min = 0.5, omega_max = 10.0;
  double lambda_min = 0.5, lambda_max = 12.0;
  double grid_step = 0.5;
  int refine_starts = 5;
  int refine_iterations = 60;
};
struct PminCollapseFit {
  double omega = 0.0, lambda = 0.0;
  double d = 0.0, delta = 0.0;
  double d_err = 0.0, delta_err = 0.0;
  double scatter_before = 0.0, scatter_after = 0.0;
  double tail_residual_rms = 0.0;
  int n_points = 0;
};
// (Omega, Lambda) minimize the RMS distance of the rescaled points to a
// monotone binned master curve in log-log space (coarse grid + BFGS); the
// (D, delta) tail follows from a power-law fit over X <= tail_x_max.
PminCollapseFit collapse_pmin(const EnsembleTable& table,
                              const PminCollapseOptions& opts = {});

struct ScatterStats {
  double rms_scatter = 0.0;  // RMS within-bin spread of y
  double range = 0.0;        // spread of binned means
  int used_bins = 0;
};
ScatterStats binned_scatter(const std::vector<CollapsePoint>& points, int bins = 20);

}  // namespace qaoamps
