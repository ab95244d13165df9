#pragma once

#include "qaoamps/angles.hpp"
#include "qaoamps/graph.hpp"
#include "qaoamps/qaoa.hpp"

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

namespace qaoamps {

struct OptimizerOptions {
  int max_iterations = 200;
  double gradient_tolerance = 1e-8;
  double fd_step = 1e-6;  // scaled by (1 + |x_i|) per coordinate
  int restarts = 100;
  uint64_t seed = 0;
};

enum class BfgsStatus { Converged, MaxIterations, LineSearchStalled, NumericalFailure };

struct BfgsResult {
  Eigen::VectorXd x;
  double fx = 0.0;
  int iterations = 0;
  BfgsStatus status = BfgsStatus::Converged;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

Eigen::VectorXd central_gradient(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                 double fd_step);

// Quasi-Newton descent with central finite-difference gradients and Armijo
// backtracking (c = 1e-4). Always returns the best iterate seen; throws
// Error(NumericalFailure) only if f(x0) is non-finite.
BfgsResult bfgs_minimize(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                         const OptimizerOptions& opts);

// One optimized QAOA instance.
struct RunRecord {
  std::string graph_id;
  int n = 0;
  int p = 1;
  long chi = 0;          // effective bond dimension (after clamping)
  std::string method;    // "mpo-layer" | "routed-gate" | "sv"
  uint64_t ordering_seed = 0;
  double best_cost = 0.0;  // final normalized cost
  QaoaAngles best_angles;
  double norm = 1.0;  // squared norm before the final normalization
  int restarts_used = 0;
  uint64_t seed = 0;

  std::string family = "explicit";
  std::optional<double> n_edges;
  std::optional<double> pmin;
  std::optional<double> entropy_midcut;
  std::optional<double> cmin;
  std::string error;  // non-empty marks a failed sweep cell
};

// opts.restarts independent BFGS starts with gamma ~ U[0,2pi), beta ~ U[0,pi);
// keeps the restart whose final normalized cost is lowest (ties -> lowest
// restart index).
RunRecord multistart_optimize(const Graph& g, int p, const CircuitConfig& cfg,
                              const OptimizerOptions& opts);

}  // namespace qaoamps
