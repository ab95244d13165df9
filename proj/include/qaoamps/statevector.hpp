#pragma once

#include "qaoamps/angles.hpp"
#include "qaoamps/graph.hpp"

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qaoamps {

inline constexpr int kDefaultSvCap = 22;

// Dense amplitudes over the computational basis. Qubit 0 is the least
// significant bit of the basis-state index; this convention is shared with
// the MPS engine so the two simulators can be compared amplitude by
// amplitude.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  double norm_squared() const { return amplitudes.squaredNorm(); }
};

// Per-basis-state Max-Cut costs, indexed like StateVector amplitudes.
std::vector<double> basis_costs(const Graph& g, int cap = kDefaultSvCap);

StateVector sv_plus_state(int n, int cap = kDefaultSvCap);
void sv_apply_cost_phase(StateVector& sv, const std::vector<double>& costs, double gamma);
void sv_apply_mixer(StateVector& sv, double beta);

StateVector sv_run_qaoa(const Graph& g, const QaoaAngles& angles, int cap = kDefaultSvCap);

double sv_cost_expectation(const StateVector& sv, const Graph& g);
double sv_pmin(const StateVector& sv, const std::vector<BitString>& minimizers);

// Von Neumann entropy of the bipartition {first `cut` sites | rest} where
// qubit -> site placement follows vertex_to_site (identity if empty).
double sv_entanglement_entropy(const StateVector& sv, int cut,
                               const std::vector<int>& vertex_to_site = {});

// Caches the basis-cost table of one graph for repeated circuit evaluations.
class SvSimulator {
 public:
  explicit SvSimulator(const Graph& g, int cap = kDefaultSvCap);

  const Graph& graph() const { return g_; }
  const std::vector<double>& costs() const { return costs_; }

  StateVector run(const QaoaAngles& angles) const;
  double cost_expectation(const StateVector& sv) const;
  double run_cost(const QaoaAngles& angles) const;

 private:
  Graph g_;
  std::vector<double> costs_;
};

}  // namespace qaoamps
