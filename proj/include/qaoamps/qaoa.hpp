#pragma once

#include "qaoamps/angles.hpp"
#include "qaoamps/cost_mpo.hpp"
#include "qaoamps/graph.hpp"
#include "qaoamps/mps.hpp"

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace qaoamps {

enum class Method { MpoPerLayer, RoutedPerGate };
enum class NormalizeMode { FinalOnly, Always };

const char* method_name(Method m);
Method method_from_string(const std::string& s);
const char* normalize_mode_name(NormalizeMode m);

struct CircuitConfig {
  long chi_max = 16;
  Method method = Method::MpoPerLayer;
  uint64_t ordering_seed = 0;
  NormalizeMode normalize_mode = NormalizeMode::FinalOnly;
  long mpo_bond_cap = kDefaultMpoBondCap;
};

// Random vertex -> site assignment, deterministic per seed.
std::vector<int> ordering_from_seed(int n, uint64_t seed);

MpsState run_circuit(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg);

// The function handed to the optimizer. With NormalizeMode::FinalOnly this is
// the raw quadratic form on the truncation-decayed state.
double objective_cost(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg);

struct FinalRun {
  double cost = 0.0;                 // normalized cost expectation
  double norm_squared_before = 1.0;  // squared norm before normalization
  MpsState state;                    // normalized
};
FinalRun final_cost_and_state(const Graph& g, const QaoaAngles& angles,
                              const CircuitConfig& cfg);

double pmin(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg,
            const std::vector<BitString>& minimizers);

// M(a, b) = normalized cost at (gamma_grid[a], beta_grid[b]), depth p=1.
Eigen::MatrixXd landscape_scan(const Graph& g, const std::vector<double>& gamma_grid,
                               const std::vector<double>& beta_grid,
                               const CircuitConfig& cfg);

std::vector<double> uniform_grid(double max_value, int points);

// Repeated-evaluation engine for one (graph, p, config): reuses the cost-MPO
// automaton across evaluations and memoizes the state up to the final mixer,
// keyed on the angle prefix. Results are bit-identical to run_circuit.
class CircuitEvaluator {
 public:
  CircuitEvaluator(const Graph& g, int p, const CircuitConfig& cfg);

  double objective(const QaoaAngles& angles);
  double normalized_cost(const QaoaAngles& angles);
  FinalRun final_normalized(const QaoaAngles& angles);

  const std::vector<int>& ordering() const { return ordering_; }
  long evaluations() const { return evals_; }

 private:
  MpsState prefix_state(const QaoaAngles& angles);
  MpsState mixed_state(const QaoaAngles& angles);

  Graph g_;
  int p_;
  CircuitConfig cfg_;
  std::vector<int> ordering_;
  std::unique_ptr<CostLayerMpo> mpo_;

  struct CacheEntry {
    std::vector<double> key;
    MpsState state;
    uint64_t stamp = 0;
  };
  std::vector<CacheEntry> cache_;
  uint64_t stamp_ = 0;
  long evals_ = 0;
};

}  // namespace qaoamps
