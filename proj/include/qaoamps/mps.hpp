#pragma once

#include "qaoamps/cost_mpo.hpp"
#include "qaoamps/graph.hpp"
#include "qaoamps/statevector.hpp"

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

namespace qaoamps {

struct GateMatrix {
  Eigen::MatrixXcd m;  // 2x2 or 4x4; two-qubit basis order |s_left s_right>, index 2*s_left + s_right
  bool unitary = true;

  int dim() const { return static_cast<int>(m.rows()); }
  bool is_unitary(double tol = 1e-12) const;
};

namespace gates {
GateMatrix identity(int dim);
GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix rx(double theta);  // exp(-i theta X / 2)
GateMatrix rz(double theta);  // exp(-i theta Z / 2)
GateMatrix zz_phase(double theta);  // exp(-i theta Z(x)Z / 2)
GateMatrix swap();
GateMatrix cz();
}  // namespace gates

struct TruncationReport {
  double discarded_weight = 0.0;
  int max_bond_after = 1;
};

// Matrix product state over N qubits: one rank-3 tensor per chain site,
// physical dimension 2, boundary bonds of dimension 1. Truncation never
// renormalizes; the squared norm decays with the discarded weight and is
// restored only by an explicit normalize() call.
//
// The vertex->site ordering permutation is fixed at construction; BitString
// arguments are always indexed by graph vertex.
class MpsState {
 public:
  MpsState() = default;

  // H^(x)N |0...0>, all bonds 1. `ordering` maps vertex -> site (identity if
  // empty). chi_max > 2^(N/2) silently clamps to chi_exact.
  static MpsState plus_state(int n, long chi_max = 1l << 30,
                             std::vector<int> ordering = {});

  int n_sites() const { return static_cast<int>(tensors_.size()); }
  long chi_max() const { return chi_eff_; }
  long requested_chi() const { return chi_req_; }
  static long chi_exact(int n) { return n / 2 >= 62 ? (1l << 62) : (1l << (n / 2)); }

  const std::vector<int>& vertex_to_site() const { return vertex_to_site_; }
  const std::vector<int>& site_to_vertex() const { return site_to_vertex_; }

  int bond_dim(int cut) const;  // cut in [0, N]; boundary cuts are 1
  int max_bond() const;
  double norm_tracked() const { return norm_tracked_; }
  int center() const { return center_; }

  void apply_single_qubit(int site, const GateMatrix& gate);
  TruncationReport apply_two_qubit_adjacent(int left_site, const GateMatrix& gate,
                                            int new_center = -1);
  TruncationReport apply_two_qubit_routed(int site_a, int site_b, const GateMatrix& gate);

  // U_gamma as a diagonal MPO applied in one shot, followed by a single
  // canonical truncation sweep (the only truncation on this path).
  TruncationReport apply_cost_layer_mpo(const Graph& g, double gamma,
                                        long mpo_bond_cap = kDefaultMpoBondCap);
  TruncationReport apply_cost_layer(const CostLayerMpo& mpo, double gamma);

  void apply_mixer_layer(double beta);

  double norm_squared() const;  // full chain contraction
  void normalize();

  std::complex<double> amplitude(const BitString& s) const;

  // Raw quadratic form <psi|Z_i Z_j|psi| on the possibly-unnormalized state.
  // Sweeps the internal gauge; the represented state is unchanged.
  double expectation_zz(int vertex_i, int vertex_j);
  double cost_expectation(const Graph& g, bool normalized);
  double entanglement_entropy(int cut);  // requires a normalized state

  StateVector to_statevector(int cap = kDefaultSvCap) const;

  void move_center(int site);

  // debugging checkpoint (not a stability contract)
  void save_json(const std::string& path) const;
  static MpsState load_json(const std::string& path);

 private:
  using SiteTensor = std::array<Eigen::MatrixXcd, 2>;  // [s] is (b_left x b_right)

  void check_site(int site) const;
  void left_normalize_site(int k);
  void right_normalize_site(int k);
  // right-to-left SVD truncation; requires center at N-1 (everything left-canonical)
  double truncation_sweep(long chi);
  TruncationReport apply_mpo_product_input(const CostLayerMpo& mpo, double gamma);
  TruncationReport apply_mpo_general(const CostLayerMpo& mpo, double gamma);

  std::vector<SiteTensor> tensors_;
  std::vector<int> vertex_to_site_;
  std::vector<int> site_to_vertex_;
  long chi_req_ = 1;
  long chi_eff_ = 1;
  int center_ = 0;
  double norm_tracked_ = 1.0;
};

}  // namespace qaoamps
