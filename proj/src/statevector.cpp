#include "qaoamps/statevector.hpp"

#include "qaoamps/linalg.hpp"

#include <cmath>

namespace qaoamps {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "state vector capped at N=" + std::to_string(cap) +
                    " (requested " + std::to_string(n) + ")");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
}

}  // namespace

std::vector<double> basis_costs(const Graph& g, int cap) {
  check_cap(g.n, cap);
  const uint64_t dim = 1ull << g.n;
  std::vector<double> costs(dim, 0.0);
  for (const auto& e : g.edges) {
    const uint64_t bi = 1ull << e.i;
    const uint64_t bj = 1ull << e.j;
    for (uint64_t s = 0; s < dim; ++s) {
      bool cut = ((s & bi) != 0) != ((s & bj) != 0);
      costs[s] += cut ? -e.w : e.w;
    }
  }
  return costs;
}

StateVector sv_plus_state(int n, int cap) {
  check_cap(n, cap);
  StateVector sv;
  sv.n_qubits = n;
  const uint64_t dim = 1ull << n;
  sv.amplitudes = Eigen::VectorXcd::Constant(dim, std::pow(2.0, -0.5 * n));
  return sv;
}

void sv_apply_cost_phase(StateVector& sv, const std::vector<double>& costs, double gamma) {
  if (costs.size() != static_cast<size_t>(sv.amplitudes.size())) {
    throw Error(ErrorKind::InvalidArgument, "cost table does not match state dimension");
  }
  for (Eigen::Index s = 0; s < sv.amplitudes.size(); ++s) {
    sv.amplitudes[s] *= std::polar(1.0, -0.5 * gamma * costs[s]);
  }
}

void sv_apply_mixer(StateVector& sv, double beta) {
  const std::complex<double> c(std::cos(0.5 * beta), 0.0);
  const std::complex<double> ms(0.0, -std::sin(0.5 * beta));
  const uint64_t dim = sv.amplitudes.size();
  for (int q = 0; q < sv.n_qubits; ++q) {
    const uint64_t bq = 1ull << q;
    for (uint64_t s0 = 0; s0 < dim; ++s0) {
      if (s0 & bq) continue;
      const uint64_t s1 = s0 | bq;
      const auto a0 = sv.amplitudes[s0];
      const auto a1 = sv.amplitudes[s1];
      sv.amplitudes[s0] = c * a0 + ms * a1;
      sv.amplitudes[s1] = ms * a0 + c * a1;
    }
  }
}

StateVector sv_run_qaoa(const Graph& g, const QaoaAngles& angles, int cap) {
  angles.validate();
  SvSimulator sim(g, cap);
  return sim.run(angles);
}

double sv_cost_expectation(const StateVector& sv, const Graph& g) {
  if (g.n != sv.n_qubits) {
    throw Error(ErrorKind::InvalidArgument, "graph size does not match state");
  }
  auto costs = basis_costs(g, sv.n_qubits);
  double acc = 0.0;
  for (Eigen::Index s = 0; s < sv.amplitudes.size(); ++s) {
    acc += std::norm(sv.amplitudes[s]) * costs[s];
  }
  return acc;
}

double sv_pmin(const StateVector& sv, const std::vector<BitString>& minimizers) {
  if (std::abs(sv.norm_squared() - 1.0) > 1e-8) {
    throw Error(ErrorKind::InvalidState, "p_min needs a normalized state");
  }
  double p = 0.0;
  for (const auto& s : minimizers) {
    if (static_cast<int>(s.size()) != sv.n_qubits) {
      throw Error(ErrorKind::InvalidArgument, "bitstring length mismatch");
    }
    p += std::norm(sv.amplitudes[bitstring_to_index(s)]);
  }
  return p;
}

double sv_entanglement_entropy(const StateVector& sv, int cut,
                               const std::vector<int>& vertex_to_site) {
  const int n = sv.n_qubits;
  if (cut < 1 || cut >= n) {
    throw Error(ErrorKind::InvalidArgument, "cut must satisfy 1 <= cut <= N-1");
  }
  if (std::abs(sv.norm_squared() - 1.0) > 1e-8) {
    throw Error(ErrorKind::InvalidState, "entropy needs a normalized state");
  }
  std::vector<int> v2s(n);
  if (vertex_to_site.empty()) {
    for (int i = 0; i < n; ++i) v2s[i] = i;
  } else {
    if (static_cast<int>(vertex_to_site.size()) != n) {
      throw Error(ErrorKind::InvalidArgument, "ordering length mismatch");
    }
    v2s = vertex_to_site;
  }
  const uint64_t dim = 1ull << n;
  const uint64_t rows = 1ull << cut;
  Eigen::MatrixXcd m(rows, dim / rows);
  for (uint64_t idx = 0; idx < dim; ++idx) {
    uint64_t site_idx = 0;
    for (int v = 0; v < n; ++v) {
      if ((idx >> v) & 1u) site_idx |= 1ull << v2s[v];
    }
    m(site_idx & (rows - 1), site_idx >> cut) = sv.amplitudes[idx];
  }
  auto svd = linalg::svd_thin(m);
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < svd.s.size(); ++k) {
    double lambda = svd.s[k] * svd.s[k];
    if (lambda > 1e-16) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

SvSimulator::SvSimulator(const Graph& g, int cap) : g_(g), costs_(basis_costs(g, cap)) {}

StateVector SvSimulator::run(const QaoaAngles& angles) const {
  angles.validate();
  StateVector sv = sv_plus_state(g_.n);
  for (int l = 0; l < angles.p(); ++l) {
    sv_apply_cost_phase(sv, costs_, angles.gammas[l]);
    sv_apply_mixer(sv, angles.betas[l]);
  }
  return sv;
}

double SvSimulator::cost_expectation(const StateVector& sv) const {
  double acc = 0.0;
  for (Eigen::Index s = 0; s < sv.amplitudes.size(); ++s) {
    acc += std::norm(sv.amplitudes[s]) * costs_[s];
  }
  return acc;
}

double SvSimulator::run_cost(const QaoaAngles& angles) const {
  return cost_expectation(run(angles));
}

}  // namespace qaoamps
