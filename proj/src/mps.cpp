#include "qaoamps/mps.hpp"

#include "qaoamps/common.hpp"
#include "qaoamps/linalg.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numeric>

namespace qaoamps {

using Eigen::MatrixXcd;
using std::complex;

namespace {
constexpr double kSingularFloor = 1e-14;
}

bool GateMatrix::is_unitary(double tol) const {
  MatrixXcd d = m.adjoint() * m - MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

namespace gates {

GateMatrix identity(int dim) {
  return {MatrixXcd::Identity(dim, dim), true};
}

GateMatrix hadamard() {
  MatrixXcd m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return {m, true};
}

GateMatrix pauli_x() {
  MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return {m, true};
}

GateMatrix rx(double theta) {
  MatrixXcd m(2, 2);
  const complex<double> c(std::cos(0.5 * theta), 0.0);
  const complex<double> ms(0.0, -std::sin(0.5 * theta));
  m << c, ms, ms, c;
  return {m, true};
}

GateMatrix rz(double theta) {
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -0.5 * theta);
  m(1, 1) = std::polar(1.0, 0.5 * theta);
  return {m, true};
}

GateMatrix zz_phase(double theta) {
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  m(0, 0) = m(3, 3) = std::polar(1.0, -0.5 * theta);
  m(1, 1) = m(2, 2) = std::polar(1.0, 0.5 * theta);
  return {m, true};
}

GateMatrix swap() {
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return {m, true};
}

GateMatrix cz() {
  MatrixXcd m = MatrixXcd::Identity(4, 4);
  m(3, 3) = -1.0;
  return {m, true};
}

}  // namespace gates

MpsState MpsState::plus_state(int n, long chi_max, std::vector<int> ordering) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
  if (chi_max < 1) throw Error(ErrorKind::InvalidArgument, "need chi_max >= 1");
  MpsState st;
  if (ordering.empty()) {
    ordering.resize(n);
    std::iota(ordering.begin(), ordering.end(), 0);
  }
  if (static_cast<int>(ordering.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "ordering length mismatch");
  }
  st.vertex_to_site_ = ordering;
  st.site_to_vertex_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int s = ordering[v];
    if (s < 0 || s >= n || st.site_to_vertex_[s] != -1) {
      throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation");
    }
    st.site_to_vertex_[s] = v;
  }
  st.chi_req_ = chi_max;
  st.chi_eff_ = std::min(chi_max, chi_exact(n));
  const complex<double> amp(1.0 / std::sqrt(2.0), 0.0);
  st.tensors_.resize(n);
  for (int k = 0; k < n; ++k) {
    st.tensors_[k][0] = MatrixXcd::Constant(1, 1, amp);
    st.tensors_[k][1] = MatrixXcd::Constant(1, 1, amp);
  }
  st.center_ = 0;
  st.norm_tracked_ = 1.0;
  return st;
}

int MpsState::bond_dim(int cut) const {
  const int n = n_sites();
  if (cut < 0 || cut > n) throw Error(ErrorKind::InvalidArgument, "cut out of range");
  if (cut == 0 || cut == n) return 1;
  return static_cast<int>(tensors_[cut - 1][0].cols());
}

int MpsState::max_bond() const {
  int b = 1;
  for (const auto& t : tensors_) b = std::max(b, static_cast<int>(t[0].cols()));
  return b;
}

void MpsState::check_site(int site) const {
  if (site < 0 || site >= n_sites()) {
    throw Error(ErrorKind::InvalidArgument, "site index out of range");
  }
}

void MpsState::apply_single_qubit(int site, const GateMatrix& gate) {
  check_site(site);
  if (gate.dim() != 2) throw Error(ErrorKind::InvalidArgument, "need a 2x2 gate");
  auto& t = tensors_[site];
  MatrixXcd a0 = gate.m(0, 0) * t[0] + gate.m(0, 1) * t[1];
  MatrixXcd a1 = gate.m(1, 0) * t[0] + gate.m(1, 1) * t[1];
  t[0] = std::move(a0);
  t[1] = std::move(a1);
  if (!gate.unitary) center_ = -1;  // canonical structure no longer guaranteed
}

void MpsState::left_normalize_site(int k) {
  auto& t = tensors_[k];
  const Eigen::Index bl = t[0].rows();
  const Eigen::Index br = t[0].cols();
  MatrixXcd m(2 * bl, br);
  m.topRows(bl) = t[0];
  m.bottomRows(bl) = t[1];
  MatrixXcd q, r;
  linalg::qr_thin(m, q, r);
  const Eigen::Index k2 = q.cols();
  t[0] = q.topRows(bl);
  t[1] = q.bottomRows(bl);
  auto& next = tensors_[k + 1];
  next[0] = r * next[0];
  next[1] = r * next[1];
  (void)k2;
}

void MpsState::right_normalize_site(int k) {
  auto& t = tensors_[k];
  const Eigen::Index bl = t[0].rows();
  const Eigen::Index br = t[0].cols();
  MatrixXcd m(bl, 2 * br);
  m.leftCols(br) = t[0];
  m.rightCols(br) = t[1];
  MatrixXcd l, q;
  linalg::lq_thin(m, l, q);
  t[0] = q.leftCols(br);
  t[1] = q.rightCols(br);
  auto& prev = tensors_[k - 1];
  prev[0] = prev[0] * l;
  prev[1] = prev[1] * l;
}

void MpsState::move_center(int site) {
  check_site(site);
  const int n = n_sites();
  if (center_ == -1) {
    for (int i = 0; i + 1 < n; ++i) left_normalize_site(i);
    center_ = n - 1;
  }
  while (center_ < site) {
    left_normalize_site(center_);
    ++center_;
  }
  while (center_ > site) {
    right_normalize_site(center_);
    --center_;
  }
}

TruncationReport MpsState::apply_two_qubit_adjacent(int left_site, const GateMatrix& gate,
                                                    int new_center) {
  const int n = n_sites();
  if (left_site < 0 || left_site + 1 >= n) {
    throw Error(ErrorKind::InvalidArgument, "need left_site + 1 < N");
  }
  if (gate.dim() != 4) throw Error(ErrorKind::InvalidArgument, "need a 4x4 gate");
  if (new_center == -1) new_center = left_site + 1;

  if (center_ < left_site || center_ == -1) {
    move_center(left_site);
  } else if (center_ > left_site + 1) {
    move_center(left_site + 1);
  }

  auto& tl = tensors_[left_site];
  auto& tr = tensors_[left_site + 1];
  const Eigen::Index bl = tl[0].rows();
  const Eigen::Index br = tr[0].cols();

  MatrixXcd theta(2 * bl, 2 * br);
  for (int si = 0; si < 2; ++si) {
    for (int sj = 0; sj < 2; ++sj) {
      theta.block(si * bl, sj * br, bl, br) = tl[si] * tr[sj];
    }
  }
  MatrixXcd theta2 = MatrixXcd::Zero(2 * bl, 2 * br);
  for (int si = 0; si < 2; ++si) {
    for (int sj = 0; sj < 2; ++sj) {
      for (int ti = 0; ti < 2; ++ti) {
        for (int tj = 0; tj < 2; ++tj) {
          const auto gcoef = gate.m(2 * si + sj, 2 * ti + tj);
          if (gcoef != complex<double>(0.0, 0.0)) {
            theta2.block(si * bl, sj * br, bl, br) +=
                gcoef * theta.block(ti * bl, tj * br, bl, br);
          }
        }
      }
    }
  }

  linalg::SvdResult svd;
  try {
    svd = linalg::svd_thin(theta2);
  } catch (const Error& e) {
    throw Error(ErrorKind::NumericalFailure,
                "two-site SVD failed at site " + std::to_string(left_site) + " (bonds " +
                    std::to_string(bl) + "," + std::to_string(br) + "): " + e.what());
  }

  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < svd.s.size(); ++t) {
    if (svd.s[t] > kSingularFloor) ++rank;
  }
  Eigen::Index keep = std::max<Eigen::Index>(1, std::min<Eigen::Index>(rank, chi_eff_));
  double discarded = 0.0;
  for (Eigen::Index t = keep; t < svd.s.size(); ++t) discarded += svd.s[t] * svd.s[t];

  MatrixXcd u = svd.u.leftCols(keep);
  MatrixXcd vh = svd.vh.topRows(keep);
  Eigen::VectorXd s = svd.s.head(keep);

  if (new_center == left_site) {
    MatrixXcd us = u * s.asDiagonal();
    tl[0] = us.topRows(bl);
    tl[1] = us.bottomRows(bl);
    tr[0] = vh.leftCols(br);
    tr[1] = vh.rightCols(br);
  } else {
    tl[0] = u.topRows(bl);
    tl[1] = u.bottomRows(bl);
    MatrixXcd sv = s.asDiagonal() * vh;
    tr[0] = sv.leftCols(br);
    tr[1] = sv.rightCols(br);
  }
  center_ = new_center;
  norm_tracked_ -= discarded;
  return {discarded, max_bond()};
}

namespace {

// reorders a two-qubit gate's tensor factors: G'[(b a),(d c)] = G[(a b),(c d)]
GateMatrix permute_gate(const GateMatrix& g) {
  static const int p[4] = {0, 2, 1, 3};
  GateMatrix out;
  out.unitary = g.unitary;
  out.m.resize(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out.m(p[i], p[j]) = g.m(i, j);
  }
  return out;
}

}  // namespace

TruncationReport MpsState::apply_two_qubit_routed(int site_a, int site_b,
                                                  const GateMatrix& gate) {
  check_site(site_a);
  check_site(site_b);
  if (site_a == site_b) throw Error(ErrorKind::InvalidArgument, "need two distinct sites");
  if (gate.dim() != 4) throw Error(ErrorKind::InvalidArgument, "need a 4x4 gate");

  const GateMatrix oriented = (site_a < site_b) ? gate : permute_gate(gate);
  const int i = std::min(site_a, site_b);
  const int j = std::max(site_a, site_b);
  const GateMatrix swap_g = gates::swap();

  double discarded = 0.0;
  // bring the right qubit next to the left one
  for (int t = j - 1; t > i; --t) {
    discarded += apply_two_qubit_adjacent(t, swap_g, t).discarded_weight;
  }
  discarded += apply_two_qubit_adjacent(i, oriented, i + 1).discarded_weight;
  // and return it
  for (int t = i + 1; t < j; ++t) {
    discarded += apply_two_qubit_adjacent(t, swap_g, t + 1).discarded_weight;
  }
  return {discarded, max_bond()};
}

double MpsState::truncation_sweep(long chi) {
  const int n = n_sites();
  double discarded = 0.0;
  for (int k = n - 1; k >= 1; --k) {
    auto& t = tensors_[k];
    const Eigen::Index bl = t[0].rows();
    const Eigen::Index br = t[0].cols();
    MatrixXcd m(bl, 2 * br);
    m.leftCols(br) = t[0];
    m.rightCols(br) = t[1];
    auto svd = linalg::svd_thin(m);
    Eigen::Index rank = 0;
    for (Eigen::Index x = 0; x < svd.s.size(); ++x) {
      if (svd.s[x] > kSingularFloor) ++rank;
    }
    Eigen::Index keep = std::max<Eigen::Index>(1, std::min<Eigen::Index>(rank, chi));
    for (Eigen::Index x = keep; x < svd.s.size(); ++x) discarded += svd.s[x] * svd.s[x];

    MatrixXcd vh = svd.vh.topRows(keep);
    t[0] = vh.leftCols(br);
    t[1] = vh.rightCols(br);
    MatrixXcd us = svd.u.leftCols(keep) * svd.s.head(keep).asDiagonal();
    auto& prev = tensors_[k - 1];
    prev[0] = prev[0] * us;
    prev[1] = prev[1] * us;
  }
  center_ = 0;
  norm_tracked_ -= discarded;
  return discarded;
}

TruncationReport MpsState::apply_cost_layer(const CostLayerMpo& mpo, double gamma) {
  if (mpo.n_sites() != n_sites()) {
    throw Error(ErrorKind::InvalidArgument, "MPO size does not match state");
  }
  if (max_bond() == 1) return apply_mpo_product_input(mpo, gamma);
  return apply_mpo_general(mpo, gamma);
}

TruncationReport MpsState::apply_mpo_product_input(const CostLayerMpo& mpo, double gamma) {
  const int n = n_sites();
  std::vector<double> nc_prev{1.0};
  std::vector<complex<double>> phases;
  for (int k = 0; k < n; ++k) {
    const auto& site = mpo.site(k);
    mpo.fill_phases(k, gamma, phases);
    const complex<double> p0 = tensors_[k][0](0, 0);
    const complex<double> p1 = tensors_[k][1](0, 0);

    std::vector<double> nc_sq(site.n_to, 0.0);
    for (long f = 0; f < site.n_from; ++f) {
      const double base = nc_prev[f] * nc_prev[f];
      nc_sq[site.to[f * 2 + 0]] += std::norm(p0) * base;
      nc_sq[site.to[f * 2 + 1]] += std::norm(p1) * base;
    }
    std::vector<double> nc(site.n_to);
    for (long f = 0; f < site.n_to; ++f) nc[f] = std::sqrt(nc_sq[f]);

    MatrixXcd b0 = MatrixXcd::Zero(site.n_from, site.n_to);
    MatrixXcd b1 = MatrixXcd::Zero(site.n_from, site.n_to);
    for (long f = 0; f < site.n_from; ++f) {
      const long t0 = site.to[f * 2 + 0];
      const long t1 = site.to[f * 2 + 1];
      if (nc[t0] > 0.0) b0(f, t0) = phases[f * 2 + 0] * p0 * nc_prev[f] / nc[t0];
      if (nc[t1] > 0.0) b1(f, t1) = phases[f * 2 + 1] * p1 * nc_prev[f] / nc[t1];
    }
    tensors_[k][0] = std::move(b0);
    tensors_[k][1] = std::move(b1);
    nc_prev = std::move(nc);
  }
  // columns were rescaled to unit norm; the accumulated scale is the state norm
  tensors_[n - 1][0] *= nc_prev[0];
  tensors_[n - 1][1] *= nc_prev[0];
  center_ = n - 1;

  double discarded = truncation_sweep(chi_eff_);
  return {discarded, max_bond()};
}

TruncationReport MpsState::apply_mpo_general(const CostLayerMpo& mpo, double gamma) {
  const int n = n_sites();
  std::vector<complex<double>> phases;
  for (int k = 0; k < n; ++k) {
    const auto& site = mpo.site(k);
    mpo.fill_phases(k, gamma, phases);
    const auto& a = tensors_[k];
    const Eigen::Index bl = a[0].rows();
    const Eigen::Index br = a[0].cols();
    SiteTensor b;
    for (int s = 0; s < 2; ++s) {
      b[s] = MatrixXcd::Zero(site.n_from * bl, site.n_to * br);
    }
    for (long f = 0; f < site.n_from; ++f) {
      for (int s = 0; s < 2; ++s) {
        const long t = site.to[f * 2 + s];
        b[s].block(f * bl, t * br, bl, br) = phases[f * 2 + s] * a[s];
      }
    }
    tensors_[k] = std::move(b);
  }
  for (int i = 0; i + 1 < n; ++i) left_normalize_site(i);
  center_ = n - 1;
  double discarded = truncation_sweep(chi_eff_);
  return {discarded, max_bond()};
}

TruncationReport MpsState::apply_cost_layer_mpo(const Graph& g, double gamma,
                                                long mpo_bond_cap) {
  if (g.n != n_sites()) throw Error(ErrorKind::InvalidArgument, "graph size mismatch");
  CostLayerMpo mpo(g, vertex_to_site_, mpo_bond_cap);
  return apply_cost_layer(mpo, gamma);
}

void MpsState::apply_mixer_layer(double beta) {
  const GateMatrix g = gates::rx(beta);
  for (int k = 0; k < n_sites(); ++k) apply_single_qubit(k, g);
}

double MpsState::norm_squared() const {
  MatrixXcd env = MatrixXcd::Ones(1, 1);
  for (const auto& t : tensors_) {
    MatrixXcd next = t[0].adjoint() * env * t[0];
    next += t[1].adjoint() * env * t[1];
    env = std::move(next);
  }
  return env(0, 0).real();
}

void MpsState::normalize() {
  const double ns = norm_squared();
  if (!(ns > 0.0) || !std::isfinite(ns)) {
    throw Error(ErrorKind::InvalidState, "cannot normalize a zero-norm state");
  }
  const double scale = 1.0 / std::sqrt(ns);
  const int target = (center_ >= 0) ? center_ : 0;
  tensors_[target][0] *= scale;
  tensors_[target][1] *= scale;
  norm_tracked_ = 1.0;
}

std::complex<double> MpsState::amplitude(const BitString& s) const {
  if (static_cast<int>(s.size()) != n_sites()) {
    throw Error(ErrorKind::InvalidArgument, "bitstring length mismatch");
  }
  Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Ones(1);
  for (int k = 0; k < n_sites(); ++k) {
    v = v * tensors_[k][s[site_to_vertex_[k]]];
  }
  return v(0);
}

namespace {

inline MatrixXcd transfer(const std::array<MatrixXcd, 2>& t, const MatrixXcd& env,
                          bool z_insert) {
  MatrixXcd out = t[0].adjoint() * env * t[0];
  if (z_insert) {
    out -= t[1].adjoint() * env * t[1];
  } else {
    out += t[1].adjoint() * env * t[1];
  }
  return out;
}

}  // namespace

double MpsState::expectation_zz(int vertex_i, int vertex_j) {
  if (vertex_i == vertex_j) throw Error(ErrorKind::InvalidArgument, "need i != j");
  if (vertex_i < 0 || vertex_j < 0 || vertex_i >= n_sites() || vertex_j >= n_sites()) {
    throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  }
  int si = vertex_to_site_[vertex_i];
  int sj = vertex_to_site_[vertex_j];
  if (si > sj) std::swap(si, sj);
  move_center(0);
  MatrixXcd env = MatrixXcd::Ones(1, 1);
  for (int k = 0; k <= sj; ++k) {
    env = transfer(tensors_[k], env, k == si || k == sj);
  }
  return env.trace().real();
}

double MpsState::cost_expectation(const Graph& g, bool normalized) {
  if (g.n != n_sites()) throw Error(ErrorKind::InvalidArgument, "graph size mismatch");
  move_center(0);

  int max_site = 0;
  std::vector<std::pair<int, int>> edge_sites(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int si = vertex_to_site_[g.edges[e].i];
    int sj = vertex_to_site_[g.edges[e].j];
    if (si > sj) std::swap(si, sj);
    edge_sites[e] = {si, sj};
    max_site = std::max(max_site, sj);
  }

  // plain left environments: prefix[k] covers sites [0, k)
  std::vector<MatrixXcd> prefix(max_site + 1);
  prefix[0] = MatrixXcd::Ones(1, 1);
  for (int k = 0; k < max_site; ++k) {
    prefix[k + 1] = transfer(tensors_[k], prefix[k], false);
  }

  double total = 0.0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto [si, sj] = edge_sites[e];
    MatrixXcd env = transfer(tensors_[si], prefix[si], true);
    for (int k = si + 1; k < sj; ++k) env = transfer(tensors_[k], env, false);
    env = transfer(tensors_[sj], env, true);
    total += g.edges[e].w * env.trace().real();
  }

  if (normalized) {
    const double ns = tensors_[0][0].squaredNorm() + tensors_[0][1].squaredNorm();
    if (!(ns > 0.0)) {
      throw Error(ErrorKind::InvalidState, "normalized cost of a zero-norm state");
    }
    total /= ns;
  }
  return total;
}

double MpsState::entanglement_entropy(int cut) {
  const int n = n_sites();
  if (cut < 1 || cut > n - 1) {
    throw Error(ErrorKind::InvalidArgument, "cut must satisfy 1 <= cut <= N-1");
  }
  if (std::abs(norm_squared() - 1.0) > 1e-8) {
    throw Error(ErrorKind::InvalidState, "entropy requires a normalized state");
  }
  move_center(cut - 1);
  const auto& t = tensors_[cut - 1];
  const Eigen::Index bl = t[0].rows();
  MatrixXcd m(2 * bl, t[0].cols());
  m.topRows(bl) = t[0];
  m.bottomRows(bl) = t[1];
  auto svd = linalg::svd_thin(m);
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < svd.s.size(); ++k) {
    const double lambda = svd.s[k] * svd.s[k];
    if (lambda > 1e-16) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

StateVector MpsState::to_statevector(int cap) const {
  const int n = n_sites();
  if (n > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "statevector conversion capped at N=" + std::to_string(cap));
  }
  MatrixXcd v = MatrixXcd::Ones(1, 1);
  for (int k = 0; k < n; ++k) {
    const uint64_t rows = 1ull << k;
    MatrixXcd next(2 * rows, tensors_[k][0].cols());
    next.topRows(rows) = v * tensors_[k][0];
    next.bottomRows(rows) = v * tensors_[k][1];
    v = std::move(next);
  }

  StateVector out;
  out.n_qubits = n;
  const uint64_t dim = 1ull << n;
  bool identity = true;
  for (int q = 0; q < n; ++q) identity &= (vertex_to_site_[q] == q);
  if (identity) {
    out.amplitudes = v.col(0);
  } else {
    out.amplitudes.resize(dim);
    for (uint64_t idx = 0; idx < dim; ++idx) {
      uint64_t site_idx = 0;
      for (int q = 0; q < n; ++q) {
        if ((idx >> q) & 1u) site_idx |= 1ull << vertex_to_site_[q];
      }
      out.amplitudes[idx] = v(site_idx, 0);
    }
  }
  return out;
}

void MpsState::save_json(const std::string& path) const {
  nlohmann::json j;
  j["magic"] = "qaoamps-mps-v1";
  j["n"] = n_sites();
  j["chi_max"] = chi_req_;
  j["ordering"] = vertex_to_site_;
  j["norm_tracked"] = norm_tracked_;
  auto tensors = nlohmann::json::array();
  for (const auto& t : tensors_) {
    nlohmann::json site;
    site["rows"] = t[0].rows();
    site["cols"] = t[0].cols();
    for (int s = 0; s < 2; ++s) {
      auto arr = nlohmann::json::array();
      for (Eigen::Index c = 0; c < t[s].cols(); ++c) {
        for (Eigen::Index r = 0; r < t[s].rows(); ++r) {
          arr.push_back(t[s](r, c).real());
          arr.push_back(t[s](r, c).imag());
        }
      }
      site[s == 0 ? "a0" : "a1"] = std::move(arr);
    }
    tensors.push_back(std::move(site));
  }
  j["tensors"] = std::move(tensors);
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << j.dump();
}

MpsState MpsState::load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot read " + path);
  nlohmann::json j;
  f >> j;
  if (j.value("magic", "") != std::string("qaoamps-mps-v1")) {
    throw Error(ErrorKind::Io, "bad checkpoint magic in " + path);
  }
  const int n = j["n"].get<int>();
  MpsState st = plus_state(n, j["chi_max"].get<long>(), j["ordering"].get<std::vector<int>>());
  st.norm_tracked_ = j["norm_tracked"].get<double>();
  const auto& tensors = j["tensors"];
  for (int k = 0; k < n; ++k) {
    const auto& site = tensors[k];
    const Eigen::Index rows = site["rows"].get<Eigen::Index>();
    const Eigen::Index cols = site["cols"].get<Eigen::Index>();
    for (int s = 0; s < 2; ++s) {
      const auto& arr = site[s == 0 ? "a0" : "a1"];
      MatrixXcd m(rows, cols);
      size_t idx = 0;
      for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
          double re = arr[idx++].get<double>();
          double im = arr[idx++].get<double>();
          m(r, c) = complex<double>(re, im);
        }
      }
      st.tensors_[k][s] = std::move(m);
    }
  }
  st.center_ = -1;
  return st;
}

}  // namespace qaoamps
