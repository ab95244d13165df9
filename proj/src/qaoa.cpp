#include "qaoamps/qaoa.hpp"

#include "qaoamps/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qaoamps {

const char* method_name(Method m) {
  switch (m) {
    case Method::MpoPerLayer: return "mpo-layer";
    case Method::RoutedPerGate: return "routed-gate";
  }
  return "mpo-layer";
}

Method method_from_string(const std::string& s) {
  if (s == "mpo-layer" || s == "mpo") return Method::MpoPerLayer;
  if (s == "routed-gate" || s == "routed") return Method::RoutedPerGate;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + s + "'");
}

const char* normalize_mode_name(NormalizeMode m) {
  return m == NormalizeMode::FinalOnly ? "final-only" : "always";
}

std::vector<int> ordering_from_seed(int n, uint64_t seed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(derive_seed(seed, "vertex-ordering"));
  rng.shuffle(perm);
  return perm;
}

namespace {

void apply_cost_layer_routed(MpsState& state, const Graph& g, double gamma) {
  const auto& v2s = state.vertex_to_site();
  for (const auto& e : g.edges) {
    state.apply_two_qubit_routed(v2s[e.i], v2s[e.j], gates::zz_phase(gamma * e.w));
  }
}

void advance_layer(MpsState& state, const Graph& g, double gamma,
                   const CircuitConfig& cfg, const CostLayerMpo* mpo) {
  if (cfg.method == Method::MpoPerLayer) {
    if (mpo != nullptr) {
      state.apply_cost_layer(*mpo, gamma);
    } else {
      state.apply_cost_layer_mpo(g, gamma, cfg.mpo_bond_cap);
    }
  } else {
    apply_cost_layer_routed(state, g, gamma);
  }
}

}  // namespace

MpsState run_circuit(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg) {
  angles.validate();
  auto ordering = ordering_from_seed(g.n, cfg.ordering_seed);
  MpsState state = MpsState::plus_state(g.n, cfg.chi_max, ordering);
  for (int l = 0; l < angles.p(); ++l) {
    advance_layer(state, g, angles.gammas[l], cfg, nullptr);
    state.apply_mixer_layer(angles.betas[l]);
  }
  if (cfg.normalize_mode == NormalizeMode::Always) state.normalize();
  return state;
}

double objective_cost(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg) {
  MpsState state = run_circuit(g, angles, cfg);
  return state.cost_expectation(g, cfg.normalize_mode == NormalizeMode::Always);
}

FinalRun final_cost_and_state(const Graph& g, const QaoaAngles& angles,
                              const CircuitConfig& cfg) {
  CircuitConfig raw = cfg;
  raw.normalize_mode = NormalizeMode::FinalOnly;
  MpsState state = run_circuit(g, angles, raw);
  FinalRun out;
  out.norm_squared_before = state.norm_squared();
  state.normalize();
  out.cost = state.cost_expectation(g, true);
  out.state = std::move(state);
  return out;
}

double pmin(const Graph& g, const QaoaAngles& angles, const CircuitConfig& cfg,
            const std::vector<BitString>& minimizers) {
  FinalRun fin = final_cost_and_state(g, angles, cfg);
  double p = 0.0;
  for (const auto& s : minimizers) {
    p += std::norm(fin.state.amplitude(s));
  }
  return std::clamp(p, 0.0, 1.0);
}

std::vector<double> uniform_grid(double max_value, int points) {
  if (points < 1) throw Error(ErrorKind::InvalidArgument, "need at least one grid point");
  std::vector<double> g(points);
  for (int k = 0; k < points; ++k) g[k] = max_value * k / points;
  return g;
}

Eigen::MatrixXd landscape_scan(const Graph& g, const std::vector<double>& gamma_grid,
                               const std::vector<double>& beta_grid,
                               const CircuitConfig& cfg) {
  if (gamma_grid.empty() || beta_grid.empty()) {
    throw Error(ErrorKind::InvalidArgument, "landscape grids must be non-empty");
  }
  CircuitEvaluator eval(g, 1, cfg);
  Eigen::MatrixXd m(gamma_grid.size(), beta_grid.size());
  for (size_t a = 0; a < gamma_grid.size(); ++a) {
    for (size_t b = 0; b < beta_grid.size(); ++b) {
      m(a, b) = eval.normalized_cost(QaoaAngles({gamma_grid[a]}, {beta_grid[b]}));
    }
  }
  return m;
}

CircuitEvaluator::CircuitEvaluator(const Graph& g, int p, const CircuitConfig& cfg)
    : g_(g), p_(p), cfg_(cfg), ordering_(ordering_from_seed(g.n, cfg.ordering_seed)) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "need p >= 1");
  if (cfg.method == Method::MpoPerLayer) {
    mpo_ = std::make_unique<CostLayerMpo>(g_, ordering_, cfg.mpo_bond_cap);
  }
}

MpsState CircuitEvaluator::prefix_state(const QaoaAngles& angles) {
  angles.validate();
  if (angles.p() != p_) throw Error(ErrorKind::InvalidArgument, "angle depth mismatch");

  std::vector<double> key;
  key.reserve(2 * p_ - 1);
  key.insert(key.end(), angles.gammas.begin(), angles.gammas.end());
  key.insert(key.end(), angles.betas.begin(), angles.betas.end() - 1);

  for (auto& entry : cache_) {
    if (entry.key == key) {
      entry.stamp = ++stamp_;
      return entry.state;
    }
  }

  MpsState state = MpsState::plus_state(g_.n, cfg_.chi_max, ordering_);
  for (int l = 0; l < p_; ++l) {
    advance_layer(state, g_, angles.gammas[l], cfg_, mpo_.get());
    if (l + 1 < p_) state.apply_mixer_layer(angles.betas[l]);
  }

  constexpr size_t kCacheSize = 8;
  if (cache_.size() < kCacheSize) {
    cache_.push_back({std::move(key), state, ++stamp_});
  } else {
    auto oldest = std::min_element(cache_.begin(), cache_.end(),
                                   [](const CacheEntry& a, const CacheEntry& b) {
                                     return a.stamp < b.stamp;
                                   });
    *oldest = {std::move(key), state, ++stamp_};
  }
  return state;
}

MpsState CircuitEvaluator::mixed_state(const QaoaAngles& angles) {
  MpsState state = prefix_state(angles);
  state.apply_mixer_layer(angles.betas[p_ - 1]);
  ++evals_;
  return state;
}

double CircuitEvaluator::objective(const QaoaAngles& angles) {
  MpsState state = mixed_state(angles);
  if (cfg_.normalize_mode == NormalizeMode::Always) state.normalize();
  return state.cost_expectation(g_, cfg_.normalize_mode == NormalizeMode::Always);
}

double CircuitEvaluator::normalized_cost(const QaoaAngles& angles) {
  MpsState state = mixed_state(angles);
  return state.cost_expectation(g_, true);
}

FinalRun CircuitEvaluator::final_normalized(const QaoaAngles& angles) {
  MpsState state = mixed_state(angles);
  FinalRun out;
  out.norm_squared_before = state.norm_squared();
  state.normalize();
  out.cost = state.cost_expectation(g_, true);
  out.state = std::move(state);
  return out;
}

}  // namespace qaoamps
