#include "qaoamps/optimize.hpp"

#include "qaoamps/rng.hpp"

#include <cmath>
#include <limits>

namespace qaoamps {

namespace {
constexpr double kArmijoC = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

Eigen::VectorXd central_gradient(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                 double fd_step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = fd_step * (1.0 + std::abs(x[i]));
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

BfgsResult bfgs_minimize(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                         const OptimizerOptions& opts) {
  const Eigen::Index k = x0.size();
  Eigen::VectorXd x = x0;
  double fx = f(x);
  if (!std::isfinite(fx)) {
    throw Error(ErrorKind::NumericalFailure, "objective non-finite at the start point");
  }

  BfgsResult best{x, fx, 0, BfgsStatus::MaxIterations};
  auto track = [&best](const Eigen::VectorXd& xv, double fv) {
    if (fv < best.fx) {
      best.x = xv;
      best.fx = fv;
    }
  };

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(k, k);
  Eigen::VectorXd grad = central_gradient(f, x, opts.fd_step);

  for (int it = 0; it < opts.max_iterations; ++it) {
    best.iterations = it;
    if (!grad.allFinite()) {
      best.status = BfgsStatus::NumericalFailure;
      return best;
    }
    if (grad.norm() < opts.gradient_tolerance) {
      best.status = BfgsStatus::Converged;
      return best;
    }

    Eigen::VectorXd dir = -(h_inv * grad);
    double slope = grad.dot(dir);
    if (!(slope < 0.0)) {
      h_inv.setIdentity();
      dir = -grad;
      slope = grad.dot(dir);
    }

    double alpha = 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    Eigen::VectorXd x_new;
    while (true) {
      x_new = x + alpha * dir;
      f_new = f(x_new);
      if (std::isfinite(f_new) && f_new <= fx + kArmijoC * alpha * slope) break;
      alpha *= 0.5;
      if (alpha < kMinStep) break;
    }
    if (alpha < kMinStep) {
      best.status = BfgsStatus::LineSearchStalled;
      return best;
    }
    track(x_new, f_new);

    Eigen::VectorXd grad_new = central_gradient(f, x_new, opts.fd_step);
    Eigen::VectorXd s = x_new - x;
    Eigen::VectorXd y = grad_new - grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      Eigen::MatrixXd iy = Eigen::MatrixXd::Identity(k, k) - rho * s * y.transpose();
      h_inv = iy * h_inv * iy.transpose() + rho * s * s.transpose();
    }
    x = std::move(x_new);
    fx = f_new;
    grad = std::move(grad_new);
  }
  best.status = BfgsStatus::MaxIterations;
  return best;
}

RunRecord multistart_optimize(const Graph& g, int p, const CircuitConfig& cfg,
                              const OptimizerOptions& opts) {
  if (opts.restarts < 1) throw Error(ErrorKind::InvalidArgument, "need restarts >= 1");
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "need p >= 1");

  CircuitEvaluator eval(g, p, cfg);
  auto to_angles = [p](const Eigen::VectorXd& x) {
    QaoaAngles a;
    a.gammas.assign(x.data(), x.data() + p);
    a.betas.assign(x.data() + p, x.data() + 2 * p);
    return a;
  };
  ObjectiveFn objective = [&](const Eigen::VectorXd& x) {
    return eval.objective(to_angles(x));
  };

  bool have_best = false;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_norm = 1.0;
  QaoaAngles best_angles;
  int successes = 0;

  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(derive_seed(opts.seed, "restart", static_cast<uint64_t>(r)));
    Eigen::VectorXd x0(2 * p);
    for (int l = 0; l < p; ++l) x0[l] = rng.uniform(0.0, 2.0 * kPi);
    for (int l = 0; l < p; ++l) x0[p + l] = rng.uniform(0.0, kPi);

    try {
      BfgsResult res = bfgs_minimize(objective, x0, opts);
      QaoaAngles angles = to_angles(res.x);
      FinalRun fin = eval.final_normalized(angles);
      ++successes;
      if (fin.cost < best_cost) {
        best_cost = fin.cost;
        best_norm = fin.norm_squared_before;
        best_angles = std::move(angles);
        have_best = true;
      }
    } catch (const Error&) {
      // restart failed numerically; the sweep contract keeps going
    }
  }
  if (!have_best) {
    throw Error(ErrorKind::OptimizationFailure,
                "all " + std::to_string(opts.restarts) + " restarts failed");
  }

  RunRecord rec;
  rec.graph_id = g.id;
  rec.n = g.n;
  rec.p = p;
  rec.chi = std::min(cfg.chi_max, MpsState::chi_exact(g.n));
  rec.method = method_name(cfg.method);
  rec.ordering_seed = cfg.ordering_seed;
  rec.best_cost = best_cost;
  rec.best_angles = best_angles;
  rec.norm = best_norm;
  rec.restarts_used = successes;
  rec.seed = opts.seed;
  rec.family = family_name(g.family);
  rec.n_edges = static_cast<double>(g.n_edges());
  return rec;
}

}  // namespace qaoamps
