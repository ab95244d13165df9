#pragma once

#include "qaoamps/common.hpp"

#include <cmath>
#include <vector>

namespace qaoamps {

// Depth-p parameter vectors (gamma_1..gamma_p, beta_1..beta_p), radians.
struct QaoaAngles {
  std::vector<double> gammas;
  std::vector<double> betas;

  QaoaAngles() = default;
  QaoaAngles(std::vector<double> g, std::vector<double> b)
      : gammas(std::move(g)), betas(std::move(b)) {}

  int p() const { return static_cast<int>(gammas.size()); }

  void validate() const {
    if (gammas.size() != betas.size() || gammas.empty()) {
      throw Error(ErrorKind::InvalidArgument, "need equal-length, non-empty gamma/beta vectors");
    }
    for (double v : gammas) {
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite gamma");
    }
    for (double v : betas) {
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite beta");
    }
  }
};

}  // namespace qaoamps
