#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qaoamps::linalg {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

struct SvdResult {
  MatrixXcd u;   // m x k
  VectorXd s;    // k, descending
  MatrixXcd vh;  // k x n
};

// Thin SVD, LAPACK zgesdd with zgesvd fallback.
// Throws Error(NumericalFailure) if both fail to converge.
SvdResult svd_thin(const MatrixXcd& a);

// Thin QR: a (m x n) = q (m x k) * r (k x n), k = min(m, n).
void qr_thin(const MatrixXcd& a, MatrixXcd& q, MatrixXcd& r);

// Thin LQ: a (m x n) = l (m x k) * q (k x n), k = min(m, n), q row-orthonormal.
void lq_thin(const MatrixXcd& a, MatrixXcd& l, MatrixXcd& q);

}  // namespace qaoamps::linalg
