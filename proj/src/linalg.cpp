#include "qaoamps/linalg.hpp"

#include "qaoamps/common.hpp"

#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qaoamps::linalg {

SvdResult svd_thin(const MatrixXcd& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);

  SvdResult out;
  out.u.resize(m, k);
  out.s.resize(k);
  out.vh.resize(k, n);
  if (k == 0) return out;

  MatrixXcd work = a;  // zgesdd destroys its input
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, work.data(), m,
                                   out.s.data(), out.u.data(), m,
                                   out.vh.data(), k);
  if (info != 0) {
    work = a;
    VectorXd superb(k > 1 ? k - 1 : 1);
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, work.data(), m,
                          out.s.data(), out.u.data(), m, out.vh.data(), k,
                          superb.data());
    if (info != 0) {
      throw Error(ErrorKind::NumericalFailure,
                  "SVD did not converge (" + std::to_string(m) + "x" +
                      std::to_string(n) + ", info=" + std::to_string(info) + ")");
    }
  }
  return out;
}

void qr_thin(const MatrixXcd& a, MatrixXcd& q, MatrixXcd& r) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);

  MatrixXcd work = a;
  Eigen::VectorXcd tau(k > 0 ? k : 1);
  lapack_int info =
      LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, n, work.data(), m, tau.data());
  if (info != 0) {
    throw Error(ErrorKind::NumericalFailure, "zgeqrf failed");
  }
  r = MatrixXcd::Zero(k, n);
  for (lapack_int j = 0; j < n; ++j) {
    for (lapack_int i = 0; i <= std::min<lapack_int>(j, k - 1); ++i) {
      r(i, j) = work(i, j);
    }
  }
  info = LAPACKE_zungqr(LAPACK_COL_MAJOR, m, k, k, work.data(), m, tau.data());
  if (info != 0) {
    throw Error(ErrorKind::NumericalFailure, "zungqr failed");
  }
  q = work.leftCols(k);
}

void lq_thin(const MatrixXcd& a, MatrixXcd& l, MatrixXcd& q) {
  MatrixXcd qt, rt;
  qr_thin(a.adjoint(), qt, rt);
  l = rt.adjoint();
  q = qt.adjoint();
}

}  // namespace qaoamps::linalg
