#include "intmin/barrier.hpp"

#include <cmath>
#include <limits>

namespace intmin {

Polytope Polytope::box(int n, double radius) {
  Polytope k;
  k.A = Mat::Zero(2 * n, n);
  k.b = Vec::Constant(2 * n, -radius);
  for (int i = 0; i < n; ++i) {
    k.A(2 * i, i) = 1.0;
    k.A(2 * i + 1, i) = -1.0;
  }
  k.interior = Vec::Zero(n);
  return k;
}

Polytope Polytope::with_row(const Vec& a, double beta,
                            const Vec& new_interior) const {
  Polytope k;
  k.A = Mat(rows() + 1, dim());
  k.A.topRows(rows()) = A;
  k.A.row(rows()) = a.transpose();
  k.b = Vec(rows() + 1);
  k.b.head(rows()) = b;
  k.b[rows()] = beta;
  k.interior = new_interior;
  return k;
}

Polytope Polytope::without_row(int index) const {
  Polytope k;
  k.A = Mat(rows() - 1, dim());
  k.b = Vec(rows() - 1);
  int r = 0;
  for (int i = 0; i < rows(); ++i) {
    if (i == index) continue;
    k.A.row(r) = A.row(i);
    k.b[r] = b[i];
    ++r;
  }
  k.interior = interior;
  return k;
}

double BarrierState::newton_decrement() const {
  Eigen::LDLT<Mat> q(Q);
  return gradF.dot(q.solve(gradF));
}

Mat BarrierState::H_inverse() const {
  Eigen::LLT<Mat> llt(H);
  return llt.solve(Mat::Identity(H.rows(), H.cols()));
}

BarrierState evaluate_barrier(const Polytope& K, const Vec& x) {
  const int m = K.rows();
  const int n = K.dim();
  Vec s = K.slacks(x);
  for (int i = 0; i < m; ++i)
    if (!(s[i] > 0.0)) throw InteriorViolation(i);

  // rows of P are a_i / s_i
  Mat P = K.A.array().colwise() / s.array();
  BarrierState st;
  st.x = x;
  st.H = P.transpose() * P;
  Eigen::LLT<Mat> llt(st.H);
  if (llt.info() != Eigen::Success)
    throw StructuralError("barrier Hessian not positive definite");

  Mat L = llt.matrixL();
  st.F = L.diagonal().array().log().sum();

  // sigma_i = || L^{-1} p_i ||^2
  Mat Y = L.triangularView<Eigen::Lower>().solve(P.transpose());
  st.sigma = Y.colwise().squaredNorm();
  st.gradF = -P.transpose() * st.sigma;
  st.Q = P.transpose() * st.sigma.asDiagonal() * P;
  st.mu_lower = st.sigma.minCoeff();
  return st;
}

double volumetric_value(const Polytope& K, const Vec& x) {
  Vec s = K.slacks(x);
  if (!(s.array() > 0.0).all()) return std::numeric_limits<double>::infinity();
  Mat P = K.A.array().colwise() / s.array();
  Mat H = P.transpose() * P;
  Eigen::LLT<Mat> llt(H);
  if (llt.info() != Eigen::Success)
    return std::numeric_limits<double>::infinity();
  Mat L = llt.matrixL();
  return L.diagonal().array().log().sum();
}

BarrierState approx_volumetric_center(const Polytope& K, const Vec& x_init,
                                      double tol, int max_iters) {
  Vec z = x_init;
  double last_dec = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iters; ++it) {
    BarrierState st = evaluate_barrier(K, z);
    Eigen::LDLT<Mat> q(st.Q);
    Vec dir = -q.solve(st.gradF);
    double dec = -st.gradF.dot(dir);
    last_dec = dec;
    if (dec <= tol) {
      st.newton_iters = it;
      return st;
    }

    double slope = st.gradF.dot(dir);  // negative
    // first trial inside the Dikin ellipsoid so every slack stays positive
    double dir_h = std::sqrt(std::max(0.0, dir.dot(st.H * dir)));
    double t0 = dir_h > 0.9 ? 0.9 / dir_h : 1.0;
    double t = t0;
    double f0 = st.F;
    bool moved = false;
    while (t > t0 * 1e-20) {
      double ft = volumetric_value(K, z + t * dir);
      if (ft <= f0 + 0.25 * t * slope) {
        z += t * dir;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) throw NonConvergence(dec);
  }
  throw NonConvergence(last_dec);
}

}  // namespace intmin
