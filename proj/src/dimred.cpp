#include "intmin/dimred.hpp"

#include <cmath>

namespace intmin {

SubspaceState SubspaceState::full(int n) {
  SubspaceState s;
  s.x0 = Vec::Zero(n);
  s.basis = Mat::Identity(n, n);
  return s;
}

Mat orthonormal_complement(const Vec& v) {
  const int d = static_cast<int>(v.size());
  double nv = v.norm();
  if (!(nv > 0.0)) throw StructuralError("orthonormal_complement: zero vector");
  Vec vhat = v / nv;
  int skip = 0;
  vhat.cwiseAbs().maxCoeff(&skip);
  Mat u(d, d - 1);
  int col = 0;
  for (int j = 0; j < d; ++j) {
    if (j == skip) continue;
    Vec e = Vec::Unit(d, j);
    e -= vhat.dot(e) * vhat;
    for (int c = 0; c < col; ++c) e -= u.col(c).dot(e) * u.col(c);
    double ne = e.norm();
    if (!(ne > 1e-12))
      throw StructuralError("orthonormal_complement: degenerate axis");
    u.col(col++) = e / ne;
  }
  return u;
}

SlicedEllipsoid slice_ellipsoid(const Vec& c, const Mat& A, const Vec& v,
                                double t) {
  Eigen::LDLT<Mat> ldlt(A);
  Vec ainv_v = ldlt.solve(v);
  double q = v.dot(ainv_v);
  if (!(q > 0.0)) throw StructuralError("slice_ellipsoid: v^T A^{-1} v <= 0");
  double gap = t - v.dot(c);
  double r_sq = 1.0 - gap * gap / q;
  if (!(r_sq > 0.0))
    throw EmptySlice("hyperplane misses the ellipsoid (r^2 = " +
                     std::to_string(r_sq) + ")");
  SlicedEllipsoid se;
  se.center = c + ainv_v * (gap / q);
  se.frame = orthonormal_complement(v);
  se.shape = (se.frame.transpose() * A * se.frame) / r_sq;
  se.residual_sq = r_sq;
  return se;
}

ReductionResult reduce_dimension(const SubspaceState& sub, const Polytope& K,
                                 const BarrierState& center,
                                 const LatticeState& lat, const RatVec& v,
                                 const IntVec& z) {
  const int d = sub.dim();
  if (d < 2) throw StructuralError("reduce_dimension: dimension already <= 1");
  if (static_cast<int>(v.size()) != sub.ambient() ||
      static_cast<int>(z.size()) != sub.ambient())
    throw StructuralError("reduce_dimension: size mismatch");

  Vec v_amb(sub.ambient()), z_amb(sub.ambient());
  for (int i = 0; i < sub.ambient(); ++i) {
    v_amb[i] = to_double(v[i]);
    z_amb[i] = z[i].get_d();
  }
  Vec x_amb = sub.to_ambient(center.x);

  // P = {y : v.y = (v - z).x_K + [z.x_K]}, rounding half to even
  double z_dot_x = z_amb.dot(x_amb);
  double rhs_int = std::nearbyint(z_dot_x);
  double tau = (v_amb - z_amb).dot(x_amb) + rhs_int;

  // the same hyperplane in reduced coordinates (v lies in W0)
  Vec v_red = sub.basis.transpose() * v_amb;
  double t_red = tau - v_amb.dot(sub.x0);

  const int m = K.rows();
  double scale = 3.0 * std::pow(static_cast<double>(m), 1.5) * d;
  Mat a_out = center.H / (scale * scale);
  SlicedEllipsoid se = slice_ellipsoid(center.x, a_out, v_red, t_red);

  ReductionResult out;
  out.sub.x0 = sub.to_ambient(se.center);
  out.sub.basis = sub.basis * se.frame;
  out.hyperplane_offset = tau;
  Int n_int(static_cast<long>(std::llrint(rhs_int)));
  out.slab_rhs = n_int;

  // restart hyperrectangle {xi : ||S xi||_inf <= 1}, S = shape^{1/2}
  Eigen::SelfAdjointEigenSolver<Mat> es(se.shape);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw StructuralError("reduce_dimension: sliced shape not PD");
  Mat s_root = es.eigenvectors() *
               es.eigenvalues().cwiseSqrt().asDiagonal() *
               es.eigenvectors().transpose();
  const int dn = d - 1;
  Polytope box;
  box.A = Mat(2 * dn, dn);
  box.b = Vec::Constant(2 * dn, -1.0);
  for (int i = 0; i < dn; ++i) {
    box.A.row(2 * i) = s_root.row(i);
    box.A.row(2 * i + 1) = -s_root.row(i);
  }
  box.interior = Vec::Zero(dn);
  out.K = box;
  out.center = evaluate_barrier(box, Vec::Zero(dn));
  out.lat = project_lattice(lat, v);

  // ln vol = (d-1) ln 2 - 1/2 ln det(shape)
  out.log_rect_vol =
      dn * std::log(2.0) - 0.5 * es.eigenvalues().array().log().sum();
  return out;
}

}  // namespace intmin
