#pragma once

#include <Eigen/Dense>

#include "intmin/errors.hpp"

namespace intmin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Explicit half-space intersection {x : Ax >= b} with a tracked interior
// point.  Bounded full-dimensional polytopes need m >= n+1 rows.
struct Polytope {
  Mat A;         // m x n
  Vec b;         // m
  Vec interior;  // strictly feasible point

  int rows() const { return static_cast<int>(A.rows()); }
  int dim() const { return static_cast<int>(A.cols()); }

  Vec slacks(const Vec& x) const { return A * x - b; }
  bool contains(const Vec& x, double tol = 0.0) const {
    return (slacks(x).array() >= -tol).all();
  }

  // B_inf(radius): rows alternate +e_i, -e_i with offsets -radius.
  static Polytope box(int n, double radius);

  Polytope with_row(const Vec& a, double beta, const Vec& new_interior) const;
  Polytope without_row(int index) const;
};

// Log-barrier data at a point: Hessian, volumetric value, leverage scores,
// gradient of the volumetric function, the Q surrogate and min sigma.
struct BarrierState {
  Vec x;
  Mat H;
  double F = 0.0;
  Vec sigma;
  Vec gradF;
  Mat Q;
  double mu_lower = 0.0;  // min_i sigma_i
  int newton_iters = 0;

  double newton_decrement() const;  // gradF^T Q^{-1} gradF
  Mat H_inverse() const;
};

// Direct evaluation of all barrier quantities at a strictly interior x.
// Throws InteriorViolation (with the offending row) otherwise.
BarrierState evaluate_barrier(const Polytope& K, const Vec& x);

// Volumetric value alone; +inf when x is not strictly interior.
double volumetric_value(const Polytope& K, const Vec& x);

// Newton iteration on F with Q as Hessian surrogate and Armijo backtracking,
// until gradF^T Q^{-1} gradF <= tol.  Throws NonConvergence at the iteration
// cap.
BarrierState approx_volumetric_center(const Polytope& K, const Vec& x_init,
                                      double tol, int max_iters = 500);

}  // namespace intmin
