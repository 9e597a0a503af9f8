#pragma once

#include "intmin/barrier.hpp"
#include "intmin/lattice.hpp"

namespace intmin {

// Affine search slab W = x0 + span(basis); the columns of basis are an
// orthonormal frame for the current reduced coordinates.
struct SubspaceState {
  Vec x0;     // ambient anchor
  Mat basis;  // n x d, orthonormal columns

  int ambient() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }

  Vec to_ambient(const Vec& reduced) const { return x0 + basis * reduced; }
  Vec to_reduced(const Vec& ambient) const {
    return basis.transpose() * (ambient - x0);
  }

  static SubspaceState full(int n);
};

// Slice of {y : (y-c)^T A (y-c) <= 1} by a hyperplane, kept as a
// (d-1)-dimensional ellipsoid in the orthonormal frame of the hyperplane.
struct SlicedEllipsoid {
  Vec center;         // in the original d-dimensional coordinates
  Mat shape;          // (d-1) x (d-1); ellipsoid is {xi : xi^T shape xi <= 1}
  Mat frame;          // d x (d-1), orthonormal basis of {v}^perp
  double residual_sq; // 1 - (t - v.c)^2 / (v^T A^{-1} v)
};

// Exact ellipsoid-hyperplane intersection E(c, A) with {y : v^T y = t}.
// Throws EmptySlice when the hyperplane misses the ellipsoid.
SlicedEllipsoid slice_ellipsoid(const Vec& c, const Mat& A, const Vec& v,
                                double t);

// Orthonormal basis of {v}^perp in R^d, Gram-Schmidt over the coordinate
// axes (the axis most parallel to v is dropped).
Mat orthonormal_complement(const Vec& v);

struct ReductionResult {
  SubspaceState sub;    // W cap P
  Polytope K;           // restart hyperrectangle in the new frame
  BarrierState center;  // barrier state at the hyperrectangle's center
  LatticeState lat;     // projected lattice
  Int slab_rhs;         // N = [z . x_K], the exact integral slab offset
  double log_rect_vol;  // ln vol of the restart hyperrectangle
  double hyperplane_offset;  // tau with P = {y : v.y = tau}
};

// One dimension-reduction step: snap W to the hyperplane
// P = {y : v.y = (v-z).x_K + [z.x_K]}, slice the 3 m^{1.5} d scaled Dikin
// ellipsoid by P, restart from the enclosing hyperrectangle, and project the
// lattice along v.  v must be a lattice vector with integral preimage z.
ReductionResult reduce_dimension(const SubspaceState& sub, const Polytope& K,
                                 const BarrierState& center,
                                 const LatticeState& lat, const RatVec& v,
                                 const IntVec& z);

}  // namespace intmin
