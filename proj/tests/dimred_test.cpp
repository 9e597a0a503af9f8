#include <doctest.h>

#include <cmath>

#include "intmin/checks.hpp"
#include "intmin/dimred.hpp"

using namespace intmin;

TEST_CASE("slicing the unit ball through the origin keeps the unit ball") {
  Vec c = Vec::Zero(2);
  Mat a = Mat::Identity(2, 2);
  Vec v = Vec::Unit(2, 0);
  SlicedEllipsoid se = slice_ellipsoid(c, a, v, 0.0);
  CHECK(se.center.norm() == doctest::Approx(0.0));
  CHECK(se.residual_sq == doctest::Approx(1.0));
  CHECK(se.shape(0, 0) == doctest::Approx(1.0));
  CHECK(std::abs(se.frame(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("off-center slice shrinks by Pythagoras") {
  Vec c = Vec::Zero(2);
  Mat a = Mat::Identity(2, 2);
  Vec v = Vec::Unit(2, 0);
  SlicedEllipsoid se = slice_ellipsoid(c, a, v, 0.6);
  CHECK(se.center[0] == doctest::Approx(0.6));
  CHECK(se.center[1] == doctest::Approx(0.0));
  CHECK(se.residual_sq == doctest::Approx(0.64));
  // residual radius 0.8: shape = 1/0.64
  CHECK(se.shape(0, 0) == doctest::Approx(1.0 / 0.64));
}

TEST_CASE("slice beyond the ball is empty") {
  Vec c = Vec::Zero(2);
  Mat a = Mat::Identity(2, 2);
  Vec v = Vec::Unit(2, 0);
  CHECK_THROWS_AS(slice_ellipsoid(c, a, v, 1.5), EmptySlice);
}

TEST_CASE("reduce_dimension with an axis cut rounds the anchor coordinate") {
  Polytope K = Polytope::box(2, 2.0);
  Vec x(2);
  x << 0.3, 0.4;
  BarrierState center = evaluate_barrier(K, x);
  LatticeState lat = LatticeState::integer_lattice(2);
  SubspaceState sub = SubspaceState::full(2);
  RatVec v = {Rat(0), Rat(1)};
  IntVec z = {Int(0), Int(1)};
  ReductionResult rr = reduce_dimension(sub, K, center, lat, v, z);

  CHECK(rr.hyperplane_offset == doctest::Approx(0.0));  // round(0.4) = 0
  CHECK(rr.slab_rhs == 0);
  CHECK(rr.lat.rank == 1);
  RatMat canon = canonical_basis(rr.lat.basis);
  CHECK(canon.size() == 1);
  CHECK(canon[0][0] == 1);
  CHECK(canon[0][1] == 0);
  // new frame spans the x1 axis and is anchored on {y2 = 0}
  CHECK(std::abs(rr.sub.basis(0, 0)) == doctest::Approx(1.0));
  CHECK(rr.sub.basis(1, 0) == doctest::Approx(0.0));
  CHECK(rr.sub.x0[1] == doctest::Approx(0.0).epsilon(1e-12));
  // restart box: 2(d-1) rows, interior at its center, analytic barrier
  CHECK(rr.K.rows() == 2);
  CHECK(rr.center.gradF.norm() <= 1e-12);
  CHECK(rr.center.mu_lower == doctest::Approx(0.5));
}

TEST_CASE("reduce_dimension offset with a fractional lattice vector") {
  Polytope K = Polytope::box(2, 2.0);
  Vec x(2);
  x << 0.3, 0.4;
  BarrierState center = evaluate_barrier(K, x);
  // rank-1 lattice generated by (1/2, -1/2) with preimage e1
  LatticeState lat;
  lat.ambient = 2;
  lat.rank = 1;
  lat.basis = {{make_rat(1, 2), make_rat(-1, 2)}};
  lat.preimages = {{Int(1), Int(0)}};
  SubspaceState sub = SubspaceState::full(2);
  ReductionResult rr =
      reduce_dimension(sub, K, center, lat, lat.basis[0], lat.preimages[0]);
  // offset = (v - z).x_K + round(z.x_K) = -0.35
  CHECK(rr.hyperplane_offset == doctest::Approx(-0.35).epsilon(1e-12));
  CHECK(rr.slab_rhs == 0);
  // P = {y : y1/2 - y2/2 = -0.35}, i.e. y1 - y2 = -0.7: check the anchor
  CHECK(rr.sub.x0[0] - rr.sub.x0[1] == doctest::Approx(-0.7).epsilon(1e-9));
  CHECK(rr.lat.rank == 0);
}

TEST_CASE("restart hyperrectangle from a unit-shape slice is [-1, 1]") {
  Polytope K = Polytope::box(3, 1.0);
  BarrierState center = evaluate_barrier(K, Vec::Zero(3));
  LatticeState lat = LatticeState::integer_lattice(3);
  SubspaceState sub = SubspaceState::full(3);
  RatVec v = {Rat(0), Rat(0), Rat(1)};
  IntVec z = {Int(0), Int(0), Int(1)};
  ReductionResult rr = reduce_dimension(sub, K, center, lat, v, z);
  // shape is a multiple of I by symmetry; rows are +/- s e_i with b = -1
  for (int i = 0; i < rr.K.rows(); ++i) CHECK(rr.K.b[i] == doctest::Approx(-1.0));
  double s00 = rr.K.A(0, 0);
  CHECK(rr.K.A(1, 0) == doctest::Approx(-s00));
  // ellipsoid constraint: the box half-width in each axis is 1/s00
  CHECK(s00 > 0.0);
}

TEST_CASE("dimred property suite") {
  for (const auto& r : check_dimred_suite(20240904)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
