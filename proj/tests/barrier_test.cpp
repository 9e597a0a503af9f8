#include <doctest.h>

#include <cmath>

#include "intmin/barrier.hpp"
#include "intmin/checks.hpp"

using namespace intmin;

TEST_CASE("barrier quantities at the center of the unit box") {
  Polytope K = Polytope::box(2, 1.0);
  BarrierState st = evaluate_barrier(K, Vec::Zero(2));
  CHECK((st.H - 2.0 * Mat::Identity(2, 2)).norm() == doctest::Approx(0.0));
  CHECK(st.F == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (int i = 0; i < 4; ++i)
    CHECK(st.sigma[i] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(st.gradF.norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((st.Q - Mat::Identity(2, 2)).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(st.mu_lower == doctest::Approx(0.5));
}

TEST_CASE("barrier quantities off center") {
  Polytope K = Polytope::box(2, 1.0);
  Vec x(2);
  x << 0.5, 0.0;
  BarrierState st = evaluate_barrier(K, x);
  CHECK(st.H(0, 0) == doctest::Approx(40.0 / 9.0).epsilon(1e-12));
  CHECK(st.H(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(st.F == doctest::Approx(0.5 * std::log(80.0 / 9.0)).epsilon(1e-9));
  CHECK(st.sigma[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(st.sigma[1] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(st.sigma[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(st.sigma[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(st.sigma.sum() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(st.gradF[0] == doctest::Approx(26.0 / 15.0).epsilon(1e-12));
  CHECK(st.gradF[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("boundary point raises InteriorViolation with the row index") {
  Polytope K = Polytope::box(2, 1.0);
  Vec x(2);
  x << 1.0, 0.0;
  try {
    evaluate_barrier(K, x);
    FAIL("expected InteriorViolation");
  } catch (const InteriorViolation& e) {
    CHECK(e.index == 1);  // row -x1 >= -1
  }
}

TEST_CASE("volumetric center of a symmetric box is the origin") {
  Polytope K = Polytope::box(2, 1.0);
  Vec x0(2);
  x0 << 0.3, 0.2;
  BarrierState st = approx_volumetric_center(K, x0, 1e-10);
  CHECK(st.x.norm() <= 1e-5);
}

TEST_CASE("volumetric center of an interval is its midpoint") {
  Polytope K;  // [0, 3]
  K.A = Mat(2, 1);
  K.A << 1.0, -1.0;
  K.b = Vec(2);
  K.b << 0.0, -3.0;
  K.interior = Vec::Constant(1, 0.7);
  BarrierState st = approx_volumetric_center(K, K.interior, 1e-12);
  CHECK(st.x[0] == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("volumetric center with a redundant plane matches grid search") {
  Polytope K;  // x >= 0, -x >= -1, -x >= -2
  K.A = Mat(3, 1);
  K.A << 1.0, -1.0, -1.0;
  K.b = Vec(3);
  K.b << 0.0, -1.0, -2.0;
  K.interior = Vec::Constant(1, 0.5);

  double best_x = 0.0, best_f = 1e300;
  for (double x = 1e-6; x < 1.0; x += 1e-6) {
    double h = 1.0 / (x * x) + 1.0 / ((1.0 - x) * (1.0 - x)) +
               1.0 / ((2.0 - x) * (2.0 - x));
    double f = 0.5 * std::log(h);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  BarrierState st = approx_volumetric_center(K, K.interior, 1e-14);
  CHECK(st.x[0] == doctest::Approx(best_x).epsilon(1e-4));
}

TEST_CASE("newton iteration cap raises NonConvergence") {
  Polytope K = Polytope::box(2, 1.0);
  Vec x0(2);
  x0 << 0.9, -0.9;
  CHECK_THROWS_AS(approx_volumetric_center(K, x0, 1e-10, 1), NonConvergence);
}

TEST_CASE("barrier property suite") {
  for (const auto& r : check_barrier_suite(20240902)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
