#include <doctest.h>

#include <cmath>

#include "intmin/checks.hpp"
#include "intmin/cutting_plane.hpp"

using namespace intmin;

namespace {

// quadratic ground truth with an arbitrary (possibly fractional) target
class RealQuadraticOracle : public SeparationOracle {
 public:
  explicit RealQuadraticOracle(Vec target) : target_(std::move(target)) {}

 private:
  SeparationResult do_query(const Vec& x) override {
    SeparationResult r;
    if ((x - target_).norm() == 0.0) {
      r.yes = true;
      return r;
    }
    r.normal = target_ - x;
    return r;
  }
  Vec target_;
};

class AlwaysYes : public SeparationOracle {
  SeparationResult do_query(const Vec&) override {
    SeparationResult r;
    r.yes = true;
    return r;
  }
};

class ZeroNormal : public SeparationOracle {
  SeparationResult do_query(const Vec& x) override {
    SeparationResult r;
    r.normal = Vec::Zero(x.size());
    return r;
  }
};

}  // namespace

TEST_CASE("cpm_step adds a central cut toward the separating direction") {
  Polytope K = Polytope::box(2, 1.0);
  BarrierState center = evaluate_barrier(K, Vec::Zero(2));
  Vec target(2);
  target << 0.6, 0.2;
  RealQuadraticOracle oracle(target);
  CpmOptions opts;
  auto [k2, act] = cpm_step(K, center, oracle, opts);
  REQUIRE(act.kind == CutKind::Add);
  CHECK(k2.rows() == 5);
  Vec expected = target.normalized();
  CHECK((act.added_row - expected).norm() <= 1e-12);
  CHECK(act.added_beta == doctest::Approx(0.0));
  CHECK((k2.slacks(k2.interior).array() > 0.0).all());
}

TEST_CASE("cpm_step drops the weakest redundant row") {
  Polytope K = Polytope::box(2, 1.0);
  K = K.with_row(Vec::Unit(2, 0), -1e6, K.interior);
  BarrierState center = approx_volumetric_center(K, K.interior, 1e-12);
  CHECK(center.mu_lower < 0.01);
  Vec target(2);
  target << 0.6, 0.2;
  RealQuadraticOracle oracle(target);
  CpmOptions opts;
  auto [k2, act] = cpm_step(K, center, oracle, opts);
  REQUIRE(act.kind == CutKind::Drop);
  CHECK(act.dropped_index == 4);
  CHECK(k2.rows() == 4);
  CHECK(oracle.call_count() == 0);  // drops never consult the oracle
}

TEST_CASE("cpm_step terminates on YES without touching the polytope") {
  Polytope K = Polytope::box(2, 1.0);
  BarrierState center = evaluate_barrier(K, Vec::Zero(2));
  AlwaysYes oracle;
  CpmOptions opts;
  auto [k2, act] = cpm_step(K, center, oracle, opts);
  CHECK(act.kind == CutKind::Terminate);
  CHECK(k2.rows() == K.rows());
  CHECK(act.witness.isApprox(center.x));
}

TEST_CASE("cpm_step rejects a zero separating normal") {
  Polytope K = Polytope::box(2, 1.0);
  BarrierState center = evaluate_barrier(K, Vec::Zero(2));
  ZeroNormal oracle;
  CpmOptions opts;
  CHECK_THROWS_AS(cpm_step(K, center, oracle, opts), OracleInconsistency);
}

TEST_CASE("strict mode places the new row at leverage delta") {
  Polytope K = Polytope::box(2, 1.0);
  BarrierState center = evaluate_barrier(K, Vec::Zero(2));
  Vec target(2);
  target << 0.6, 0.2;
  RealQuadraticOracle oracle(target);
  CpmOptions opts;
  opts.strict = true;
  opts.delta = 1e-4;
  auto [k2, act] = cpm_step(K, center, oracle, opts);
  REQUIRE(act.kind == CutKind::Add);
  BarrierState after = evaluate_barrier(k2, center.x);
  CHECK(after.sigma[4] == doctest::Approx(opts.delta).epsilon(1e-9));
}

TEST_CASE("cpm_block keeps the minimizer and respects the call budget") {
  Eigen::VectorXi target(2);
  target << 1, -2;
  QuadraticOracle oracle(target);
  Polytope K = Polytope::box(2, 4.0);
  CpmOptions opts;
  CpmResult res = cpm_block(oracle, K, K.interior, 20, opts);
  CHECK(res.so_calls <= 20);
  CHECK(!res.terminated);
  CHECK(res.K.contains(target.cast<double>()));
  CHECK(res.steps.size() == 20);
  // the certificate: final center decrement within the certified tolerance
  CHECK(res.center.newton_decrement() <=
        certified_center_tol(opts.eps, res.center.mu_lower, opts) * 1.01);
}

TEST_CASE("cpm_block m never exceeds n/eps + 1 and slack ratios stay near 1") {
  Eigen::VectorXi target(2);
  target << 1, -2;
  QuadraticOracle oracle(target);
  Polytope K = Polytope::box(2, 4.0);
  CpmOptions opts;
  CpmResult res = cpm_block(oracle, K, K.interior, 40, opts);
  for (const auto& s : res.steps)
    CHECK(s.m <= static_cast<int>(2.0 / opts.eps) + 1);
}

TEST_CASE("early YES returns a flagged partial transcript") {
  AlwaysYes oracle;
  Polytope K = Polytope::box(2, 1.0);
  CpmOptions opts;
  CpmResult res = cpm_block(oracle, K, K.interior, 20, opts);
  CHECK(res.terminated);
  CHECK(res.steps.size() == 1);
  CHECK(res.so_calls == 1);
}

TEST_CASE("cutting plane property suite") {
  for (const auto& r : check_cpm_suite(20240903)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
