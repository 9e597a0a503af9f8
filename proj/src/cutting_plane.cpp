#include "intmin/cutting_plane.hpp"

#include <algorithm>
#include <cmath>

namespace intmin {

double certified_center_tol(double eps, double mu_lower, const CpmOptions& o) {
  double tol = std::pow(eps, 4) * mu_lower / 2.0;
  return std::max(tol, o.newton_tol_floor);
}

BarrierState certify_center(const Polytope& K, const Vec& x_start,
                            const CpmOptions& opts) {
  // sigma_i <= 1 always, so eps^4/2 is a valid first-stage tolerance
  double tol0 = certified_center_tol(opts.eps, 1.0, opts);
  BarrierState st = approx_volumetric_center(K, x_start, tol0, opts.max_newton);
  double tol = certified_center_tol(opts.eps, st.mu_lower, opts);
  if (st.newton_decrement() > tol) {
    int used = st.newton_iters;
    st = approx_volumetric_center(K, st.x, tol, opts.max_newton);
    st.newton_iters += used;
  }
  return st;
}

std::pair<Polytope, CutAction> cpm_step(const Polytope& K,
                                        const BarrierState& center,
                                        SeparationOracle& oracle,
                                        const CpmOptions& opts) {
  const int m = K.rows();
  const int n = K.dim();
  CutAction act;

  // dropping at m == n+1 could unbound the polytope; the add branch is
  // always safe
  if (center.mu_lower >= opts.eps || m <= n + 1) {
    act.witness = center.x;
    act.queried = true;
    SeparationResult sr = oracle.query(center.x);
    if (sr.yes) {
      act.kind = CutKind::Terminate;
      return {K, act};
    }
    if (sr.normal.size() != n || sr.normal.norm() == 0.0)
      throw OracleInconsistency("oracle returned an unusable normal");
    Vec a = sr.normal / sr.normal.norm();

    Eigen::LLT<Mat> llt(center.H);
    Vec hinv_a = llt.solve(a);
    double q = a.dot(hinv_a);
    double beta;
    Vec interior;
    if (opts.strict) {
      // slack t making the new row's leverage (w.r.t. the augmented Hessian
      // at the current center) exactly delta: sigma_new = q/(t^2+q)
      double t = std::sqrt(q * (1.0 - opts.delta) / opts.delta);
      beta = a.dot(center.x) - t;
      interior = center.x;
    } else {
      beta = a.dot(center.x);
      // step half a Dikin radius into the kept side
      interior = center.x + hinv_a / (2.0 * std::sqrt(q));
    }
    if (a.dot(center.x) < beta)
      throw OracleInconsistency("cut excludes its own query point");
    act.kind = CutKind::Add;
    act.added_row = a;
    act.added_beta = beta;
    return {K.with_row(a, beta, interior), act};
  }

  int drop = 0;
  center.sigma.minCoeff(&drop);
  act.kind = CutKind::Drop;
  act.dropped_index = drop;
  return {K.without_row(drop), act};
}

CpmResult cpm_block(SeparationOracle& oracle, const Polytope& K0,
                    const Vec& x_init, int T, const CpmOptions& opts,
                    const CpmStepCallback& on_step) {
  if (T < 1) throw StructuralError("cpm_block: T must be >= 1");
  CpmResult res;
  res.K = K0;
  Vec x = x_init;
  int so_before = oracle.call_count();

  for (int step = 0; step < T; ++step) {
    BarrierState center = certify_center(res.K, x, opts);
    res.newton_iters += center.newton_iters;

    auto [k_next, act] = cpm_step(res.K, center, oracle, opts);
    CpmStepRecord rec;
    rec.step = step;
    rec.action = act.kind;
    rec.rho = center.F;
    rec.min_sigma = center.mu_lower;
    rec.m = res.K.rows();
    res.steps.push_back(rec);

    if (act.kind == CutKind::Terminate) {
      res.terminated = true;
      res.termination_point = act.witness;
      res.center = center;
      res.so_calls = oracle.call_count() - so_before;
      if (on_step) on_step(res.K, center, act);
      return res;
    }
    res.K = k_next;
    x = res.K.interior;
    if (on_step) on_step(res.K, center, act);
  }

  res.center = certify_center(res.K, x, opts);
  res.newton_iters += res.center.newton_iters;
  res.so_calls = oracle.call_count() - so_before;
  return res;
}

}  // namespace intmin
