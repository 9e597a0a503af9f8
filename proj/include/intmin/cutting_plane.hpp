#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "intmin/barrier.hpp"
#include "intmin/oracles.hpp"

namespace intmin {

enum class CutKind { Add, Drop, Terminate };

struct CutAction {
  CutKind kind = CutKind::Terminate;
  Vec added_row;           // when Add
  double added_beta = 0.0; // when Add
  int dropped_index = -1;  // when Drop
  Vec witness;             // the queried point, when the oracle was queried
  bool queried = false;
};

struct CpmOptions {
  double eps = 0.01;    // drop threshold on min sigma
  double delta = 1e-4;  // strict-mode leverage of a freshly placed row
  bool strict = false;  // strict: place new rows at leverage delta;
                        // default: central cut through the current center
  int max_newton = 500;
  // eps^4 mu / 2 underflows what double precision can certify; decrements
  // below this floor already pin F(z) - F(vc) two orders under every
  // tolerance consumed downstream
  double newton_tol_floor = 1e-9;
};

struct CpmStepRecord {
  int step = 0;
  CutKind action = CutKind::Terminate;
  double rho = 0.0;        // certified F value at the start of the step
  double min_sigma = 0.0;
  int m = 0;               // constraint count before the action
};

struct CpmResult {
  Polytope K;
  BarrierState center;     // certified center of the final polytope
  std::vector<CpmStepRecord> steps;
  bool terminated = false;
  Vec termination_point;
  int so_calls = 0;
  int newton_iters = 0;
};

// Newton tolerance for a certified center: eps^4 * mu_lower / 2, floored at
// opts.newton_tol_floor.
double certified_center_tol(double eps, double mu_lower, const CpmOptions& o);

// Re-center K to a certified approximate volumetric center starting from
// x_start (two-stage: coarse tolerance, then tightened with the observed
// min sigma).
BarrierState certify_center(const Polytope& K, const Vec& x_start,
                            const CpmOptions& opts);

// One iteration of Vaidya's method at a certified center: query-and-add when
// min sigma >= eps, drop the argmin row otherwise.  Re-centering is the
// caller's job.
std::pair<Polytope, CutAction> cpm_step(const Polytope& K,
                                        const BarrierState& center,
                                        SeparationOracle& oracle,
                                        const CpmOptions& opts);

using CpmStepCallback =
    std::function<void(const Polytope&, const BarrierState&, const CutAction&)>;

// T iterations of {certify center, cpm_step}.  The returned center is
// certified for the final polytope.  Early YES sets terminated and leaves a
// partial transcript.
CpmResult cpm_block(SeparationOracle& oracle, const Polytope& K,
                    const Vec& x_init, int T, const CpmOptions& opts,
                    const CpmStepCallback& on_step = nullptr);

}  // namespace intmin
