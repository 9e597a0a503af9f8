#pragma once

#include <random>
#include <string>
#include <vector>

#include "intmin/solver.hpp"

namespace intmin {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// --- generators -----------------------------------------------------------

// Bounded random polytope: B_inf(2) plus `extra` random rows with positive
// slack at the origin; interior point 0.
Polytope random_polytope(int n, int extra, std::mt19937_64& rng);

// Point sampled inside 0.9 * Dikin ellipsoid of the tracked interior point.
Vec random_interior_point(const Polytope& K, std::mt19937_64& rng);

// Full-rank integer basis of rank k in ambient dimension k with entries in
// [-entry_bound, entry_bound].
LatticeState random_integer_lattice(int k, int entry_bound,
                                    std::mt19937_64& rng);

// Diagonally dominant integer PSD form.
GramForm random_diag_dominant_gram(int k, std::mt19937_64& rng);

std::vector<std::array<long long, 3>> random_graph_cut_edges(
    int n, int max_weight, std::mt19937_64& rng);

// Random submodular function of the form concave(|S|) + modular(S).
std::function<long long(uint32_t)> random_concave_modular_fn(
    int n, std::mt19937_64& rng);

// --- numeric oracles ------------------------------------------------------

Vec fd_gradient_of_volumetric(const Polytope& K, const Vec& x, double h);
Mat fd_hessian_of_volumetric(const Polytope& K, const Vec& x, double h);

// Smallest generalized eigenvalue of (Q, H): the exact mu(x) diagnostic.
double mu_exact(const BarrierState& st);

// --- instrumentation ------------------------------------------------------

// Verifies that a known integral minimizer stays inside K (reduced
// coordinates, 1e-9 frame tolerance) at every cutting-plane step, and inside
// the exact slab at every reduction.
class RetentionObserver : public SolverObserver {
 public:
  explicit RetentionObserver(Eigen::VectorXi x_star);
  void on_cpm_step(const SubspaceState&, const Polytope&, const BarrierState&,
                   const CutAction&) override;
  void on_reduction(const SubspaceState&, const Polytope&, const LatticeState&,
                    const std::vector<ReductionRecord>&) override;
  int violations() const { return violations_; }
  int cpm_checks() const { return cpm_checks_; }
  int reduction_checks() const { return reduction_checks_; }

 private:
  Eigen::VectorXi x_star_;
  int violations_ = 0;
  int cpm_checks_ = 0;
  int reduction_checks_ = 0;
};

// Checks |sum sigma - n| <= 1e-9 at every certified center it sees.
class LeverageSumObserver : public SolverObserver {
 public:
  void on_center(const SubspaceState&, const Polytope&,
                 const BarrierState&) override;
  void on_cpm_step(const SubspaceState&, const Polytope&, const BarrierState&,
                   const CutAction&) override;
  int centers() const { return centers_; }
  double max_deviation() const { return max_dev_; }

 private:
  void record(const Polytope&, const BarrierState&);
  int centers_ = 0;
  double max_dev_ = 0.0;
};

// Compares the maintained lattice against a from-scratch projection of Z^n
// at every reduction (canonical-basis equality, exact).
class LatticeIdentityObserver : public SolverObserver {
 public:
  void on_reduction(const SubspaceState&, const Polytope&, const LatticeState&,
                    const std::vector<ReductionRecord>&) override;
  int checks() const { return checks_; }
  int failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
};

// --- property suites (shared by `intmin verify` and the test binaries) ----

std::vector<CheckResult> check_lll_suite(uint64_t seed);
std::vector<CheckResult> check_barrier_suite(uint64_t seed);
std::vector<CheckResult> check_cpm_suite(uint64_t seed);
std::vector<CheckResult> check_dimred_suite(uint64_t seed);
std::vector<CheckResult> check_sfm_suite(uint64_t seed);

}  // namespace intmin
