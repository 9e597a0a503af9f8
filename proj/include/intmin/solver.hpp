#pragma once

#include <cstdint>
#include <vector>

#include "intmin/cutting_plane.hpp"
#include "intmin/dimred.hpp"
#include "intmin/transcript.hpp"

namespace intmin {

// Which norm threshold separates "run a block" from "reduce a dimension".
enum class ThresholdPolicy {
  Lemma31,   // 1 / (60 m^{1.5} d): half-width guarantee with margin
  PaperExp,  // 2^{-100 d log2 d}
  TenN,      // 1 / (10 d)
};

struct SolverConfig {
  long long radius = 1;       // initial box B_inf(radius)
  int block_len = 0;          // 0: ceil(4 d ln max(m,3)) per block
  double eps_cpm = 0.01;      // drop threshold inside blocks
  double delta = 1e-4;        // strict-mode cut placement leverage
  bool strict = false;
  ThresholdPolicy policy = ThresholdPolicy::Lemma31;
  int gram_bits = 64;
  int max_blocks = 0;         // 0: ceil(32 (n + log(gamma n R)/log n))
  uint64_t seed = 0;          // echoed in reports; instance generation only
};

int default_block_len(int dim, int m);
int default_max_blocks(int n, long long radius);
double reduction_threshold(ThresholdPolicy policy, int dim, int m);

// Exact record of one dimension reduction: integral points of the slab
// satisfy z . y = rhs, with v the projected lattice vector that was cut.
struct ReductionRecord {
  IntVec z;
  Int rhs;
  RatVec v;
};

class SolverObserver {
 public:
  virtual ~SolverObserver() = default;
  virtual void on_center(const SubspaceState&, const Polytope&,
                         const BarrierState&) {}
  virtual void on_cpm_step(const SubspaceState&, const Polytope&,
                           const BarrierState&, const CutAction&) {}
  virtual void on_reduction(const SubspaceState&, const Polytope&,
                            const LatticeState&,
                            const std::vector<ReductionRecord>&) {}
};

struct SolverState {
  SubspaceState sub;
  Polytope K;          // reduced coordinates
  BarrierState center;
  LatticeState lat;
  std::vector<ReductionRecord> records;
  Transcript transcript;
  SolverConfig config;
  int n0 = 0;          // original ambient dimension
  bool done = false;
  Eigen::VectorXi done_point;
};

class Solver {
 public:
  enum class Event { Block, Reduce, Done };

  Solver(SeparationOracle& oracle, int n, const SolverConfig& config,
         SolverObserver* observer = nullptr);
  // Resume from an explicit state (used by tests).
  Solver(SeparationOracle& oracle, SolverState state,
         SolverObserver* observer = nullptr);

  // One main-loop step: measure the shortest vector, then block or reduce.
  Event step();

  // Low-dimension finish: exact slab solve, then line search when dim == 1.
  Eigen::VectorXi finish_low_dim();

  // Full run: loop step() while dim > 1, then finish.
  Eigen::VectorXi run();

  const SolverState& state() const { return st_; }
  double current_threshold() const;

 private:
  Event do_block(int block_len);
  void handle_yes(const Vec& witness);
  Eigen::VectorXi line_search(const IntVec& point, const IntVec& direction);
  void sync_so_calls();

  SeparationOracle& oracle_;
  SolverObserver* obs_;
  SolverState st_;
  int so_at_start_ = 0;
};

struct SolveOutcome {
  Eigen::VectorXi minimizer;
  Transcript transcript;
};

// Algorithm entry point: find the integral minimizer behind the oracle.
SolveOutcome minimize(SeparationOracle& oracle, int n,
                      const SolverConfig& config,
                      SolverObserver* observer = nullptr);

struct SfmOutcome {
  uint32_t min_mask = 0;
  long long min_value = 0;
  Eigen::VectorXi solver_point;
  Transcript transcript;
  int so_calls = 0;
  int eo_calls = 0;      // during the solve, before the final readout
  int greedy_calls = 0;  // oracle queries answered by the greedy chain
  int box_calls = 0;     // oracle queries answered by a box facet
};

// Submodular minimization frontend: Lovasz-extension separation oracle over
// B_inf(radius), radius 1 by default.  The returned set is the better of the
// solver's indicator point and the best chain set seen by the oracle.
SfmOutcome sfm_minimize(EvalOracle& eo, SolverConfig config,
                        SolverObserver* observer = nullptr);

}  // namespace intmin
