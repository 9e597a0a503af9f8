#pragma once

#include <string>
#include <vector>

#include "intmin/cutting_plane.hpp"

namespace intmin {

struct BlockEvent {
  std::vector<CpmStepRecord> steps;
  int so_calls = 0;
  bool terminated = false;
  int dim = 0;  // dimension the block ran in
};

struct ReductionEvent {
  int from_dim = 0;
  double norm_value = 0.0;  // ||v||_{H^{-1}} that triggered the reduction
  double gamma = 0.0;       // reported shortest-vector approximation factor
  double log_rect_vol = 0.0;
  double log_det_lattice = 0.0;
  double phi_after = 0.0;   // potential at the restart
};

// Per-run record: oracle calls, add/drop actions, Newton iterations, the rho
// series inside blocks and the potential Phi at every restart.
struct Transcript {
  int so_calls = 0;
  int blocks = 0;
  int dim_reductions = 0;
  int newton_iters = 0;
  int lll_calls = 0;
  std::vector<double> phi;  // initial value, then one entry per restart
  std::vector<BlockEvent> block_events;
  std::vector<ReductionEvent> reductions;
};

// JSON with fixed key order; exact in-memory doubles serialized by the
// shortest round-trip representation.
std::string transcript_to_json(const Transcript& t);

}  // namespace intmin
