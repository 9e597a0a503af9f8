#include "intmin/solver.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>

namespace intmin {

namespace {

enum class LogLevel { Off = 0, Info = 1, Trace = 2 };

LogLevel log_level() {
  static LogLevel lvl = [] {
    const char* env = std::getenv("INTMIN_LOG");
    if (!env) return LogLevel::Off;
    std::string s(env);
    if (s == "info") return LogLevel::Info;
    if (s == "trace") return LogLevel::Trace;
    return LogLevel::Off;
  }();
  return lvl;
}

#define INTMIN_INFO(msg)                                            \
  do {                                                              \
    if (log_level() >= LogLevel::Info) std::cerr << "[intmin] " << msg << "\n"; \
  } while (0)

// Presents an ambient-space oracle to a block running in the reduced frame:
// queries are lifted through W = x0 + span(basis), returned normals are
// projected back.  Valid because minimizers live in W.
class FrameOracle : public SeparationOracle {
 public:
  FrameOracle(SeparationOracle& inner, const SubspaceState& sub)
      : inner_(inner), sub_(sub) {}

 private:
  SeparationResult do_query(const Vec& reduced) override {
    SeparationResult r = inner_.query(sub_.to_ambient(reduced));
    if (r.yes) return r;
    if (r.normal.size() != sub_.ambient())
      throw OracleInconsistency("oracle normal has wrong dimension");
    r.normal = sub_.basis.transpose() * r.normal;
    return r;
  }

  SeparationOracle& inner_;
  const SubspaceState& sub_;
};

}  // namespace

int default_block_len(int dim, int m) {
  return static_cast<int>(
      std::ceil(4.0 * dim * std::log(std::max(m, 3))));
}

int default_max_blocks(int n, long long radius) {
  double gamma = std::pow(2.0, (n - 1) / 2.0);
  double logn = std::log(std::max(n, 2));
  double v = 32.0 * (n + std::log(gamma * n * static_cast<double>(radius)) / logn);
  return std::max(16, static_cast<int>(std::ceil(v)));
}

double reduction_threshold(ThresholdPolicy policy, int dim, int m) {
  switch (policy) {
    case ThresholdPolicy::Lemma31:
      return 1.0 / (60.0 * std::pow(static_cast<double>(m), 1.5) * dim);
    case ThresholdPolicy::PaperExp:
      return std::pow(2.0, -100.0 * dim * std::log2(std::max(dim, 2)));
    case ThresholdPolicy::TenN:
      return 1.0 / (10.0 * dim);
  }
  return 0.0;
}

Solver::Solver(SeparationOracle& oracle, int n, const SolverConfig& config,
               SolverObserver* observer)
    : oracle_(oracle), obs_(observer) {
  if (n < 1) throw StructuralError("solver: dimension must be >= 1");
  if (config.radius < 1) throw StructuralError("solver: radius must be >= 1");
  st_.config = config;
  st_.n0 = n;
  st_.sub = SubspaceState::full(n);
  st_.K = Polytope::box(n, static_cast<double>(config.radius));
  st_.lat = LatticeState::integer_lattice(n);
  CpmOptions opts{config.eps_cpm, config.delta, config.strict};
  st_.center = certify_center(st_.K, Vec::Zero(n), opts);
  st_.transcript.phi.push_back(n * std::log(2.0 * config.radius));
  so_at_start_ = oracle.call_count();
  if (obs_) obs_->on_center(st_.sub, st_.K, st_.center);
}

Solver::Solver(SeparationOracle& oracle, SolverState state,
               SolverObserver* observer)
    : oracle_(oracle), obs_(observer), st_(std::move(state)) {
  so_at_start_ = oracle.call_count() - st_.transcript.so_calls;
}

void Solver::sync_so_calls() {
  st_.transcript.so_calls = oracle_.call_count() - so_at_start_;
}

double Solver::current_threshold() const {
  return reduction_threshold(st_.config.policy, st_.sub.dim(), st_.K.rows());
}

Solver::Event Solver::step() {
  if (st_.done) return Event::Done;
  const int d = st_.sub.dim();
  if (d <= 1) throw StructuralError("solver: step called at dim <= 1");

  Mat hinv = st_.center.H_inverse();
  Mat norm_amb = st_.sub.basis * hinv * st_.sub.basis.transpose();
  ShortestVectorResult sv =
      approx_shortest_vector(st_.lat, norm_amb, st_.config.gram_bits);
  ++st_.transcript.lll_calls;

  double thr = current_threshold();
  if (sv.norm_value >= thr) {
    if (st_.config.max_blocks > 0 &&
        st_.transcript.blocks >= st_.config.max_blocks)
      throw NonTermination("block budget " +
                           std::to_string(st_.config.max_blocks) +
                           " exhausted at dim " + std::to_string(d));
    int T = st_.config.block_len > 0 ? st_.config.block_len
                                     : default_block_len(d, st_.K.rows());
    INTMIN_INFO("block at dim " << d << " m=" << st_.K.rows()
                                << " |v|=" << sv.norm_value << " T=" << T);
    return do_block(T);
  }

  INTMIN_INFO("reduce at dim " << d << " |v|=" << sv.norm_value
                               << " thr=" << thr);
  ReductionResult rr =
      reduce_dimension(st_.sub, st_.K, st_.center, st_.lat, sv.v, sv.preimage);
  st_.sub = rr.sub;
  st_.K = rr.K;
  st_.center = rr.center;
  st_.lat = rr.lat;
  st_.records.push_back({sv.preimage, rr.slab_rhs, sv.v});

  ReductionEvent ev;
  ev.from_dim = d;
  ev.norm_value = sv.norm_value;
  ev.gamma = sv.gamma;
  ev.log_rect_vol = rr.log_rect_vol;
  ev.log_det_lattice = 0.5 * log_of_rat(st_.lat.det_squared());
  ev.phi_after = ev.log_rect_vol + ev.log_det_lattice;
  st_.transcript.reductions.push_back(ev);
  st_.transcript.phi.push_back(ev.phi_after);
  ++st_.transcript.dim_reductions;

  if (obs_) {
    obs_->on_reduction(st_.sub, st_.K, st_.lat, st_.records);
    obs_->on_center(st_.sub, st_.K, st_.center);
  }
  return Event::Reduce;
}

Solver::Event Solver::do_block(int block_len) {
  CpmOptions opts{st_.config.eps_cpm, st_.config.delta, st_.config.strict};
  CpmStepCallback cb;
  if (obs_) {
    cb = [this](const Polytope& k, const BarrierState& c, const CutAction& a) {
      obs_->on_cpm_step(st_.sub, k, c, a);
    };
  }
  FrameOracle framed(oracle_, st_.sub);
  CpmResult res =
      cpm_block(framed, st_.K, st_.center.x, block_len, opts, cb);
  st_.K = res.K;
  st_.center = res.center;
  ++st_.transcript.blocks;
  st_.transcript.newton_iters += res.newton_iters;
  BlockEvent be;
  be.steps = res.steps;
  be.so_calls = res.so_calls;
  be.terminated = res.terminated;
  be.dim = st_.sub.dim();
  st_.transcript.block_events.push_back(std::move(be));
  sync_so_calls();
  if (obs_ && !res.terminated) obs_->on_center(st_.sub, st_.K, st_.center);

  if (res.terminated) {
    handle_yes(st_.sub.to_ambient(res.termination_point));
    return Event::Done;
  }
  return Event::Block;
}

void Solver::handle_yes(const Vec& witness) {
  const int n = st_.n0;
  Eigen::VectorXi rounded(n);
  bool exact = true;
  for (int i = 0; i < n; ++i) {
    rounded[i] = static_cast<int>(std::llrint(witness[i]));
    if (static_cast<double>(rounded[i]) != witness[i]) exact = false;
  }
  if (!exact) {
    SeparationResult sr = oracle_.query(rounded.cast<double>());
    sync_so_calls();
    if (!sr.yes)
      throw AmbiguousYes(
          "oracle accepted a non-integral point whose rounding it rejects");
  }
  st_.done = true;
  st_.done_point = rounded;
}

Eigen::VectorXi Solver::finish_low_dim() {
  if (st_.done) return st_.done_point;
  const int d = st_.sub.dim();
  if (d > 1) throw StructuralError("finish_low_dim: dimension still > 1");
  const int n = st_.n0;

  IntVec point;
  IntMat directions;
  if (st_.records.empty()) {
    point.assign(n, Int(0));
    directions.assign(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) directions[i][i] = 1;
  } else {
    IntMat rows;
    IntVec rhs;
    for (const auto& r : st_.records) {
      rows.push_back(r.z);
      rhs.push_back(r.rhs);
    }
    auto sol = integer_affine_solve(rows, rhs);
    if (!sol)
      throw InfeasibleSlab("slab contains no integral point");
    point = sol->point;
    directions = sol->directions;
  }

  if (d == 0) {
    Eigen::VectorXi out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>(point[i].get_si());
    return out;
  }
  if (static_cast<int>(directions.size()) != 1)
    throw StructuralError("finish_low_dim: slab direction count mismatch");
  return line_search(point, directions[0]);
}

Eigen::VectorXi Solver::line_search(const IntVec& point,
                                    const IntVec& direction) {
  const int n = st_.n0;
  Vec p_dbl(n), d_dbl(n);
  for (int i = 0; i < n; ++i) {
    p_dbl[i] = point[i].get_d();
    d_dbl[i] = direction[i].get_d();
  }

  // integer k-range from the polytope's interval in reduced coordinates
  Vec u = st_.sub.basis.col(0);
  double c0 = u.dot(p_dbl - st_.sub.x0);
  double cd = u.dot(d_dbl);
  double lo_t = -std::numeric_limits<double>::infinity();
  double hi_t = std::numeric_limits<double>::infinity();
  for (int i = 0; i < st_.K.rows(); ++i) {
    double a = st_.K.A(i, 0);
    double bound = st_.K.b[i] / a;
    if (a > 0.0) lo_t = std::max(lo_t, bound);
    else if (a < 0.0) hi_t = std::min(hi_t, bound);
  }
  double slack = 1e-9 * (1.0 + std::abs(lo_t) + std::abs(hi_t));
  lo_t -= slack;
  hi_t += slack;
  double k_min_d = (lo_t - c0) / cd;
  double k_max_d = (hi_t - c0) / cd;
  if (cd < 0.0) std::swap(k_min_d, k_max_d);
  long long lo = static_cast<long long>(std::ceil(k_min_d));
  long long hi = static_cast<long long>(std::floor(k_max_d));

  // clamp with the exact hypothesis box B_inf(R)
  const long long radius = st_.config.radius;
  for (int i = 0; i < n; ++i) {
    if (direction[i] == 0) continue;
    double di = direction[i].get_d();
    double pi = point[i].get_d();
    double a = (-radius - pi) / di;
    double b = (radius - pi) / di;
    if (a > b) std::swap(a, b);
    lo = std::max(lo, static_cast<long long>(std::ceil(a - 1e-9)));
    hi = std::min(hi, static_cast<long long>(std::floor(b + 1e-9)));
  }
  if (lo > hi) throw InfeasibleSlab("empty integral range on the final line");

  auto candidate = [&](long long k) {
    Eigen::VectorXi y(n);
    Int kk(static_cast<long>(k));
    for (int i = 0; i < n; ++i) {
      Int v = point[i] + kk * direction[i];
      y[i] = static_cast<int>(v.get_si());
    }
    return y;
  };
  // oracle's descent side projected on the line; 0 only when the probe
  // itself is a minimizer (both bundled oracle families separate
  // non-minimizers strictly)
  auto probe = [&](long long k, bool& yes) {
    Eigen::VectorXi y = candidate(k);
    SeparationResult sr = oracle_.query(y.cast<double>());
    sync_so_calls();
    yes = sr.yes;
    if (yes) return 0.0;
    return sr.normal.dot(d_dbl);
  };

  while (hi - lo >= 2) {
    long long mid = lo + (hi - lo) / 2;
    bool yes = false;
    double s = probe(mid, yes);
    if (yes || s == 0.0) return candidate(mid);
    if (s > 0.0) lo = mid;
    else hi = mid;
  }
  if (lo == hi) return candidate(lo);

  bool yes = false;
  double s = probe(lo, yes);
  if (yes || s <= 0.0) return candidate(lo);
  s = probe(hi, yes);
  if (yes || s >= 0.0) return candidate(hi);
  // both endpoints point at each other non-strictly; either is a minimizer
  // under strict separation of non-minimizers
  return candidate(lo);
}

Eigen::VectorXi Solver::run() {
  while (!st_.done && st_.sub.dim() > 1) step();
  return finish_low_dim();
}

SolveOutcome minimize(SeparationOracle& oracle, int n,
                      const SolverConfig& config, SolverObserver* observer) {
  SolverConfig cfg = config;
  if (cfg.max_blocks == 0) cfg.max_blocks = default_max_blocks(n, cfg.radius);
  Solver solver(oracle, n, cfg, observer);
  SolveOutcome out;
  out.minimizer = solver.run();
  out.transcript = solver.state().transcript;
  return out;
}

SfmOutcome sfm_minimize(EvalOracle& eo, SolverConfig config,
                        SolverObserver* observer) {
  const int n = eo.ground_size();
  LovaszOracle oracle(eo);
  SfmOutcome out;
  bool have_point = false;
  try {
    SolveOutcome so = minimize(oracle, n, config, observer);
    out.solver_point = so.minimizer;
    out.transcript = std::move(so.transcript);
    have_point = true;
  } catch (const AmbiguousYes&) {
    // YES from the Lovasz oracle certifies min f = f(empty); the best chain
    // set seen is therefore already optimal
  }
  out.so_calls = oracle.call_count();
  out.eo_calls = eo.call_count();
  out.greedy_calls = oracle.greedy_calls();
  out.box_calls = oracle.box_calls();

  out.min_mask = oracle.best_mask();
  out.min_value = oracle.best_value();
  if (have_point) {
    uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (out.solver_point[i] > 0) mask |= 1u << i;
    long long v = eo.evaluate(mask);  // final readout, after the counters
    if (v < out.min_value) {
      out.min_value = v;
      out.min_mask = mask;
    }
  }
  return out;
}

}  // namespace intmin
