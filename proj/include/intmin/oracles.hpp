#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "intmin/errors.hpp"

namespace intmin {

struct SeparationResult {
  bool yes = false;
  Eigen::VectorXd normal;  // a: every minimizer x* satisfies a^T x* >= a^T x
};

// Black box that certifies a query point as a minimizer or separates it
// from the minimizer set.
class SeparationOracle {
 public:
  virtual ~SeparationOracle() = default;
  SeparationResult query(const Eigen::VectorXd& x) {
    ++calls_;
    return do_query(x);
  }
  int call_count() const { return calls_; }

 private:
  virtual SeparationResult do_query(const Eigen::VectorXd& x) = 0;
  int calls_ = 0;
};

// Evaluation oracle for a set function f : 2^[n] -> Z, sets as bitmasks.
// f(empty) is evaluated once at construction and cached; it is not part of
// the query count.
class EvalOracle {
 public:
  EvalOracle(int n, std::function<long long(uint32_t)> f);

  long long evaluate(uint32_t mask);
  long long empty_value() const { return empty_value_; }
  int ground_size() const { return n_; }
  int call_count() const { return calls_; }

 private:
  int n_;
  std::function<long long(uint32_t)> f_;
  long long empty_value_;
  int calls_ = 0;
};

// Greedy subgradient of the Lovasz extension at x in [0,1]^n: sort
// coordinates descending (ties by ascending index), g_i = f(S_rank(i)) -
// f(S_rank(i)-1) along the induced chain.  Costs exactly n EO queries.
Eigen::VectorXd lovasz_subgradient(EvalOracle& eo, const Eigen::VectorXd& x);

// Lovasz extension value f_L(x) = f(empty) + g_x . x (greedy formula);
// costs n EO queries.
double lovasz_extension_value(EvalOracle& eo, const Eigen::VectorXd& x);

// Separation oracle for the Lovasz extension restricted to [0,1]^n.
// Outside the box it returns the first violated facet (no EO queries);
// inside it returns YES iff the greedy subgradient vanishes, otherwise the
// half-space with normal -g through x.  Tracks the best chain set seen.
SeparationResult lovasz_separation(EvalOracle& eo, const Eigen::VectorXd& x);

class LovaszOracle : public SeparationOracle {
 public:
  explicit LovaszOracle(EvalOracle& eo);

  int greedy_calls() const { return greedy_calls_; }
  int box_calls() const { return box_calls_; }
  long long best_value() const { return best_value_; }
  uint32_t best_mask() const { return best_mask_; }

 private:
  SeparationResult do_query(const Eigen::VectorXd& x) override;

  EvalOracle& eo_;
  int greedy_calls_ = 0;
  int box_calls_ = 0;
  long long best_value_;
  uint32_t best_mask_ = 0;
};

// Ground-truth oracle for f(x) = ||x - target||^2: YES iff x equals the
// target exactly, otherwise the gradient half-space.
class QuadraticOracle : public SeparationOracle {
 public:
  explicit QuadraticOracle(Eigen::VectorXi target);
  const Eigen::VectorXi& target() const { return target_; }

 private:
  SeparationResult do_query(const Eigen::VectorXd& x) override;
  Eigen::VectorXi target_;
};

struct SfmBruteForceResult {
  long long min_value;
  std::vector<uint32_t> minimizers;
};

// Exact enumeration over all 2^n subsets; n <= 20.
SfmBruteForceResult brute_force_sfm(EvalOracle& eo);

// f(S) = total weight of edges with exactly one endpoint in S.  Vertices are
// 1-based in the edge list; weights must be nonnegative integers.
std::function<long long(uint32_t)> make_graph_cut_fn(
    int n_vertices, const std::vector<std::array<long long, 3>>& edges);

EvalOracle make_graph_cut_oracle(
    int n_vertices, const std::vector<std::array<long long, 3>>& edges);

// Test utility: sampled submodularity check f(S+i)-f(S) >= f(T+i)-f(T) for
// S subset of T, i not in T.  Returns false on the first violation found.
bool check_submodular(EvalOracle& eo, int samples, uint64_t seed);

}  // namespace intmin
