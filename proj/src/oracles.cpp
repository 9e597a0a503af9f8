#include "intmin/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

namespace intmin {

EvalOracle::EvalOracle(int n, std::function<long long(uint32_t)> f)
    : n_(n), f_(std::move(f)) {
  if (n < 0 || n > 20) throw StructuralError("EvalOracle: n out of range");
  empty_value_ = f_(0);
}

long long EvalOracle::evaluate(uint32_t mask) {
  if (mask == 0) return empty_value_;
  ++calls_;
  return f_(mask);
}

namespace {

std::vector<int> greedy_order(const Eigen::VectorXd& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });
  return order;
}

}  // namespace

Eigen::VectorXd lovasz_subgradient(EvalOracle& eo, const Eigen::VectorXd& x) {
  const int n = eo.ground_size();
  std::vector<int> order = greedy_order(x);
  Eigen::VectorXd g(n);
  uint32_t mask = 0;
  long long prev = eo.empty_value();
  for (int k = 0; k < n; ++k) {
    mask |= 1u << order[k];
    long long cur = eo.evaluate(mask);
    g[order[k]] = static_cast<double>(cur - prev);
    prev = cur;
  }
  return g;
}

double lovasz_extension_value(EvalOracle& eo, const Eigen::VectorXd& x) {
  Eigen::VectorXd g = lovasz_subgradient(eo, x);
  return static_cast<double>(eo.empty_value()) + g.dot(x);
}

SeparationResult lovasz_separation(EvalOracle& eo, const Eigen::VectorXd& x) {
  const int n = eo.ground_size();
  for (int i = 0; i < n; ++i) {
    if (x[i] > 1.0) {
      SeparationResult r;
      r.normal = Eigen::VectorXd::Zero(n);
      r.normal[i] = -1.0;
      return r;
    }
    if (x[i] < 0.0) {
      SeparationResult r;
      r.normal = Eigen::VectorXd::Zero(n);
      r.normal[i] = 1.0;
      return r;
    }
  }
  Eigen::VectorXd g = lovasz_subgradient(eo, x);
  SeparationResult r;
  if ((g.array() == 0.0).all()) {
    r.yes = true;
    return r;
  }
  r.normal = -g;
  return r;
}

LovaszOracle::LovaszOracle(EvalOracle& eo)
    : eo_(eo), best_value_(eo.empty_value()) {}

SeparationResult LovaszOracle::do_query(const Eigen::VectorXd& x) {
  const int n = eo_.ground_size();
  for (int i = 0; i < n; ++i) {
    if (x[i] > 1.0 || x[i] < 0.0) {
      ++box_calls_;
      return lovasz_separation(eo_, x);
    }
  }
  ++greedy_calls_;
  // run the greedy chain here so the best set seen can be tracked
  std::vector<int> order = greedy_order(x);
  Eigen::VectorXd g(n);
  uint32_t mask = 0;
  long long prev = eo_.empty_value();
  for (int k = 0; k < n; ++k) {
    mask |= 1u << order[k];
    long long cur = eo_.evaluate(mask);
    if (cur < best_value_) {
      best_value_ = cur;
      best_mask_ = mask;
    }
    g[order[k]] = static_cast<double>(cur - prev);
    prev = cur;
  }
  SeparationResult r;
  if ((g.array() == 0.0).all()) {
    r.yes = true;
    return r;
  }
  r.normal = -g;
  return r;
}

QuadraticOracle::QuadraticOracle(Eigen::VectorXi target)
    : target_(std::move(target)) {}

SeparationResult QuadraticOracle::do_query(const Eigen::VectorXd& x) {
  SeparationResult r;
  bool exact = true;
  for (int i = 0; i < target_.size(); ++i)
    if (x[i] != static_cast<double>(target_[i])) { exact = false; break; }
  if (exact) {
    r.yes = true;
    return r;
  }
  r.normal = target_.cast<double>() - x;
  return r;
}

SfmBruteForceResult brute_force_sfm(EvalOracle& eo) {
  const int n = eo.ground_size();
  if (n > 20) throw StructuralError("brute_force_sfm: ground set too large");
  SfmBruteForceResult res;
  res.min_value = eo.empty_value();
  res.minimizers = {0};
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long v = eo.evaluate(mask);
    if (v < res.min_value) {
      res.min_value = v;
      res.minimizers = {mask};
    } else if (v == res.min_value) {
      res.minimizers.push_back(mask);
    }
  }
  return res;
}

std::function<long long(uint32_t)> make_graph_cut_fn(
    int n_vertices, const std::vector<std::array<long long, 3>>& edges) {
  for (const auto& e : edges) {
    if (e[2] < 0) throw StructuralError("graph cut: negative edge weight");
    if (e[0] < 1 || e[0] > n_vertices || e[1] < 1 || e[1] > n_vertices)
      throw StructuralError("graph cut: vertex out of range");
  }
  return [edges](uint32_t mask) {
    long long total = 0;
    for (const auto& e : edges) {
      bool u = mask & (1u << (e[0] - 1));
      bool v = mask & (1u << (e[1] - 1));
      if (u != v) total += e[2];
    }
    return total;
  };
}

EvalOracle make_graph_cut_oracle(
    int n_vertices, const std::vector<std::array<long long, 3>>& edges) {
  return EvalOracle(n_vertices, make_graph_cut_fn(n_vertices, edges));
}

bool check_submodular(EvalOracle& eo, int samples, uint64_t seed) {
  const int n = eo.ground_size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> dist(0, (1u << n) - 1);
  for (int s = 0; s < samples; ++s) {
    uint32_t small = dist(rng);
    uint32_t big = small | dist(rng);  // superset of small
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng);
    if (big & (1u << i)) continue;
    long long lhs = eo.evaluate(small | (1u << i)) - eo.evaluate(small);
    long long rhs = eo.evaluate(big | (1u << i)) - eo.evaluate(big);
    if (lhs < rhs) return false;
  }
  return true;
}

}  // namespace intmin
