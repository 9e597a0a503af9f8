#include <doctest.h>

#include "intmin/checks.hpp"
#include "intmin/oracles.hpp"

using namespace intmin;

namespace {

// 2-element cut function: f(empty)=0, f({1})=1, f({2})=1, f({1,2})=0
long long cut2(uint32_t mask) { return (mask == 1 || mask == 2) ? 1 : 0; }

}  // namespace

TEST_CASE("greedy subgradient of the two-element cut function") {
  EvalOracle eo(2, cut2);
  Vec x(2);
  x << 0.7, 0.3;
  SeparationResult r = lovasz_separation(eo, x);
  CHECK(!r.yes);
  CHECK(r.normal[0] == doctest::Approx(-1.0));
  CHECK(r.normal[1] == doctest::Approx(1.0));
}

TEST_CASE("points outside the box get facet cuts without EO queries") {
  EvalOracle eo(2, cut2);
  Vec x(2);
  x << 1.5, 0.2;
  SeparationResult r = lovasz_separation(eo, x);
  CHECK(!r.yes);
  CHECK(r.normal[0] == doctest::Approx(-1.0));
  CHECK(r.normal[1] == doctest::Approx(0.0));
  CHECK(eo.call_count() == 0);
}

TEST_CASE("modular functions never answer YES inside the open box") {
  EvalOracle eo(3, [](uint32_t mask) {
    return static_cast<long long>(__builtin_popcount(mask));
  });
  Vec x(3);
  x << 0.5, 0.25, 0.75;
  SeparationResult r = lovasz_separation(eo, x);
  CHECK(!r.yes);
  for (int i = 0; i < 3; ++i) CHECK(r.normal[i] == doctest::Approx(-1.0));
  // the cut keeps the empty-set indicator (origin) on the feasible side
  CHECK(r.normal.dot(-x) >= 0.0);
}

TEST_CASE("each greedy separation costs exactly n EO queries") {
  EvalOracle eo(4, [](uint32_t mask) {
    return static_cast<long long>(__builtin_popcount(mask));
  });
  Vec x = Vec::Constant(4, 0.5);
  lovasz_separation(eo, x);
  CHECK(eo.call_count() == 4);
  lovasz_separation(eo, x);
  CHECK(eo.call_count() == 8);
}

TEST_CASE("quadratic oracle separates and certifies exactly") {
  Eigen::VectorXi t(2);
  t << 3, -2;
  QuadraticOracle oracle(t);
  Vec x = Vec::Zero(2);
  SeparationResult r = oracle.query(x);
  CHECK(!r.yes);
  CHECK(r.normal[0] == doctest::Approx(3.0));
  CHECK(r.normal[1] == doctest::Approx(-2.0));

  Vec exact(2);
  exact << 3.0, -2.0;
  CHECK(oracle.query(exact).yes);

  Vec nearby(2);
  nearby << 3.0, -1.5;
  r = oracle.query(nearby);
  CHECK(!r.yes);
  CHECK(r.normal[0] == doctest::Approx(0.0));
  CHECK(r.normal[1] == doctest::Approx(-0.5));
}

TEST_CASE("brute force SFM enumerations") {
  EvalOracle cut(2, cut2);
  SfmBruteForceResult r = brute_force_sfm(cut);
  CHECK(r.min_value == 0);
  CHECK(r.minimizers == std::vector<uint32_t>{0, 3});

  EvalOracle modular(2, [](uint32_t mask) {
    long long v = 0;
    if (mask & 1) v += 1;
    if (mask & 2) v -= 1;
    return v;
  });
  r = brute_force_sfm(modular);
  CHECK(r.min_value == -1);
  CHECK(r.minimizers == std::vector<uint32_t>{2});

  EvalOracle constant(3, [](uint32_t) { return 5LL; });
  r = brute_force_sfm(constant);
  CHECK(r.min_value == 5);
  CHECK(r.minimizers.size() == 8);
}

TEST_CASE("graph cut oracle") {
  EvalOracle single = make_graph_cut_oracle(2, {{1, 2, 1}});
  CHECK(single.evaluate(0b01) == 1);
  CHECK(single.evaluate(0) == 0);

  EvalOracle triangle =
      make_graph_cut_oracle(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  CHECK(triangle.evaluate(0b001) == 2);
  CHECK(triangle.evaluate(0b011) == 2);
  CHECK(triangle.evaluate(0) == 0);

  CHECK_THROWS_AS(make_graph_cut_oracle(2, {{1, 2, -3}}), StructuralError);
}

TEST_CASE("lovasz oracle tracks the best chain set") {
  EvalOracle eo(2, cut2);
  LovaszOracle oracle(eo);
  Vec x(2);
  x << 0.9, 0.8;
  oracle.query(x);  // chain {1}, {1,2}: sees f({1,2}) = 0
  CHECK(oracle.best_value() == 0);
  CHECK((oracle.best_mask() == 0 || oracle.best_mask() == 3));
  CHECK(oracle.greedy_calls() == 1);
  CHECK(oracle.box_calls() == 0);
}

TEST_CASE("sfm property suite") {
  for (const auto& r : check_sfm_suite(20240905)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
