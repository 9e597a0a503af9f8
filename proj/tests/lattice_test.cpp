#include <doctest.h>

#include <random>

#include "intmin/checks.hpp"
#include "intmin/lattice.hpp"

using namespace intmin;

namespace {

LatticeState lattice_from_int_rows(const std::vector<std::vector<long>>& rows) {
  LatticeState s;
  s.rank = static_cast<int>(rows.size());
  s.ambient = static_cast<int>(rows[0].size());
  s.basis.assign(s.rank, RatVec(s.ambient));
  s.preimages.assign(s.rank, IntVec(s.ambient));
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.ambient; ++j) {
      s.basis[i][j] = rows[i][j];
      s.preimages[i][j] = rows[i][j];
    }
  return s;
}

GramForm diag_gram(const std::vector<long>& d) {
  GramForm g = GramForm::identity(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) g.matrix[i][i] = d[i];
  return g;
}

}  // namespace

TEST_CASE("gram_integerize identity at 8 bits") {
  GramForm g = gram_integerize(Eigen::MatrixXd::Identity(2, 2), 8);
  CHECK(g.matrix[0][0] == 256);
  CHECK(g.matrix[1][1] == 256);
  CHECK(g.matrix[0][1] == 0);
  CHECK(g.shift == 0);
}

TEST_CASE("gram_integerize diagonal rounding") {
  Eigen::MatrixXd m(2, 2);
  m << 0.04, 0.0, 0.0, 100.0;
  GramForm g = gram_integerize(m, 10);
  CHECK(g.matrix[0][0] == 41);
  CHECK(g.matrix[1][1] == 102400);
  CHECK(g.shift == 0);
}

TEST_CASE("gram_integerize keeps rank-deficient PSD input PSD") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 1.0, 1.0, 1.0;
  GramForm g = gram_integerize(m, 4);
  CHECK(g.matrix[0][0] == 16);
  CHECK(g.matrix[0][1] == 16);
  CHECK(g.shift == 0);
  RatMat as_rat(2, RatVec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) as_rat[i][j] = Rat(g.matrix[i][j]);
  CHECK(is_psd(as_rat));
}

TEST_CASE("gram_integerize rejects asymmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.5, 0.2, 1.0;
  CHECK_THROWS_AS(gram_integerize(m, 16), StructuralError);
}

TEST_CASE("gram_integerize signals precision loss on hopeless input") {
  // zero trace with large off-diagonal cannot be repaired within the budget
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  CHECK_THROWS_AS(gram_integerize(m, 8), PrecisionLoss);
}

TEST_CASE("gram_integerize computes a small positive shift when rounding "
          "breaks PSD") {
  Eigen::MatrixXd m(2, 2);
  m << 0.1, 0.3, 0.3, 0.9;  // singular PSD, rounds to [[0,1],[1,4]] at 2 bits
  GramForm g = gram_integerize(m, 2);
  CHECK(g.shift == 1);
  CHECK(g.matrix[0][0] == 1);
  CHECK(g.matrix[1][1] == 5);
}

TEST_CASE("lll identity basis is unchanged") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  auto [red, first] = lll_reduce(z2, GramForm::identity(2));
  CHECK(first == 1);
  for (int i = 0; i < 2; ++i) {
    long diag = red.basis[i][i].get_num().get_si();
    CHECK((diag == 1 || diag == -1));
  }
}

TEST_CASE("lll reduces a skewed basis to a unit vector") {
  LatticeState s = lattice_from_int_rows({{100, 1}, {99, 1}});
  auto [red, first] = lll_reduce(s, GramForm::identity(2));
  CHECK(first <= 2);  // 2^{k-1} lambda1^2 with lambda1 = 1
  CHECK(first == 1);
  CHECK(same_lattice(s, red));
}

TEST_CASE("lll under an anisotropic form prefers the cheap axis") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  auto [red, first] = lll_reduce(z2, diag_gram({4, 1}));
  CHECK(first == 1);
  CHECK(red.basis[0][0] == 0);
  long e2 = red.basis[0][1].get_num().get_si();
  CHECK((e2 == 1 || e2 == -1));
}

TEST_CASE("lll rejects rank-deficient bases and non-PSD forms") {
  LatticeState dep = lattice_from_int_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(lll_reduce(dep, GramForm::identity(2)), StructuralError);
  GramForm bad = GramForm::identity(2);
  bad.matrix[0][0] = -1;
  LatticeState z2 = LatticeState::integer_lattice(2);
  CHECK_THROWS_AS(lll_reduce(z2, bad), StructuralError);
}

TEST_CASE("approx_shortest_vector on an anisotropic norm") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  Eigen::MatrixXd norm(2, 2);
  norm << 0.04, 0.0, 0.0, 100.0;
  ShortestVectorResult r = approx_shortest_vector(z2, norm, 64);
  CHECK(r.norm_value == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(abs(r.v[0].get_num().get_si()) == 1);
  CHECK(r.v[1] == 0);
  CHECK(abs(r.preimage[0].get_si()) == 1);
  CHECK(r.preimage[1] == 0);
  CHECK(r.gamma >= std::sqrt(2.0));
  CHECK(r.gamma < std::sqrt(2.0) * 1.0001);
}

TEST_CASE("approx_shortest_vector under the identity norm") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  ShortestVectorResult r =
      approx_shortest_vector(z2, Eigen::MatrixXd::Identity(2, 2), 64);
  CHECK(r.norm_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("approx_shortest_vector on a rank-one projected lattice") {
  LatticeState s;
  s.ambient = 2;
  s.rank = 1;
  s.basis = {{make_rat(1, 2), make_rat(-1, 2)}};
  s.preimages = {{Int(1), Int(0)}};
  ShortestVectorResult r =
      approx_shortest_vector(s, Eigen::MatrixXd::Identity(2, 2), 64);
  CHECK(r.norm_value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(abs(r.v[0] * 2) == 1);
  CHECK(r.v[0] == -r.v[1]);
  CHECK(abs(r.preimage[0].get_si()) == 1);
  CHECK(r.preimage[1] == 0);
}

TEST_CASE("project_lattice along an axis") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  RatVec v = {Rat(0), Rat(1)};
  LatticeState p = project_lattice(z2, v);
  CHECK(p.rank == 1);
  CHECK(p.det_squared() == 1);
  CHECK(abs(p.basis[0][0]) == 1);
  CHECK(p.basis[0][1] == 0);
}

TEST_CASE("project_lattice along the diagonal") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  RatVec v = {Rat(1), Rat(1)};
  LatticeState p = project_lattice(z2, v);
  CHECK(p.rank == 1);
  CHECK(p.det_squared() == make_rat(1, 2));
  // generated by (1/2, -1/2)
  CHECK(abs(p.basis[0][0] * 2) == 1);
  CHECK(p.basis[0][0] == -p.basis[0][1]);
  // determinant identity: det(Z^2) = ||(1,1)|| * det(projection)
  double lhs = 1.0;
  double rhs = std::sqrt(2.0) * std::sqrt(to_double(p.det_squared()));
  CHECK(std::abs(lhs - rhs) <= 1e-12);
  // preimage of the projected basis vector still projects onto it
  RatVec pre = {Rat(p.preimages[0][0]), Rat(p.preimages[0][1])};
  Rat f = dot(pre, v) / dot(v, v);
  CHECK(pre[0] - f * v[0] == p.basis[0][0]);
  CHECK(pre[1] - f * v[1] == p.basis[0][1]);
}

TEST_CASE("project_lattice rejects non-lattice vectors") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  RatVec bad = {make_rat(1, 2), Rat(0)};
  CHECK_THROWS_AS(project_lattice(z2, bad), StructuralError);
}

TEST_CASE("brute force shortest vector examples") {
  LatticeState z2 = LatticeState::integer_lattice(2);
  CHECK(brute_force_shortest(z2, GramForm::identity(2), 2) == 1);

  LatticeState skew = lattice_from_int_rows({{100, 1}, {99, 1}});
  CHECK(brute_force_shortest(skew, GramForm::identity(2), 200) == 1);

  LatticeState z3 = LatticeState::integer_lattice(3);
  CHECK(brute_force_shortest(z3, diag_gram({9, 4, 1}), 3) == 1);
}

TEST_CASE("integer affine solve finds slab points and directions") {
  //  y1 + y2 = 3, over Z^2
  IntMat rows = {{Int(1), Int(1)}};
  IntVec rhs = {Int(3)};
  auto sol = integer_affine_solve(rows, rhs);
  REQUIRE(sol.has_value());
  CHECK(sol->point[0] + sol->point[1] == 3);
  REQUIRE(sol->directions.size() == 1);
  CHECK(sol->directions[0][0] + sol->directions[0][1] == 0);
  CHECK(abs(sol->directions[0][0]) == 1);

  // 2 y1 = 1 has no integral solution
  IntMat rows2 = {{Int(2), Int(0)}};
  IntVec rhs2 = {Int(1)};
  CHECK(!integer_affine_solve(rows2, rhs2).has_value());
}

TEST_CASE("hnf detects equal and distinct lattices") {
  LatticeState a = lattice_from_int_rows({{1, 0}, {0, 1}});
  LatticeState b = lattice_from_int_rows({{1, 5}, {2, 11}});  // det 1
  CHECK(same_lattice(a, b));
  LatticeState c = lattice_from_int_rows({{2, 0}, {0, 1}});
  CHECK(!same_lattice(a, c));
}

TEST_CASE("lattice property suite") {
  for (const auto& r : check_lll_suite(20240901)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("lattice json dump uses num/den strings") {
  LatticeState s;
  s.ambient = 2;
  s.rank = 1;
  s.basis = {{make_rat(1, 2), make_rat(-1, 2)}};
  s.preimages = {{Int(1), Int(0)}};
  std::string j = lattice_to_json(s);
  CHECK(j.find("\"1/2\"") != std::string::npos);
  CHECK(j.find("\"-1/2\"") != std::string::npos);
}
