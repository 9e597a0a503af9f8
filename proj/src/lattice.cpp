#include "intmin/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace intmin {

GramForm GramForm::identity(int dim) {
  GramForm g;
  g.dimension = dim;
  g.matrix.assign(dim, IntVec(dim, Int(0)));
  for (int i = 0; i < dim; ++i) g.matrix[i][i] = 1;
  return g;
}

LatticeState LatticeState::integer_lattice(int n) {
  LatticeState s;
  s.ambient = n;
  s.rank = n;
  s.basis.assign(n, RatVec(n, Rat(0)));
  s.preimages.assign(n, IntVec(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    s.basis[i][i] = 1;
    s.preimages[i][i] = 1;
  }
  return s;
}

Rat LatticeState::det_squared() const {
  if (rank == 0) return Rat(1);
  RatMat g(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j <= i; ++j) {
      Rat s = dot(basis[i], basis[j]);
      g[i][j] = s;
      g[j][i] = s;
    }
  return det(g);
}

bool is_psd(const RatMat& A) {
  // symmetric elimination: PSD iff every pivot is >= 0 and any zero-pivot
  // row/column is entirely zero
  RatMat M = A;
  const int n = static_cast<int>(M.size());
  for (int c = 0; c < n; ++c) {
    if (M[c][c] < 0) return false;
    if (M[c][c] == 0) {
      for (int j = c; j < n; ++j)
        if (M[c][j] != 0) return false;
      continue;
    }
    for (int i = c + 1; i < n; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[c][c];
      for (int j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
    for (int j = c + 1; j < n; ++j) M[c][j] = 0;
  }
  return true;
}

namespace {

bool is_psd_int(const IntMat& A) {
  const int n = static_cast<int>(A.size());
  RatMat M(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
  return is_psd(M);
}

}  // namespace

GramForm gram_integerize(const Eigen::MatrixXd& M, int bits) {
  const int k = static_cast<int>(M.rows());
  if (M.cols() != k) throw StructuralError("gram_integerize: matrix not square");
  if (bits < 0) throw StructuralError("gram_integerize: negative bit count");
  const double max_abs = M.cwiseAbs().maxCoeff();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(M(i, j) - M(j, i)) > 1e-12 * (1.0 + max_abs))
        throw StructuralError("gram_integerize: asymmetric input");

  GramForm g;
  g.dimension = k;
  g.scale_bits = bits;
  g.matrix.assign(k, IntVec(k, Int(0)));
  Rat two_p = make_rat(Int(1) << bits, 1);
  Rat trace_scaled = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat avg = (Rat(M(i, j)) + Rat(M(j, i))) / 2;  // exact double -> rational
      Int r = round_nearest(avg * two_p);
      g.matrix[i][j] = r;
      g.matrix[j][i] = r;
    }
    trace_scaled += Rat(M(i, i)) * two_p;
  }

  if (!is_psd_int(g.matrix)) {
    // Gershgorin bound on the most negative eigenvalue after rounding
    Int hi = 1;
    for (int i = 0; i < k; ++i) {
      Int row = 0;
      for (int j = 0; j < k; ++j)
        if (j != i) row += abs(g.matrix[i][j]);
      row -= g.matrix[i][i];
      if (row + 1 > hi) hi = row + 1;
    }
    Int lo = 1;
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      IntMat probe = g.matrix;
      for (int i = 0; i < k; ++i) probe[i][i] += mid;
      if (is_psd_int(probe)) hi = mid; else lo = mid + 1;
    }
    g.shift = lo;
    for (int i = 0; i < k; ++i) g.matrix[i][i] += g.shift;
    if (Rat(g.shift) > trace_scaled)
      throw PrecisionLoss("gram_integerize: PSD shift " + g.shift.get_str() +
                          " exceeds scaled trace; increase bits");
  }
  g.distortion = std::ldexp(1.0, 1 - bits) * k * max_abs +
                 std::ldexp(g.shift.get_d(), -bits);
  return g;
}

namespace {

struct Gso {
  RatMat mu;   // lower triangular
  RatVec B;    // squared norms of Gram-Schmidt vectors
};

Gso compute_gso(const RatMat& W) {
  const int k = static_cast<int>(W.size());
  Gso g;
  g.mu.assign(k, RatVec(k, Rat(0)));
  g.B.assign(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      Rat s = W[i][j];
      for (int l = 0; l < j; ++l) s -= g.mu[j][l] * g.mu[i][l] * g.B[l];
      if (g.B[j] == 0) throw StructuralError("lll: rank-deficient basis");
      g.mu[i][j] = s / g.B[j];
    }
    Rat b = W[i][i];
    for (int l = 0; l < i; ++l) b -= g.mu[i][l] * g.mu[i][l] * g.B[l];
    if (b < 0) throw StructuralError("lll: form not PSD on basis span");
    if (b == 0) throw StructuralError("lll: rank-deficient basis");
    g.B[i] = b;
  }
  return g;
}

// b_i <- b_i - q b_j applied to the working Gram and the transform
void row_op(RatMat& W, IntMat& U, int i, int j, const Int& q) {
  if (q == 0) return;
  const int k = static_cast<int>(W.size());
  Rat qr(q);
  Rat old_ii = W[i][i];
  Rat old_ij = W[i][j];
  for (int l = 0; l < k; ++l) {
    if (l == i) continue;
    W[i][l] -= qr * W[j][l];
    W[l][i] = W[i][l];
  }
  W[i][i] = old_ii - 2 * qr * old_ij + qr * qr * W[j][j];
  for (int l = 0; l < static_cast<int>(U[i].size()); ++l)
    U[i][l] -= q * U[j][l];
}

void swap_rows(RatMat& W, IntMat& U, int i, int j) {
  std::swap(U[i], U[j]);
  std::swap(W[i], W[j]);
  for (auto& row : W) std::swap(row[i], row[j]);
}

}  // namespace

std::pair<LatticeState, Rat> lll_reduce(const LatticeState& state,
                                        const GramForm& gram) {
  const int k = state.rank;
  const int n = state.ambient;
  if (gram.dimension != n)
    throw StructuralError("lll_reduce: gram dimension mismatch");
  if (k == 0) throw StructuralError("lll_reduce: empty lattice");
  if (!is_psd_int(gram.matrix))
    throw StructuralError("lll_reduce: form not PSD");

  RatMat form(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form[i][j] = Rat(gram.matrix[i][j]);
  RatMat W = gram_of_rows(state.basis, form);

  IntMat U(k, IntVec(k, Int(0)));
  for (int i = 0; i < k; ++i) U[i][i] = 1;

  const Rat delta = make_rat(3, 4);
  Gso gso = compute_gso(W);  // validates rank / PSD-on-span up front

  long guard = 0;
  const long guard_cap = 100000L + 10000L * static_cast<long>(k) * k;
  int i = 1;
  while (i < k) {
    if (++guard > guard_cap) throw StructuralError("lll: iteration guard hit");
    gso = compute_gso(W);
    row_op(W, U, i, i - 1, round_nearest(gso.mu[i][i - 1]));
    gso = compute_gso(W);
    if (gso.B[i] >= (delta - gso.mu[i][i - 1] * gso.mu[i][i - 1]) * gso.B[i - 1]) {
      for (int j = i - 2; j >= 0; --j) {
        gso = compute_gso(W);
        row_op(W, U, i, j, round_nearest(gso.mu[i][j]));
      }
      ++i;
    } else {
      swap_rows(W, U, i - 1, i);
      i = std::max(i - 1, 1);
    }
  }

  LatticeState out;
  out.ambient = n;
  out.rank = k;
  out.basis.assign(k, RatVec(n, Rat(0)));
  out.preimages.assign(k, IntVec(n, Int(0)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (U[r][c] == 0) continue;
      Rat f(U[r][c]);
      for (int a = 0; a < n; ++a) {
        out.basis[r][a] += f * state.basis[c][a];
        out.preimages[r][a] += U[r][c] * state.preimages[c][a];
      }
    }
  return {out, W[0][0]};
}

ShortestVectorResult approx_shortest_vector(const LatticeState& state,
                                            const Eigen::MatrixXd& norm_matrix,
                                            int bits) {
  const int k = state.rank;
  const int n = state.ambient;
  if (k < 1) throw StructuralError("approx_shortest_vector: empty lattice");
  // normalize to unit scale by a power of two (exact) so the fixed bit
  // budget applies to the form's conditioning, not its magnitude
  double max_abs = norm_matrix.cwiseAbs().maxCoeff();
  if (!(max_abs > 0.0))
    throw PrecisionLoss("approx_shortest_vector: zero norm matrix");
  int scale_exp = std::ilogb(max_abs);
  Eigen::MatrixXd scaled = norm_matrix * std::ldexp(1.0, -scale_exp);
  GramForm gram = gram_integerize(scaled, bits);
  // one extra unit on the diagonal makes the form strictly PD, so reduction
  // cannot die on a span the rounded form barely annihilates
  for (int i = 0; i < n; ++i) gram.matrix[i][i] += 1;
  gram.shift += 1;
  auto [red, first_sq] = lll_reduce(state, gram);

  ShortestVectorResult res;
  res.v = red.basis[0];
  res.preimage = red.preimages[0];
  res.gram_norm_sq = first_sq;

  Eigen::VectorXd vd(n);
  for (int a = 0; a < n; ++a) vd[a] = to_double(res.v[a]);
  res.norm_value = std::sqrt(std::max(0.0, vd.dot(norm_matrix * vd)));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled);
  Eigen::VectorXd ev = es.eigenvalues();  // ascending
  double lam_min = ev[n - k];             // k-th largest: smallest on the span
  double e_max = std::ldexp(0.5 * n + gram.shift.get_d(), -bits);
  if (lam_min > e_max) {
    double ratio = e_max / lam_min;
    res.gamma = std::pow(2.0, (k - 1) / 2.0) * (1.0 + ratio) / (1.0 - ratio);
  } else {
    // distortion not certifiable at this bit budget: the form is this close
    // to singular on the span only when a dimension reduction is due
    res.gamma = std::numeric_limits<double>::infinity();
  }
  return res;
}

std::optional<RatVec> coordinates_in_basis(const RatMat& basis, const RatVec& v) {
  const int k = static_cast<int>(basis.size());
  RatMat g(k, RatVec(k));
  RatVec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      g[i][j] = dot(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
    rhs[i] = dot(v, basis[i]);
  }
  RatVec c;
  try {
    c = solve_row_system(g, rhs);
  } catch (const StructuralError&) {
    return std::nullopt;
  }
  // confirm v really lies in the span
  RatVec rec(v.size(), Rat(0));
  for (int i = 0; i < k; ++i)
    for (size_t a = 0; a < v.size(); ++a) rec[a] += c[i] * basis[i][a];
  for (size_t a = 0; a < v.size(); ++a)
    if (rec[a] != v[a]) return std::nullopt;
  return c;
}

namespace {

// Unimodular matrix whose first row equals the primitive integer vector c.
IntMat unimodular_with_first_row(const IntVec& c) {
  const int k = static_cast<int>(c.size());
  IntVec r = c;
  IntMat minv(k, IntVec(k, Int(0)));
  for (int i = 0; i < k; ++i) minv[i][i] = 1;

  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < k; ++i) std::swap(minv[i][a], minv[i][b]);
    std::swap(r[a], r[b]);
  };
  // r[j] -= q r[p]  =>  minv col p += q * col j
  auto reduce = [&](int j, int p, const Int& q) {
    r[j] -= q * r[p];
    for (int i = 0; i < k; ++i) minv[i][p] += q * minv[i][j];
  };

  while (true) {
    int piv = -1;
    for (int i = 0; i < k; ++i)
      if (r[i] != 0 && (piv < 0 || abs(r[i]) < abs(r[piv]))) piv = i;
    if (piv < 0) throw StructuralError("unimodular completion of zero vector");
    bool others = false;
    for (int i = 0; i < k; ++i) {
      if (i == piv || r[i] == 0) continue;
      others = true;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), r[i].get_mpz_t(), r[piv].get_mpz_t());
      reduce(i, piv, q);
    }
    if (!others) {
      if (piv != 0) col_swap(piv, 0);
      if (r[0] < 0) {
        r[0] = -r[0];
        for (int i = 0; i < k; ++i) minv[i][0] = -minv[i][0];
      }
      break;
    }
  }
  if (r[0] != 1)
    throw StructuralError("unimodular completion: vector not primitive");
  IntMat u(k, IntVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) u[i][j] = minv[j][i];
  return u;
}

}  // namespace

LatticeState project_lattice(const LatticeState& state, const RatVec& v) {
  const int k = state.rank;
  const int n = state.ambient;
  auto coords = coordinates_in_basis(state.basis, v);
  if (!coords) throw StructuralError("project_lattice: v not in lattice span");
  IntVec c(k);
  bool nonzero = false;
  for (int i = 0; i < k; ++i) {
    if (!is_integral((*coords)[i]))
      throw StructuralError("project_lattice: v not a lattice vector");
    c[i] = (*coords)[i].get_num();
    if (c[i] != 0) nonzero = true;
  }
  if (!nonzero) throw StructuralError("project_lattice: v is zero");

  Int g = 0;
  for (const Int& ci : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
  for (Int& ci : c) ci /= g;

  IntMat u = unimodular_with_first_row(c);
  RatMat a(k, RatVec(n, Rat(0)));
  IntMat pre(k, IntVec(n, Int(0)));
  for (int r = 0; r < k; ++r)
    for (int cc = 0; cc < k; ++cc) {
      if (u[r][cc] == 0) continue;
      Rat f(u[r][cc]);
      for (int j = 0; j < n; ++j) {
        a[r][j] += f * state.basis[cc][j];
        pre[r][j] += u[r][cc] * state.preimages[cc][j];
      }
    }

  const RatVec& w = a[0];  // primitive vector along v
  Rat ww = dot(w, w);
  LatticeState out;
  out.ambient = n;
  out.rank = k - 1;
  out.basis.reserve(k - 1);
  out.preimages.reserve(k - 1);
  for (int r = 1; r < k; ++r) {
    Rat f = dot(a[r], w) / ww;
    RatVec row(n);
    for (int j = 0; j < n; ++j) row[j] = a[r][j] - f * w[j];
    out.basis.push_back(std::move(row));
    out.preimages.push_back(pre[r]);
  }
  return out;
}

namespace {

void brute_rec(const RatMat& W, long bound, int d, const Rat& quad,
               const RatVec& lin, bool nonzero, std::optional<Rat>& best) {
  const int k = static_cast<int>(W.size());
  if (d == k) {
    if (nonzero && (!best || quad < *best)) best = quad;
    return;
  }
  long lo = nonzero ? -bound : 0;
  for (long c = lo; c <= bound; ++c) {
    if (c == 0) {
      brute_rec(W, bound, d + 1, quad, lin, nonzero, best);
      continue;
    }
    Rat cc(static_cast<long>(c));
    Rat q2 = quad + 2 * cc * lin[d] + cc * cc * W[d][d];
    RatVec lin2 = lin;
    for (int j = 0; j < k; ++j) lin2[j] += cc * W[d][j];
    brute_rec(W, bound, d + 1, q2, lin2, true, best);
  }
}

}  // namespace

Rat brute_force_shortest(const LatticeState& state, const GramForm& gram,
                         long coeff_bound) {
  if (state.rank < 1 || state.rank > 8)
    throw StructuralError("brute_force_shortest: rank out of range");
  const int n = state.ambient;
  RatMat form(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form[i][j] = Rat(gram.matrix[i][j]);
  RatMat W = gram_of_rows(state.basis, form);
  std::optional<Rat> best;
  RatVec lin(state.rank, Rat(0));
  brute_rec(W, coeff_bound, 0, Rat(0), lin, false, best);
  return *best;
}

IntMat hnf_rows(IntMat m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return m;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    while (true) {
      int piv = -1;
      int nz = 0;
      for (int i = r; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        ++nz;
        if (piv < 0 || abs(m[i][col]) < abs(m[piv][col])) piv = i;
      }
      if (nz == 0) { piv = -1; break; }
      if (nz == 1) {
        std::swap(m[piv], m[r]);
        break;
      }
      for (int i = r; i < rows; ++i) {
        if (i == piv || m[i][col] == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(),
                   m[piv][col].get_mpz_t());
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[piv][j];
      }
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

namespace {

Int rows_denominator_lcm(const RatMat& rows) {
  Int d = 1;
  for (const auto& row : rows)
    for (const auto& x : row)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  return d;
}

IntMat scale_rows(const RatMat& rows, const Int& d) {
  IntMat m(rows.size(), IntVec(rows.empty() ? 0 : rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      Rat s = rows[i][j] * Rat(d);
      if (!is_integral(s)) throw StructuralError("scale_rows: bad lcm");
      m[i][j] = s.get_num();
    }
  return m;
}

}  // namespace

bool same_lattice(const LatticeState& a, const LatticeState& b) {
  if (a.ambient != b.ambient) return false;
  Int d = rows_denominator_lcm(a.basis);
  Int db = rows_denominator_lcm(b.basis);
  mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), db.get_mpz_t());
  return hnf_rows(scale_rows(a.basis, d)) == hnf_rows(scale_rows(b.basis, d));
}

RatMat canonical_basis(const RatMat& rows) {
  if (rows.empty()) return rows;
  Int d = rows_denominator_lcm(rows);
  IntMat h = hnf_rows(scale_rows(rows, d));
  RatMat out(h.size(), RatVec(rows[0].size()));
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = 0; j < h[i].size(); ++j) out[i][j] = make_rat(h[i][j], d);
  return out;
}

RatMat project_integer_lattice(int n, const std::vector<RatVec>& normals) {
  RatMat gens(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) gens[i][i] = 1;
  if (!normals.empty()) {
    const int t = static_cast<int>(normals.size());
    RatMat g(t, RatVec(t));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) g[i][j] = dot(normals[i], normals[j]);
    RatMat ginv = inverse(g);
    // proj(e_i) = e_i - V G^{-1} V^T e_i
    for (int i = 0; i < n; ++i) {
      RatVec vt(t);
      for (int a = 0; a < t; ++a) vt[a] = normals[a][i];
      RatVec coef(t, Rat(0));
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) coef[a] += ginv[a][b] * vt[b];
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int a = 0; a < t; ++a) s += coef[a] * normals[a][j];
        gens[i][j] -= s;
      }
    }
  }
  return canonical_basis(gens);
}

std::optional<AffineLatticeSolution> integer_affine_solve(const IntMat& rows,
                                                          const IntVec& rhs) {
  const int t = static_cast<int>(rows.size());
  if (t == 0) throw StructuralError("integer_affine_solve: empty system");
  const int n = static_cast<int>(rows[0].size());
  IntMat m = rows;
  IntMat u(n, IntVec(n, Int(0)));
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto col_op = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < t; ++i) m[i][dst] -= q * m[i][src];
    for (int i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < t; ++i) std::swap(m[i][a], m[i][b]);
    for (int i = 0; i < n; ++i) std::swap(u[i][a], u[i][b]);
  };
  auto col_neg = [&](int a) {
    for (int i = 0; i < t; ++i) m[i][a] = -m[i][a];
    for (int i = 0; i < n; ++i) u[i][a] = -u[i][a];
  };

  for (int i = 0; i < t; ++i) {
    while (true) {
      int piv = -1;
      int nz = 0;
      for (int j = i; j < n; ++j) {
        if (m[i][j] == 0) continue;
        ++nz;
        if (piv < 0 || abs(m[i][j]) < abs(m[i][piv])) piv = j;
      }
      if (nz == 0)
        throw StructuralError("integer_affine_solve: dependent rows");
      if (nz == 1) {
        if (piv != i) col_swap(piv, i);
        break;
      }
      for (int j = i; j < n; ++j) {
        if (j == piv || m[i][j] == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][piv].get_mpz_t());
        col_op(j, piv, q);
      }
    }
    if (m[i][i] < 0) col_neg(i);
  }

  IntVec y(t);
  for (int i = 0; i < t; ++i) {
    Int val = rhs[i];
    for (int l = 0; l < i; ++l) val -= m[i][l] * y[l];
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), val.get_mpz_t(),
                m[i][i].get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[i] = q;
  }

  AffineLatticeSolution sol;
  sol.point.assign(n, Int(0));
  for (int l = 0; l < t; ++l)
    for (int i = 0; i < n; ++i) sol.point[i] += y[l] * u[i][l];
  sol.directions.assign(n - t, IntVec(n));
  for (int c = t; c < n; ++c)
    for (int i = 0; i < n; ++i) sol.directions[c - t][i] = u[i][c];
  return sol;
}

std::string lattice_to_json(const LatticeState& s) {
  std::ostringstream os;
  os << "{\"ambient\":" << s.ambient << ",\"rank\":" << s.rank
     << ",\"basis\":[";
  for (int i = 0; i < s.rank; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < s.ambient; ++j)
      os << (j ? ",\"" : "\"") << rat_to_string(s.basis[i][j]) << "\"";
    os << "]";
  }
  os << "],\"preimages\":[";
  for (int i = 0; i < s.rank; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < s.ambient; ++j)
      os << (j ? "," : "") << s.preimages[i][j].get_str();
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace intmin
