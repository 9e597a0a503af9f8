#include "intmin/rational.hpp"

#include <cmath>

namespace intmin {

double log_of_rat(const Rat& r) {
  if (sgn(r) <= 0) throw StructuralError("log of non-positive rational");
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) + (en - ed) * std::log(2.0);
}

Int round_nearest(const Rat& r) {
  // floor(r + 1/2) = floor((2 num + den) / (2 den)), den > 0 in canonical form
  Int num = 2 * r.get_num() + r.get_den();
  Int den = 2 * r.get_den();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RatMat gram_of_rows(const RatMat& rows, const RatMat& form) {
  const size_t k = rows.size();
  const size_t n = k ? rows[0].size() : 0;
  // form * rows^T first, then rows * that
  RatMat fr(k, RatVec(n, Rat(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t a = 0; a < n; ++a) {
      Rat s = 0;
      for (size_t b = 0; b < n; ++b) s += form[a][b] * rows[i][b];
      fr[i][a] = s;
    }
  RatMat g(k, RatVec(k, Rat(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j <= i; ++j) {
      Rat s = 0;
      for (size_t a = 0; a < n; ++a) s += rows[i][a] * fr[j][a];
      g[i][j] = s;
      g[j][i] = s;
    }
  return g;
}

namespace {

// Gaussian elimination; returns rank, destroys A, carries rhs columns along.
int row_reduce(RatMat& A, RatMat* rhs) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(A[piv], A[r]);
    if (rhs) std::swap((*rhs)[piv], (*rhs)[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c] / A[r][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      if (rhs)
        for (size_t j = 0; j < (*rhs)[i].size(); ++j)
          (*rhs)[i][j] -= f * (*rhs)[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

RatVec solve_row_system(const RatMat& A, const RatVec& rhs) {
  // x A = rhs  <=>  A^T x^T = rhs^T
  const int n = static_cast<int>(A.size());
  RatMat at(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = A[j][i];
  RatMat b(n, RatVec(1));
  for (int i = 0; i < n; ++i) b[i][0] = rhs[i];
  if (row_reduce(at, &b) != n) throw StructuralError("singular system");
  RatVec x(n);
  // at is now diagonal up to row permutation-free echelon: pivot of row i is
  // its first nonzero column
  for (int i = 0; i < n; ++i) {
    int c = 0;
    while (at[i][c] == 0) ++c;
    x[c] = b[i][0] / at[i][c];
  }
  return x;
}

Rat det(const RatMat& A) {
  RatMat M = A;
  const int n = static_cast<int>(M.size());
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (M[i][c] != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(M[piv], M[c]); d = -d; }
    d *= M[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[c][c];
      for (int j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return d;
}

RatMat inverse(const RatMat& A) {
  const int n = static_cast<int>(A.size());
  RatMat M = A;
  RatMat inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  if (row_reduce(M, &inv) != n) throw StructuralError("singular matrix");
  RatMat out(n, RatVec(n));
  for (int i = 0; i < n; ++i) {
    int c = 0;
    while (M[i][c] == 0) ++c;
    for (int j = 0; j < n; ++j) out[c][j] = inv[i][j] / M[i][c];
  }
  return out;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace intmin
