#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "intmin/errors.hpp"

namespace intmin {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Natural log of a positive rational, stable for extreme magnitudes.
double log_of_rat(const Rat& r);

// Round to the nearest integer, ties toward +infinity.
Int round_nearest(const Rat& r);

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

Rat dot(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);

// Gram matrix of the rows of `rows` under the quadratic form `form`
// (form is square with side rows[i].size()).
RatMat gram_of_rows(const RatMat& rows, const RatMat& form);

// Solve x * A = rhs for a square nonsingular A (row-vector convention).
// Throws StructuralError if A is singular.
RatVec solve_row_system(const RatMat& A, const RatVec& rhs);

// Determinant by fraction-preserving Gaussian elimination.
Rat det(const RatMat& A);

// Inverse of a square nonsingular rational matrix.
RatMat inverse(const RatMat& A);

std::string rat_to_string(const Rat& r);  // "num/den" (or "num" when den == 1)

}  // namespace intmin
