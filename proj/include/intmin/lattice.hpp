#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "intmin/rational.hpp"

namespace intmin {

// Integer PSD quadratic form obtained by scaling and rounding a real one.
// matrix ~= round(2^scale_bits * M) + shift * I.
struct GramForm {
  int dimension = 0;
  IntMat matrix;      // dimension x dimension, symmetric PSD
  int scale_bits = 0;
  Int shift = 0;
  double distortion = 0.0;  // 2^{1-p} k max|M| + shift / 2^p

  static GramForm identity(int dim);
};

// Basis of a (projected) lattice in ambient coordinates, with an integral
// preimage in Z^n carried for every basis vector.  For the solver's state
// the invariant is basis[i] == proj_W0(preimage[i]) exactly, where W0 is
// the current working subspace.
struct LatticeState {
  int ambient = 0;  // n
  int rank = 0;     // k
  RatMat basis;     // k rows of length n, exact rationals
  IntMat preimages; // k rows of length n

  static LatticeState integer_lattice(int n);
  // det(Lambda)^2 = det(B B^T), exact.
  Rat det_squared() const;
};

// Scale and round a real symmetric PSD matrix to an integer form, adding the
// smallest nonnegative integer diagonal shift that restores PSD-ness after
// rounding.  Throws PrecisionLoss when the shift exceeds 2^bits * trace(M),
// StructuralError on asymmetric input.
GramForm gram_integerize(const Eigen::MatrixXd& M, int bits);

// Exact PSD test for a symmetric rational matrix (LDL^T elimination).
bool is_psd(const RatMat& A);

// LLL reduction (delta = 3/4) of the basis under the quadratic form `gram`,
// which lives on the ambient coordinate frame.  Preimages are transformed by
// the same unimodular matrix.  Returns the reduced state together with the
// squared gram-norm of the first reduced vector (exact).
std::pair<LatticeState, Rat> lll_reduce(const LatticeState& state,
                                        const GramForm& gram);

struct ShortestVectorResult {
  RatVec v;                // nonzero lattice vector, ambient coordinates
  IntVec preimage;         // z with proj(z) == v
  double norm_value = 0.0; // ||v|| under the real norm matrix
  double gamma = 0.0;      // reported approximation factor
  Rat gram_norm_sq;        // ||v||^2 under the integerized form
};

// Approximate shortest vector of the lattice under a real PSD norm given in
// ambient coordinates: integerize the form, LLL-reduce, return the first
// basis vector.  gamma = 2^{(k-1)/2} * D where D bounds the multiplicative
// distortion introduced by integerization on the span of the lattice.
ShortestVectorResult approx_shortest_vector(const LatticeState& state,
                                            const Eigen::MatrixXd& norm_matrix,
                                            int bits);

// Orthogonal projection of the lattice onto {y : v^T y = 0}.  v must be a
// lattice vector (integer coordinates w.r.t. the current basis).  Preimages
// carry through: the preimage of a projected basis vector is the preimage of
// its source.
LatticeState project_lattice(const LatticeState& state, const RatVec& v);

// Exact minimum of ||sum c_i b_i||^2_gram over nonzero integer c with
// |c_i| <= coeff_bound.  Test oracle; requires rank <= 8.
Rat brute_force_shortest(const LatticeState& state, const GramForm& gram,
                         long coeff_bound);

// --- canonical forms and integer linear algebra -------------------------

// Row-style Hermite normal form of an integer row lattice: pivots positive,
// entries above each pivot reduced into [0, pivot).  Zero rows dropped.
IntMat hnf_rows(IntMat rows);

// Whether two rational bases generate the same lattice (HNF comparison after
// clearing denominators with a common factor).
bool same_lattice(const LatticeState& a, const LatticeState& b);

// Direct computation of proj_W0(Z^n) where W0 is the orthogonal complement
// of the given (independent) normal vectors.  Returns a basis as rows.
RatMat project_integer_lattice(int n, const std::vector<RatVec>& normals);

// Basis rows of a rational lattice in canonical (scaled HNF) form; used for
// exact lattice equality checks.
RatMat canonical_basis(const RatMat& rows);

struct AffineLatticeSolution {
  IntVec point;            // one integral solution
  IntMat directions;       // basis of the integral nullspace (rows)
};

// Solve rows[j] . y = rhs[j] over Z^n.  Rows must be linearly independent.
// Returns nullopt when no integral solution exists.
std::optional<AffineLatticeSolution> integer_affine_solve(const IntMat& rows,
                                                          const IntVec& rhs);

// Coordinates of v in the row span of basis, if v lies in it.
std::optional<RatVec> coordinates_in_basis(const RatMat& basis, const RatVec& v);

// Debug dump with exact rationals as "num/den" strings.
std::string lattice_to_json(const LatticeState& state);

}  // namespace intmin
