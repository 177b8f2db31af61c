#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "cg23/field.hpp"
#include "cg23/poly.hpp"

// Scalar adapter so Eigen dense types can hold GF(p^n) elements. Fq literals
// (Scalar(0), Scalar(1)) created inside Eigen kernels promote to the field of
// the other operand, so products and sums work unchanged; anything needing
// magnitudes or ordering (norms, LU pivoting) is not used on these matrices.
namespace Eigen {
template <>
struct NumTraits<cg23::Fq> {
  using Real = cg23::Fq;
  using NonInteger = cg23::Fq;
  using Nested = cg23::Fq;
  using Literal = cg23::Fq;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return cg23::Fq(0); }
  static inline Real dummy_precision() { return cg23::Fq(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace cg23 {

using Mat = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;

// First attached entry's field, or nullptr if every entry is a literal.
const FieldSpec* spec_of(const Mat& A);
const FieldSpec& spec_of_checked(const Mat& A);

// Promote every literal entry into F (attached entries must already be in F).
Mat attach(const FieldSpec& F, Mat A);
Vec attach_vec(const FieldSpec& F, Vec v);

Mat mat_from_ints(const FieldSpec& F, int rows, int cols, const std::vector<long>& row_major);
Vec vec_from_ints(const FieldSpec& F, const std::vector<long>& entries);
Mat identity_mat(const FieldSpec& F, int n);
Mat zero_mat(const FieldSpec& F, int rows, int cols);

bool mats_equal(const Mat& A, const Mat& B);
bool vecs_equal(const Vec& a, const Vec& b);
bool is_zero_mat(const Mat& A);
bool is_identity(const Mat& A);
bool is_diagonal(const Mat& A);
// The scalar lambda if A = lambda * I, otherwise nullopt.
std::optional<Fq> scalar_of(const Mat& A);

// Entrywise p^k power map.
Mat frobenius_entrywise(const Mat& A, long k = 1);

Fq det(const Mat& A);
int rank(const Mat& A);
Mat inverse(const Mat& A);  // throws std::domain_error on singular input

// Reduced column-vector bases from Gaussian elimination.
std::vector<Vec> kernel_basis(const Mat& A);
std::vector<Vec> image_basis(const Mat& A);
// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);

Mat mat_pow(const Mat& A, long long e);

// Least k in [1, cap] with A^k = I (resp. scalar), else nullopt.
// Throws std::domain_error on singular input.
std::optional<long> element_order(const Mat& A, long cap = 100000);
std::optional<long> projective_order(const Mat& A, long cap = 100000);

// Monic characteristic polynomial det(tI - A), by the division-free
// Berkowitz recursion (safe in small characteristic).
Poly char_poly(const Mat& A);
// Least-degree monic annihilator: lcm of the per-basis-vector Krylov
// annihilators.
Poly min_poly(const Mat& A);
// Nonconstant invariant factors of tI - A in divisibility order (each divides
// the next; product = char_poly, last = min_poly), via Smith normal form over
// GF(q)[t].
std::vector<Poly> invariant_factors(const Mat& A);

// Dimension of the unital matrix algebra generated by gens: closes a Gaussian-
// reduced word basis under left multiplication. Equals n^2 exactly when the
// generators act absolutely irreducibly (Burnside).
int spanning_dimension(const std::vector<Mat>& gens);

// f(A) with the constant term embedded as a scalar matrix.
Mat substitute_matrix(const Poly& f, const Mat& A);

// Row-major entry strings: rows joined by ';', entries by ' '.
std::string mat_str(const Mat& A);
std::string vec_str(const Vec& v);

}  // namespace cg23
