#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cg23/generators.hpp"

namespace cg23 {

// Twist applied to the right-hand factor of the invariance equation
// g^T M g^sigma = M: either none, or the entrywise q-power automorphism of a
// quadratic extension GF(q^2) (the unitary case).
enum class Sigma { Identity, QPower };

enum class FormKind { Symmetric, Alternating, Hermitian, None };
std::string form_kind_name(FormKind k);

struct FormSolution {
  Sigma sigma;
  // canonical basis of the solution space: each element scaled so its first
  // nonzero entry (row-major) is 1, then rescaled to a (M^T)^sigma = M
  // representative when the twisted case admits one
  std::vector<Mat> basis;
  std::vector<FormKind> kind;
  std::vector<bool> nondegenerate;
  int dimension() const { return static_cast<int>(basis.size()); }
};

// Solution space of {g^T M g^sigma = M for all g} by linear elimination in the
// n^2 entries of M.
FormSolution invariant_forms(const std::vector<Mat>& gens, Sigma sigma);
FormSolution invariant_forms(const GeneratorPair& pair, Sigma sigma);

struct QuadraticSolution {
  bool exists;                 // an invariant quadratic form with the requested polarization
  int homogeneous_dim;         // dimension of the solution space of the homogeneous part
  std::optional<Mat> witness;  // upper-triangular B with Q(v) = v^T B v, when it exists
};

// Characteristic-2 engine: upper-triangular B such that Q(gv) = Q(v) for all
// generators, and (optionally) with polarization B + B^T equal to a prescribed
// alternating matrix.
QuadraticSolution invariant_quadratic_system(const std::vector<Mat>& gens,
                                             const std::optional<Mat>& polarization);
// The 6-dimensional even-characteristic family, with polarization pinned to
// the pair's alternating Gram matrix; no solution is expected.
QuadraticSolution invariant_quadratic_char2(const GeneratorPair& pair);

struct WallForm {
  std::vector<Vec> basis;  // canonical basis of V_x = Im(x - I)
  Mat gram;                // w(u, v) = B(u', v) with (x - I) u' = u
  Fq det;                  // det of gram; 1 by convention when V_x = 0
};

// Wall form of x on V_x = Im(x - I) relative to an invariant nondegenerate
// bilinear form; odd characteristic only.
WallForm wall_form(const Mat& x, const Mat& bilinear);
// Same Gram matrix expressed in a caller-supplied basis of V_x.
Mat wall_form_gram(const Mat& x, const Mat& bilinear, const std::vector<Vec>& basis);

// The explicit basis {e1-e2, e3-e4, e5-e6, -a(e1+e2)+e5+e6+2e7} of V_x for the
// 7-dimensional orthogonal involution.
std::vector<Vec> dim7_reflection_basis(const FieldSpec& F, const Fq& a);

// The symmetric bilinear form fixed by the 7-dimensional pair at b = a, in the
// integer-polynomial normalization whose Wall Gram matrix in the reflection
// basis has the closed form with determinant 16(a-2)^2 (a-1) (a+2)^2: diagonal
// 3, off-diagonal -1 except B(0,5) = B(0,6) = B(1,4) = 2a-1,
// B(1,6) = B(2,3) = B(3,6) = 3-2a, B(5,6) = 2a^2-2a-1. Equals 3 times the
// first-entry-normalized solution of invariant_forms away from characteristic
// 3, and stays invariant and (for a outside {0,1,2,-2}) nondegenerate there.
Mat dim7_bilinear(const FieldSpec& F, const Fq& a);

// true iff det of the Wall Gram matrix is a square in F_q^*, the
// discriminant-class criterion for x lying in the kernel of the spinor norm.
bool spinor_norm_in_omega(const Mat& x, const Mat& bilinear);

}  // namespace cg23
