#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cg23/field.hpp"

namespace cg23 {

// Univariate polynomial over a fixed GF(p^n), ascending coefficients with no
// trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
public:
  explicit Poly(const FieldSpec& F) : spec_(&F) {}
  Poly(const FieldSpec& F, std::vector<Fq> coeffs);
  static Poly from_ints(const FieldSpec& F, const std::vector<long>& coeffs);
  static Poly constant(const FieldSpec& F, Fq c);
  // c * t^deg
  static Poly monomial(const FieldSpec& F, int deg, Fq c);
  static Poly t(const FieldSpec& F) { return monomial(F, 1, F.one()); }

  const FieldSpec& spec() const { return *spec_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Fq coeff(int i) const;  // zero beyond the degree
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  Fq lc() const;  // leading coefficient; throws on the zero polynomial
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  Poly monic() const;

  Fq operator()(Fq e) const;  // Horner evaluation
  Poly derivative() const;

  std::string str() const;     // coefficient strings joined by ';'
  std::string pretty() const;  // human-readable in the variable t

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Fq c, const Poly& f);
  Poly operator-() const;
  friend bool operator==(const Poly& f, const Poly& g);
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

private:
  void trim();
  const FieldSpec* spec_;
  std::vector<Fq> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

// Quotient and remainder with deg r < deg g; throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);  // quotient
Poly operator%(const Poly& f, const Poly& g);  // remainder

// Monic gcd; gcd(0,0) = 0.
Poly gcd(Poly f, Poly g);

// Least common multiple, monic when nonzero.
Poly lcm(const Poly& f, const Poly& g);

// Res(f,g) = lc(f)^{deg g} * prod over roots r of f (with multiplicity) of
// g(r), computed by a Euclidean remainder sequence with leading-coefficient
// bookkeeping. Zero when f and g share a factor; res of two nonzero constants
// is 1; res with the zero polynomial is 0.
Fq resultant(Poly f, Poly g);

// (-1)^(d(d-1)/2) * Res(f, f') / lc(f) with d = deg f; throws on constants.
Fq discriminant(const Poly& f);

}  // namespace cg23
