#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cg23 {

class FieldSpec;

// Element of GF(p^n), or a plain integer literal not yet attached to a field.
// The literal state exists so that generic numeric code (Eigen kernels, Poly
// arithmetic) can write Fq(0) / Fq(1); literals promote to the field of the
// other operand on first contact. Attached elements store the rank
// sum c_i * p^i of their coefficient vector (c_0 least significant).
class Fq {
public:
  Fq() : spec_(nullptr), v_(0) {}
  Fq(long v) : spec_(nullptr), v_(v) {}
  Fq(int v) : spec_(nullptr), v_(v) {}
  Fq(const FieldSpec* spec, long rank) : spec_(spec), v_(rank) {}

  const FieldSpec* spec() const { return spec_; }
  bool attached() const { return spec_ != nullptr; }
  long rank() const;

  bool is_zero() const;
  bool is_one() const;

  Fq operator-() const;
  Fq inverse() const;
  Fq pow(long long e) const;
  Fq frobenius(long k = 1) const;  // p^k power map

  std::vector<long> coeffs() const;  // length n, entries in [0,p)
  std::string str() const;           // "c0,c1,...,c{n-1}"

  friend Fq operator+(Fq a, Fq b);
  friend Fq operator-(Fq a, Fq b);
  friend Fq operator*(Fq a, Fq b);
  friend Fq operator/(Fq a, Fq b);
  friend bool operator==(Fq a, Fq b);
  friend bool operator!=(Fq a, Fq b) { return !(a == b); }

  Fq& operator+=(Fq o) { return *this = *this + o; }
  Fq& operator-=(Fq o) { return *this = *this - o; }
  Fq& operator*=(Fq o) { return *this = *this * o; }
  Fq& operator/=(Fq o) { return *this = *this / o; }

private:
  static void align(Fq& a, Fq& b);
  const FieldSpec* spec_;
  long v_;
};

std::ostream& operator<<(std::ostream& os, const Fq& e);

// Immutable description of GF(p^n) with an explicit monic irreducible modulus.
// Instances are interned: get() returns a reference that stays valid for the
// lifetime of the program, and two Fq values belong to the same field iff
// their spec pointers are equal.
class FieldSpec {
public:
  // Default modulus: the monic irreducible of least rank (see element_at).
  static const FieldSpec& get(long p, int n);
  static const FieldSpec& get(long p, int n, const std::vector<long>& modulus);
  // Accepts "q" (prime power, default modulus) or "p^n/c0,c1,...,1".
  static const FieldSpec& parse(const std::string& text);

  long p() const { return p_; }
  int n() const { return n_; }
  long q() const { return q_; }
  // Ascending coefficients, length n+1, leading coefficient 1.
  const std::vector<long>& modulus() const { return modulus_; }
  std::string str() const;

  Fq zero() const { return Fq(this, 0); }
  Fq one() const { return Fq(this, 1); }
  Fq from_int(long v) const;
  Fq from_coeffs(const std::vector<long>& c) const;
  // Elements in enumeration order: element_at(r) has coefficients given by the
  // base-p digits of r, c_0 least significant. r in [0, q).
  Fq element_at(long r) const { return Fq(this, check_rank(r)); }
  Fq parse_element(const std::string& text) const;

  // Rank-level arithmetic; Fq delegates here.
  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long long e) const;
  std::vector<long> coeffs_of(long rank) const;
  long rank_of(const std::vector<long>& c) const;

private:
  FieldSpec(long p, int n, std::vector<long> modulus);
  long check_rank(long r) const;
  long mul_generic(long a, long b) const;

  long p_;
  int n_;
  long q_;
  std::vector<long> modulus_;
  // Dense tables for the small fields in scope.
  std::vector<uint16_t> add_tab_, mul_tab_;
  std::vector<uint16_t> neg_tab_, inv_tab_;
  bool tabled_ = false;
};

// Multiplicative order of a nonzero element (factors q-1 and descends).
long element_order(Fq e);

// e^((q-1)/2) == 1 test; every element of a characteristic-2 field counts as a
// square. Throws on zero.
bool is_square(Fq e);

// Monic minimal polynomial of e over the prime field, returned as ascending
// integer coefficients (all in [0,p)). Degree divides n.
std::vector<long> minimal_polynomial_int(Fq e);

// True iff the prime field adjoined with e is the whole field.
bool generates_field(Fq e);

// An element of multiplicative order 3: 1 when p = 3, otherwise the least-rank
// order-3 element if 3 | q-1, otherwise nullopt.
std::optional<Fq> omega_element(const FieldSpec& F);

}  // namespace cg23
