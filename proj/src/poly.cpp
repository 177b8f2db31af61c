#include "cg23/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cg23 {

namespace {

const FieldSpec& common_spec(const Poly& f, const Poly& g) {
  if (&f.spec() != &g.spec())
    throw std::invalid_argument("mixed field specs in polynomial arithmetic");
  return f.spec();
}

}  // namespace

Poly::Poly(const FieldSpec& F, std::vector<Fq> coeffs) : spec_(&F), coeffs_(std::move(coeffs)) {
  for (Fq& c : coeffs_) c = F.zero() + c;  // promote literals, reject foreign specs
  trim();
}

Poly Poly::from_ints(const FieldSpec& F, const std::vector<long>& coeffs) {
  std::vector<Fq> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(F.from_int(v));
  return Poly(F, std::move(c));
}

Poly Poly::constant(const FieldSpec& F, Fq c) { return Poly(F, {c}); }

Poly Poly::monomial(const FieldSpec& F, int deg, Fq c) {
  if (deg < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Fq> v(deg + 1, F.zero());
  v[deg] = F.zero() + c;
  return Poly(F, std::move(v));
}

Fq Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return spec_->zero();
  return coeffs_[i];
}

Fq Poly::lc() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (coeffs_.empty() || coeffs_.back().is_one()) return *this;
  return lc().inverse() * *this;
}

Fq Poly::operator()(Fq e) const {
  Fq acc = spec_->zero();
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * e + coeffs_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Fq> d;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(spec_->from_int(static_cast<long>(i)) * coeffs_[i]);
  return Poly(*spec_, std::move(d));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& f, const Poly& g) {
  const FieldSpec& F = common_spec(f, g);
  std::vector<Fq> c(std::max(f.coeffs_.size(), g.coeffs_.size()), F.zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
  return Poly(F, std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly Poly::operator-() const {
  std::vector<Fq> c(coeffs_);
  for (Fq& e : c) e = -e;
  return Poly(*spec_, std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
  const FieldSpec& F = common_spec(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(F);
  std::vector<Fq> c(f.coeffs_.size() + g.coeffs_.size() - 1, F.zero());
  for (size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < g.coeffs_.size(); ++j)
      c[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return Poly(F, std::move(c));
}

Poly operator*(Fq c, const Poly& f) {
  std::vector<Fq> v(f.coeffs_);
  for (Fq& e : v) e = c * e;
  return Poly(*f.spec_, std::move(v));
}

bool operator==(const Poly& f, const Poly& g) {
  if (&f.spec() != &g.spec()) return false;
  return f.coeffs_ == g.coeffs_;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  const FieldSpec& F = common_spec(f, g);
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.degree() < g.degree()) return {Poly(F), f};
  Fq inv_lc = g.lc().inverse();
  std::vector<Fq> rem(f.coeffs());
  std::vector<Fq> quot(f.degree() - g.degree() + 1, F.zero());
  for (int d = f.degree(); d >= g.degree(); --d) {
    Fq c = rem[d] * inv_lc;
    if (c.is_zero()) continue;
    quot[d - g.degree()] = c;
    for (int i = 0; i <= g.degree(); ++i)
      rem[d - g.degree() + i] -= c * g.coeff(i);
  }
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

Poly gcd(Poly f, Poly g) {
  common_spec(f, g);
  while (!g.is_zero()) {
    Poly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
  const FieldSpec& F = common_spec(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(F);
  Poly d = gcd(f, g);
  auto [q, r] = divmod(f * g, d);
  if (!r.is_zero()) throw std::logic_error("gcd does not divide product");
  return q.monic();
}

Fq resultant(Poly f, Poly g) {
  const FieldSpec& F = common_spec(f, g);
  if (f.is_zero() || g.is_zero()) return F.zero();
  Fq res = F.one();
  while (g.degree() > 0) {
    Poly r = f % g;
    if (r.is_zero()) return F.zero();
    int df = f.degree(), dg = g.degree(), dr = r.degree();
    if (df % 2 == 1 && dg % 2 == 1) res = -res;
    res *= g.lc().pow(df - dr);
    f = std::move(g);
    g = std::move(r);
  }
  return res * g.coeff(0).pow(f.degree());
}

Fq discriminant(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant of a constant");
  const FieldSpec& F = f.spec();
  int d = f.degree();
  Fq r = resultant(f, f.derivative());
  Fq sign = (d * (d - 1) / 2) % 2 == 0 ? F.one() : -F.one();
  return sign * r / f.lc();
}

std::string Poly::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ';';
    os << coeffs_[i].str();
  }
  return os.str();
}

std::string Poly::pretty() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Fq c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    if (!unit || i == 0) {
      if (spec_->n() == 1) os << c.str();
      else os << '(' << c.str() << ')';
    }
    if (i >= 1) {
      if (!unit) os << '*';
      os << 't';
      if (i >= 2) os << '^' << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.pretty(); }

}  // namespace cg23
