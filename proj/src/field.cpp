#include "cg23/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cg23 {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Minimal GF(p)[t] helpers used only for modulus validation and the default
// modulus search; ascending coefficient vectors, no leading zeros.
using PPoly = std::vector<long>;

PPoly ptrim(PPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PPoly pmod(PPoly f, const PPoly& g, long p) {
  long lg_inv = 0;
  {
    long lg = g.back() % p, t = 1;
    for (long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) t = t * lg % p;
      lg = lg * lg % p;
    }
    lg_inv = t;
  }
  while (f.size() >= g.size()) {
    long c = f.back() * lg_inv % p;
    size_t sh = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i)
      f[sh + i] = ((f[sh + i] - c * g[i]) % p + p) % p;
    f = ptrim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(ptrim(std::move(r)), m, p);
}

PPoly ppowmod(PPoly base, long long e, const PPoly& m, long p) {
  PPoly r{1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  while (!b.empty()) {
    PPoly r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility over GF(p) by trial gcd with t^(p^i) - t for i <= deg/2.
bool is_irreducible(const PPoly& f, long p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d < 1 || f.back() != 1) return false;
  if (d == 1) return true;
  PPoly tp = ppowmod({0, 1}, p, f, p);  // t^p mod f
  PPoly cur = tp;
  for (int i = 1; i <= d / 2; ++i) {
    // cur = t^(p^i) mod f; gcd(f, cur - t) must be constant
    PPoly diff = cur;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    diff = ptrim(std::move(diff));
    PPoly g = pgcd(f, diff, p);
    if (g.size() != 1) return false;
    // advance: cur = cur^p ... composing Frobenius = raising to p-th power
    cur = ppowmod(cur, p, f, p);
  }
  return true;
}

PPoly default_modulus(long p, int n) {
  if (n == 1) return {0, 1};
  // Least rank first: rank = sum c_i p^i over the non-leading coefficients.
  long bound = 1;
  for (int i = 0; i < n; ++i) bound *= p;
  for (long r = 0; r < bound; ++r) {
    PPoly f(n + 1, 0);
    long v = r;
    for (int i = 0; i < n; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

struct SpecKey {
  long p;
  int n;
  std::vector<long> modulus;
  bool operator<(const SpecKey& o) const {
    return std::tie(p, n, modulus) < std::tie(o.p, o.n, o.modulus);
  }
};

std::map<SpecKey, std::unique_ptr<FieldSpec>>& registry() {
  static std::map<SpecKey, std::unique_ptr<FieldSpec>> reg;
  return reg;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

constexpr long kTableLimit = 512;  // build dense op tables for q <= this

}  // namespace

FieldSpec::FieldSpec(long p, int n, std::vector<long> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < n_; ++i) {
    if (q_ > (1L << 40) / p_) throw std::invalid_argument("field too large");
    q_ *= p_;
  }
  if (q_ <= kTableLimit) {
    tabled_ = true;
    add_tab_.resize(q_ * q_);
    mul_tab_.resize(q_ * q_);
    neg_tab_.resize(q_);
    inv_tab_.resize(q_);
    for (long a = 0; a < q_; ++a) {
      for (long b = 0; b < q_; ++b) {
        std::vector<long> ca = coeffs_of(a), cb = coeffs_of(b);
        std::vector<long> cs(n_);
        for (int i = 0; i < n_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_tab_[a * q_ + b] = static_cast<uint16_t>(rank_of(cs));
        mul_tab_[a * q_ + b] = static_cast<uint16_t>(mul_generic(a, b));
      }
      std::vector<long> ca = coeffs_of(a), cn(n_);
      for (int i = 0; i < n_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_tab_[a] = static_cast<uint16_t>(rank_of(cn));
    }
    inv_tab_[0] = 0;
    for (long a = 1; a < q_; ++a) inv_tab_[a] = static_cast<uint16_t>(pow(a, q_ - 2));
  }
}

const FieldSpec& FieldSpec::get(long p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (n < 1) throw std::invalid_argument("extension degree must be positive");
  return get(p, n, default_modulus(p, n));
}

const FieldSpec& FieldSpec::get(long p, int n, const std::vector<long>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (n < 1) throw std::invalid_argument("extension degree must be positive");
  if (static_cast<int>(modulus.size()) != n + 1)
    throw std::invalid_argument("modulus must have degree n");
  std::vector<long> m(modulus);
  for (long& c : m) c = ((c % p) + p) % p;
  if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (n > 1 && !is_irreducible(m, p))
    throw std::invalid_argument("modulus is reducible");
  SpecKey key{p, n, m};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(key);
  if (it == reg.end())
    it = reg.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, n, m))).first;
  return *it->second;
}

const FieldSpec& FieldSpec::parse(const std::string& text) {
  auto slash = text.find('/');
  std::string head = text.substr(0, slash == std::string::npos ? text.size() : slash);
  long p = 0;
  int n = 1;
  auto caret = head.find('^');
  if (caret == std::string::npos) {
    // plain q: factor as a prime power
    long q = std::stol(head);
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    long base = 0;
    for (long d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        base = d;
        break;
      }
    }
    if (base == 0) {
      p = q;
      n = 1;
    } else {
      p = base;
      long v = q;
      n = 0;
      while (v % p == 0) {
        v /= p;
        ++n;
      }
      if (v != 1) throw std::invalid_argument("field size must be a prime power");
    }
  } else {
    p = std::stol(head.substr(0, caret));
    n = std::stoi(head.substr(caret + 1));
  }
  if (slash == std::string::npos) return get(p, n);
  std::vector<long> mod;
  std::stringstream ss(text.substr(slash + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) mod.push_back(std::stol(tok));
  return get(p, n, mod);
}

std::string FieldSpec::str() const {
  std::ostringstream os;
  os << p_ << '^' << n_ << '/';
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ',';
    os << modulus_[i];
  }
  return os.str();
}

Fq FieldSpec::from_int(long v) const { return Fq(this, ((v % p_) + p_) % p_); }

Fq FieldSpec::from_coeffs(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) > n_)
    throw std::invalid_argument("coefficient vector longer than extension degree");
  std::vector<long> cc(n_, 0);
  for (size_t i = 0; i < c.size(); ++i) cc[i] = ((c[i] % p_) + p_) % p_;
  return Fq(this, rank_of(cc));
}

Fq FieldSpec::parse_element(const std::string& text) const {
  std::vector<long> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stol(tok));
  if (c.empty()) throw std::invalid_argument("empty element string");
  return from_coeffs(c);
}

long FieldSpec::check_rank(long r) const {
  if (r < 0 || r >= q_) throw std::out_of_range("element rank out of range");
  return r;
}

std::vector<long> FieldSpec::coeffs_of(long rank) const {
  std::vector<long> c(n_);
  for (int i = 0; i < n_; ++i) {
    c[i] = rank % p_;
    rank /= p_;
  }
  return c;
}

long FieldSpec::rank_of(const std::vector<long>& c) const {
  long r = 0;
  for (int i = n_ - 1; i >= 0; --i) r = r * p_ + c[i];
  return r;
}

long FieldSpec::add(long a, long b) const {
  if (tabled_) return add_tab_[a * q_ + b];
  std::vector<long> ca = coeffs_of(a), cb = coeffs_of(b), cs(n_);
  for (int i = 0; i < n_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
  return rank_of(cs);
}

long FieldSpec::neg(long a) const {
  if (tabled_) return neg_tab_[a];
  std::vector<long> ca = coeffs_of(a), cn(n_);
  for (int i = 0; i < n_; ++i) cn[i] = (p_ - ca[i]) % p_;
  return rank_of(cn);
}

long FieldSpec::sub(long a, long b) const { return add(a, neg(b)); }

long FieldSpec::mul_generic(long a, long b) const {
  std::vector<long> ca = coeffs_of(a), cb = coeffs_of(b);
  std::vector<long> prod(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  for (int d = 2 * n_ - 2; d >= n_; --d) {
    long c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int k = 0; k < n_; ++k)
      prod[d - n_ + k] = ((prod[d - n_ + k] - c * modulus_[k]) % p_ + p_) % p_;
  }
  std::vector<long> out(prod.begin(), prod.begin() + n_);
  return rank_of(out);
}

long FieldSpec::mul(long a, long b) const {
  if (tabled_) return mul_tab_[a * q_ + b];
  return mul_generic(a, b);
}

long FieldSpec::pow(long a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  long r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long FieldSpec::inv(long a) const {
  if (a == 0) throw std::domain_error("division by zero in field");
  if (tabled_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

void Fq::align(Fq& a, Fq& b) {
  if (a.spec_ == b.spec_) return;
  if (a.spec_ && b.spec_)
    throw std::invalid_argument("mixed field specs in element arithmetic");
  if (!a.spec_) a = b.spec_->from_int(a.v_);
  else b = a.spec_->from_int(b.v_);
}

long Fq::rank() const {
  if (!spec_) throw std::logic_error("rank() on unattached element");
  return v_;
}

bool Fq::is_zero() const { return spec_ ? v_ == 0 : v_ == 0; }

bool Fq::is_one() const { return spec_ ? v_ == 1 : v_ == 1; }

Fq operator+(Fq a, Fq b) {
  if (!a.spec_ && !b.spec_) return Fq(a.v_ + b.v_);
  Fq::align(a, b);
  return Fq(a.spec_, a.spec_->add(a.v_, b.v_));
}

Fq operator-(Fq a, Fq b) {
  if (!a.spec_ && !b.spec_) return Fq(a.v_ - b.v_);
  Fq::align(a, b);
  return Fq(a.spec_, a.spec_->sub(a.v_, b.v_));
}

Fq operator*(Fq a, Fq b) {
  if (!a.spec_ && !b.spec_) return Fq(a.v_ * b.v_);
  Fq::align(a, b);
  return Fq(a.spec_, a.spec_->mul(a.v_, b.v_));
}

Fq operator/(Fq a, Fq b) {
  if (!a.spec_ && !b.spec_)
    throw std::logic_error("division of unattached literals");
  Fq::align(a, b);
  return Fq(a.spec_, a.spec_->mul(a.v_, a.spec_->inv(b.v_)));
}

bool operator==(Fq a, Fq b) {
  if (!a.spec_ && !b.spec_) return a.v_ == b.v_;
  Fq::align(a, b);
  return a.v_ == b.v_;
}

Fq Fq::operator-() const {
  if (!spec_) return Fq(-v_);
  return Fq(spec_, spec_->neg(v_));
}

Fq Fq::inverse() const {
  if (!spec_) throw std::logic_error("inverse of unattached literal");
  return Fq(spec_, spec_->inv(v_));
}

Fq Fq::pow(long long e) const {
  if (!spec_) throw std::logic_error("pow of unattached literal");
  return Fq(spec_, spec_->pow(v_, e));
}

Fq Fq::frobenius(long k) const {
  if (!spec_) throw std::logic_error("frobenius of unattached literal");
  if (k < 0) throw std::invalid_argument("frobenius exponent must be nonnegative");
  k %= spec_->n();
  long long e = 1;
  for (long i = 0; i < k; ++i) e *= spec_->p();
  return Fq(spec_, spec_->pow(v_, e));
}

std::vector<long> Fq::coeffs() const {
  if (!spec_) throw std::logic_error("coeffs of unattached literal");
  return spec_->coeffs_of(v_);
}

std::string Fq::str() const {
  if (!spec_) return std::to_string(v_);
  std::vector<long> c = coeffs();
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fq& e) { return os << e.str(); }

long element_order(Fq e) {
  if (!e.attached()) throw std::logic_error("element_order of unattached literal");
  if (e.is_zero()) throw std::domain_error("element_order of zero");
  const FieldSpec& F = *e.spec();
  long ord = F.q() - 1;
  long m = ord;
  for (long f = 2; f * f <= m; ++f) {
    while (m % f == 0) {
      m /= f;
      while (ord % f == 0 && e.pow(ord / f).is_one()) ord /= f;
    }
  }
  if (m > 1)
    while (ord % m == 0 && e.pow(ord / m).is_one()) ord /= m;
  return ord;
}

bool is_square(Fq e) {
  if (!e.attached()) throw std::logic_error("is_square of unattached literal");
  if (e.is_zero()) throw std::domain_error("is_square of zero");
  const FieldSpec& F = *e.spec();
  if (F.p() == 2) return true;  // squaring is a bijection in characteristic 2
  return e.pow((F.q() - 1) / 2).is_one();
}

std::vector<long> minimal_polynomial_int(Fq e) {
  if (!e.attached()) throw std::logic_error("minimal polynomial of unattached literal");
  const FieldSpec& F = *e.spec();
  // Frobenius orbit of e
  std::vector<Fq> orbit{e};
  for (Fq c = e.frobenius(1); c != e; c = c.frobenius(1)) orbit.push_back(c);
  // prod (t - c) over the orbit, computed with Fq coefficients
  std::vector<Fq> poly{F.one()};
  for (const Fq& c : orbit) {
    std::vector<Fq> next(poly.size() + 1, F.zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - c * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (const Fq& c : poly) {
    std::vector<long> cc = c.coeffs();
    for (size_t i = 1; i < cc.size(); ++i)
      if (cc[i] != 0) throw std::logic_error("minimal polynomial coefficient outside prime field");
    out.push_back(cc.empty() ? 0 : cc[0]);
  }
  return out;
}

bool generates_field(Fq e) {
  if (!e.attached()) throw std::logic_error("generates_field of unattached literal");
  return static_cast<int>(minimal_polynomial_int(e).size()) - 1 == e.spec()->n();
}

std::optional<Fq> omega_element(const FieldSpec& F) {
  if (F.p() == 3) return F.one();
  if ((F.q() - 1) % 3 != 0) return std::nullopt;
  for (long r = 2; r < F.q(); ++r) {
    Fq e = F.element_at(r);
    if (!e.is_one() && (e * e * e).is_one()) return e;
  }
  return std::nullopt;
}

}  // namespace cg23
