#include <doctest.h>

#include <random>
#include <vector>

#include "cg23/poly.hpp"

using namespace cg23;

namespace {

Poly random_poly(const FieldSpec& F, int max_deg, std::mt19937_64& rng) {
  int deg = static_cast<int>(rng() % (max_deg + 1));
  std::vector<Fq> c;
  for (int i = 0; i <= deg; ++i) c.push_back(F.element_at(static_cast<long>(rng() % F.q())));
  return Poly(F, std::move(c));
}

// Laplace-expansion determinant; independent of the matrix module.
Fq naive_det(const FieldSpec& F, const std::vector<std::vector<Fq>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Fq acc = F.zero();
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Fq>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Fq> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Fq term = m[0][j] * naive_det(F, minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// det of the Sylvester matrix: deg(g) staggered rows of f's coefficients over
// deg(f) staggered rows of g's, both descending.
Fq sylvester_resultant(const Poly& f, const Poly& g) {
  const FieldSpec& F = f.spec();
  int m = f.degree(), n = g.degree();
  REQUIRE(m >= 1);
  REQUIRE(n >= 1);
  size_t N = static_cast<size_t>(m + n);
  std::vector<std::vector<Fq>> S(N, std::vector<Fq>(N, F.zero()));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S[r][r + k] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S[n + r][r + k] = g.coeff(n - k);
  return naive_det(F, S);
}

void check_resultant_pair(const Poly& f, const Poly& g) {
  const FieldSpec& F = f.spec();
  Fq r = resultant(f, g);
  CHECK((r.is_zero()) == (gcd(f, g).degree() >= 1));
  if (f.degree() >= 1 && g.degree() >= 1) CHECK(r == sylvester_resultant(f, g));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("construction trims and indexes coefficients") {
  const FieldSpec& F = FieldSpec::get(7, 1);
  Poly f = Poly::from_ints(F, {1, 2, 0, 0});
  CHECK(f.degree() == 1);
  CHECK(f.coeff(0) == F.from_int(1));
  CHECK(f.coeff(1) == F.from_int(2));
  CHECK(f.coeff(5) == F.zero());
  CHECK(Poly(F).is_zero());
  CHECK(Poly(F).degree() == -1);
  CHECK(Poly::from_ints(F, {0, 0}).is_zero());
  CHECK(Poly::from_ints(F, {-1}) == Poly::from_ints(F, {6}));
  CHECK(Poly::t(F) == Poly::from_ints(F, {0, 1}));
  CHECK(Poly::monomial(F, 3, F.from_int(2)) == Poly::from_ints(F, {0, 0, 0, 2}));
  CHECK_THROWS_AS(Poly(F).lc(), std::domain_error);
}

TEST_CASE("ring axioms hold for random polynomials") {
  std::mt19937_64 rng(20230817);
  for (const char* name : {"4", "7", "9"}) {
    const FieldSpec& F = FieldSpec::parse(name);
    CAPTURE(F.q());
    for (int it = 0; it < 150; ++it) {
      Poly f = random_poly(F, 4, rng), g = random_poly(F, 4, rng), h = random_poly(F, 4, rng);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f - f == Poly(F));
      if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
    }
  }
}

TEST_CASE("divmod gives quotient and strictly smaller remainder") {
  std::mt19937_64 rng(4077);
  const FieldSpec& F = FieldSpec::get(5, 1);
  for (int it = 0; it < 300; ++it) {
    Poly f = random_poly(F, 6, rng), g = random_poly(F, 4, rng);
    if (g.is_zero()) {
      CHECK_THROWS_AS(divmod(f, g), std::domain_error);
      continue;
    }
    auto [q, r] = divmod(f, g);
    CHECK(f == q * g + r);
    CHECK(r.degree() < g.degree());
    CHECK((f * g) % g == Poly(F));
    CHECK((f * g) / g == f);
  }
}

TEST_CASE("gcd is monic and respects common factors") {
  std::mt19937_64 rng(99);
  const FieldSpec& F = FieldSpec::get(3, 2);
  for (int it = 0; it < 150; ++it) {
    Poly f = random_poly(F, 3, rng), g = random_poly(F, 3, rng), h = random_poly(F, 2, rng);
    Poly d = gcd(f, g);
    if (!d.is_zero()) {
      CHECK(d.is_monic());
      CHECK((f % d).is_zero());
      CHECK((g % d).is_zero());
    }
    if (!f.is_zero() && !g.is_zero() && !h.is_zero())
      CHECK(gcd(f * h, g * h) == (gcd(f, g) * h).monic());
    if (!f.is_zero()) {
      CHECK(gcd(f, Poly(F)) == f.monic());
      Poly l = lcm(f, g);
      if (!g.is_zero()) {
        CHECK((l % f.monic()).is_zero());
        CHECK((l % g.monic()).is_zero());
        CHECK((l * gcd(f, g)) == (f * g).monic());
      }
    }
  }
  const FieldSpec& F5 = FieldSpec::get(5, 1);
  CHECK(gcd(Poly::from_ints(F5, {-1, 0, 1}), Poly::from_ints(F5, {-1, 1})) ==
        Poly::from_ints(F5, {-1, 1}));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
  std::mt19937_64 rng(512);
  for (const char* name : {"3", "8", "9"}) {
    const FieldSpec& F = FieldSpec::parse(name);
    for (int it = 0; it < 100; ++it) {
      Poly f = random_poly(F, 4, rng), g = random_poly(F, 4, rng);
      CHECK((f + g).derivative() == f.derivative() + g.derivative());
      CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
    // t^p has zero derivative in characteristic p.
    CHECK(Poly::monomial(F, static_cast<int>(F.p()), F.one()).derivative().is_zero());
  }
}

TEST_CASE("evaluation matches the power-sum definition and is multiplicative") {
  std::mt19937_64 rng(31337);
  const FieldSpec& F = FieldSpec::get(2, 3);
  for (int it = 0; it < 100; ++it) {
    Poly f = random_poly(F, 5, rng), g = random_poly(F, 5, rng);
    for (long r = 0; r < F.q(); ++r) {
      Fq e = F.element_at(r);
      Fq direct = F.zero();
      for (int i = 0; i <= f.degree(); ++i) direct += f.coeff(i) * e.pow(i);
      CHECK(f(e) == direct);
      CHECK((f * g)(e) == f(e) * g(e));
    }
  }
  CHECK(Poly::from_ints(F, {1, 1, 1})(F.zero()) == F.one());  // constant term at 0
}

TEST_CASE("freshman's dream square in characteristic 2") {
  const FieldSpec& F = FieldSpec::get(2, 1);
  Poly f = Poly::from_ints(F, {1, 0, 1});  // t^2+1
  CHECK(f * f == Poly::from_ints(F, {1, 0, 0, 0, 1}));
}

TEST_CASE("resultant agrees with the Sylvester determinant, exhaustively on tiny fields") {
  for (long p : {2L, 3L}) {
    const FieldSpec& F = FieldSpec::get(p, 1);
    long count = 1;
    for (int i = 0; i < 4; ++i) count *= F.q();  // encodings of degree <= 3
    for (long cf = 1; cf < count; ++cf) {
      std::vector<long> fc;
      long v = cf;
      for (int i = 0; i < 4; ++i) { fc.push_back(v % F.q()); v /= F.q(); }
      Poly f = Poly::from_ints(F, fc);
      for (long cg = 1; cg < count; ++cg) {
        std::vector<long> gc;
        long w = cg;
        for (int i = 0; i < 4; ++i) { gc.push_back(w % F.q()); w /= F.q(); }
        check_resultant_pair(f, Poly::from_ints(F, gc));
      }
    }
  }
}

TEST_CASE("resultant agrees with the Sylvester determinant on random larger-field pairs") {
  std::mt19937_64 rng(777);
  for (const char* name : {"4", "5", "7", "8", "9"}) {
    const FieldSpec& F = FieldSpec::parse(name);
    CAPTURE(F.q());
    for (int it = 0; it < 400; ++it) {
      Poly f = random_poly(F, 4, rng), g = random_poly(F, 4, rng);
      if (f.is_zero() || g.is_zero()) continue;
      check_resultant_pair(f, g);
    }
  }
}

TEST_CASE("resultant special values") {
  const FieldSpec& F = FieldSpec::get(7, 1);
  // root-product form: Res(t-2, t-3) = g(2) = -1.
  CHECK(resultant(Poly::from_ints(F, {-2, 1}), Poly::from_ints(F, {-3, 1})) == F.from_int(-1));
  CHECK(resultant(Poly::from_ints(F, {3}), Poly::from_ints(F, {4})) == F.one());
  CHECK(resultant(Poly(F), Poly::from_ints(F, {1, 1})) == F.zero());
  Poly f = Poly::from_ints(F, {1, 4, 0, 2});
  CHECK(resultant(f, Poly::from_ints(F, {5})) == F.from_int(5).pow(3));
  // multiplicativity in the second argument
  Poly g1 = Poly::from_ints(F, {2, 1}), g2 = Poly::from_ints(F, {1, 3, 1});
  CHECK(resultant(f, g1 * g2) == resultant(f, g1) * resultant(f, g2));
  // swap symmetry with sign (-1)^(deg f * deg g)
  CHECK(resultant(f, g2) == resultant(g2, f));      // 3*2 even
  CHECK(resultant(f, g1) == -resultant(g1, f));     // 3*1 odd
}

TEST_CASE("discriminant matches closed forms for quadratics and depressed cubics") {
  for (const char* name : {"5", "7", "9", "13"}) {
    const FieldSpec& F = FieldSpec::parse(name);
    CAPTURE(F.q());
    for (long rb = 0; rb < F.q(); ++rb) {
      for (long rc = 0; rc < F.q(); ++rc) {
        Fq b = F.element_at(rb), c = F.element_at(rc);
        Poly f(F, {c, b, F.one()});
        CHECK(discriminant(f) == b * b - Fq(4) * c);
        Poly split(F, {b * c, -(b + c), F.one()});  // (t-b)(t-c)
        CHECK(discriminant(split) == (b - c) * (b - c));
        Poly cubic(F, {c, b, F.zero(), F.one()});  // t^3 + b t + c
        CHECK(discriminant(cubic) == Fq(-4) * b.pow(3) - Fq(27) * c * c);
      }
    }
  }
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  CHECK(discriminant(Poly::from_ints(F2, {1, 1, 1})) == F2.one());
  CHECK(discriminant(Poly::from_ints(F2, {1, 0, 1})) == F2.zero());  // (t+1)^2
  CHECK_THROWS_AS(discriminant(Poly::from_ints(F2, {1})), std::domain_error);
}

TEST_CASE("discriminant vanishes exactly on non-squarefree polynomials") {
  const FieldSpec& F = FieldSpec::get(2, 2);
  // all monic degree-3 polynomials over GF(4)
  for (long c0 = 0; c0 < 4; ++c0)
    for (long c1 = 0; c1 < 4; ++c1)
      for (long c2 = 0; c2 < 4; ++c2) {
        Poly f(F, {F.element_at(c0), F.element_at(c1), F.element_at(c2), F.one()});
        bool squarefree = gcd(f, f.derivative()).degree() == 0;
        CHECK((discriminant(f).is_zero()) == !squarefree);
      }
}

TEST_CASE("string forms round out the api") {
  const FieldSpec& F = FieldSpec::get(3, 2);
  Poly f = Poly::from_ints(F, {2, 0, 1});
  CHECK(f.str() == "2,0;0,0;1,0");
  CHECK(f.pretty() == "t^2 + (2,0)");
  const FieldSpec& F7 = FieldSpec::get(7, 1);
  CHECK(Poly::from_ints(F7, {1, 2, 3}).pretty() == "3*t^2 + 2*t + 1");
  CHECK(Poly(F7).pretty() == "0");
}

}  // TEST_SUITE
