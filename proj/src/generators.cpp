#include "cg23/generators.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cg23 {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int dimension;
  bool parameterized;
};

const FamilyInfo kFamilies[] = {
    {Family::Sp6Even, "sp6", 6, true},
    {Family::Dim7Orth, "o7", 7, true},
    {Family::Dim7Unit, "u7", 7, true},
    {Family::Sp6_3Intro, "sp6-3", 6, false},
    {Family::SU7_4Special, "su7-4", 7, false},
    {Family::Om7_3Special, "o7-3", 7, false},
    {Family::Om7_5Special, "o7-5", 7, false},
    {Family::SL7Variant, "sl7", 7, true},
};

const FamilyInfo& info(Family f) {
  for (const FamilyInfo& fi : kFamilies)
    if (fi.family == f) return fi;
  throw std::logic_error("unknown family");
}

// (p, n) of the field a fixed pair is defined over
std::pair<long, int> fixed_field_shape(Family f) {
  switch (f) {
    case Family::Sp6_3Intro: return {3, 1};
    case Family::SU7_4Special: return {2, 2};
    case Family::Om7_3Special: return {3, 1};
    case Family::Om7_5Special: return {5, 1};
    default: throw std::logic_error("family is parameterized");
  }
}

Mat rows_from_ints(const FieldSpec& F, int n, const std::vector<long>& entries) {
  return mat_from_ints(F, n, n, entries);
}

std::pair<Mat, Mat> sp6_matrices(const FieldSpec& F, const Fq& a) {
  Mat x = rows_from_ints(F, 6,
                         {0, 0, 1, 0, 0, 0,
                          0, 0, 0, 1, 0, 0,
                          1, 0, 0, 0, 0, 0,
                          0, 1, 0, 0, 0, 0,
                          0, 0, 0, 0, 1, 0,
                          0, 0, 0, 0, 0, 1});
  x(5, 4) = a;
  Mat y = rows_from_ints(F, 6,
                         {1, 0, 0, 1, 1, 0,
                          0, 1, 0, 0, 0, 0,
                          0, 0, 0, 1, 0, 0,
                          0, 0, 1, 1, 0, 0,
                          0, 0, 1, 1, 1, 1,
                          0, 0, 1, 0, 1, 0});
  y(4, 1) = a;
  y(5, 1) = a;
  return {std::move(x), std::move(y)};
}

std::pair<Mat, Mat> intro_matrices(const FieldSpec& F) {
  Mat x = rows_from_ints(F, 6,
                         {-1, 0, 0, 1, 0, 0,
                          0, -1, 0, 0, 1, 0,
                          0, 0, 0, 0, 0, 1,
                          1, 0, 0, 1, 0, 0,
                          0, 1, 0, 0, 1, 0,
                          0, 0, -1, 0, 0, 0});
  Mat y = rows_from_ints(F, 6,
                         {0, 0, 1, 1, 1, 1,
                          1, 0, 0, 1, 1, 1,
                          0, 1, 0, 1, 1, 1,
                          0, 0, 0, 0, 0, 1,
                          0, 0, 0, 1, 0, 0,
                          0, 0, 0, 0, 1, 0});
  return {std::move(x), std::move(y)};
}

std::pair<Mat, Mat> su7_matrices(const FieldSpec& F) {
  Fq w = *omega_element(F);
  Fq w2 = w * w;
  Mat x = rows_from_ints(F, 7,
                         {0, 1, 0, 0, 0, 0, 0,
                          1, 0, 0, 0, 0, 0, 0,
                          0, 0, 1, 0, 0, 0, 0,
                          0, 0, 0, 1, 1, 0, 0,
                          0, 0, 0, 1, 0, 0, 0,
                          0, 0, 0, 0, 0, 1, 0,
                          0, 0, 0, 0, 0, 0, 0});
  x(3, 6) = w;
  x(4, 5) = w2;
  x(4, 6) = w;
  x(5, 4) = w;
  x(5, 6) = w2;
  x(6, 3) = w2;
  x(6, 4) = w2;
  x(6, 5) = w;
  Mat y = rows_from_ints(F, 7,
                         {1, 0, 0, 0, 0, 0, 0,
                          0, 0, 0, 1, 0, 0, 0,
                          0, 1, 0, 0, 0, 0, 0,
                          0, 0, 1, 0, 0, 0, 0,
                          0, 0, 0, 0, 0, 0, 1,
                          0, 0, 0, 0, 1, 0, 0,
                          0, 0, 0, 0, 0, 1, 0});
  return {std::move(x), std::move(y)};
}

std::pair<Mat, Mat> om_special_matrices(const FieldSpec& F) {
  Fq half = F.one() / F.from_int(2);
  Fq seven = F.from_int(7);
  Fq sh = seven * half;   // 7/2 reduced mod p
  Fq mh = -half;          // -1/2 reduced mod p
  Mat x = rows_from_ints(F, 7,
                         {0, 0, 0, 1, 0, 0, 0,
                          0, 0, 0, 0, 1, 0, 0,
                          0, 0, 0, 0, 0, 1, 0,
                          1, 0, 0, 0, 0, 0, 0,
                          0, 1, 0, 0, 0, 0, 0,
                          0, 0, 1, 0, 0, 0, 0,
                          0, 0, 0, 0, 0, 0, -1});
  x(1, 6) = sh;
  x(2, 6) = mh;
  x(4, 6) = sh;
  x(5, 6) = mh;
  Mat y = rows_from_ints(F, 7,
                         {1, 0, 0, 0, 0, 0, 0,
                          0, 1, 0, 0, 0, 0, 0,
                          0, 0, 1, 1, -1, 0, 0,
                          0, 0, 0, 0, -1, 0, 0,
                          0, 0, 0, 1, -1, 0, 0,
                          0, 0, 0, 0, 0, 0, -1,
                          0, 0, 0, 0, 0, 1, -1});
  y(1, 6) = seven;
  return {std::move(x), std::move(y)};
}

Fq clause1_value(const Fq& a, const Fq& b) {
  return a * a - a * b + b * b + Fq(2) * a + Fq(2) * b + Fq(4);
}

Fq clause2_value(const Fq& a, const Fq& b) {
  Fq s = a + b;
  Fq t = s - Fq(2);
  return s * s * s - Fq(8) * t * t - Fq(8) * a * b;
}

Condition make_condition(const std::string& name, bool ok, const std::string& detail) {
  return Condition{name, detail, ok};
}

Fq require_attached(const FieldSpec& F, const std::optional<Fq>& a, Family f) {
  if (!a) throw std::invalid_argument(family_name(f) + " requires a field parameter a");
  Fq v = *a;
  if (!v.attached()) v = F.zero() + v;
  if (v.spec() != &F) throw std::invalid_argument("parameter a belongs to a different field");
  return v;
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(const std::string& name) {
  for (const FamilyInfo& fi : kFamilies)
    if (name == fi.name) return fi.family;
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const FamilyInfo& fi : kFamilies) out.push_back(fi.family);
  return out;
}

int family_dimension(Family f) { return info(f).dimension; }

bool family_uses_parameter(Family f) { return info(f).parameterized; }

std::pair<Mat, Mat> dim7_matrices(const FieldSpec& F, const Fq& a, const Fq& b) {
  Mat x = rows_from_ints(F, 7,
                         {0, 1, 0, 0, 0, 0, 0,
                          1, 0, 0, 0, 0, 0, 0,
                          0, 0, 0, 1, 0, 0, 0,
                          0, 0, 1, 0, 0, 0, 0,
                          0, 0, 0, 0, 0, 1, -1,
                          0, 0, 0, 0, 1, 0, -1,
                          0, 0, 0, 0, 0, 0, -1});
  x(0, 6) = a;
  x(1, 6) = a;
  Mat y = rows_from_ints(F, 7,
                         {1, 0, -1, 0, -1, 0, 0,
                          0, 0, -1, 0, 0, 0, 0,
                          0, 1, -1, 0, 0, 0, 0,
                          0, 0, 0, 0, -1, 0, 0,
                          0, 0, 0, 1, -1, 0, 0,
                          0, 0, 0, 0, 0, 0, -1,
                          0, 0, 0, 0, 0, 1, -1});
  y(0, 6) = a + b - F.one();
  return {std::move(x), std::move(y)};
}

Mat sp6_gram(const FieldSpec& F, const Fq& a) {
  Mat J = rows_from_ints(F, 6,
                         {0, 1, 0, 0, 0, 0,
                          1, 0, 0, 0, 0, 1,
                          0, 0, 0, 1, 0, 0,
                          0, 0, 1, 0, 1, 1,
                          0, 0, 0, 1, 0, 1,
                          0, 1, 0, 1, 1, 0});
  J(1, 3) = a;
  J(1, 4) = a + F.one();
  J(3, 1) = a;
  J(4, 1) = a + F.one();
  return J;
}

GeneratorPair build_pair(Family f, const FieldSpec& F, std::optional<Fq> a) {
  GeneratorPair pair;
  pair.family = f;
  pair.field = &F;
  pair.a = F.zero();
  pair.b = F.zero();
  if (!family_uses_parameter(f)) {
    if (a) throw std::invalid_argument(family_name(f) + " is a fixed pair and takes no parameter");
    auto [p, n] = fixed_field_shape(f);
    if (F.p() != p || F.n() != n)
      throw std::invalid_argument(family_name(f) + " is defined over GF(" +
                                  std::to_string(p) + "^" + std::to_string(n) + ")");
    switch (f) {
      case Family::Sp6_3Intro: std::tie(pair.x, pair.y) = intro_matrices(F); break;
      case Family::SU7_4Special: std::tie(pair.x, pair.y) = su7_matrices(F); break;
      default: std::tie(pair.x, pair.y) = om_special_matrices(F); break;
    }
    return pair;
  }
  Fq av = require_attached(F, a, f);
  switch (f) {
    case Family::Sp6Even:
      if (F.p() != 2) throw std::invalid_argument("sp6 requires even characteristic");
      if (av.is_zero()) throw std::invalid_argument("sp6 requires a != 0");
      pair.a = av;
      pair.b = av;
      std::tie(pair.x, pair.y) = sp6_matrices(F, av);
      break;
    case Family::Dim7Orth:
      if (F.p() == 2) throw std::invalid_argument("o7 requires odd characteristic");
      pair.a = av;
      pair.b = av;
      std::tie(pair.x, pair.y) = dim7_matrices(F, av, av);
      break;
    case Family::Dim7Unit: {
      if (F.n() % 2 != 0)
        throw std::invalid_argument("u7 requires a quadratic extension field GF(q^2)");
      pair.a = av;
      pair.b = av.frobenius(F.n() / 2);  // a^q, q = p^(n/2)
      std::tie(pair.x, pair.y) = dim7_matrices(F, pair.a, pair.b);
      break;
    }
    case Family::SL7Variant:
      pair.a = av;
      pair.b = F.zero();
      std::tie(pair.x, pair.y) = dim7_matrices(F, pair.a, pair.b);
      break;
    default:
      throw std::logic_error("unhandled family");
  }
  return pair;
}

bool ConditionReport::all_ok() const {
  for (const Condition& c : conditions)
    if (!c.ok) return false;
  return true;
}

std::string ConditionReport::str() const {
  std::ostringstream os;
  for (const Condition& c : conditions)
    os << "CONDITION " << c.name << ": " << (c.ok ? "PASS" : "FAIL") << " " << c.detail << "\n";
  return os.str();
}

ConditionReport check_conditions(Family f, const FieldSpec& F, std::optional<Fq> a) {
  ConditionReport rep;
  rep.family = f;
  if (!family_uses_parameter(f)) {
    auto [p, n] = fixed_field_shape(f);
    bool ok = F.p() == p && F.n() == n;
    rep.conditions.push_back(make_condition(
        "fixed-field", ok,
        "requires GF(" + std::to_string(p) + "^" + std::to_string(n) + "), got " + F.str()));
    return rep;
  }
  Fq av = require_attached(F, a, f);
  switch (f) {
    case Family::Sp6Even: {
      rep.conditions.push_back(
          make_condition("even-characteristic", F.p() == 2, "p = " + std::to_string(F.p())));
      rep.conditions.push_back(make_condition("nonzero", !av.is_zero(), "a = " + av.str()));
      rep.conditions.push_back(
          make_condition("generates-field", generates_field(av), "a = " + av.str()));
      break;
    }
    case Family::Dim7Orth: {
      rep.conditions.push_back(
          make_condition("odd-characteristic", F.p() != 2, "p = " + std::to_string(F.p())));
      bool excluded = av.is_zero() || av.is_one() || av == F.from_int(2) || av == F.from_int(-2);
      rep.conditions.push_back(
          make_condition("i-excluded-values", !excluded, "a = " + av.str() + " must avoid {0,1,2,-2}"));
      Fq am1 = av - F.one();
      bool sq = !am1.is_zero() && F.p() != 2 && is_square(am1);
      rep.conditions.push_back(make_condition("ii-square", sq, "a - 1 = " + am1.str()));
      rep.conditions.push_back(
          make_condition("iii-generates-field", generates_field(av), "a = " + av.str()));
      break;
    }
    case Family::Dim7Unit: {
      rep.conditions.push_back(make_condition("square-field", F.n() % 2 == 0, F.str()));
      if (F.n() % 2 != 0) break;
      Fq b = av.frobenius(F.n() / 2);
      rep.conditions.push_back(
          make_condition("subfield", b != av, "a = " + av.str() + ", a^q = " + b.str()));
      Fq c1 = clause1_value(av, b);
      rep.conditions.push_back(make_condition("i-irreducible", !c1.is_zero(),
                                              "a^2q - a^(q+1) + a^2 + 2a^q + 2a + 4 = " + c1.str()));
      Fq c2 = clause2_value(av, b);
      rep.conditions.push_back(make_condition(
          "ii-irreducible", !c2.is_zero(), "(a+b)^3 - 8(a+b-2)^2 - 8ab = " + c2.str()));
      Fq a7 = av.pow(7);
      rep.conditions.push_back(
          make_condition("iii-generates-field", generates_field(a7), "a^7 = " + a7.str()));
      break;
    }
    case Family::SL7Variant: {
      Fq zero = F.zero();
      rep.conditions.push_back(make_condition("nonzero", !av.is_zero(), "a = " + av.str()));
      Fq c1 = clause1_value(av, zero);
      rep.conditions.push_back(
          make_condition("i-irreducible", !c1.is_zero(), "a^2 + 2a + 4 = " + c1.str()));
      Fq c2 = clause2_value(av, zero);
      rep.conditions.push_back(
          make_condition("ii-irreducible", !c2.is_zero(), "a^3 - 8(a-2)^2 = " + c2.str()));
      rep.conditions.push_back(
          make_condition("generates-field", generates_field(av), "a = " + av.str()));
      break;
    }
    default:
      throw std::logic_error("unhandled family");
  }
  return rep;
}

std::optional<SearchStrategy> strategy_from_name(const std::string& name) {
  if (name == "exhaustive") return SearchStrategy::Exhaustive;
  if (name == "primitive-first") return SearchStrategy::PrimitiveFirst;
  if (name == "alpha-squared-plus-one") return SearchStrategy::AlphaSquaredPlusOne;
  return std::nullopt;
}

std::string strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::PrimitiveFirst: return "primitive-first";
    case SearchStrategy::AlphaSquaredPlusOne: return "alpha-squared-plus-one";
  }
  return "?";
}

std::optional<Fq> search_parameter(Family f, const FieldSpec& F, SearchStrategy s) {
  auto passes = [&](const Fq& a) { return check_conditions(f, F, a).all_ok(); };
  if (!family_uses_parameter(f)) {
    Fq a = F.zero();
    if (check_conditions(f, F).all_ok()) return a;
    return std::nullopt;
  }
  switch (s) {
    case SearchStrategy::Exhaustive: {
      for (long r = 0; r < F.q(); ++r) {
        Fq a = F.element_at(r);
        if (passes(a)) return a;
      }
      return std::nullopt;
    }
    case SearchStrategy::PrimitiveFirst: {
      for (long r = 1; r < F.q(); ++r) {
        Fq a = F.element_at(r);
        if (element_order(a) == F.q() - 1 && passes(a)) return a;
      }
      for (long r = 0; r < F.q(); ++r) {
        Fq a = F.element_at(r);
        if ((r == 0 || element_order(a) != F.q() - 1) && passes(a)) return a;
      }
      return std::nullopt;
    }
    case SearchStrategy::AlphaSquaredPlusOne: {
      for (long r = 1; r < F.q(); ++r) {
        Fq alpha = F.element_at(r);
        if (element_order(alpha) != F.q() - 1) continue;
        Fq a = alpha * alpha + F.one();
        if (passes(a)) return a;
      }
      return search_parameter(f, F, SearchStrategy::Exhaustive);
    }
  }
  return std::nullopt;
}

WitnessReport reducibility_witness(const FieldSpec& F, const Fq& a_in, const Fq& b_in) {
  Fq a = F.zero() + a_in;
  Fq b = F.zero() + b_in;
  WitnessReport rep;
  Fq c1 = clause1_value(a, b);
  Fq c2 = clause2_value(a, b);
  if (c1.is_zero()) {
    rep.clause = 1;
    rep.kind = "eigenvector";
    const FieldSpec* E = &F;
    std::optional<Fq> omega = omega_element(F);
    if (!omega) {
      // only reachable at a = b = -2, where the two factor roots coincide
      if (a != F.from_int(-2) || b != F.from_int(-2))
        throw std::logic_error("cube root of unity expected in base field");
      E = &FieldSpec::get(F.p(), 2 * F.n());
      a = E->from_int(-2);
      b = E->from_int(-2);
      omega = omega_element(*E);
    }
    rep.field = E;
    std::tie(rep.x, rep.y) = dim7_matrices(*E, a, b);
    Fq w1 = *omega;
    Fq eig = E->zero();
    for (int j = 1; j <= 2; ++j) {
      Fq wj = j == 1 ? w1 : w1 * w1;
      if ((b + wj * a - Fq(2) * wj * wj).is_zero()) {
        eig = wj;
        break;
      }
    }
    if (eig.is_zero()) throw std::logic_error("no vanishing factor found for clause 1");
    Fq e2 = eig * eig;
    Vec w(7);
    w << a + e2, -e2, E->one(), -E->one(), eig, e2, -E->one();
    rep.spanning = {w};
    // eigenvalue relations pin the construction: y w = omega^j w, x w = -w
    bool eigen_ok = vecs_equal(attach_vec(*E, rep.y * w), attach_vec(*E, Mat(eig * w))) &&
                    vecs_equal(attach_vec(*E, rep.x * w), attach_vec(*E, Mat(-w)));
    rep.invariant = eigen_ok;
  } else if (c2.is_zero()) {
    rep.clause = 2;
    rep.field = &F;
    std::tie(rep.x, rep.y) = dim7_matrices(F, a, b);
    const Mat& x = rep.x;
    const Mat& y = rep.y;
    auto mul = [&](const Mat& m, const Vec& v) { return attach_vec(F, m * v); };
    if (F.p() == 2) {
      rep.kind = "char2-orbit";
      Vec w = vec_from_ints(F, {1, 1, 1, 1, 1, 1, 0});
      Vec yw = mul(y, w);
      Vec xyw = mul(x, yw);
      Vec yxyw = mul(y, xyw);
      Vec xyxyw = mul(x, yxyw);   // (xy)^2 w
      Vec yxyxyw = mul(y, xyxyw); // y (xy)^2 w
      rep.spanning = {w, yw, xyw, yxyw, xyxyw, yxyxyw};
    } else if (a == F.from_int(2) && b == F.from_int(2)) {
      rep.kind = "orbit4";
      Vec w = vec_from_ints(F, {1, 1, 2, 2, 1, 1, 0});
      Vec yw = mul(y, w);
      Vec xyw = mul(x, yw);
      Vec yxyw = mul(y, xyw);
      rep.spanning = {w, yw, xyw, yxyw};
    } else {
      rep.kind = "orbit2";
      Fq half = F.one() / F.from_int(2);
      Fq s = a + b;
      Fq x1 = -(s * s - Fq(6) * a - Fq(10) * b + Fq(16)) * half;
      Fq x2 = Fq(2) * b - Fq(4);
      Fq x3 = s - Fq(4);
      Vec w(7);
      w << x1, x1, x2, x2, x3, x3, F.zero();
      rep.spanning = {w, mul(y, w)};
    }
    rep.invariant = true;
  } else {
    throw std::invalid_argument("both irreducibility conditions hold; no invariant subspace");
  }

  const FieldSpec& E = *rep.field;
  Mat S = zero_mat(E, 7, static_cast<int>(rep.spanning.size()));
  for (size_t j = 0; j < rep.spanning.size(); ++j) S.col(static_cast<int>(j)) = rep.spanning[j];
  rep.basis = image_basis(S);
  rep.dimension = static_cast<int>(rep.basis.size());

  // closure of the span under both generators
  int d = rep.dimension;
  Mat B = zero_mat(E, 7, d);
  for (int j = 0; j < d; ++j) B.col(j) = rep.basis[static_cast<size_t>(j)];
  bool closed = d > 0 && d < 7;
  for (const Mat* g : {&rep.x, &rep.y}) {
    for (int j = 0; j < d && closed; ++j) {
      Mat aug = zero_mat(E, 7, d + 1);
      aug.leftCols(d) = B;
      aug.col(d) = attach_vec(E, *g * B.col(j));
      if (rank(aug) != d) closed = false;
    }
  }
  rep.invariant = rep.invariant && closed;
  return rep;
}

}  // namespace cg23
