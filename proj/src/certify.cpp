#include "cg23/certify.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cg23 {

namespace {

using Outcome = std::pair<bool, std::string>;

Fq ci(const FieldSpec& F, long v) { return F.from_int(v); }

std::string opt_long_str(const std::optional<long>& o) {
  return o ? std::to_string(*o) : std::string("none within cap");
}

// ---------- closed forms ----------

// t^6 + (a+1)t^5 + t^4 + t^3 + t^2 + (a+1)t + 1
Poly char6_expected(const FieldSpec& F, const Fq& a) {
  Fq s = a + F.one();
  Fq one = F.one();
  return Poly(F, {one, s, one, one, one, s, one});
}

// t^7 - t^5 + (1-a)t^4 + (b-1)t^3 + t^2 - 1
Poly char7_expected(const FieldSpec& F, const Fq& a, const Fq& b) {
  Fq one = F.one();
  return Poly(F, {-one, F.zero(), one, b - one, one - a, -one, F.zero(), one});
}

// t^7 + t^6 + t^5 - (a^2-4a+3)t^4 + (a^2-4a+3)t^3 - t^2 - t - 1
Poly comm7_expected(const FieldSpec& F, const Fq& a) {
  Fq one = F.one();
  Fq s = a * a - ci(F, 4) * a + ci(F, 3);
  return Poly(F, {-one, -one, -one, s, -s, one, one, one});
}

// (a-1)(a-5)^3 (27a^2-4a-148)^2
Fq disc7_expected(const FieldSpec& F, const Fq& a) {
  Fq u = a - ci(F, 5);
  Fq s = ci(F, 27) * a * a - ci(F, 4) * a - ci(F, 148);
  return (a - F.one()) * u * u * u * s * s;
}

// (a-2)^6 (a+2)^3 (a-6)^3 (27a^2-108a+76)^2
Fq disc_comm_expected(const FieldSpec& F, const Fq& a) {
  Fq u = a - ci(F, 2);
  Fq v = a + ci(F, 2);
  Fq w = a - ci(F, 6);
  Fq s = ci(F, 27) * a * a - ci(F, 108) * a + ci(F, 76);
  Fq u3 = u * u * u;
  return u3 * u3 * v * v * v * w * w * w * s * s;
}

// Wall Gram matrix of the involution in the reflection basis
Mat wall_gram_expected(const FieldSpec& F, const Fq& a) {
  Mat G = zero_mat(F, 4, 4);
  Fq two_a = ci(F, 2) * a;
  G(0, 0) = ci(F, -4);
  G(0, 2) = two_a;
  G(0, 3) = ci(F, 4) - ci(F, 4) * a;
  G(1, 1) = -two_a;
  G(1, 3) = ci(F, 4) - two_a;
  G(2, 2) = ci(F, -4);
  G(2, 3) = two_a * a - two_a;
  G(3, 3) = ci(F, 4) * a - ci(F, 4) - two_a * a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) G(i, j) = G(j, i);
  return G;
}

// 16 (a-2)^2 (a-1) (a+2)^2
Fq wall_det_expected(const FieldSpec& F, const Fq& a) {
  Fq u = a - ci(F, 2);
  Fq v = a + ci(F, 2);
  return ci(F, 16) * u * u * (a - F.one()) * v * v;
}

// (a-2)^2 (1-a), the corner entry of [x,y]^7
Fq comm_entry_expected(const FieldSpec& F, const Fq& a) {
  Fq u = a - ci(F, 2);
  return u * u * (F.one() - a);
}

std::vector<Poly> inv6_x_expected(const FieldSpec& F) {
  Poly f = Poly::from_ints(F, {1, 0, 1});  // t^2 + 1
  return {f, f, f};
}

std::vector<Poly> inv6_y_expected(const FieldSpec& F) {
  Poly f = Poly::from_ints(F, {1, 0, 0, 1});  // t^3 + 1
  return {f, f};
}

std::vector<Poly> inv7_x_expected(const FieldSpec& F) {
  Poly f = Poly::from_ints(F, {1, 1});       // t + 1
  Poly g = Poly::from_ints(F, {-1, 0, 1});  // t^2 - 1
  return {f, g, g, g};
}

std::vector<Poly> inv7_y_expected(const FieldSpec& F) {
  Poly f = Poly::from_ints(F, {1, 1, 1});       // t^2 + t + 1
  Poly g = Poly::from_ints(F, {-1, 0, 0, 1});  // t^3 - 1
  return {f, f, g};
}

// degree of F_p[a] over the prime field (least d | n with a^(p^d) = a)
int parameter_degree(const FieldSpec& F, const Fq& a) {
  for (int d = 1; d < F.n(); ++d)
    if (F.n() % d == 0 && a.frobenius(d) == a) return d;
  return F.n();
}

Mat commutator(const Mat& x, const Mat& y) {
  return Mat(inverse(x) * inverse(y) * x * y);
}

// ---------- pipeline plumbing ----------

struct Runner {
  Certificate& cert;
  const CertifyOptions& opts;
  bool stopped = false;

  void record(const std::string& name, bool ok, const std::string& detail) {
    if (stopped) return;
    cert.checks.push_back({name, ok ? Verdict::Pass : Verdict::Fail, detail});
    if (!ok) {
      cert.overall = false;
      if (!opts.keep_going) stopped = true;
    }
  }

  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    if (stopped) return;
    try {
      Outcome out = fn();
      record(name, out.first, out.second);
    } catch (const std::exception& e) {
      record(name, false, std::string("check raised: ") + e.what());
    }
  }

  void skip(const std::string& name, const std::string& detail) {
    if (stopped) return;
    cert.checks.push_back({name, Verdict::Skip, detail});
  }
};

// ---------- shared checks ----------

Outcome orders_23(const GeneratorPair& pr) {
  std::optional<long> ox = element_order(pr.x, 16);
  std::optional<long> oy = element_order(pr.y, 16);
  bool ok = ox == std::optional<long>(2) && oy == std::optional<long>(3);
  return {ok, "|x| = " + opt_long_str(ox) + ", |y| = " + opt_long_str(oy) + " (expected 2 and 3)"};
}

Outcome spanning_outcome(const GeneratorPair& pr) {
  int n = family_dimension(pr.family);
  int want = n * n;
  int got = spanning_dimension({pr.x, pr.y});
  return {got == want, "the words in x, y span " + std::to_string(got) + " of " +
                           std::to_string(want) + " matrix dimensions"};
}

Outcome conditions_outcome(const GeneratorPair& pr) {
  std::optional<Fq> a;
  if (family_uses_parameter(pr.family)) a = pr.a;
  ConditionReport rep = check_conditions(pr.family, *pr.field, a);
  std::string d;
  for (const Condition& c : rep.conditions) {
    if (!d.empty()) d += "; ";
    d += c.name + (c.ok ? " holds" : " FAILS (" + c.detail + ")");
  }
  return {rep.all_ok(), d};
}

Outcome charpoly_outcome(const Mat& z, const Poly& expect, bool require_min_equal) {
  Poly cp = char_poly(z);
  if (cp != expect)
    return {false, "characteristic polynomial " + cp.str() + " differs from the closed form " +
                       expect.str()};
  if (require_min_equal && min_poly(z) != cp)
    return {false, "minimal polynomial is a proper divisor of the characteristic polynomial"};
  return {true, require_min_equal
                    ? "characteristic polynomial matches the closed form and equals the minimal polynomial"
                    : "characteristic polynomial matches the closed form"};
}

Outcome invariant_factors_outcome(const Mat& x, const std::vector<Poly>& ex, const Mat& y,
                                  const std::vector<Poly>& ey) {
  bool okx = invariant_factors(x) == ex;
  bool oky = invariant_factors(y) == ey;
  std::string d = std::string("x invariant factors ") + (okx ? "match" : "DIFFER") +
                  ", y invariant factors " + (oky ? "match" : "DIFFER");
  return {okx && oky, d};
}

Outcome form_outcome(const GeneratorPair& pr, Sigma sigma, FormKind want) {
  FormSolution sol = invariant_forms(pr, sigma);
  std::string d = "invariant-form space has dimension " + std::to_string(sol.dimension());
  bool ok = sol.dimension() == 1;
  if (sol.dimension() >= 1) {
    d += ", " + form_kind_name(sol.kind[0]);
    d += sol.nondegenerate[0] ? ", nondegenerate" : ", DEGENERATE";
    ok = ok && sol.kind[0] == want && sol.nondegenerate[0];
  }
  return {ok, d};
}

std::optional<StabChain> group_order_check(Runner& r, const GeneratorPair& pr,
                                           const CertifyOptions& opts) {
  if (r.stopped) return std::nullopt;
  Certificate& cert = r.cert;
  if (opts.skip_bsgs) {
    r.skip("group-order", "skipped on request; generation not desk-verified here");
    return std::nullopt;
  }
  const FieldSpec& F = *pr.field;
  long long space = 1;
  bool over = false;
  for (int i = 0; i < pr.x.rows(); ++i) {
    if (space > opts.bsgs_budget / F.q() + 1) {
      over = true;
      break;
    }
    space *= F.q();
  }
  if (over || space > opts.bsgs_budget) {
    r.skip("group-order",
           "generation is not desk-verifiable at this field size (the point space q^n exceeds "
           "the budget); certified by the property suite only");
    return std::nullopt;
  }
  try {
    BsgsOptions bo;
    bo.seed = opts.seed;
    bo.budget = opts.bsgs_budget;
    StabChain chain = bsgs({pr.x, pr.y}, bo);
    cert.computed_order = chain.order();
    bool ok = chain.order() == cert.expected_order;
    r.record("group-order", ok, "stabilizer-chain order " + chain.order().str() +
                                    ", classical order " + cert.expected_order.str());
    if (!ok) return std::nullopt;
    return chain;
  } catch (const std::exception& e) {
    r.record("group-order", false, std::string("order computation failed: ") + e.what());
    return std::nullopt;
  }
}

// ---------- per-family pipelines ----------

void certify_sp6(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("orders", [&] { return orders_23(pr); });
  r.check("gram", [&]() -> Outcome {
    Mat J = sp6_gram(F, pr.a);
    bool okx = mats_equal(Mat(pr.x.transpose() * J * pr.x), J);
    bool oky = mats_equal(Mat(pr.y.transpose() * J * pr.y), J);
    return {okx && oky, std::string("x ") + (okx ? "preserves" : "BREAKS") + " and y " +
                            (oky ? "preserves" : "BREAKS") + " the alternating Gram matrix"};
  });
  r.check("invariant-factors", [&] {
    return invariant_factors_outcome(pr.x, inv6_x_expected(F), pr.y, inv6_y_expected(F));
  });
  r.check("char-poly",
          [&] { return charpoly_outcome(Mat(pr.x * pr.y), char6_expected(F, pr.a), true); });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  r.check("quadratic-form", [&]() -> Outcome {
    QuadraticSolution qs = invariant_quadratic_char2(pr);
    return {!qs.exists,
            qs.exists ? "an invariant quadratic form with the symplectic polarization exists"
                      : "no invariant quadratic form polarizes to the Gram matrix (homogeneous "
                        "solution dimension " +
                            std::to_string(qs.homogeneous_dim) + ")"};
  });
  r.check("torus-coefficients", [&]() -> Outcome {
    Poly cp = char_poly(Mat(pr.x * pr.y));
    bool ok = cp.coeff(3) != cp.coeff(1) * cp.coeff(1);
    return {ok, std::string("coefficient relation f3 = f1^2 of a split-torus element ") +
                    (ok ? "is violated by x y" : "HOLDS for x y")};
  });
  r.check("field-generation", [&]() -> Outcome {
    int d = parameter_degree(F, pr.a);
    return {d == F.n(), "F_p[a] has degree " + std::to_string(d) + " over the prime field; the "
                        "field needs " + std::to_string(F.n())};
  });
  group_order_check(r, pr, opts);
}

void certify_o7(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("conditions", [&] { return conditions_outcome(pr); });
  r.check("orders", [&] { return orders_23(pr); });
  r.check("char-poly", [&] {
    return charpoly_outcome(Mat(pr.x * pr.y), char7_expected(F, pr.a, pr.a), true);
  });
  r.check("commutator-char-poly",
          [&] { return charpoly_outcome(commutator(pr.x, pr.y), comm7_expected(F, pr.a), false); });
  r.check("discriminants", [&]() -> Outcome {
    bool okz = discriminant(char_poly(Mat(pr.x * pr.y))) == disc7_expected(F, pr.a);
    bool okw = discriminant(char_poly(commutator(pr.x, pr.y))) == disc_comm_expected(F, pr.a);
    return {okz && okw, std::string("discriminant of char(x y) ") +
                            (okz ? "matches" : "DIFFERS from") +
                            " its closed form; discriminant of char([x,y]) " +
                            (okw ? "matches" : "DIFFERS from") + " its closed form"};
  });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  r.check("symmetric-form", [&] { return form_outcome(pr, Sigma::Identity, FormKind::Symmetric); });
  r.check("wall-form", [&]() -> Outcome {
    Mat B = dim7_bilinear(F, pr.a);
    if (rank(B) < 7) return {false, "the symmetric bilinear form degenerates at this parameter"};
    Mat G = wall_form_gram(pr.x, B, dim7_reflection_basis(F, pr.a));
    bool gram_ok = mats_equal(G, wall_gram_expected(F, pr.a));
    bool det_ok = det(G) == wall_det_expected(F, pr.a);
    bool spinor = spinor_norm_in_omega(pr.x, B);
    std::string d = std::string("Wall Gram matrix ") + (gram_ok ? "matches" : "DIFFERS from") +
                    " the closed form, determinant " + (det_ok ? "matches" : "DIFFERS from") +
                    " 16(a-2)^2(a-1)(a+2)^2, spinor norm " +
                    (spinor ? "trivial (x lies in the kernel)" : "NONTRIVIAL");
    return {gram_ok && det_ok && spinor, d};
  });
  r.check("commutator-order", [&]() -> Outcome {
    bool ok = !is_identity(mat_pow(commutator(pr.x, pr.y), 7));
    return {ok, std::string("[x,y]^7 ") + (ok ? "differs from" : "EQUALS") + " the identity"};
  });
  r.check("torus-coefficients", [&]() -> Outcome {
    Poly cz = char_poly(Mat(pr.x * pr.y));
    Fq f1 = cz.coeff(1);
    bool ok = cz.coeff(3) != f1 + f1 * f1 + cz.coeff(2);
    return {ok, std::string("coefficient relation f3 = f1 + f1^2 + f2 of a split-torus element ") +
                    (ok ? "is violated by x y" : "HOLDS for x y")};
  });
  group_order_check(r, pr, opts);
}

void certify_u7(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("conditions", [&] { return conditions_outcome(pr); });
  r.check("orders", [&] { return orders_23(pr); });
  r.check("invariant-factors", [&] {
    return invariant_factors_outcome(pr.x, inv7_x_expected(F), pr.y, inv7_y_expected(F));
  });
  r.check("char-poly", [&] {
    return charpoly_outcome(Mat(pr.x * pr.y), char7_expected(F, pr.a, pr.b), true);
  });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  r.check("hermitian-form", [&] { return form_outcome(pr, Sigma::QPower, FormKind::Hermitian); });
  r.check("diagonal-power", [&]() -> Outcome {
    std::optional<int> k = min_diagonal_power(pr, 32);
    bool ok = !k || *k >= 13;
    return {ok, "least k with (x y)^k diagonal: " +
                    (k ? std::to_string(*k) : std::string("none within 32")) +
                    " (any k below 13 would admit a small-torus normalizer)"};
  });
  r.check("projective-order", [&]() -> Outcome {
    std::optional<long> k = projective_order(Mat(pr.x * pr.y));
    bool ok = !k || *k > 12;
    return {ok, "projective order of x y: " + opt_long_str(k) + " (must exceed 12)"};
  });
  group_order_check(r, pr, opts);
}

void certify_intro(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("orders", [&]() -> Outcome {
    Mat mI = Mat(ci(F, -1) * identity_mat(F, 6));
    bool x2 = mats_equal(mat_pow(pr.x, 2), mI);
    std::optional<long> oy = element_order(pr.y, 16);
    bool ok = x2 && oy == std::optional<long>(3);
    return {ok, std::string("x^2 ") + (x2 ? "equals" : "DIFFERS from") + " -I, |y| = " +
                    opt_long_str(oy)};
  });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  std::optional<StabChain> chain = group_order_check(r, pr, opts);
  if (chain) {
    r.check("projective-quotient", [&]() -> Outcome {
      long s = scalar_subgroup_order(*chain);
      BigInt proj = chain->order() / s;
      bool ok = s == 2 && proj * 2 == r.cert.expected_order;
      return {ok, "scalar subgroup order " + std::to_string(s) + ", projective order " +
                      proj.str()};
    });
  } else {
    r.skip("projective-quotient", "requires the stabilizer chain of the group-order check");
  }
}

void certify_su7_4(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("orders", [&] { return orders_23(pr); });
  r.check("unitary-gram", [&]() -> Outcome {
    Mat I = identity_mat(F, 7);
    long half = F.n() / 2;
    bool okx = mats_equal(Mat(pr.x.transpose() * frobenius_entrywise(pr.x, half)), I);
    bool oky = mats_equal(Mat(pr.y.transpose() * frobenius_entrywise(pr.y, half)), I);
    return {okx && oky, std::string("x^T x^sigma ") + (okx ? "=" : "!=") +
                            " I and y^T y^sigma " + (oky ? "=" : "!=") + " I"};
  });
  r.check("special-element-order", [&]() -> Outcome {
    Mat xy2 = Mat(pr.x * pr.y * pr.y);
    Mat g = Mat(mat_pow(Mat(xy2 * pr.x * pr.y), 2) * mat_pow(xy2, 3));
    std::optional<long> og = element_order(g, 200);
    bool ok = og == std::optional<long>(43);
    return {ok, "|(x y^2 x y)^2 (x y^2)^3| = " + opt_long_str(og) + " (expected 43)"};
  });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  group_order_check(r, pr, opts);
}

void certify_om_special(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  r.check("orders", [&] { return orders_23(pr); });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  r.check("symmetric-form", [&] { return form_outcome(pr, Sigma::Identity, FormKind::Symmetric); });
  group_order_check(r, pr, opts);
}

void certify_sl7(Runner& r, const GeneratorPair& pr, const CertifyOptions& opts) {
  const FieldSpec& F = *pr.field;
  r.check("conditions", [&] { return conditions_outcome(pr); });
  r.check("orders", [&] { return orders_23(pr); });
  r.check("invariant-factors", [&] {
    return invariant_factors_outcome(pr.x, inv7_x_expected(F), pr.y, inv7_y_expected(F));
  });
  r.check("char-poly", [&] {
    return charpoly_outcome(Mat(pr.x * pr.y), char7_expected(F, pr.a, pr.b), true);
  });
  r.check("spanning", [&] { return spanning_outcome(pr); });
  group_order_check(r, pr, opts);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "skipped";
  }
}

Certificate certify_pair(const GeneratorPair& pair, const CertifyOptions& opts) {
  if (pair.family == Family::Dim7Unit && pair.b == pair.a)
    throw std::invalid_argument(
        "the unitary parameter must lie outside the fixed field of the involution");
  Certificate cert;
  cert.family = pair.family;
  cert.field = pair.field;
  cert.a = pair.a;
  cert.b = pair.b;
  cert.seed = opts.seed;
  cert.expected_order = classical_order(pair);
  Runner r{cert, opts};
  switch (pair.family) {
    case Family::Sp6Even: certify_sp6(r, pair, opts); break;
    case Family::Dim7Orth: certify_o7(r, pair, opts); break;
    case Family::Dim7Unit: certify_u7(r, pair, opts); break;
    case Family::Sp6_3Intro: certify_intro(r, pair, opts); break;
    case Family::SU7_4Special: certify_su7_4(r, pair, opts); break;
    case Family::Om7_3Special:
    case Family::Om7_5Special: certify_om_special(r, pair, opts); break;
    case Family::SL7Variant: certify_sl7(r, pair, opts); break;
  }
  return cert;
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "family " << family_name(family) << " over " << field->str();
  if (family_uses_parameter(family)) os << ", a = " << a.str() << ", b = " << b.str();
  os << ", seed " << seed << "\n";
  for (const CheckResult& c : checks) {
    const char* tag = c.verdict == Verdict::Pass ? "PASS" : c.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    os << "CHECK " << c.name << ": " << tag << " " << c.detail << "\n";
  }
  os << "order: computed " << (computed_order ? computed_order->str() : std::string("-"))
     << ", expected " << expected_order.str() << "\n";
  os << "OVERALL: " << (overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string Certificate::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["q"] = field->q();
  j["p"] = field->p();
  j["n"] = field->n();
  std::string mod;
  for (size_t i = 0; i < field->modulus().size(); ++i) {
    if (i) mod += ",";
    mod += std::to_string(field->modulus()[i]);
  }
  j["modulus"] = mod;
  j["a"] = a.str();
  j["b"] = b.str();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["verdict"] = verdict_name(c.verdict);
    jc["details"] = c.detail;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  nlohmann::ordered_json order;
  order["computed"] =
      computed_order ? nlohmann::ordered_json(computed_order->str()) : nlohmann::ordered_json(nullptr);
  order["expected"] = expected_order.str();
  j["order"] = order;
  j["seed"] = seed;
  j["overall"] = overall;
  j["version"] = "1.0.0";
  return j.dump(indent) + "\n";
}

std::optional<int> min_diagonal_power(const Mat& x, const Mat& y, int cap) {
  Mat z = Mat(x * y);
  Mat zk = z;
  for (int k = 1; k <= cap; ++k) {
    if (is_diagonal(zk)) return k;
    zk = Mat(zk * z);
  }
  return std::nullopt;
}

std::optional<int> min_diagonal_power(const GeneratorPair& pair, int cap) {
  return min_diagonal_power(pair.x, pair.y, cap);
}

// ---------- identity sweep ----------

namespace {

std::vector<const FieldSpec*> fields_up_to(long q_max) {
  std::vector<const FieldSpec*> out;
  for (long q = 2; q <= q_max; ++q) {
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q prime
    long m = q;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m == 1) out.push_back(&FieldSpec::get(p, k));
  }
  return out;
}

void tally(SweepGroup& g, bool ok) {
  ++g.cases;
  if (!ok) ++g.failures;
}

Mat from_columns(const FieldSpec& F, const std::vector<Vec>& cols) {
  Mat M = zero_mat(F, static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < cols[j].size(); ++i) M(i, static_cast<int>(j)) = cols[j](i);
  return M;
}

}  // namespace

bool SweepReport::all_ok() const {
  for (const SweepGroup& g : groups)
    if (g.failures != 0) return false;
  return true;
}

long SweepReport::total_cases() const {
  long t = 0;
  for (const SweepGroup& g : groups) t += g.cases;
  return t;
}

std::string SweepReport::str() const {
  std::ostringstream os;
  os << "identity sweep over fields of size <= " << q_max << "\n";
  for (const SweepGroup& g : groups)
    os << "  " << g.name << ": " << g.cases << " cases, " << g.failures << " failures\n";
  os << (all_ok() ? "all identities hold" : "IDENTITY FAILURES PRESENT") << "\n";
  return os.str();
}

SweepReport proof_identity_sweep(long q_max) {
  SweepReport rep;
  rep.q_max = q_max;
  std::vector<const FieldSpec*> fields = fields_up_to(q_max);

  SweepGroup g1{"sp6-first-spanning-det"};
  SweepGroup g2{"sp6-second-spanning-det"};
  SweepGroup g3{"sp6-char-poly"};
  SweepGroup g4{"sp6-invariant-factors"};
  for (const FieldSpec* Fp : fields) {
    const FieldSpec& F = *Fp;
    if (F.p() != 2) continue;
    for (long ra = 1; ra < F.q(); ++ra) {
      Fq a = F.element_at(ra);
      GeneratorPair pr = build_pair(Family::Sp6Even, F, a);
      const Mat& x = pr.x;
      const Mat& y = pr.y;
      Mat yx = Mat(y * x);
      Vec u = vec_from_ints(F, {1, 0, 0, 0, 0, 0});
      Vec yxu = Vec(yx * u);
      Vec yxyxu = Vec(yx * yxu);
      Mat M1 = from_columns(
          F, {u, Vec(x * u), yxu, Vec(x * yxu), yxyxu, Vec(x * yxyxu)});
      tally(g1, det(M1) == a);

      Mat y2x = Mat(y * yx);
      for (long rx = 0; rx < F.q(); ++rx) {
        Fq x1 = F.element_at(rx);
        Vec v = vec_from_ints(F, {0, 1, 0, 0, 0, 0});
        v(0) = x1;
        v(5) = a;
        Vec yxv = Vec(yx * v);
        Vec y2xv = Vec(y2x * v);
        Mat M2 = from_columns(F, {v, Vec(x * v), yxv, Vec(x * yxv), Vec(x * y2xv), y2xv});
        Fq s = x1 + a + F.one();
        tally(g2, det(M2) == a * a * a * s * s);
      }

      tally(g3, char_poly(Mat(x * y)) == char6_expected(F, a));
      tally(g4, invariant_factors(x) == inv6_x_expected(F) &&
                    invariant_factors(y) == inv6_y_expected(F));
    }
  }
  rep.groups.push_back(g1);
  rep.groups.push_back(g2);
  rep.groups.push_back(g3);
  rep.groups.push_back(g4);

  SweepGroup g5{"dim7-char-poly"};
  SweepGroup g6{"dim7-invariant-factors"};
  SweepGroup g7{"dim7-seventh-power-entry"};
  for (const FieldSpec* Fp : fields) {
    const FieldSpec& F = *Fp;
    for (long ra = 0; ra < F.q(); ++ra) {
      for (long rb = 0; rb < F.q(); ++rb) {
        Fq a = F.element_at(ra);
        Fq b = F.element_at(rb);
        auto [x, y] = dim7_matrices(F, a, b);
        tally(g5, char_poly(Mat(x * y)) == char7_expected(F, a, b));
        tally(g6, invariant_factors(x) == inv7_x_expected(F) &&
                      invariant_factors(y) == inv7_y_expected(F));
        if (F.q() <= 9) tally(g7, mat_pow(Mat(x * y), 7)(2, 0) == F.one());
      }
    }
  }
  rep.groups.push_back(g5);
  rep.groups.push_back(g6);
  rep.groups.push_back(g7);

  SweepGroup g8{"o7-commutator-char-poly"};
  SweepGroup g9{"o7-commutator-entry"};
  SweepGroup g10{"o7-discriminants"};
  SweepGroup g11{"o7-wall-gram"};
  for (const FieldSpec* Fp : fields) {
    const FieldSpec& F = *Fp;
    if (F.p() == 2) continue;
    for (long ra = 0; ra < F.q(); ++ra) {
      Fq a = F.element_at(ra);
      auto [x, y] = dim7_matrices(F, a, a);
      Mat w = commutator(x, y);
      Poly cw = char_poly(w);
      tally(g8, cw == comm7_expected(F, a));
      tally(g9, mat_pow(w, 7)(6, 0) == comm_entry_expected(F, a));
      Poly cz = char_poly(Mat(x * y));
      tally(g10, discriminant(cz) == disc7_expected(F, a) &&
                     discriminant(cw) == disc_comm_expected(F, a));
      if (a.is_zero() || a.is_one() || a == ci(F, 2) || a == ci(F, -2)) continue;
      Mat B = dim7_bilinear(F, a);
      Mat G = wall_form_gram(x, B, dim7_reflection_basis(F, a));
      bool ok = mats_equal(G, wall_gram_expected(F, a)) && det(G) == wall_det_expected(F, a) &&
                spinor_norm_in_omega(x, B) == is_square(a - F.one());
      tally(g11, ok);
    }
  }
  rep.groups.push_back(g8);
  rep.groups.push_back(g9);
  rep.groups.push_back(g10);
  rep.groups.push_back(g11);

  return rep;
}

}  // namespace cg23
