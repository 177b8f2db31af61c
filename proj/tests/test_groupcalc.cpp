#include <doctest.h>

#include <vector>

#include "cg23/forms.hpp"
#include "cg23/groupcalc.hpp"

using namespace cg23;

namespace {

std::vector<Mat> pair_gens(const GeneratorPair& p) { return {p.x, p.y}; }

// inverse of the documented point encoding: rank(v_i) are the base-q digits,
// least significant first
Vec decode_point(const FieldSpec& F, int dim, long long p) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = F.element_at(p % F.q());
    p /= F.q();
  }
  return v;
}

}  // namespace

TEST_SUITE("groupcalc") {

TEST_CASE("classical order formulas reproduce the reference values") {
  CHECK(classical_order(Family::Sp6Even, 2) == BigInt("1451520"));
  CHECK(classical_order(Family::Sp6Even, 4) == BigInt("4106059776000"));
  CHECK(classical_order(Family::Sp6Even, 8) == BigInt("9077005607176765440"));
  CHECK(classical_order(Family::Sp6_3Intro, 3) == BigInt("9170703360"));
  CHECK(classical_order(Family::Dim7Orth, 3) == BigInt("4585351680"));
  CHECK(classical_order(Family::Dim7Orth, 5) == BigInt("228501000000000"));
  CHECK(classical_order(Family::Dim7Orth, 7) == BigInt("273457218604953600"));
  CHECK(classical_order(Family::Dim7Orth, 9) == BigInt("54025731402499584000"));
  CHECK(classical_order(Family::Om7_3Special, 3) == BigInt("4585351680"));
  CHECK(classical_order(Family::Om7_5Special, 5) == BigInt("228501000000000"));
  CHECK(classical_order(Family::Dim7Unit, 2) == BigInt("227787103272960"));
  CHECK(classical_order(Family::Dim7Unit, 3) == BigInt("72853912155490594652160"));
  CHECK(classical_order(Family::SU7_4Special, 2) == BigInt("227787103272960"));
  CHECK(classical_order(Family::SL7Variant, 2) == BigInt("163849992929280"));
  CHECK(classical_order(Family::SL7Variant, 3) == BigInt("67034222101339041669120"));

  CHECK_THROWS_AS(classical_order(Family::Sp6Even, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::Dim7Orth, 4), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::Sp6_3Intro, 5), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::SU7_4Special, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::Om7_3Special, 5), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::Om7_5Special, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_order(Family::Sp6Even, 1), std::invalid_argument);
}

TEST_CASE("classical order reads the base field off the pair") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  GeneratorPair sp = build_pair(Family::Sp6Even, F4, F4.element_at(2));
  CHECK(classical_order(sp) == classical_order(Family::Sp6Even, 4));

  const FieldSpec& F9 = FieldSpec::get(3, 2);
  GeneratorPair u7 = build_pair(Family::Dim7Unit, F9, F9.element_at(3));
  CHECK(classical_order(u7) == classical_order(Family::Dim7Unit, 3));

  GeneratorPair su = build_pair(Family::SU7_4Special, F4);
  CHECK(classical_order(su) == classical_order(Family::SU7_4Special, 2));
}

TEST_CASE("breadth-first closure counts small groups") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  CHECK(bfs_enumerate({identity_mat(F2, 3)}, 10) == 1);

  GeneratorPair sp = build_pair(Family::Sp6Even, F2, F2.one());
  CHECK(bfs_enumerate({sp.x}, 10) == 2);
  CHECK(bfs_enumerate({sp.y}, 10) == 3);
  CHECK(!bfs_enumerate(pair_gens(sp), 100).has_value());

  // a 7x7 cyclic group over GF(7) exercises the string-keyed path
  const FieldSpec& F7 = FieldSpec::get(7, 1);
  GeneratorPair o7 = build_pair(Family::Dim7Orth, F7, F7.from_int(3));
  CHECK(bfs_enumerate({o7.y}, 10) == 3);
  CHECK(bfs_enumerate({o7.x}, 10) == 2);

  Mat swap01 = mat_from_ints(F2, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  Mat cycle = mat_from_ints(F2, 3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  CHECK(bfs_enumerate({swap01, cycle}, 100) == 6);

  CHECK_THROWS_AS(bfs_enumerate({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(bfs_enumerate({identity_mat(F2, 2)}, 0), std::invalid_argument);
}

TEST_CASE("stabilizer chain agrees with breadth-first closure") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  Poly f = Poly::from_ints(F2, {1, 1, 0, 0, 0, 0, 1});  // t^6 + t + 1, a primitive modulus
  Mat comp = zero_mat(F2, 6, 6);
  for (int i = 1; i < 6; ++i) comp(i, i - 1) = F2.one();
  for (int i = 0; i < 6; ++i) comp(i, 5) = -f.coeff(i);
  auto by_bfs = bfs_enumerate({comp}, 100);
  REQUIRE(by_bfs.has_value());
  CHECK(*by_bfs == 63);
  CHECK(bsgs({comp}).order() == 63);

  const FieldSpec& F7 = FieldSpec::get(7, 1);
  GeneratorPair o7 = build_pair(Family::Dim7Orth, F7, F7.from_int(3));
  CHECK(bsgs({o7.y}).order() == 3);

  GeneratorPair sp = build_pair(Family::Sp6Even, F2, F2.one());
  StabChain ch = bsgs(pair_gens(sp));
  CHECK(ch.order() == BigInt("1451520"));
  auto full = bfs_enumerate(pair_gens(sp), 2000000);
  REQUIRE(full.has_value());
  CHECK(BigInt(*full) == ch.order());
}

TEST_CASE("chain transversals move base points as recorded") {
  const FieldSpec& F = FieldSpec::get(2, 1);
  GeneratorPair sp = build_pair(Family::Sp6Even, F, F.one());
  StabChain ch = bsgs(pair_gens(sp));
  REQUIRE(ch.base_length() >= 1);
  for (int li = 0; li < ch.base_length(); ++li) {
    const StabLevel& L = ch.levels()[li];
    REQUIRE(L.orbit[0] == L.base_point);
    size_t step = L.orbit.size() > 8 ? L.orbit.size() / 8 : 1;
    for (size_t k = 0; k < L.orbit.size(); k += step) {
      auto t = ch.transversal(li, L.orbit[k]);
      REQUIRE(t.has_value());
      CHECK(ch.contains(*t));
      Vec image = Vec(*t * decode_point(F, 6, L.base_point));
      CHECK(vecs_equal(image, decode_point(F, 6, L.orbit[k])));
    }
  }
  CHECK(!ch.transversal(0, 0).has_value());
  CHECK_THROWS_AS(ch.transversal(99, 1), std::invalid_argument);
}

TEST_CASE("chain membership separates elements from outsiders") {
  const FieldSpec& F = FieldSpec::get(2, 1);
  GeneratorPair sp = build_pair(Family::Sp6Even, F, F.one());
  StabChain ch = bsgs(pair_gens(sp));
  CHECK(ch.contains(sp.x));
  CHECK(ch.contains(sp.y));
  CHECK(ch.contains(Mat(sp.x * sp.y)));
  CHECK(ch.contains(Mat(sp.y * sp.x * sp.y)));
  CHECK(ch.contains(identity_mat(F, 6)));

  // any elementary matrix violating the gram lies outside the full symplectic group
  Mat J = sp6_gram(F, F.one());
  Mat outsider;
  bool found = false;
  for (int i = 0; i < 6 && !found; ++i)
    for (int j = 0; j < 6 && !found; ++j) {
      if (i == j) continue;
      Mat cand = identity_mat(F, 6);
      cand(i, j) = F.one();
      if (!mats_equal(Mat(Mat(cand.transpose()) * J * cand), J)) {
        outsider = cand;
        found = true;
      }
    }
  REQUIRE(found);
  CHECK(!ch.contains(outsider));

  CHECK(!ch.contains(identity_mat(F, 3)));
  CHECK(!ch.contains(zero_mat(F, 6, 6)));
}

TEST_CASE("scalar subgroup sizes") {
  const FieldSpec& F3 = FieldSpec::get(3, 1);
  StabChain intro = bsgs(pair_gens(build_pair(Family::Sp6_3Intro, F3)));
  CHECK(intro.order() == BigInt("9170703360"));
  CHECK(scalar_subgroup_order(intro) == 2);

  StabChain om3 = bsgs(pair_gens(build_pair(Family::Om7_3Special, F3)));
  CHECK(om3.order() == BigInt("4585351680"));
  CHECK(scalar_subgroup_order(om3) == 1);

  const FieldSpec& F4 = FieldSpec::get(2, 2);
  StabChain su = bsgs(pair_gens(build_pair(Family::SU7_4Special, F4)));
  CHECK(su.order() == BigInt("227787103272960"));
  CHECK(scalar_subgroup_order(su) == 1);

  const FieldSpec& F2 = FieldSpec::get(2, 1);
  StabChain sp2 = bsgs(pair_gens(build_pair(Family::Sp6Even, F2, F2.one())));
  CHECK(scalar_subgroup_order(sp2) == 1);
}

TEST_CASE("identical seeds rebuild the identical chain") {
  const FieldSpec& F = FieldSpec::get(3, 1);
  auto gens = pair_gens(build_pair(Family::Om7_3Special, F));
  BsgsOptions opts;
  opts.seed = 7;
  StabChain a = bsgs(gens, opts);
  StabChain b = bsgs(gens, opts);
  REQUIRE(a.base_length() == b.base_length());
  for (int li = 0; li < a.base_length(); ++li) {
    CHECK(a.levels()[li].base_point == b.levels()[li].base_point);
    CHECK(a.levels()[li].orbit == b.levels()[li].orbit);
    CHECK(a.levels()[li].strong_gens.size() == b.levels()[li].strong_gens.size());
  }
  CHECK(a.order() == b.order());
  opts.seed = 8;
  CHECK(bsgs(gens, opts).order() == a.order());
}

TEST_CASE("budget guards the point space") {
  const FieldSpec& F9 = FieldSpec::get(3, 2);
  GeneratorPair u7 = build_pair(Family::Dim7Unit, F9, F9.element_at(3));
  CHECK_THROWS_AS(bsgs(pair_gens(u7)), BudgetExceeded);

  GeneratorPair o9 = build_pair(Family::Dim7Orth, F9, F9.element_at(4));
  CHECK_THROWS_AS(bsgs(pair_gens(o9)), BudgetExceeded);

  const FieldSpec& F2 = FieldSpec::get(2, 1);
  auto gens = pair_gens(build_pair(Family::Sp6Even, F2, F2.one()));
  BsgsOptions tight;
  tight.budget = 50;
  CHECK_THROWS_AS(bsgs(gens, tight), BudgetExceeded);
  tight.budget = 64;  // q^n exactly
  CHECK(bsgs(gens, tight).order() == BigInt("1451520"));

  try {
    BsgsOptions small;
    small.budget = 10;
    bsgs(gens, small);
    CHECK(false);
  } catch (const std::runtime_error&) {
    CHECK(true);  // BudgetExceeded is catchable as runtime_error
  }
}

TEST_CASE("degenerate generator lists are rejected") {
  const FieldSpec& F = FieldSpec::get(2, 1);
  CHECK_THROWS_AS(bsgs({}), std::invalid_argument);
  CHECK_THROWS_AS(bsgs({zero_mat(F, 2, 2)}), std::invalid_argument);
  const FieldSpec& F3 = FieldSpec::get(3, 1);
  CHECK_THROWS_AS(bsgs({identity_mat(F, 2), identity_mat(F3, 2)}), std::invalid_argument);

  StabChain trivial = bsgs({identity_mat(F, 4)});
  CHECK(trivial.base_length() == 0);
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(identity_mat(F, 4)));
  Mat moved = identity_mat(F, 4);
  moved(0, 1) = F.one();
  CHECK(!trivial.contains(moved));
}

TEST_CASE("group order is consistent with element orders") {
  const FieldSpec& F = FieldSpec::get(2, 1);
  GeneratorPair sp = build_pair(Family::Sp6Even, F, F.one());
  StabChain ch = bsgs(pair_gens(sp));
  BigInt n = ch.order();
  auto ox = element_order(sp.x);
  auto oy = element_order(sp.y);
  auto oz = element_order(Mat(sp.x * sp.y));
  REQUIRE(ox.has_value());
  REQUIRE(oy.has_value());
  REQUIRE(oz.has_value());
  CHECK(n % *ox == 0);
  CHECK(n % *oy == 0);
  CHECK(n % *oz == 0);
  CHECK(classical_order(sp) == n);
}

}  // TEST_SUITE
