#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cg23/matrix.hpp"

namespace cg23 {

// The eight generator-pair constructions. Sp6Even, Dim7Orth, Dim7Unit and
// SL7Variant take a field parameter a (Dim7Unit over a quadratic extension,
// with the companion parameter b = a^q); the remaining four are fixed pairs
// over a specific small field.
enum class Family {
  Sp6Even,
  Dim7Orth,
  Dim7Unit,
  Sp6_3Intro,
  SU7_4Special,
  Om7_3Special,
  Om7_5Special,
  SL7Variant,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::vector<Family> all_families();
int family_dimension(Family f);
// true for the four constructions parameterized by a field element
bool family_uses_parameter(Family f);

struct GeneratorPair {
  Family family;
  const FieldSpec* field;
  Fq a;  // zero for fixed pairs
  Fq b;  // companion parameter of the 7-dimensional pairs
  Mat x;
  Mat y;
};

// The literal pair for the family. For parameterized families `a` is required
// (and must be nonzero for Sp6Even); the fixed families reject a parameter.
// Dim7Unit requires a field of even degree GF(p^{2m}) and sets b = a^(p^m).
GeneratorPair build_pair(Family f, const FieldSpec& F, std::optional<Fq> a = std::nullopt);

// The raw 7-dimensional matrices for arbitrary independent (a, b); used by the
// uniform families and by identity sweeps that vary both parameters.
std::pair<Mat, Mat> dim7_matrices(const FieldSpec& F, const Fq& a, const Fq& b);

// The alternating Gram matrix fixed by the Sp6Even pair.
Mat sp6_gram(const FieldSpec& F, const Fq& a);

struct Condition {
  std::string name;
  std::string detail;
  bool ok;
};

struct ConditionReport {
  Family family;
  std::vector<Condition> conditions;
  bool all_ok() const;
  std::string str() const;
};

// Evaluates every hypothesis the family places on (F, a); reports and never
// throws on failing conditions. Fixed families only require the matching field.
ConditionReport check_conditions(Family f, const FieldSpec& F, std::optional<Fq> a = std::nullopt);

enum class SearchStrategy { Exhaustive, PrimitiveFirst, AlphaSquaredPlusOne };

std::optional<SearchStrategy> strategy_from_name(const std::string& name);
std::string strategy_name(SearchStrategy s);

// First field element (in serialization-rank order, subject to the strategy's
// reordering) passing check_conditions; nullopt when no element of F works.
std::optional<Fq> search_parameter(Family f, const FieldSpec& F,
                                   SearchStrategy s = SearchStrategy::Exhaustive);

// A proper nonzero subspace invariant under the 7-dimensional pair, built from
// the explicit vectors attached to whichever irreducibility hypothesis fails:
//  - clause 1 (a^2-ab+b^2+2a+2b+4 = 0): a common eigenvector w with
//    y w = omega^j w and x w = -w, where omega has order 3 (order 1 when p=3);
//  - clause 2 ((a+b)^3-8(a+b-2)^2-8ab = 0): a vector whose orbit closure has
//    dimension 6 (p = 2), 4 (a = b = 2), or 2 (the general case).
// When clause 1 fails over a field without a cube root of unity (only possible
// at a = b = -2) the construction moves to the quadratic extension; `field`,
// `x`, `y` and the vectors all live over the reported field.
struct WitnessReport {
  int clause;  // 1 or 2
  std::string kind;  // eigenvector | char2-orbit | orbit4 | orbit2
  const FieldSpec* field;
  Mat x;
  Mat y;
  std::vector<Vec> spanning;  // the construction's listed vectors
  std::vector<Vec> basis;     // echelonized basis of their span
  int dimension;
  bool invariant;  // x*basis and y*basis verified inside the span
};

WitnessReport reducibility_witness(const FieldSpec& F, const Fq& a, const Fq& b);

}  // namespace cg23
