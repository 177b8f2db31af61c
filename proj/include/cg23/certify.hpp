#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cg23/forms.hpp"
#include "cg23/generators.hpp"
#include "cg23/groupcalc.hpp"

namespace cg23 {

enum class Verdict { Pass, Fail, Skip };
// "pass" | "fail" | "skipped"
std::string verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict;
  std::string detail;
};

struct CertifyOptions {
  std::uint64_t seed = 0;
  // cap on the permutation-point space q^n of the stabilizer-chain order
  // computation; above it the group-order check is skipped, not failed
  long long bsgs_budget = 1000000;
  bool keep_going = false;  // continue past the first failing check
  bool skip_bsgs = false;   // always skip the group-order check
};

struct Certificate {
  Family family;
  const FieldSpec* field;
  Fq a;
  Fq b;
  std::vector<CheckResult> checks;
  std::optional<BigInt> computed_order;  // set when the group-order check ran
  BigInt expected_order;
  std::uint64_t seed = 0;
  bool overall = true;

  // One "CHECK <name>: PASS|FAIL|SKIP <detail>" line per check, then the
  // order summary and an OVERALL line; stable ordering.
  std::string to_text() const;
  // Deterministic JSON document (fixed key order, big integers as decimal
  // strings); identical inputs and seed give identical bytes.
  std::string to_json(int indent = 2) const;
};

// Runs the family's full check pipeline, ordered cheap to expensive, stopping
// at the first failure unless opts.keep_going. Throws std::invalid_argument
// when the unitary parameter lies in the fixed field of the involution.
Certificate certify_pair(const GeneratorPair& pair, const CertifyOptions& opts = {});

// Least k in 1..cap with (x y)^k diagonal, if any.
std::optional<int> min_diagonal_power(const Mat& x, const Mat& y, int cap = 32);
std::optional<int> min_diagonal_power(const GeneratorPair& pair, int cap = 32);

struct SweepGroup {
  std::string name;
  long cases = 0;
  long failures = 0;
};

struct SweepReport {
  long q_max = 0;
  std::vector<SweepGroup> groups;
  bool all_ok() const;
  long total_cases() const;
  std::string str() const;
};

// Re-derives the closed-form identities behind the constructions over every
// field of size <= q_max: auxiliary-matrix determinants and matrix-entry
// formulas, characteristic polynomials of x y and [x, y], invariant factors,
// discriminants, and the Wall Gram matrix, each swept over all parameter
// values of the right parity.
SweepReport proof_identity_sweep(long q_max = 13);

}  // namespace cg23
