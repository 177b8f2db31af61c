#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cg23/generators.hpp"

namespace cg23 {

using BigInt = boost::multiprecision::cpp_int;

// Order of the classical group the family targets, by the standard formulas:
//   |Sp6(q)|  = q^9 (q^2-1)(q^4-1)(q^6-1)
//   |Omega7(q)| = |Sp6(q)| / gcd(2, q-1)
//   |SU7(q^2)| = q^21 prod_{i=2}^{7} (q^i - (-1)^i)
//   |SL7(q)|  = q^21 prod_{i=2}^{7} (q^i - 1)
// For the unitary families q is the size of the fixed field (the matrices live
// over GF(q^2)). Families with a parity or size constraint reject other q.
BigInt classical_order(Family f, long q);
// Same, with q read off the pair's field (base field size for unitary pairs).
BigInt classical_order(const GeneratorPair& pair);

// Number of distinct products of the generators (the subgroup they generate),
// by breadth-first closure; nullopt once more than cap elements appear.
std::optional<long long> bfs_enumerate(const std::vector<Mat>& gens, long long cap);

// Thrown when the permutation domain q^n of a requested stabilizer chain
// exceeds the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BsgsOptions {
  std::uint64_t seed = 0;
  long long budget = 1000000;  // largest permitted point space q^n
  int verify_sifts = 64;       // random elements that must sift to identity
};

struct StabLevel {
  long long base_point;                  // rank encoding of a nonzero vector
  std::vector<Mat> strong_gens;          // chain generators fixing the earlier base points
  std::vector<long long> orbit;          // discovery order; orbit[0] == base_point
  std::vector<std::int32_t> parent_gen;  // index into strong_gens; -1 at the root
  std::vector<std::int32_t> parent_pt;   // index into orbit of the discovery parent
};

// Stabilizer chain for the matrix action on nonzero vectors of F_q^n, built by
// the seeded Monte Carlo Schreier-Sims procedure in bsgs().
class StabChain {
 public:
  const FieldSpec& field() const { return *field_; }
  int dimension() const { return dim_; }
  int base_length() const { return static_cast<int>(levels_.size()); }
  const std::vector<StabLevel>& levels() const { return levels_; }

  BigInt order() const;
  bool contains(const Mat& g) const;
  // group element mapping the level's base point to the given orbit point
  std::optional<Mat> transversal(int level, long long point) const;

 private:
  friend StabChain bsgs(const std::vector<Mat>&, const BsgsOptions&);

  struct Sift {
    Mat residue;
    int level;  // level where the residue stuck; base_length() when it cleared all
  };

  StabChain(const FieldSpec& F, int dim) : field_(&F), dim_(dim) {}
  long long encode(const Vec& v) const;
  Vec decode(long long point) const;
  Vec act_point(const Mat& g, long long point) const;
  Sift sift(Mat h) const;
  void grow_orbit(int level, int first_new_gen);
  void incorporate(const Mat& residue, int level);
  void add_element(const Mat& g);

  const FieldSpec* field_;
  int dim_;
  std::vector<StabLevel> levels_;
  std::vector<std::unordered_map<long long, std::int32_t>> index_;
};

StabChain bsgs(const std::vector<Mat>& gens, const BsgsOptions& opts = {});

// Number of scalar matrices lambda*I (lambda in F_q) the chain contains.
long scalar_subgroup_order(const StabChain& chain);

}  // namespace cg23
