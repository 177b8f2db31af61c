#include "cg23/groupcalc.hpp"

#include <bit>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>

namespace cg23 {

namespace {

const FieldSpec& common_field(const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const FieldSpec* F = spec_of(gens[0]);
  if (!F) throw std::invalid_argument("generators carry no field");
  for (const Mat& g : gens) {
    if (g.rows() != g.cols() || g.rows() != gens[0].rows())
      throw std::invalid_argument("generators must be square of equal size");
    if (spec_of(g) != F) throw std::invalid_argument("generators over different fields");
  }
  return *F;
}

BigInt sp6_order(long q) {
  BigInt Q = q;
  BigInt Q2 = Q * Q, Q4 = Q2 * Q2, Q6 = Q4 * Q2, Q9 = Q4 * Q4 * Q;
  return Q9 * (Q2 - 1) * (Q4 - 1) * (Q6 - 1);
}

BigInt dim7_order(long q, bool unitary, bool special_linear) {
  BigInt Q = q;
  BigInt acc = 1;
  for (int i = 0; i < 21; ++i) acc *= Q;
  for (int i = 2; i <= 7; ++i) {
    BigInt Qi = 1;
    for (int k = 0; k < i; ++k) Qi *= Q;
    if (unitary && !special_linear)
      acc *= Qi - (i % 2 == 0 ? 1 : -1);
    else
      acc *= Qi - 1;
  }
  return acc;
}

// deterministic pseudorandom group elements by product replacement
class ElementMixer {
 public:
  ElementMixer(const std::vector<Mat>& gens, std::uint64_t seed) : rng_(seed) {
    const int slots = 10;
    for (int i = 0; i < slots; ++i) slots_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i) step();
  }

  const Mat& next() {
    step();
    return slots_[last_];
  }

 private:
  void step() {
    int k = static_cast<int>(slots_.size());
    int i = static_cast<int>(rng_() % k);
    int j = static_cast<int>(rng_() % (k - 1));
    if (j >= i) ++j;
    if (rng_() % 2 == 0)
      slots_[i] = Mat(slots_[i] * slots_[j]);
    else
      slots_[i] = Mat(slots_[i] * inverse(slots_[j]));
    last_ = i;
  }

  std::vector<Mat> slots_;
  std::mt19937_64 rng_;
  int last_ = 0;
};

}  // namespace

BigInt classical_order(Family f, long q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  switch (f) {
    case Family::Sp6Even:
      if (q % 2 != 0) throw std::invalid_argument("even-characteristic family needs even q");
      return sp6_order(q);
    case Family::Sp6_3Intro:
      if (q != 3) throw std::invalid_argument("the introductory pair lives over GF(3)");
      return sp6_order(3);
    case Family::Dim7Orth:
      if (q % 2 == 0) throw std::invalid_argument("7-dimensional orthogonal groups need odd q");
      return sp6_order(q) / 2;
    case Family::Om7_3Special:
      if (q != 3) throw std::invalid_argument("this special pair lives over GF(3)");
      return sp6_order(3) / 2;
    case Family::Om7_5Special:
      if (q != 5) throw std::invalid_argument("this special pair lives over GF(5)");
      return sp6_order(5) / 2;
    case Family::Dim7Unit:
      return dim7_order(q, true, false);
    case Family::SU7_4Special:
      if (q != 2) throw std::invalid_argument("this special pair fixes GF(2), matrices over GF(4)");
      return dim7_order(2, true, false);
    case Family::SL7Variant:
      return dim7_order(q, false, true);
  }
  throw std::invalid_argument("unknown family");
}

BigInt classical_order(const GeneratorPair& pair) {
  const FieldSpec& F = *pair.field;
  long q = F.q();
  if (pair.family == Family::Dim7Unit || pair.family == Family::SU7_4Special) {
    // matrices live over GF(q^2); the formula wants the fixed-field size
    long base = 1;
    for (int i = 0; i < F.n() / 2; ++i) base *= F.p();
    q = base;
  }
  return classical_order(pair.family, q);
}

std::optional<long long> bfs_enumerate(const std::vector<Mat>& gens, long long cap) {
  const FieldSpec& F = common_field(gens);
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  int n = static_cast<int>(gens[0].rows());
  long q = F.q();
  int bits = std::bit_width(static_cast<unsigned long>(q - 1));
  bool packed = bits * n * n <= 64;

  auto decode64 = [&](std::uint64_t key) {
    Mat A = zero_mat(F, n, n);
    std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        A(i, j) = F.element_at(static_cast<long>(key & mask));
        key >>= bits;
      }
    return A;
  };
  auto encode64 = [&](const Mat& A) {
    std::uint64_t key = 0;
    for (int i = n - 1; i >= 0; --i)
      for (int j = n - 1; j >= 0; --j) key = (key << bits) | static_cast<std::uint64_t>(A(i, j).rank());
    return key;
  };

  if (packed) {
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> frontier;
    std::uint64_t start = encode64(identity_mat(F, n));
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
      Mat A = decode64(frontier.front());
      frontier.pop_front();
      for (const Mat& g : gens) {
        std::uint64_t key = encode64(Mat(A * g));
        if (seen.insert(key).second) {
          if (static_cast<long long>(seen.size()) > cap) return std::nullopt;
          frontier.push_back(key);
        }
      }
    }
    return static_cast<long long>(seen.size());
  }

  bool wide = q > 256;
  auto encode_str = [&](const Mat& A) {
    std::string key;
    key.reserve(static_cast<size_t>(n) * n * (wide ? 2 : 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long r = A(i, j).rank();
        key.push_back(static_cast<char>(r & 0xff));
        if (wide) key.push_back(static_cast<char>((r >> 8) & 0xff));
      }
    return key;
  };
  auto decode_str = [&](const std::string& key) {
    Mat A = zero_mat(F, n, n);
    size_t pos = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long r = static_cast<unsigned char>(key[pos++]);
        if (wide) r |= static_cast<long>(static_cast<unsigned char>(key[pos++])) << 8;
        A(i, j) = F.element_at(r);
      }
    return A;
  };

  std::unordered_set<std::string> seen;
  std::deque<std::string> frontier;
  std::string start = encode_str(identity_mat(F, n));
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    Mat A = decode_str(frontier.front());
    frontier.pop_front();
    for (const Mat& g : gens) {
      std::string key = encode_str(Mat(A * g));
      if (seen.insert(key).second) {
        if (static_cast<long long>(seen.size()) > cap) return std::nullopt;
        frontier.push_back(key);
      }
    }
  }
  return static_cast<long long>(seen.size());
}

long long StabChain::encode(const Vec& v) const {
  long long acc = 0;
  for (int i = dim_ - 1; i >= 0; --i) acc = acc * field_->q() + v(i).rank();
  return acc;
}

Vec StabChain::decode(long long point) const {
  Vec v(dim_);
  for (int i = 0; i < dim_; ++i) {
    v(i) = field_->element_at(point % field_->q());
    point /= field_->q();
  }
  return v;
}

Vec StabChain::act_point(const Mat& g, long long point) const {
  return Vec(g * decode(point));
}

BigInt StabChain::order() const {
  BigInt acc = 1;
  for (const StabLevel& L : levels_) acc *= static_cast<long long>(L.orbit.size());
  return acc;
}

StabChain::Sift StabChain::sift(Mat h) const {
  for (int li = 0; li < static_cast<int>(levels_.size()); ++li) {
    long long p = encode(act_point(h, levels_[li].base_point));
    auto it = index_[li].find(p);
    if (it == index_[li].end()) return {h, li};
    auto t = transversal(li, p);
    h = Mat(inverse(*t) * h);
  }
  return {h, static_cast<int>(levels_.size())};
}

bool StabChain::contains(const Mat& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) return false;
  if (det(attach(*field_, g)).is_zero()) return false;
  Sift s = sift(attach(*field_, g));
  return s.level == static_cast<int>(levels_.size()) && is_identity(s.residue);
}

std::optional<Mat> StabChain::transversal(int level, long long point) const {
  if (level < 0 || level >= static_cast<int>(levels_.size()))
    throw std::invalid_argument("no such level");
  const StabLevel& L = levels_[level];
  auto it = index_[level].find(point);
  if (it == index_[level].end()) return std::nullopt;
  Mat t = identity_mat(*field_, dim_);
  std::int32_t idx = it->second;
  while (L.parent_gen[idx] != -1) {
    t = Mat(t * L.strong_gens[L.parent_gen[idx]]);
    idx = L.parent_pt[idx];
  }
  return t;
}

void StabChain::grow_orbit(int level, int first_new_gen) {
  StabLevel& L = levels_[level];
  auto& idx = index_[level];
  size_t old_size = L.orbit.size();
  auto try_point = [&](int gi, std::int32_t pi) {
    long long p = encode(act_point(L.strong_gens[gi], L.orbit[pi]));
    if (idx.emplace(p, static_cast<std::int32_t>(L.orbit.size())).second) {
      L.orbit.push_back(p);
      L.parent_gen.push_back(gi);
      L.parent_pt.push_back(pi);
    }
  };
  for (size_t pi = 0; pi < old_size; ++pi)
    for (int gi = first_new_gen; gi < static_cast<int>(L.strong_gens.size()); ++gi)
      try_point(gi, static_cast<std::int32_t>(pi));
  for (size_t pi = old_size; pi < L.orbit.size(); ++pi)
    for (int gi = 0; gi < static_cast<int>(L.strong_gens.size()); ++gi)
      try_point(gi, static_cast<std::int32_t>(pi));
}

void StabChain::incorporate(const Mat& residue, int level) {
  if (level == static_cast<int>(levels_.size())) {
    // new base point: the least-rank vector the residue moves
    long long space = 1;
    for (int i = 0; i < dim_; ++i) space *= field_->q();
    long long base = -1;
    for (long long p = 1; p < space; ++p) {
      Vec v = decode(p);
      if (!vecs_equal(Vec(residue * v), v)) {
        base = p;
        break;
      }
    }
    if (base < 0) throw std::logic_error("nontrivial residue moves no vector");
    StabLevel L;
    L.base_point = base;
    L.orbit.push_back(base);
    L.parent_gen.push_back(-1);
    L.parent_pt.push_back(-1);
    levels_.push_back(std::move(L));
    index_.emplace_back();
    index_.back().emplace(base, 0);
  }
  for (int li = 0; li <= level; ++li) {
    levels_[li].strong_gens.push_back(residue);
    grow_orbit(li, static_cast<int>(levels_[li].strong_gens.size()) - 1);
  }
}

void StabChain::add_element(const Mat& g) {
  for (int guard = 0; guard < 10000; ++guard) {
    Sift s = sift(g);
    if (is_identity(s.residue)) return;
    incorporate(s.residue, s.level);
  }
  throw std::runtime_error("stabilizer chain failed to absorb an element");
}

StabChain bsgs(const std::vector<Mat>& gens, const BsgsOptions& opts) {
  const FieldSpec& F = common_field(gens);
  int n = static_cast<int>(gens[0].rows());
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    if (space > opts.budget / F.q() + 1) space = opts.budget + 1;
    else space *= F.q();
    if (space > opts.budget)
      throw BudgetExceeded("point space q^n = " + std::to_string(F.q()) + "^" + std::to_string(n) +
                           " exceeds the budget " + std::to_string(opts.budget));
  }
  for (const Mat& g : gens)
    if (det(g).is_zero()) throw std::invalid_argument("generators must be invertible");

  StabChain chain(F, n);
  for (const Mat& g : gens) chain.add_element(g);

  ElementMixer mixer(gens, opts.seed);
  int consecutive = 0;
  while (consecutive < 16) {
    const Mat& g = mixer.next();
    if (chain.contains(g)) {
      ++consecutive;
    } else {
      chain.add_element(g);
      consecutive = 0;
    }
  }
  for (int round = 0; round < 5; ++round) {
    int failures = 0;
    for (int s = 0; s < opts.verify_sifts; ++s) {
      const Mat& g = mixer.next();
      if (!chain.contains(g)) {
        chain.add_element(g);
        ++failures;
      }
    }
    if (failures == 0) return chain;
  }
  throw std::runtime_error("stabilizer chain failed randomized verification");
}

long scalar_subgroup_order(const StabChain& chain) {
  const FieldSpec& F = chain.field();
  long count = 0;
  for (long r = 1; r < F.q(); ++r) {
    Mat s = attach(F, Mat(F.element_at(r) * identity_mat(F, chain.dimension())));
    if (chain.contains(s)) ++count;
  }
  return count;
}

}  // namespace cg23
