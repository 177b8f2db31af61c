#include "cg23/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cg23 {

namespace {

std::vector<int> rref_in_place(Mat& A) {
  const int rows = static_cast<int>(A.rows()), cols = static_cast<int>(A.cols());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!A(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) A.row(pr).swap(A.row(r));
    Fq inv = A(r, c).inverse();
    for (int j = c; j < cols; ++j) A(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A(i, c).is_zero()) continue;
      Fq f = A(i, c);
      for (int j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

const FieldSpec* spec_of(const Mat& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j).attached()) return A(i, j).spec();
  return nullptr;
}

const FieldSpec& spec_of_checked(const Mat& A) {
  const FieldSpec* s = spec_of(A);
  if (!s) throw std::invalid_argument("matrix has no attached field");
  return *s;
}

Mat attach(const FieldSpec& F, Mat A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) A(i, j) = F.zero() + A(i, j);
  return A;
}

Vec attach_vec(const FieldSpec& F, Vec v) {
  for (int i = 0; i < v.rows(); ++i) v(i) = F.zero() + v(i);
  return v;
}

Mat mat_from_ints(const FieldSpec& F, int rows, int cols, const std::vector<long>& row_major) {
  if (static_cast<int>(row_major.size()) != rows * cols)
    throw std::invalid_argument("entry count does not match dimensions");
  Mat A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = F.from_int(row_major[i * cols + j]);
  return A;
}

Vec vec_from_ints(const FieldSpec& F, const std::vector<long>& entries) {
  Vec v(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<int>(i)) = F.from_int(entries[i]);
  return v;
}

Mat identity_mat(const FieldSpec& F, int n) {
  Mat A = zero_mat(F, n, n);
  for (int i = 0; i < n; ++i) A(i, i) = F.one();
  return A;
}

Mat zero_mat(const FieldSpec& F, int rows, int cols) {
  Mat A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = F.zero();
  return A;
}

bool mats_equal(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j) != B(i, j)) return false;
  return true;
}

bool vecs_equal(const Vec& a, const Vec& b) {
  if (a.rows() != b.rows()) return false;
  for (int i = 0; i < a.rows(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero_mat(const Mat& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) return false;
  return true;
}

bool is_identity(const Mat& A) {
  if (A.rows() != A.cols()) return false;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (i == j ? !A(i, j).is_one() : !A(i, j).is_zero()) return false;
  return true;
}

bool is_diagonal(const Mat& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (i != j && !A(i, j).is_zero()) return false;
  return true;
}

std::optional<Fq> scalar_of(const Mat& A) {
  if (A.rows() != A.cols() || !is_diagonal(A)) return std::nullopt;
  for (int i = 1; i < A.rows(); ++i)
    if (A(i, i) != A(0, 0)) return std::nullopt;
  return A(0, 0);
}

Mat frobenius_entrywise(const Mat& A, long k) {
  Mat B = A;
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) B(i, j) = B(i, j).frobenius(k);
  return B;
}

Fq det(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  if (A0.rows() != A0.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Mat A = attach(F, A0);
  const int n = static_cast<int>(A.rows());
  Fq d = F.one();
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (!A(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) return F.zero();
    if (pr != c) {
      A.row(pr).swap(A.row(c));
      d = -d;
    }
    d *= A(c, c);
    Fq inv = A(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (A(i, c).is_zero()) continue;
      Fq f = A(i, c) * inv;
      for (int j = c; j < n; ++j) A(i, j) -= f * A(c, j);
    }
  }
  return d;
}

int rank(const Mat& A0) {
  Mat A = attach(spec_of_checked(A0), A0);
  return static_cast<int>(rref_in_place(A).size());
}

Mat inverse(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  if (A0.rows() != A0.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = static_cast<int>(A0.rows());
  Mat aug = zero_mat(F, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = F.zero() + A0(i, j);
    aug(i, n + i) = F.one();
  }
  if (static_cast<int>(rref_in_place(aug).size()) < n ||
      !is_identity(aug.topLeftCorner(n, n)))
    throw std::domain_error("matrix is singular");
  return aug.topRightCorner(n, n);
}

std::vector<Vec> kernel_basis(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  Mat A = attach(F, A0);
  std::vector<int> piv = rref_in_place(A);
  const int cols = static_cast<int>(A.cols());
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v = attach_vec(F, Vec::Zero(cols));
    v(c) = F.one();
    for (size_t i = 0; i < piv.size(); ++i) v(piv[i]) = -A(static_cast<int>(i), c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> image_basis(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  Mat A = attach(F, A0);
  Mat R = A;
  std::vector<int> piv = rref_in_place(R);
  std::vector<Vec> out;
  for (int c : piv) out.push_back(A.col(c));
  return out;
}

std::optional<Vec> solve(const Mat& A0, const Vec& b) {
  const FieldSpec& F = spec_of_checked(A0);
  if (A0.rows() != b.rows()) throw std::invalid_argument("mismatched system dimensions");
  const int rows = static_cast<int>(A0.rows()), cols = static_cast<int>(A0.cols());
  Mat aug = zero_mat(F, rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = F.zero() + A0(i, j);
    aug(i, cols) = F.zero() + b(i);
  }
  std::vector<int> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;  // pivot in rhs column
  Vec x = attach_vec(F, Vec::Zero(cols));
  for (size_t i = 0; i < piv.size(); ++i) x(piv[i]) = aug(static_cast<int>(i), cols);
  return x;
}

Mat mat_pow(const Mat& A, long long e) {
  const FieldSpec& F = spec_of_checked(A);
  Mat base = e < 0 ? inverse(A) : attach(F, A);
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Mat r = identity_mat(F, static_cast<int>(A.rows()));
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return attach(F, r);
}

std::optional<long> element_order(const Mat& A, long cap) {
  const FieldSpec& F = spec_of_checked(A);
  if (det(A).is_zero()) throw std::domain_error("order of a singular matrix");
  Mat P = attach(F, A);
  for (long k = 1; k <= cap; ++k) {
    if (is_identity(P)) return k;
    P = attach(F, P * A);
  }
  return std::nullopt;
}

std::optional<long> projective_order(const Mat& A, long cap) {
  const FieldSpec& F = spec_of_checked(A);
  if (det(A).is_zero()) throw std::domain_error("order of a singular matrix");
  Mat P = attach(F, A);
  for (long k = 1; k <= cap; ++k) {
    if (scalar_of(P).has_value()) return k;
    P = attach(F, P * A);
  }
  return std::nullopt;
}

Poly char_poly(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  if (A0.rows() != A0.cols()) throw std::invalid_argument("char poly of non-square matrix");
  Mat A = attach(F, A0);
  const int n = static_cast<int>(A.rows());
  // Berkowitz: grow the descending coefficient vector of det(tI - M) across
  // leading principal blocks M; each step is a Toeplitz multiply by a vector
  // built from -R M^j C terms, with no divisions.
  std::vector<Fq> C{F.one(), -A(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<Fq> v(r + 2, F.zero());
    v[0] = F.one();
    v[1] = -A(r, r);
    Vec cur = A.block(0, r, r, 1);
    for (int k = 2; k <= r + 1; ++k) {
      Fq s = F.zero();
      for (int i = 0; i < r; ++i) s += A(r, i) * cur(i);
      v[k] = -s;
      if (k <= r) cur = A.topLeftCorner(r, r) * cur;
    }
    std::vector<Fq> Cn(r + 2, F.zero());
    for (int i = 0; i < static_cast<int>(Cn.size()); ++i)
      for (int j = 0; j < static_cast<int>(C.size()) && j <= i; ++j)
        if (i - j < static_cast<int>(v.size())) Cn[i] += v[i - j] * C[j];
    C = std::move(Cn);
  }
  std::vector<Fq> asc(C.rbegin(), C.rend());
  return Poly(F, std::move(asc));
}

namespace {

// Monic annihilator of v under A from the Krylov sequence v, Av, A^2 v, ...
Poly vector_annihilator(const FieldSpec& F, const Mat& A, Vec v) {
  const int n = static_cast<int>(A.rows());
  std::vector<Vec> red;                   // echelonized Krylov vectors, pivot value 1
  std::vector<int> pivots;
  std::vector<std::vector<Fq>> combos;    // red[i] = sum_j combos[i][j] A^j v
  Vec cur = attach_vec(F, v);
  std::vector<Fq> cur_combo{F.one()};
  for (int k = 0; k <= n; ++k) {
    Vec w = cur;
    std::vector<Fq> wc = cur_combo;
    for (size_t i = 0; i < red.size(); ++i) {
      if (w(pivots[i]).is_zero()) continue;
      Fq f = w(pivots[i]);
      w -= f * red[i];
      for (size_t j = 0; j < combos[i].size(); ++j) wc[j] -= f * combos[i][j];
    }
    int pv = -1;
    for (int i = 0; i < n; ++i)
      if (!w(i).is_zero()) { pv = i; break; }
    if (pv < 0) return Poly(F, std::move(wc));  // monic of degree k by construction
    Fq inv = w(pv).inverse();
    w = attach_vec(F, inv * w);
    for (Fq& c : wc) c = inv * c;
    red.push_back(std::move(w));
    pivots.push_back(pv);
    combos.push_back(std::move(wc));
    cur = attach_vec(F, A * cur);
    cur_combo.assign(k + 2, F.zero());
    cur_combo[k + 1] = F.one();
  }
  throw std::logic_error("Krylov sequence exceeded dimension without dependence");
}

}  // namespace

Poly min_poly(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  Mat A = attach(F, A0);
  const int n = static_cast<int>(A.rows());
  Poly m = Poly::constant(F, F.one());
  for (int i = 0; i < n; ++i) {
    Vec e = attach_vec(F, Vec::Zero(n));
    e(i) = F.one();
    m = lcm(m, vector_annihilator(F, A, e));
    if (m.degree() == n) break;
  }
  return m;
}

std::vector<Poly> invariant_factors(const Mat& A0) {
  const FieldSpec& F = spec_of_checked(A0);
  if (A0.rows() != A0.cols()) throw std::invalid_argument("invariant factors of non-square matrix");
  Mat A = attach(F, A0);
  const int n = static_cast<int>(A.rows());
  // Smith normal form of tI - A over GF(q)[t].
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(F)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[i][j] = -Poly::constant(F, A(i, j));
      if (i == j) M[i][j] = M[i][j] + Poly::t(F);
    }
  for (int k = 0; k < n; ++k) {
    while (true) {
      int pi = -1, pj = -1, best = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!M[i][j].is_zero() && (best < 0 || M[i][j].degree() < best)) {
            best = M[i][j].degree();
            pi = i;
            pj = j;
          }
      if (pi < 0) { k = n; break; }  // all-zero submatrix
      std::swap(M[k], M[pi]);
      if (pj != k)
        for (int i = 0; i < n; ++i) std::swap(M[i][k], M[i][pj]);
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (M[i][k].is_zero()) continue;
        Poly q = M[i][k] / M[k][k];
        for (int j = k; j < n; ++j) M[i][j] = M[i][j] - q * M[k][j];
        if (!M[i][k].is_zero()) clean = false;
      }
      if (!clean) continue;
      for (int j = k + 1; j < n; ++j) {
        if (M[k][j].is_zero()) continue;
        Poly q = M[k][j] / M[k][k];
        for (int i = 0; i < n; ++i) M[i][j] = M[i][j] - q * M[i][k];
        if (!M[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (int i = k + 1; i < n && divides_all; ++i)
        for (int j = k + 1; j < n && divides_all; ++j)
          if (!(M[i][j] % M[k][k]).is_zero()) {
            for (int jj = 0; jj < n; ++jj) M[k][jj] = M[k][jj] + M[i][jj];
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (k >= n) break;
  }
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) {
    if (M[i][i].is_zero() || M[i][i].degree() < 1) continue;
    out.push_back(M[i][i].monic());
  }
  return out;
}

int spanning_dimension(const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const FieldSpec& F = spec_of_checked(gens[0]);
  const int n = static_cast<int>(gens[0].rows());
  const int N = n * n;
  std::vector<std::vector<Fq>> ech;
  std::vector<int> ech_piv;
  std::unordered_map<int, int> by_pivot;
  auto reduce_add = [&](const Mat& M) -> bool {
    std::vector<Fq> f(N, F.zero());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f[r * n + c] = F.zero() + M(r, c);
    while (true) {
      int lead = -1;
      for (int i = 0; i < N; ++i)
        if (!f[i].is_zero()) { lead = i; break; }
      if (lead < 0) return false;
      auto it = by_pivot.find(lead);
      if (it == by_pivot.end()) {
        Fq inv = f[lead].inverse();
        for (Fq& c : f) c *= inv;
        by_pivot[lead] = static_cast<int>(ech.size());
        ech_piv.push_back(lead);
        ech.push_back(std::move(f));
        return true;
      }
      const std::vector<Fq>& row = ech[it->second];
      Fq c = f[lead];
      for (int i = lead; i < N; ++i) f[i] -= c * row[i];
    }
  };
  std::vector<Mat> work;
  Mat I = identity_mat(F, n);
  if (reduce_add(I)) work.push_back(I);
  for (size_t h = 0; h < work.size() && static_cast<int>(ech.size()) < N; ++h) {
    for (const Mat& g : gens) {
      Mat P = attach(F, g * work[h]);
      if (reduce_add(P)) work.push_back(std::move(P));
      if (static_cast<int>(ech.size()) == N) break;
    }
  }
  return static_cast<int>(ech.size());
}

Mat substitute_matrix(const Poly& f, const Mat& A0) {
  const FieldSpec& F = f.spec();
  if (A0.rows() != A0.cols()) throw std::invalid_argument("substituting into non-square matrix");
  Mat A = attach(F, A0);
  const int n = static_cast<int>(A.rows());
  Mat acc = zero_mat(F, n, n);
  for (int i = f.degree(); i >= 0; --i) {
    acc = attach(F, acc * A);
    Fq c = f.coeff(i);
    for (int d = 0; d < n; ++d) acc(d, d) += c;
  }
  return acc;
}

std::string mat_str(const Mat& A) {
  std::ostringstream os;
  for (int i = 0; i < A.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < A.cols(); ++j) {
      if (j) os << ' ';
      os << A(i, j).str();
    }
  }
  return os.str();
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (int i = 0; i < v.rows(); ++i) {
    if (i) os << ' ';
    os << v(i).str();
  }
  return os.str();
}

}  // namespace cg23
