#include "cg23/forms.hpp"

#include <stdexcept>

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

int sigma_power(const FieldSpec& F, Sigma sigma) {
  if (sigma == Sigma::Identity) return 0;
  if (F.n() % 2 != 0)
    throw std::invalid_argument("q-power twist needs a quadratic extension field");
  return F.n() / 2;
}

Mat unflatten(const FieldSpec& F, const Vec& v, int n) {
  Mat M = zero_mat(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = v(i * n + j);
  return M;
}

void normalize_first_entry(const FieldSpec& F, Mat& M) {
  int n = static_cast<int>(M.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < static_cast<int>(M.cols()); ++j)
      if (!M(i, j).is_zero()) {
        Fq inv = M(i, j).inverse();
        M = attach(F, Mat(inv * M));
        return;
      }
}

bool is_symmetric(const Mat& M) { return mats_equal(M, Mat(M.transpose())); }

bool is_alternating(const Mat& M) {
  for (int i = 0; i < M.rows(); ++i) {
    if (!M(i, i).is_zero()) return false;
    for (int j = 0; j < M.cols(); ++j)
      if (M(i, j) != -M(j, i)) return false;
  }
  return true;
}

// rescale M to a (M^T)^sigma = M representative if one exists
bool hermitian_rescale(const FieldSpec& F, Mat& M, int k) {
  Mat Mstar = frobenius_entrywise(Mat(M.transpose()), k);
  for (long r = 1; r < F.q(); ++r) {
    Fq lam = F.element_at(r);
    Fq lams = lam.frobenius(k);
    if (mats_equal(attach(F, Mat(lams * Mstar)), attach(F, Mat(lam * M)))) {
      M = attach(F, Mat(lam * M));
      return true;
    }
  }
  return false;
}

}  // namespace

std::string form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Alternating: return "alternating";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::None: return "none";
  }
  return "?";
}

FormSolution invariant_forms(const std::vector<Mat>& gens, Sigma sigma) {
  const FieldSpec& F = common_field(gens);
  int n = static_cast<int>(gens[0].rows());
  int k = sigma_power(F, sigma);
  int N = n * n;
  Mat A = zero_mat(F, static_cast<int>(gens.size()) * N, N);
  int row0 = 0;
  for (const Mat& g : gens) {
    Mat gs = k == 0 ? g : frobenius_entrywise(g, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = row0 + i * n + j;
        for (int kk = 0; kk < n; ++kk)
          for (int l = 0; l < n; ++l) A(row, kk * n + l) += g(kk, i) * gs(l, j);
        A(row, i * n + j) -= F.one();
      }
    row0 += N;
  }
  FormSolution sol;
  sol.sigma = sigma;
  for (const Vec& v : kernel_basis(A)) {
    Mat M = unflatten(F, v, n);
    normalize_first_entry(F, M);
    FormKind kind = FormKind::None;
    if (sigma == Sigma::QPower && hermitian_rescale(F, M, k)) {
      kind = FormKind::Hermitian;
    } else if (is_alternating(M)) {
      kind = FormKind::Alternating;
    } else if (is_symmetric(M)) {
      kind = FormKind::Symmetric;
    }
    sol.basis.push_back(M);
    sol.kind.push_back(kind);
    sol.nondegenerate.push_back(!det(M).is_zero());
  }
  return sol;
}

FormSolution invariant_forms(const GeneratorPair& pair, Sigma sigma) {
  return invariant_forms(std::vector<Mat>{pair.x, pair.y}, sigma);
}

QuadraticSolution invariant_quadratic_system(const std::vector<Mat>& gens,
                                             const std::optional<Mat>& polarization) {
  const FieldSpec& F = common_field(gens);
  if (F.p() != 2) throw std::invalid_argument("quadratic-form system requires characteristic 2");
  int n = static_cast<int>(gens[0].rows());
  // unknowns: entries b_{ij}, i <= j, of an upper-triangular matrix
  std::vector<std::pair<int, int>> vars;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) vars.emplace_back(i, j);
  int V = static_cast<int>(vars.size());
  std::vector<std::vector<Fq>> rows;
  std::vector<Fq> rhs;
  auto new_row = [&]() -> std::vector<Fq>& {
    rows.emplace_back(V, F.zero());
    rhs.push_back(F.zero());
    return rows.back();
  };
  if (polarization) {
    const Mat& J = *polarization;
    if (J.rows() != n || J.cols() != n) throw std::invalid_argument("polarization size mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto& row = new_row();
        for (int v = 0; v < V; ++v)
          if (vars[v] == std::make_pair(i, j)) row[v] = F.one();
        rhs.back() = J(i, j);
      }
  }
  // invariance: C = g^T B g + B must represent the zero quadratic form, i.e.
  // diag(C) = 0 and C symmetric
  for (const Mat& g : gens) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        auto& row = new_row();
        for (int v = 0; v < V; ++v) {
          auto [kk, l] = vars[v];
          Fq c = g(kk, i) * g(l, j);           // coefficient in C(i, j)
          Fq ct = g(kk, j) * g(l, i);          // coefficient in C(j, i)
          if (i == j) {
            row[v] += c;
            if (kk == i && l == j) row[v] += F.one();
          } else {
            row[v] += c + ct;
            if (kk == i && l == j) row[v] += F.one();
          }
        }
      }
  }
  int R = static_cast<int>(rows.size());
  Mat A = zero_mat(F, R, V);
  Vec b(R);
  for (int r = 0; r < R; ++r) {
    for (int v = 0; v < V; ++v) A(r, v) = rows[r][v];
    b(r) = rhs[r];
  }
  QuadraticSolution out;
  out.homogeneous_dim = V - rank(A);
  auto x = solve(A, b);
  out.exists = x.has_value();
  if (x) {
    Mat B = zero_mat(F, n, n);
    for (int v = 0; v < V; ++v) B(vars[v].first, vars[v].second) = (*x)(v);
    out.witness = B;
  }
  return out;
}

QuadraticSolution invariant_quadratic_char2(const GeneratorPair& pair) {
  if (pair.family != Family::Sp6Even)
    throw std::invalid_argument("quadratic-form obstruction applies to the 6-dimensional even-characteristic family");
  Mat J = sp6_gram(*pair.field, pair.a);
  return invariant_quadratic_system({pair.x, pair.y}, J);
}

WallForm wall_form(const Mat& x, const Mat& bilinear) {
  const FieldSpec& F = spec_of_checked(x);
  if (F.p() == 2) throw std::invalid_argument("Wall form requires odd characteristic");
  if (det(bilinear).is_zero()) throw std::domain_error("degenerate bilinear form");
  Mat xmI = attach(F, Mat(x - identity_mat(F, static_cast<int>(x.rows()))));
  WallForm w;
  w.basis = image_basis(xmI);
  w.gram = wall_form_gram(x, bilinear, w.basis);
  w.det = w.basis.empty() ? F.one() : det(w.gram);
  return w;
}

Mat wall_form_gram(const Mat& x, const Mat& bilinear, const std::vector<Vec>& basis) {
  const FieldSpec& F = spec_of_checked(x);
  int n = static_cast<int>(x.rows());
  Mat xmI = attach(F, Mat(x - identity_mat(F, n)));
  int d = static_cast<int>(basis.size());
  if (d != static_cast<int>(image_basis(xmI).size()))
    throw std::invalid_argument("basis does not have the dimension of Im(x - I)");
  if (d == 0) return zero_mat(F, 0, 0);
  std::vector<Vec> pre;
  Mat span = zero_mat(F, n, d);
  for (int j = 0; j < d; ++j) span.col(j) = basis[static_cast<size_t>(j)];
  if (rank(span) != d) throw std::invalid_argument("basis vectors are dependent");
  for (const Vec& u : basis) {
    auto up = solve(xmI, u);
    if (!up) throw std::invalid_argument("basis vector outside Im(x - I)");
    pre.push_back(*up);
  }
  Mat gram = zero_mat(F, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Fq acc = F.zero();
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) acc += pre[i](r) * bilinear(r, c) * basis[j](c);
      gram(i, j) = acc;
    }
  return gram;
}

Mat dim7_bilinear(const FieldSpec& F, const Fq& a) {
  if (F.p() == 2) throw std::invalid_argument("the symmetric form normalization needs odd characteristic");
  auto c = [&](long v) { return F.from_int(v); };
  Fq u = c(2) * a - c(1);
  Fq v = c(3) - c(2) * a;
  Fq w = c(2) * a * a - c(2) * a - c(1);
  Mat B = zero_mat(F, 7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) B(i, j) = i == j ? c(3) : c(-1);
  B(0, 5) = B(5, 0) = u;
  B(0, 6) = B(6, 0) = u;
  B(1, 4) = B(4, 1) = u;
  B(1, 6) = B(6, 1) = v;
  B(2, 3) = B(3, 2) = v;
  B(3, 6) = B(6, 3) = v;
  B(5, 6) = B(6, 5) = w;
  return B;
}

std::vector<Vec> dim7_reflection_basis(const FieldSpec& F, const Fq& a) {
  std::vector<Vec> basis;
  basis.push_back(vec_from_ints(F, {1, -1, 0, 0, 0, 0, 0}));
  basis.push_back(vec_from_ints(F, {0, 0, 1, -1, 0, 0, 0}));
  basis.push_back(vec_from_ints(F, {0, 0, 0, 0, 1, -1, 0}));
  Vec v4 = vec_from_ints(F, {0, 0, 0, 0, 1, 1, 2});
  v4(0) = -a;
  v4(1) = -a;
  basis.push_back(v4);
  return basis;
}

bool spinor_norm_in_omega(const Mat& x, const Mat& bilinear) {
  WallForm w = wall_form(x, bilinear);
  if (w.det.is_zero())
    throw std::domain_error("Wall Gram determinant vanishes; spinor class undefined here");
  return is_square(w.det);
}

}  // namespace cg23
