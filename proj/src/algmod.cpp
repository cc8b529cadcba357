#include <comod/algmod.hpp>

#include <stdexcept>

namespace comod {

static void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<std::string> check_algebra(const Algebra& A) {
  std::vector<std::string> bad;
  const Field& F = A.field;
  int d = A.dim;
  if (A.mult.rows != d || A.mult.cols != d * d || A.unit.rows != d ||
      A.unit.cols != 1) {
    bad.push_back("shape");
    return bad;
  }
  Mat I = identity(d);
  if (mul(F, A.mult, kron(F, A.mult, I)) != mul(F, A.mult, kron(F, I, A.mult)))
    bad.push_back("associativity");
  if (mul(F, A.mult, kron(F, A.unit, I)) != I) bad.push_back("left unit");
  if (mul(F, A.mult, kron(F, I, A.unit)) != I) bad.push_back("right unit");
  return bad;
}

std::vector<std::string> check_algebra_morphism(const AlgebraMorphism& f) {
  std::vector<std::string> bad;
  const Field& F = f.source.field;
  if (!(F == f.target.field)) return {"field mismatch"};
  if (f.map.rows != f.target.dim || f.map.cols != f.source.dim)
    return {"shape"};
  if (mul(F, f.map, f.source.mult) !=
      mul(F, f.target.mult, kron(F, f.map, f.map)))
    bad.push_back("multiplicativity");
  if (mul(F, f.map, f.source.unit) != f.target.unit) bad.push_back("unit");
  return bad;
}

std::vector<std::string> check_module(const ModuleRight& M) {
  std::vector<std::string> bad;
  const Field& F = M.alg.field;
  int m = M.dim, a = M.alg.dim;
  if (M.action.rows != m || M.action.cols != m * a) return {"shape"};
  Mat Im = identity(m), Ia = identity(a);
  if (mul(F, M.action, kron(F, M.action, Ia)) !=
      mul(F, M.action, kron(F, Im, M.alg.mult)))
    bad.push_back("associativity");
  if (mul(F, M.action, kron(F, Im, M.alg.unit)) != Im) bad.push_back("unit");
  return bad;
}

std::vector<std::string> check_module(const ModuleLeft& M) {
  std::vector<std::string> bad;
  const Field& F = M.alg.field;
  int m = M.dim, a = M.alg.dim;
  if (M.action.rows != m || M.action.cols != a * m) return {"shape"};
  Mat Im = identity(m), Ia = identity(a);
  if (mul(F, M.action, kron(F, M.alg.mult, Im)) !=
      mul(F, M.action, kron(F, Ia, M.action)))
    bad.push_back("associativity");
  if (mul(F, M.action, kron(F, M.alg.unit, Im)) != Im) bad.push_back("unit");
  return bad;
}

Algebra opposite(const Algebra& A) {
  Algebra B = A;
  B.mult = mul(A.field, A.mult, swap_tensor(A.dim, A.dim));
  return B;
}

Algebra base_field_algebra(const Field& F) {
  Algebra A;
  A.field = F;
  A.dim = 1;
  A.mult = identity(1);
  A.unit = identity(1);
  return A;
}

AlgebraMorphism opposite_morphism(const AlgebraMorphism& f) {
  return {opposite(f.source), opposite(f.target), f.map};
}

ModuleRight left_as_right_op(const ModuleLeft& M) {
  ModuleRight R;
  R.alg = opposite(M.alg);
  R.dim = M.dim;
  R.action = mul(M.alg.field, M.action, swap_tensor(M.dim, M.alg.dim));
  return R;
}

ModuleLeft right_op_as_left(const ModuleRight& M) {
  ModuleLeft L;
  L.alg = opposite(M.alg);
  L.dim = M.dim;
  L.action = mul(M.alg.field, M.action, swap_tensor(M.alg.dim, M.dim));
  return L;
}

ModuleRight regular_right(const Algebra& A) { return {A, A.dim, A.mult}; }

ModuleRight zero_module_right(const Algebra& A) {
  return {A, 0, Mat(0, 0)};
}

ModuleRight trivial_module_right(const Algebra& A, int dim, const Mat& eps) {
  require(eps.rows == 1 && eps.cols == A.dim, "character shape");
  return {A, dim, kron(A.field, identity(dim), eps)};
}

ModuleRight direct_sum_module(const ModuleRight& M, const ModuleRight& N) {
  require(M.alg == N.alg, "algebra mismatch");
  const Field& F = M.alg.field;
  int a = M.alg.dim, m = M.dim, n = N.dim;
  ModuleRight S{M.alg, m + n, Mat(m + n, (m + n) * a)};
  for (int j = 0; j < a; j++) {
    for (int l = 0; l < m; l++)
      for (int i = 0; i < m; i++)
        S.action.at(i, l * a + j) = M.action.at(i, l * a + j);
    for (int l = 0; l < n; l++)
      for (int i = 0; i < n; i++)
        S.action.at(m + i, (m + l) * a + j) = N.action.at(i, l * a + j);
  }
  return S;
}

Mat right_mult_op(const ModuleRight& M, int j) {
  int m = M.dim, a = M.alg.dim;
  Mat R(m, m);
  for (int i = 0; i < m; i++)
    for (int l = 0; l < m; l++) R.at(i, l) = M.action.at(i, l * a + j);
  return R;
}

ModuleRight restrict_module(const AlgebraMorphism& f, const ModuleRight& M) {
  require(M.alg == f.target, "algebra mismatch");
  const Field& F = f.source.field;
  ModuleRight R;
  R.alg = f.source;
  R.dim = M.dim;
  R.action = mul(F, M.action, kron(F, identity(M.dim), f.map));
  return R;
}

ExtendResult extend_module(const AlgebraMorphism& f, const ModuleRight& M) {
  require(M.alg == f.source, "algebra mismatch");
  const Field& F = f.source.field;
  int m = M.dim, t = f.target.dim;
  Mat Im = identity(m), It = identity(t);
  // parallel pair on M (x) A_src (x) A_tgt
  Mat map1 = kron(F, M.action, It);
  Mat map2 = mul(F, kron(F, Im, f.target.mult), kron(F, Im, kron(F, f.map, It)));
  Quotient q = coequalizer(F, map1, map2);
  ModuleRight Q;
  Q.alg = f.target;
  Q.dim = q.proj.rows;
  Q.action = mul(F, q.proj,
                 mul(F, kron(F, Im, f.target.mult), kron(F, q.sect, It)));
  return {Q, q.proj, q.sect};
}

Mat extend_morphism(const AlgebraMorphism& f, const ExtendResult& EM,
                    const ExtendResult& EN, const Mat& g) {
  const Field& F = f.source.field;
  int t = f.target.dim;
  return mul(F, EN.proj, mul(F, kron(F, g, identity(t)), EM.sect));
}

CoextendResult coextend_module(const AlgebraMorphism& f, const ModuleRight& N) {
  require(N.alg == f.source, "algebra mismatch");
  const Field& F = f.source.field;
  int n = N.dim, t = f.target.dim, s = f.source.dim;
  // h in N (x) A_tgt^* (N-major), constrained by h(b alpha(r)) = h(b).r
  Mat E(n * t * s, n * t);
  int row = 0;
  for (int j = 0; j < t; j++)
    for (int k = 0; k < s; k++) {
      Mat ar = mul(F, f.map, basis_vec(s, k));
      Mat prod(t, 1);
      for (int l = 0; l < t; l++) {
        Scalar acc = F.zero();
        for (int u = 0; u < t; u++)
          acc = F.add(acc, F.mul(f.target.mult.at(l, j * t + u), ar.at(u, 0)));
        prod.at(l, 0) = acc;
      }
      for (int i = 0; i < n; i++) {
        for (int l = 0; l < t; l++)
          E.at(row + i, i * t + l) = prod.at(l, 0);
        for (int l = 0; l < n; l++)
          E.at(row + i, l * t + j) =
              F.sub(E.at(row + i, l * t + j), N.action.at(i, l * s + k));
      }
      row += n;
    }
  Mat incl = kernel_basis(F, E);
  int w = incl.cols;
  // right action (h.a_k)(a_j) = h(a_k a_j)
  ModuleRight W;
  W.alg = f.target;
  W.dim = w;
  W.action = Mat(w, w * t);
  for (int k = 0; k < t; k++) {
    Mat Lk(t, t);  // left multiplication by a_k
    for (int l = 0; l < t; l++)
      for (int j = 0; j < t; j++) Lk.at(l, j) = f.target.mult.at(l, k * t + j);
    Mat phi = kron(F, identity(n), transpose(Lk));
    Mat img = coords_in(F, incl, mul(F, phi, incl));
    for (int v = 0; v < w; v++)
      for (int i = 0; i < w; i++) W.action.at(i, v * t + k) = img.at(i, v);
  }
  return {W, incl};
}

Mat coextend_morphism(const AlgebraMorphism& f, const CoextendResult& CM,
                      const CoextendResult& CN, const Mat& g) {
  const Field& F = f.source.field;
  int t = f.target.dim;
  return coords_in(F, CN.incl, mul(F, kron(F, g, identity(t)), CM.incl));
}

Mat extend_unit(const AlgebraMorphism& f, const ModuleRight& M,
                const ExtendResult& EM) {
  const Field& F = f.source.field;
  return mul(F, EM.proj, kron(F, identity(M.dim), f.target.unit));
}

Mat extend_counit(const AlgebraMorphism& f, const ModuleRight& N,
                  const ExtendResult& ERN) {
  const Field& F = f.source.field;
  return mul(F, N.action, ERN.sect);
}

Mat coextend_unit(const AlgebraMorphism& f, const ModuleRight& M,
                  const CoextendResult& CRM) {
  const Field& F = f.source.field;
  int m = M.dim, t = f.target.dim;
  Mat eta(m * t, m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < t; j++)
      for (int l = 0; l < m; l++)
        eta.at(i * t + j, l) = M.action.at(i, l * t + j);
  return coords_in(F, CRM.incl, eta);
}

Mat coextend_counit(const AlgebraMorphism& f, const ModuleRight& N,
                    const CoextendResult& CN) {
  const Field& F = f.source.field;
  Mat ev = kron(F, identity(N.dim), transpose(f.target.unit));
  return mul(F, ev, CN.incl);
}

std::vector<Mat> hom_modules(const ModuleRight& M, const ModuleRight& N) {
  require(M.alg == N.alg, "algebra mismatch");
  const Field& F = M.alg.field;
  int m = M.dim, n = N.dim, a = M.alg.dim;
  Mat E(n * m * a, n * m);
  int row = 0;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < m; j++)
      for (int k = 0; k < a; k++) {
        for (int l = 0; l < m; l++)
          E.at(row, i * m + l) =
              F.add(E.at(row, i * m + l), M.action.at(l, j * a + k));
        for (int l = 0; l < n; l++)
          E.at(row, l * m + j) =
              F.sub(E.at(row, l * m + j), N.action.at(i, l * a + k));
        row++;
      }
  Mat K = kernel_basis(F, E);
  std::vector<Mat> out;
  for (int c = 0; c < K.cols; c++) {
    Mat X(n, m);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < m; j++) X.at(i, j) = K.at(i * m + j, c);
    out.push_back(X);
  }
  return out;
}

SplitCertificate is_projective(const ModuleRight& M) {
  const Field& F = M.alg.field;
  int m = M.dim, a = M.alg.dim;
  if (m == 0) return {true, Mat(0, 0)};
  // free cover pi = action : K^m (x) A -> M; seek A-linear s with pi s = id
  Mat actF = kron(F, identity(m), M.alg.mult);
  int un = (m * a) * m;
  Mat E(m * a * m * a + m * m, un);
  Mat rhs(E.rows, 1);
  int row = 0;
  for (int u = 0; u < m * a; u++)
    for (int j = 0; j < m; j++)
      for (int k = 0; k < a; k++) {
        for (int l = 0; l < m; l++)
          E.at(row, u * m + l) =
              F.add(E.at(row, u * m + l), M.action.at(l, j * a + k));
        for (int v = 0; v < m * a; v++)
          E.at(row, v * m + j) =
              F.sub(E.at(row, v * m + j), actF.at(u, v * a + k));
        row++;
      }
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      for (int u = 0; u < m * a; u++) E.at(row, u * m + j) = M.action.at(i, u);
      rhs.at(row, 0) = (i == j) ? F.one() : F.zero();
      row++;
    }
  auto X = solve(F, E, rhs);
  if (!X) return {false, Mat()};
  Mat S(m * a, m);
  for (int u = 0; u < m * a; u++)
    for (int j = 0; j < m; j++) S.at(u, j) = X->at(u * m + j, 0);
  return {true, S};
}

ModuleRight dual_module_op(const ModuleRight& M) {
  const Field& F = M.alg.field;
  int m = M.dim, a = M.alg.dim;
  ModuleRight D;
  D.alg = opposite(M.alg);
  D.dim = m;
  D.action = Mat(m, m * a);
  for (int ip = 0; ip < m; ip++)
    for (int i = 0; i < m; i++)
      for (int j = 0; j < a; j++)
        D.action.at(ip, i * a + j) = M.action.at(i, ip * a + j);
  return D;
}

bool is_injective(const ModuleRight& M) {
  return is_projective(dual_module_op(M)).ok;
}

Mat submodule_generated(const ModuleRight& M, const Mat& vectors) {
  const Field& F = M.alg.field;
  require(vectors.rows == M.dim, "vectors outside ambient");
  Mat V = subspace_canon(F, vectors);
  for (;;) {
    Mat W = V;
    for (int j = 0; j < M.alg.dim; j++)
      W = subspace_sum(F, W, mul(F, right_mult_op(M, j), V));
    if (W.cols == V.cols) return V;
    V = W;
  }
}

ModuleRight submodule_restrict(const ModuleRight& M, const Mat& basis) {
  const Field& F = M.alg.field;
  Mat incl = subspace_canon(F, basis);
  int k = incl.cols, a = M.alg.dim;
  Mat acted = mul(F, M.action, kron(F, incl, identity(a)));
  auto X = solve(F, incl, acted);
  if (!X) throw std::domain_error("subspace not action-stable");
  return {M.alg, k, *X};
}

ModuleRight quotient_module(const ModuleRight& M, const Mat& basis,
                            Quotient* out_q) {
  const Field& F = M.alg.field;
  Mat incl = subspace_canon(F, basis);
  int a = M.alg.dim;
  if (!solve(F, incl, mul(F, M.action, kron(F, incl, identity(a)))))
    throw std::domain_error("subspace not action-stable");
  Quotient q = quotient(F, M.dim, incl);
  ModuleRight Q;
  Q.alg = M.alg;
  Q.dim = q.proj.rows;
  Q.action = mul(F, q.proj, mul(F, M.action, kron(F, q.sect, identity(a))));
  if (out_q) *out_q = q;
  return Q;
}

std::vector<std::string> check_fp_action(const FPAlgebraAction& D) {
  std::vector<std::string> bad;
  if (int(D.gen_mats.size()) != D.gen_count) return {"generator count"};
  for (auto& G : D.gen_mats)
    if (G.rows != D.module_dim || G.cols != D.module_dim) return {"shape"};
  for (size_t r = 0; r < D.relations.size(); r++) {
    Mat acc(D.module_dim, D.module_dim);
    for (auto& term : D.relations[r])
      acc = add(D.field, acc,
                scl(D.field, term.coeff, fp_word_matrix(D, term.word)));
    if (!is_zero_mat(D.field, acc))
      bad.push_back("relation " + std::to_string(r));
  }
  return bad;
}

Mat fp_word_matrix(const FPAlgebraAction& D, const std::vector<int>& word) {
  Mat W = identity(D.module_dim);
  for (int g : word) {
    require(g >= 0 && g < D.gen_count, "generator index");
    W = mul(D.field, D.gen_mats[size_t(g)], W);
  }
  return W;
}

Mat fp_submodule_generated(const FPAlgebraAction& D, const Mat& vectors) {
  const Field& F = D.field;
  require(vectors.rows == D.module_dim, "vectors outside ambient");
  Mat V = subspace_canon(F, vectors);
  for (;;) {
    Mat W = V;
    for (auto& G : D.gen_mats) W = subspace_sum(F, W, mul(F, G, V));
    if (W.cols == V.cols) return V;
    V = W;
  }
}

FPAlgebraAction fp_quotient(const FPAlgebraAction& D, const Mat& sub,
                            Quotient* out_q) {
  const Field& F = D.field;
  Mat incl = subspace_canon(F, sub);
  for (auto& G : D.gen_mats)
    if (!solve(F, incl, mul(F, G, incl)))
      throw std::domain_error("subspace not action-stable");
  Quotient q = quotient(F, D.module_dim, incl);
  FPAlgebraAction Q = D;
  Q.module_dim = q.proj.rows;
  Q.gen_mats.clear();
  for (auto& G : D.gen_mats)
    Q.gen_mats.push_back(mul(F, q.proj, mul(F, G, q.sect)));
  if (out_q) *out_q = q;
  return Q;
}

}  // namespace comod
