#include <comod/coalg.hpp>

#include <stdexcept>

namespace comod {

static void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// first column where L and R differ names the witness basis vector
static void law(std::vector<std::string>& bad, const Field& F, const Mat& L,
                const Mat& R, const std::string& name) {
  if (L == R) return;
  for (int j = 0; j < L.cols; j++)
    for (int i = 0; i < L.rows; i++)
      if (!F.eq(L.at(i, j), R.at(i, j))) {
        bad.push_back(name + " fails on basis vector " + std::to_string(j));
        return;
      }
}

std::vector<std::string> check_coalgebra(const Coalgebra& C) {
  std::vector<std::string> bad;
  const Field& F = C.field;
  int c = C.dim;
  if (C.delta.rows != c * c || C.delta.cols != c || C.eps.rows != 1 ||
      C.eps.cols != c)
    return {"shape"};
  Mat I = identity(c);
  law(bad, F, mul(F, kron(F, C.delta, I), C.delta),
      mul(F, kron(F, I, C.delta), C.delta), "coassociativity");
  law(bad, F, mul(F, kron(F, C.eps, I), C.delta), I, "left counit");
  law(bad, F, mul(F, kron(F, I, C.eps), C.delta), I, "right counit");
  return bad;
}

std::vector<std::string> check_coalgebra_morphism(const CoalgebraMorphism& f) {
  std::vector<std::string> bad;
  const Field& F = f.source.field;
  if (!(F == f.target.field)) return {"field mismatch"};
  if (f.map.rows != f.target.dim || f.map.cols != f.source.dim)
    return {"shape"};
  law(bad, F, mul(F, kron(F, f.map, f.map), f.source.delta),
      mul(F, f.target.delta, f.map), "comultiplicativity");
  law(bad, F, mul(F, f.target.eps, f.map), f.source.eps, "counit");
  return bad;
}

std::vector<std::string> check_comodule(const ComoduleRight& M) {
  std::vector<std::string> bad;
  const Field& F = M.coalg.field;
  int m = M.dim, c = M.coalg.dim;
  if (M.rho.rows != m * c || M.rho.cols != m) return {"shape"};
  Mat Im = identity(m), Ic = identity(c);
  law(bad, F, mul(F, kron(F, M.rho, Ic), M.rho),
      mul(F, kron(F, Im, M.coalg.delta), M.rho), "coassociativity");
  law(bad, F, mul(F, kron(F, Im, M.coalg.eps), M.rho), Im, "counit");
  return bad;
}

std::vector<std::string> check_comodule(const ComoduleLeft& M) {
  std::vector<std::string> bad;
  const Field& F = M.coalg.field;
  int m = M.dim, c = M.coalg.dim;
  if (M.rho.rows != c * m || M.rho.cols != m) return {"shape"};
  Mat Im = identity(m), Ic = identity(c);
  law(bad, F, mul(F, kron(F, M.coalg.delta, Im), M.rho),
      mul(F, kron(F, Ic, M.rho), M.rho), "coassociativity");
  law(bad, F, mul(F, kron(F, M.coalg.eps, Im), M.rho), Im, "counit");
  return bad;
}

std::vector<std::string> check_comodule_morphism(const ComoduleRight& M,
                                                 const ComoduleRight& N,
                                                 const Mat& f) {
  std::vector<std::string> bad;
  const Field& F = M.coalg.field;
  if (!(M.coalg == N.coalg)) return {"coalgebra mismatch"};
  if (f.rows != N.dim || f.cols != M.dim) return {"shape"};
  law(bad, F, mul(F, N.rho, f),
      mul(F, kron(F, f, identity(M.coalg.dim)), M.rho), "colinearity");
  return bad;
}

bool cocommutative(const Coalgebra& C) {
  return mul(C.field, swap_tensor(C.dim, C.dim), C.delta) == C.delta;
}

Coalgebra base_field_coalgebra(const Field& F) {
  Coalgebra C;
  C.field = F;
  C.dim = 1;
  C.delta = identity(1);
  C.eps = identity(1);
  return C;
}

Algebra dual_algebra(const Coalgebra& C) {
  return {C.field, C.dim, transpose(C.delta), transpose(C.eps)};
}

Coalgebra dual_coalgebra(const Algebra& A) {
  return {A.field, A.dim, transpose(A.mult), transpose(A.unit)};
}

AlgebraMorphism dual_morphism(const CoalgebraMorphism& f) {
  return {dual_algebra(f.target), dual_algebra(f.source), transpose(f.map)};
}

ModuleLeft comodule_to_module(const ComoduleRight& M) {
  int m = M.dim, c = M.coalg.dim;
  ModuleLeft L;
  L.alg = dual_algebra(M.coalg);
  L.dim = m;
  L.action = Mat(m, c * m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < c; j++)
      for (int l = 0; l < m; l++)
        L.action.at(i, j * m + l) = M.rho.at(i * c + j, l);
  return L;
}

ComoduleRight module_to_comodule(const ModuleLeft& N, const Coalgebra& C) {
  require(N.alg == dual_algebra(C), "module is not over the dual algebra");
  int m = N.dim, c = C.dim;
  ComoduleRight M;
  M.coalg = C;
  M.dim = m;
  M.rho = Mat(m * c, m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < c; j++)
      for (int l = 0; l < m; l++)
        M.rho.at(i * c + j, l) = N.action.at(i, j * m + l);
  return M;
}

ModuleRight left_comodule_to_right_module(const ComoduleLeft& M) {
  int m = M.dim, c = M.coalg.dim;
  ModuleRight R;
  R.alg = dual_algebra(M.coalg);
  R.dim = m;
  R.action = Mat(m, m * c);
  for (int i = 0; i < m; i++)
    for (int l = 0; l < m; l++)
      for (int j = 0; j < c; j++)
        R.action.at(i, l * c + j) = M.rho.at(j * m + i, l);
  return R;
}

ComoduleLeft right_module_to_left_comodule(const ModuleRight& N,
                                           const Coalgebra& C) {
  require(N.alg == dual_algebra(C), "module is not over the dual algebra");
  int m = N.dim, c = C.dim;
  ComoduleLeft M;
  M.coalg = C;
  M.dim = m;
  M.rho = Mat(c * m, m);
  for (int i = 0; i < m; i++)
    for (int l = 0; l < m; l++)
      for (int j = 0; j < c; j++)
        M.rho.at(j * m + i, l) = N.action.at(i, l * c + j);
  return M;
}

ComoduleRight regular_comodule_right(const Coalgebra& C) {
  return {C, C.dim, C.delta};
}

ComoduleLeft regular_comodule_left(const Coalgebra& C) {
  return {C, C.dim, C.delta};
}

ComoduleRight direct_sum_comodule(const ComoduleRight& M,
                                  const ComoduleRight& N) {
  require(M.coalg == N.coalg, "coalgebra mismatch");
  int m = M.dim, n = N.dim, c = M.coalg.dim;
  ComoduleRight S{M.coalg, m + n, Mat((m + n) * c, m + n)};
  for (int j = 0; j < c; j++) {
    for (int i = 0; i < m; i++)
      for (int l = 0; l < m; l++)
        S.rho.at(i * c + j, l) = M.rho.at(i * c + j, l);
    for (int i = 0; i < n; i++)
      for (int l = 0; l < n; l++)
        S.rho.at((m + i) * c + j, m + l) = N.rho.at(i * c + j, l);
  }
  return S;
}

Mat cotensor(const ComoduleRight& M, const ComoduleLeft& N) {
  require(M.coalg == N.coalg, "coalgebra mismatch");
  const Field& F = M.coalg.field;
  Mat f1 = kron(F, M.rho, identity(N.dim));
  Mat f2 = kron(F, identity(M.dim), N.rho);
  return subspace_canon(F, equalizer(F, f1, f2));
}

ComoduleRight corestrict(const CoalgebraMorphism& f, const ComoduleRight& M) {
  require(M.coalg == f.source, "coalgebra mismatch");
  const Field& F = f.source.field;
  ComoduleRight R;
  R.coalg = f.target;
  R.dim = M.dim;
  R.rho = mul(F, kron(F, identity(M.dim), f.map), M.rho);
  return R;
}

ComoduleLeft corestricted_left_regular(const CoalgebraMorphism& f) {
  const Field& F = f.source.field;
  int c = f.source.dim;
  ComoduleLeft L;
  L.coalg = f.target;
  L.dim = c;
  L.rho = mul(F, kron(F, f.map, identity(c)), f.source.delta);
  return L;
}

CoinduceResult coinduce(const CoalgebraMorphism& f, const ComoduleRight& N) {
  require(N.coalg == f.target, "coalgebra mismatch");
  const Field& F = f.source.field;
  int c = f.source.dim, n = N.dim;
  Mat incl = cotensor(N, corestricted_left_regular(f));
  Mat rhs = mul(F, kron(F, identity(n), f.source.delta), incl);
  Mat rho = coords_in(F, kron(F, incl, identity(c)), rhs);
  return {{f.source, incl.cols, rho}, incl};
}

Mat coinduce_morphism(const CoalgebraMorphism& f, const CoinduceResult& CM,
                      const CoinduceResult& CN, const Mat& g) {
  const Field& F = f.source.field;
  return coords_in(F, CN.incl,
                   mul(F, kron(F, g, identity(f.source.dim)), CM.incl));
}

Mat coinduce_unit(const CoalgebraMorphism& f, const ComoduleRight& M,
                  const CoinduceResult& CRM) {
  return coords_in(f.source.field, CRM.incl, M.rho);
}

Mat coinduce_counit(const CoalgebraMorphism& f, const ComoduleRight& N,
                    const CoinduceResult& CN) {
  const Field& F = f.source.field;
  return mul(F, kron(F, identity(N.dim), f.source.eps), CN.incl);
}

CohomResult cohom(const CoalgebraMorphism& f, const ComoduleRight& N) {
  require(N.coalg == f.target, "coalgebra mismatch");
  AlgebraMorphism ad = dual_morphism(f);
  ModuleRight NR = left_as_right_op(comodule_to_module(N));
  ExtendResult E = extend_module(opposite_morphism(ad), NR);
  ModuleLeft L = right_op_as_left(E.module);
  return {module_to_comodule(L, f.source), E.proj, E.sect};
}

Mat cohom_morphism(const CoalgebraMorphism& f, const CohomResult& HM,
                   const CohomResult& HN, const Mat& g) {
  const Field& F = f.source.field;
  return mul(F, HN.proj, mul(F, kron(F, g, identity(f.source.dim)), HM.sect));
}

Mat cohom_unit(const CoalgebraMorphism& f, const ComoduleRight& N,
               const CohomResult& HN) {
  const Field& F = f.source.field;
  Mat unit_dual = transpose(f.source.eps);
  return mul(F, HN.proj, kron(F, identity(N.dim), unit_dual));
}

Mat cohom_counit(const CoalgebraMorphism& f, const ComoduleRight& W,
                 const CohomResult& HRW) {
  const Field& F = f.source.field;
  int m = W.dim, c = f.source.dim;
  Mat ev(m, m * c);
  for (int i = 0; i < m; i++)
    for (int l = 0; l < m; l++)
      for (int j = 0; j < c; j++) ev.at(i, l * c + j) = W.rho.at(i * c + j, l);
  return mul(F, ev, HRW.sect);
}

bool is_coflat(const CoalgebraMorphism& f) {
  ComoduleLeft C_as_D = corestricted_left_regular(f);
  return is_injective(left_comodule_to_right_module(C_as_D));
}

bool is_sigma_injective(const CoalgebraMorphism& f) {
  AlgebraMorphism ad = dual_morphism(f);
  ModuleRight X = restrict_module(ad, regular_right(ad.target));
  return is_projective(X).ok;
}

QuasiFiniteReport is_quasi_finite(const CoalgebraMorphism& f) {
  require(check_coalgebra_morphism(f).empty(), "invalid morphism");
  return {true,
          "every finite-dimensional comodule is quasi-finite, so the "
          "predicate is constantly true at this scale"};
}

std::vector<Mat> hom_comodules(const ComoduleRight& M, const ComoduleRight& N) {
  require(M.coalg == N.coalg, "coalgebra mismatch");
  const Field& F = M.coalg.field;
  int m = M.dim, n = N.dim, c = M.coalg.dim;
  Mat E(n * c * m, n * m);
  int row = 0;
  for (int i = 0; i < n; i++)
    for (int k = 0; k < c; k++)
      for (int j = 0; j < m; j++) {
        for (int l = 0; l < n; l++)
          E.at(row, l * m + j) =
              F.add(E.at(row, l * m + j), N.rho.at(i * c + k, l));
        for (int u = 0; u < m; u++)
          E.at(row, i * m + u) =
              F.sub(E.at(row, i * m + u), M.rho.at(u * c + k, j));
        row++;
      }
  Mat K = kernel_basis(F, E);
  std::vector<Mat> out;
  for (int col = 0; col < K.cols; col++) {
    Mat X(n, m);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < m; j++) X.at(i, j) = K.at(i * m + j, col);
    out.push_back(X);
  }
  return out;
}

Mat generated_subcomodule(const ComoduleRight& M, const Mat& vectors) {
  const Field& F = M.coalg.field;
  require(vectors.rows == M.dim, "vectors outside ambient");
  int m = M.dim, c = M.coalg.dim;
  Mat V = subspace_canon(F, vectors);
  for (;;) {
    Mat W = V;
    for (int j = 0; j < c; j++) {
      Mat P(m, m);
      for (int i = 0; i < m; i++)
        for (int l = 0; l < m; l++) P.at(i, l) = M.rho.at(i * c + j, l);
      W = subspace_sum(F, W, mul(F, P, V));
    }
    if (W.cols == V.cols) return V;
    V = W;
  }
}

ComoduleRight subcomodule_restrict(const ComoduleRight& M, const Mat& basis) {
  const Field& F = M.coalg.field;
  Mat incl = subspace_canon(F, basis);
  int c = M.coalg.dim;
  Mat rhs = mul(F, M.rho, incl);
  auto X = solve(F, kron(F, incl, identity(c)), rhs);
  if (!X) throw std::domain_error("subspace is not a subcomodule");
  return {M.coalg, incl.cols, *X};
}

ComoduleRight quotient_comodule(const ComoduleRight& M, const Mat& basis,
                                Quotient* out_q) {
  const Field& F = M.coalg.field;
  Mat incl = subspace_canon(F, basis);
  int c = M.coalg.dim;
  if (!solve(F, kron(F, incl, identity(c)), mul(F, M.rho, incl)))
    throw std::domain_error("subspace is not a subcomodule");
  Quotient q = quotient(F, M.dim, incl);
  ComoduleRight Q;
  Q.coalg = M.coalg;
  Q.dim = q.proj.rows;
  Q.rho = mul(F, kron(F, q.proj, identity(c)), mul(F, M.rho, q.sect));
  if (out_q) *out_q = q;
  return Q;
}

}  // namespace comod
