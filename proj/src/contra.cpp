#include <comod/contra.hpp>

#include <stdexcept>

namespace comod {

namespace {

void require_same_coalgebra(const Coalgebra& C, const Coalgebra& D) {
  if (!(C == D)) throw std::invalid_argument("coalgebra mismatch");
}

Mat dual_mult(const Coalgebra& C) { return transpose(C.delta); }

Mat dual_unit(const Coalgebra& C) { return transpose(C.eps); }

}  // namespace

std::vector<std::string> check_contramodule(const Contramodule& P) {
  std::vector<std::string> out;
  const Field& F = P.coalg.field;
  int m = P.dim, c = P.coalg.dim;
  if (P.pi.rows != m || P.pi.cols != m * c) {
    out.push_back("contraaction has wrong shape");
    return out;
  }
  Mat u = mul(F, P.pi, kron(F, identity(m), dual_unit(P.coalg)));
  if (u != identity(m)) out.push_back("contraunit law fails");
  Mat lhs = mul(F, P.pi, kron(F, P.pi, identity(c)));
  Mat rhs = mul(F, P.pi, kron(F, identity(m), dual_mult(P.coalg)));
  if (lhs != rhs) out.push_back("contraassociativity fails");
  return out;
}

std::vector<std::string> check_contramodule_morphism(const Contramodule& P,
                                                     const Contramodule& Q,
                                                     const Mat& f) {
  std::vector<std::string> out;
  require_same_coalgebra(P.coalg, Q.coalg);
  const Field& F = P.coalg.field;
  int c = P.coalg.dim;
  if (f.rows != Q.dim || f.cols != P.dim) {
    out.push_back("morphism has wrong shape");
    return out;
  }
  if (mul(F, f, P.pi) != mul(F, Q.pi, kron(F, f, identity(c))))
    out.push_back("map does not respect the contraactions");
  return out;
}

ModuleRight contramodule_to_module(const Contramodule& P) {
  return ModuleRight{dual_algebra(P.coalg), P.dim, P.pi};
}

Contramodule module_to_contramodule(const ModuleRight& M, const Coalgebra& C) {
  if (!(M.alg == dual_algebra(C)))
    throw std::invalid_argument("module is not over the dual algebra");
  return Contramodule{C, M.dim, M.action};
}

Contramodule free_contramodule(const Coalgebra& C, int v) {
  const Field& F = C.field;
  return Contramodule{C, v * C.dim, kron(F, identity(v), dual_mult(C))};
}

Contramodule direct_sum_contramodule(const Contramodule& P,
                                     const Contramodule& Q) {
  require_same_coalgebra(P.coalg, Q.coalg);
  return module_to_contramodule(
      direct_sum_module(contramodule_to_module(P), contramodule_to_module(Q)),
      P.coalg);
}

std::vector<Mat> hom_contramodules(const Contramodule& P,
                                   const Contramodule& Q) {
  require_same_coalgebra(P.coalg, Q.coalg);
  return hom_modules(contramodule_to_module(P), contramodule_to_module(Q));
}

Contramodule contrarestrict(const CoalgebraMorphism& f, const Contramodule& P) {
  require_same_coalgebra(f.source, P.coalg);
  const Field& F = f.source.field;
  Mat pi = mul(F, P.pi, kron(F, identity(P.dim), dual_morphism(f).map));
  return Contramodule{f.target, P.dim, pi};
}

ContraextendResult contraextend(const CoalgebraMorphism& f,
                                const Contramodule& P) {
  require_same_coalgebra(f.target, P.coalg);
  ExtendResult E = extend_module(dual_morphism(f), contramodule_to_module(P));
  return ContraextendResult{module_to_contramodule(E.module, f.source), E.proj,
                            E.sect};
}

Mat contraextend_morphism(const CoalgebraMorphism& f,
                          const ContraextendResult& EP,
                          const ContraextendResult& EQ, const Mat& g) {
  ExtendResult A{contramodule_to_module(EP.module), EP.proj, EP.sect};
  ExtendResult B{contramodule_to_module(EQ.module), EQ.proj, EQ.sect};
  return extend_morphism(dual_morphism(f), A, B, g);
}

Mat contraextend_unit(const CoalgebraMorphism& f, const Contramodule& P,
                      const ContraextendResult& EP) {
  ExtendResult A{contramodule_to_module(EP.module), EP.proj, EP.sect};
  return extend_unit(dual_morphism(f), contramodule_to_module(P), A);
}

Mat contraextend_counit(const CoalgebraMorphism& f, const Contramodule& Q,
                        const ContraextendResult& ERQ) {
  ExtendResult A{contramodule_to_module(ERQ.module), ERQ.proj, ERQ.sect};
  return extend_counit(dual_morphism(f), contramodule_to_module(Q), A);
}

ContratensorResult contratensor(const Contramodule& P, const ComoduleLeft& N) {
  require_same_coalgebra(P.coalg, N.coalg);
  const Field& F = P.coalg.field;
  int p = P.dim, n = N.dim, c = P.coalg.dim;
  Mat map1 = kron(F, P.pi, identity(n));
  // functional-against-coaction route: e_j^* acts on N through the coaction
  Mat L(n, c * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < c; j++)
      for (int l = 0; l < n; l++) L.at(i, j * n + l) = N.rho.at(j * n + i, l);
  Mat map2 = kron(F, identity(p), L);
  Quotient q = coequalizer(F, map1, map2);
  return ContratensorResult{q.proj.rows, q.proj, q.sect};
}

ComoduleRight contratensor_comodule(const Contramodule& P,
                                    const ComoduleRight& N,
                                    ContratensorResult* out) {
  require_same_coalgebra(P.coalg, N.coalg);
  const Field& F = P.coalg.field;
  int p = P.dim, n = N.dim, c = P.coalg.dim;
  ComoduleLeft flipped{N.coalg, n, mul(F, swap_tensor(n, c), N.rho)};
  ContratensorResult ct = contratensor(P, flipped);
  Mat R = kron(F, identity(p), N.rho);  // p (x) n -> (p (x) n) (x) c
  Mat full = mul(F, kron(F, ct.proj, identity(c)), R);
  if (mul(F, mul(F, full, ct.sect), ct.proj) != full)
    throw std::domain_error("contratensor carries no induced coaction");
  ComoduleRight res{P.coalg, ct.dim, mul(F, full, ct.sect)};
  if (out) *out = ct;
  return res;
}

Contramodule hom_comodule_contra(const ComoduleRight& N,
                                 const ComoduleRight& P,
                                 std::vector<Mat>* basis_out) {
  require_same_coalgebra(N.coalg, P.coalg);
  const Field& F = N.coalg.field;
  int n = N.dim, c = N.coalg.dim;
  std::vector<Mat> hs = hom_comodules(N, P);
  int r = int(hs.size());
  std::vector<Mat> cols;
  for (auto& h : hs) {
    Mat v(P.dim * n, 1);
    for (int i = 0; i < P.dim; i++)
      for (int j = 0; j < n; j++) v.at(i * n + j, 0) = h.at(i, j);
    cols.push_back(v);
  }
  Mat B = from_cols(cols);
  Mat pi(r, r * c);
  for (int u = 0; u < r; u++)
    for (int j = 0; j < c; j++) {
      Mat S(n, n);
      for (int i = 0; i < n; i++)
        for (int l = 0; l < n; l++) S.at(i, l) = N.rho.at(i * c + j, l);
      Mat hS = mul(F, hs[u], S);
      if (!check_comodule_morphism(N, P, hS).empty())
        throw std::domain_error(
            "coaction slice does not act on the comodule homs");
      Mat v(P.dim * n, 1);
      for (int i = 0; i < P.dim; i++)
        for (int jj = 0; jj < n; jj++) v.at(i * n + jj, 0) = hS.at(i, jj);
      Mat coords = coords_in(F, B, v);
      for (int w = 0; w < r; w++) pi.at(w, u * c + j) = coords.at(w, 0);
    }
  if (basis_out) *basis_out = hs;
  return Contramodule{N.coalg, r, pi};
}

CohomContraResult cohom_contra(const ComoduleLeft& P, const Contramodule& M) {
  require_same_coalgebra(P.coalg, M.coalg);
  const Field& F = P.coalg.field;
  int p = P.dim, m = M.dim;
  // relations live on Hom(C (x) P, M) = M (x) C^* (x) P^*, already in the
  // order the contraaction consumes
  Mat map1 = kron(F, identity(m), transpose(P.rho));
  Mat map2 = kron(F, M.pi, identity(p));
  Quotient q = coequalizer(F, map1, map2);
  return CohomContraResult{q.proj.rows, q.proj, q.sect};
}

}  // namespace comod
