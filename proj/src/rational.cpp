#include <comod/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace comod {

namespace {

// phi reshaped so entry (i, j) is the value on c_i (x) a_j
Mat pairing_matrix(const RationalPairing& p) {
  Mat M(p.coalg.dim, p.alg.dim);
  for (int i = 0; i < p.coalg.dim; i++)
    for (int j = 0; j < p.alg.dim; j++)
      M.at(i, j) = p.phi.at(0, i * p.alg.dim + j);
  return M;
}

// convolution of functionals, written order
Mat convolve(const Coalgebra& C, const Mat& f, const Mat& g) {
  return mul(C.field, kron(C.field, f, g), C.delta);
}

std::vector<Mat> generator_rows(const RationalPairing& p) {
  std::vector<Mat> rows(p.gen_count);
  std::vector<bool> seen(p.gen_count, false);
  for (const auto& [w, row] : p.phi_words)
    if (w.size() == 1 && w[0] >= 0 && w[0] < p.gen_count) {
      rows[w[0]] = row;
      seen[w[0]] = true;
    }
  for (int g = 0; g < p.gen_count; g++)
    if (!seen[g])
      throw std::invalid_argument(
          "pairing does not list every generator word");
  return rows;
}

Mat word_row(const Coalgebra& C, const std::vector<Mat>& gen,
             const std::vector<int>& w) {
  Mat f = C.eps;
  for (int g : w) f = convolve(C, f, gen.at(g));
  return f;
}

// generators composed in written order: the left reading of a word
Mat left_word_op(const Field& F, const std::vector<Mat>& gens, int n,
                 const std::vector<int>& w) {
  Mat W = identity(n);
  for (int g : w) W = mul(F, W, gens.at(g));
  return W;
}

Mat vec_pair(const Mat& op, const Mat& row) {
  Mat v(op.rows * op.cols + row.cols, 1);
  for (int i = 0; i < op.rows; i++)
    for (int j = 0; j < op.cols; j++) v.at(i * op.cols + j, 0) = op.at(i, j);
  for (int i = 0; i < row.cols; i++)
    v.at(op.rows * op.cols + i, 0) = row.at(0, i);
  return v;
}

// acting data: operators on the module paired with functionals on the
// coalgebra, one entry per spanning algebra element
struct PairList {
  std::vector<Mat> ops;
  std::vector<Mat> rows;
};

// span of all (word operator, word functional) pairs, closed under extending
// a word by one generator on the right; once stable for single letters it is
// stable for every longer word
PairList stabilized_pairs(const Field& F, const Coalgebra& C,
                          const std::vector<Mat>& gen_ops,
                          const std::vector<Mat>& gen_rows, int n) {
  PairList out;
  out.ops.push_back(identity(n));
  out.rows.push_back(C.eps);
  Mat span = subspace_canon(F, vec_pair(out.ops[0], out.rows[0]));
  for (size_t head = 0; head < out.ops.size(); head++)
    for (size_t g = 0; g < gen_ops.size(); g++) {
      Mat op = mul(F, out.ops[head], gen_ops[g]);
      Mat row = convolve(C, out.rows[head], gen_rows[g]);
      Mat v = vec_pair(op, row);
      if (subspace_contains(F, span, v)) continue;
      span = subspace_sum(F, span, v);
      out.ops.push_back(op);
      out.rows.push_back(row);
    }
  return out;
}

// Greatest fixed point of V |-> {v in V : the action on v factors through
// V (x) C along the pairing}.  A fixed point is stable under every operator
// (the factoring legs stay inside V), and its coaction is the unique witness.
RationalizeResult rationalize_core(const Coalgebra& C, int n,
                                   const PairList& pairs) {
  const Field& F = C.field;
  int d = C.dim;
  int T = int(pairs.ops.size());
  Mat B = identity(n);
  std::vector<Mat> PB(T);
  while (B.cols > 0) {
    int k = B.cols;
    for (int t = 0; t < T; t++) PB[t] = mul(F, pairs.ops[t], B);
    Mat E(T * n, k + k * d);
    for (int t = 0; t < T; t++)
      for (int r = 0; r < n; r++) {
        for (int s = 0; s < k; s++) E.at(t * n + r, s) = PB[t].at(r, s);
        for (int s = 0; s < k; s++)
          for (int i = 0; i < d; i++)
            E.at(t * n + r, k + s * d + i) =
                F.neg(F.mul(B.at(r, s), pairs.rows[t].at(0, i)));
      }
    Mat K = kernel_basis(F, E);
    Mat X(k, K.cols);
    for (int s = 0; s < k; s++)
      for (int c = 0; c < K.cols; c++) X.at(s, c) = K.at(s, c);
    Mat nb = subspace_canon(F, mul(F, B, X));
    bool fixed = nb.cols == B.cols;
    B = nb;
    if (fixed) break;
  }
  int k = B.cols;
  ComoduleRight com{C, k, Mat(k * d, k)};
  if (k > 0) {
    for (int t = 0; t < T; t++) PB[t] = mul(F, pairs.ops[t], B);
    Mat A(T * n, k * d);
    Mat rhs(T * n, k);
    for (int t = 0; t < T; t++)
      for (int r = 0; r < n; r++)
        for (int s = 0; s < k; s++) {
          rhs.at(t * n + r, s) = PB[t].at(r, s);
          for (int i = 0; i < d; i++)
            A.at(t * n + r, s * d + i) =
                F.mul(B.at(r, s), pairs.rows[t].at(0, i));
        }
    std::optional<Mat> Y = solve(F, A, rhs);
    if (!Y) throw std::logic_error("fixed point carries no coaction");
    com.rho = *Y;
  }
  return {B, com};
}

void append_prefixed(std::vector<std::string>& errs, const std::string& pre,
                     const std::vector<std::string>& more) {
  for (const auto& e : more) errs.push_back(pre + e);
}

}  // namespace

RationalPairing evaluation_pairing(const Coalgebra& C) {
  RationalPairing p;
  p.coalg = C;
  p.alg = dual_algebra(C);
  p.phi = Mat(1, C.dim * C.dim);
  for (int i = 0; i < C.dim; i++) p.phi.at(0, i * C.dim + i) = C.field.one();
  return p;
}

RationalPairing full_pairing(const Coalgebra& C, const Algebra& A,
                             const Mat& phi) {
  RationalPairing p;
  p.coalg = C;
  p.alg = A;
  p.phi = phi;
  return p;
}

RationalPairing presented_pairing(
    const Coalgebra& C, int gen_count, std::vector<FPRelation> relations,
    std::vector<std::pair<std::vector<int>, Mat>> phi_words) {
  RationalPairing p;
  p.coalg = C;
  p.presented = true;
  p.gen_count = gen_count;
  p.relations = std::move(relations);
  p.phi_words = std::move(phi_words);
  return p;
}

std::vector<std::string> check_pairing(const RationalPairing& p) {
  std::vector<std::string> errs;
  const Coalgebra& C = p.coalg;
  const Field& F = C.field;
  int d = C.dim;
  append_prefixed(errs, "coalgebra: ", check_coalgebra(C));
  if (!errs.empty()) return errs;
  if (!p.presented) {
    append_prefixed(errs, "algebra: ", check_algebra(p.alg));
    if (!(p.alg.field == F)) errs.push_back("fields disagree");
    if (p.phi.rows != 1 || p.phi.cols != d * p.alg.dim)
      errs.push_back("pairing map has wrong shape");
    if (!errs.empty()) return errs;
    Mat M = pairing_matrix(p);
    Mat MT = transpose(M);
    if (rank(F, MT) < d) {
      Mat ker = kernel_basis(F, MT);
      Mat w(1, d);
      for (int i = 0; i < d; i++) w.at(0, i) = ker.at(i, 0);
      errs.push_back("map into the dual algebra is not injective; witness " +
                     str(F, w));
    }
    append_prefixed(
        errs, "induced map to the convolution algebra: ",
        check_algebra_morphism(AlgebraMorphism{p.alg, dual_algebra(C), M}));
  } else {
    if (p.gen_count < 0) {
      errs.push_back("negative generator count");
      return errs;
    }
    for (const auto& [w, row] : p.phi_words) {
      for (int g : w)
        if (g < 0 || g >= p.gen_count) {
          errs.push_back("word uses an unknown generator");
          return errs;
        }
      if (row.rows != 1 || row.cols != d) {
        errs.push_back("pairing word row has wrong shape");
        return errs;
      }
    }
    for (const auto& rel : p.relations)
      for (const auto& term : rel)
        for (int g : term.word)
          if (g < 0 || g >= p.gen_count) {
            errs.push_back("relation uses an unknown generator");
            return errs;
          }
    std::vector<Mat> gens;
    try {
      gens = generator_rows(p);
    } catch (const std::invalid_argument& e) {
      errs.push_back(e.what());
      return errs;
    }
    for (const auto& [w, row] : p.phi_words)
      if (!(word_row(C, gens, w) == row)) {
        errs.push_back(
            "listed word row disagrees with the convolution of its letters");
        break;
      }
    for (const auto& rel : p.relations) {
      Mat s(1, d);
      for (const auto& term : rel)
        s = add(F, s, scl(F, term.coeff, word_row(C, gens, term.word)));
      if (!is_zero_mat(F, s)) {
        errs.push_back("relation does not vanish against the coalgebra");
        break;
      }
    }
    std::vector<Mat> rows{C.eps};
    Mat span = subspace_canon(F, transpose(C.eps));
    for (size_t head = 0; head < rows.size(); head++)
      for (int g = 0; g < p.gen_count; g++) {
        Mat r2 = convolve(C, rows[head], gens[g]);
        Mat v = transpose(r2);
        if (subspace_contains(F, span, v)) continue;
        span = subspace_sum(F, span, v);
        rows.push_back(r2);
      }
    if (span.cols < d) {
      Mat S(int(rows.size()), d);
      for (int i = 0; i < int(rows.size()); i++)
        for (int j = 0; j < d; j++) S.at(i, j) = rows[i].at(0, j);
      Mat ker = kernel_basis(F, S);
      Mat w(1, d);
      for (int i = 0; i < d; i++) w.at(0, i) = ker.at(i, 0);
      errs.push_back("map into the dual algebra is not injective; witness " +
                     str(F, w));
    }
  }
  return errs;
}

std::vector<std::string> check_rep_pairing(const RepPairing& P) {
  std::vector<std::string> errs;
  append_prefixed(errs, "coalgebra representation: ",
                  check_representation(P.crep));
  append_prefixed(errs, "algebra representation: ",
                  check_representation(P.arep));
  if (!errs.empty()) return errs;
  const FinitePoset& X = P.crep.poset;
  FinitePoset Xop = opposite_poset(X);
  if (P.arep.poset.elements != Xop.elements || P.arep.poset.leq != Xop.leq) {
    errs.push_back("algebra representation is not over the opposite poset");
    return errs;
  }
  int n = X.size();
  if (int(P.pairings.size()) != n) {
    errs.push_back("one pairing per element required");
    return errs;
  }
  for (int x = 0; x < n; x++) {
    const RationalPairing& p = P.pairings[x];
    const std::string at = "element " + X.elements[x] + ": ";
    if (p.presented) {
      errs.push_back(at + "rep pairings need a full algebra");
      continue;
    }
    if (!(p.coalg == P.crep.fibers[x]))
      errs.push_back(at + "pairing is not against the coalgebra fiber");
    else if (!(p.alg == P.arep.fibers[x]))
      errs.push_back(at + "pairing is not against the algebra fiber");
    else
      append_prefixed(errs, at, check_pairing(p));
  }
  if (!errs.empty()) return errs;
  for (const auto& [x, y] : covering_pairs(X)) {
    const Field& F = P.pairings[x].coalg.field;
    Mat lhs = mul(F, transpose(rep_arrow_mat(P.crep, x, y)),
                  pairing_matrix(P.pairings[y]));
    Mat rhs =
        mul(F, pairing_matrix(P.pairings[x]), rep_arrow_mat(P.arep, y, x));
    if (!(lhs == rhs))
      errs.push_back("pairings are incompatible across " + X.elements[x] +
                     " <= " + X.elements[y]);
  }
  return errs;
}

RationalizeResult rationalize(const RationalPairing& p, const ModuleLeft& N) {
  if (p.presented)
    throw std::invalid_argument("plain modules pair with a full algebra");
  if (!(N.alg == p.alg))
    throw std::invalid_argument("module is not over the paired algebra");
  Mat M = pairing_matrix(p);
  PairList pairs;
  for (int j = 0; j < p.alg.dim; j++) {
    Mat op(N.dim, N.dim);
    for (int r = 0; r < N.dim; r++)
      for (int s = 0; s < N.dim; s++)
        op.at(r, s) = N.action.at(r, j * N.dim + s);
    Mat row(1, p.coalg.dim);
    for (int i = 0; i < p.coalg.dim; i++) row.at(0, i) = M.at(i, j);
    pairs.ops.push_back(op);
    pairs.rows.push_back(row);
  }
  return rationalize_core(p.coalg, N.dim, pairs);
}

RationalizeResult rationalize(const RationalPairing& p,
                              const FPAlgebraAction& D) {
  if (!p.presented)
    throw std::invalid_argument(
        "presented actions pair with a presented algebra");
  if (D.gen_count != p.gen_count)
    throw std::invalid_argument("generator counts disagree");
  if (int(D.gen_mats.size()) != D.gen_count)
    throw std::invalid_argument("one generator matrix per generator required");
  if (!(D.field == p.coalg.field))
    throw std::invalid_argument("fields disagree");
  const Field& F = D.field;
  int n = D.module_dim;
  for (const auto& g : D.gen_mats)
    if (g.rows != n || g.cols != n)
      throw std::invalid_argument("generator matrix has wrong shape");
  auto check_rels = [&](const std::vector<FPRelation>& rels) {
    for (const auto& rel : rels) {
      Mat s(n, n);
      for (const auto& term : rel)
        s = add(F, s,
                scl(F, term.coeff, left_word_op(F, D.gen_mats, n, term.word)));
      if (!is_zero_mat(F, s))
        throw std::domain_error("action does not satisfy the relations");
    }
  };
  check_rels(p.relations);
  check_rels(D.relations);
  PairList pairs =
      stabilized_pairs(F, p.coalg, D.gen_mats, generator_rows(p), n);
  return rationalize_core(p.coalg, n, pairs);
}

TorsionWitness torsion_witness(const RationalPairing& p, const ModuleLeft& N) {
  const Field& F = p.coalg.field;
  TorsionWitness w;
  w.rational = rationalize(p, N);
  w.seq = quotient(F, N.dim, w.rational.basis);
  w.quotient_dim = w.seq.proj.rows;
  ModuleLeft Q{N.alg, w.quotient_dim,
               mul(F, w.seq.proj,
                   mul(F, N.action, kron(F, identity(N.alg.dim), w.seq.sect)))};
  w.quotient_rational = rationalize(p, Q);
  w.vanishing = w.quotient_rational.basis.cols == 0;
  return w;
}

TorsionWitness torsion_witness(const RationalPairing& p,
                               const FPAlgebraAction& D) {
  TorsionWitness w;
  w.rational = rationalize(p, D);
  FPAlgebraAction Q = fp_quotient(D, w.rational.basis, &w.seq);
  w.quotient_dim = Q.module_dim;
  w.quotient_rational = rationalize(p, Q);
  w.vanishing = w.quotient_rational.basis.cols == 0;
  return w;
}

AlgebraRep opposite_rep(const AlgebraRep& R) {
  AlgebraRep S;
  S.poset = R.poset;
  for (const auto& A : R.fibers) S.fibers.push_back(opposite(A));
  S.arrows = R.arrows;
  return S;
}

SubobjectResult rationalize_rep(const RepPairing& P, const RepObject& N) {
  if (N.flavor != Flavor::trans_module)
    throw std::invalid_argument("rationalization acts on trans-modules");
  AlgebraRep want = opposite_rep(P.arep);
  if (!(N.arep.poset.elements == want.poset.elements &&
        N.arep.poset.leq == want.poset.leq && N.arep.fibers == want.fibers &&
        N.arep.arrows == want.arrows))
    throw std::invalid_argument(
        "object is not over the opposite of the paired algebras");
  const Field& F = N.field();
  const FinitePoset& Pt = N.poset();
  int n = Pt.size();
  std::vector<Mat> fiberR(n);
  for (int y = 0; y < n; y++)
    fiberR[y] =
        rationalize(P.pairings[y], right_op_as_left(fiber_module(N, y))).basis;
  std::vector<Mat> bases(n);
  for (int y = 0; y < n; y++) {
    Mat S = fiberR[y];
    for (int x = 0; x < n; x++) {
      if (x == y || !Pt.le(x, y)) continue;
      Quotient q = quotient(F, N.dims[x], fiberR[x]);
      Mat pre = kernel_basis(F, mul(F, q.proj, structure_mat(N, x, y)));
      S = subspace_intersect(F, S, pre);
    }
    bases[y] = S;
  }
  return subobject_from_bases(N, bases);
}

AlgebraRep dual_algebra_rep(const CoalgebraRep& R) {
  AlgebraRep S;
  S.poset = opposite_poset(R.poset);
  for (const auto& C : R.fibers) S.fibers.push_back(dual_algebra(C));
  for (const auto& [k, m] : R.arrows)
    S.arrows[{k.second, k.first}] = transpose(m);
  return S;
}

CoalgebraRep dual_coalgebra_rep(const AlgebraRep& R) {
  CoalgebraRep S;
  S.poset = opposite_poset(R.poset);
  for (const auto& A : R.fibers) S.fibers.push_back(dual_coalgebra(A));
  for (const auto& [k, m] : R.arrows)
    S.arrows[{k.second, k.first}] = transpose(m);
  return S;
}

RepObject comodule_rep_to_modules(const RepObject& M) {
  if (M.flavor != Flavor::cis_comodule && M.flavor != Flavor::trans_comodule)
    throw std::invalid_argument("comodule-flavored object expected");
  RepObject out;
  out.flavor = M.flavor == Flavor::cis_comodule ? Flavor::trans_module
                                                : Flavor::cis_module;
  out.arep = opposite_rep(dual_algebra_rep(M.crep));
  out.dims = M.dims;
  for (int x = 0; x < int(M.dims.size()); x++)
    out.fiber_maps.push_back(
        left_as_right_op(comodule_to_module(fiber_comodule(M, x))).action);
  for (const auto& [k, m] : M.structure) out.structure[{k.second, k.first}] = m;
  return out;
}

RepObject module_rep_to_comodules(const RepObject& M) {
  if (M.flavor != Flavor::trans_module && M.flavor != Flavor::cis_module)
    throw std::invalid_argument("module-flavored object expected");
  RepObject out;
  out.flavor = M.flavor == Flavor::trans_module ? Flavor::cis_comodule
                                                : Flavor::trans_comodule;
  out.crep.poset = opposite_poset(M.arep.poset);
  for (const auto& A : M.arep.fibers)
    out.crep.fibers.push_back(dual_coalgebra(opposite(A)));
  for (const auto& [k, m] : M.arep.arrows)
    out.crep.arrows[{k.second, k.first}] = transpose(m);
  out.dims = M.dims;
  for (int x = 0; x < int(M.dims.size()); x++)
    out.fiber_maps.push_back(
        module_to_comodule(right_op_as_left(fiber_module(M, x)),
                           out.crep.fibers[x])
            .rho);
  for (const auto& [k, m] : M.structure) out.structure[{k.second, k.first}] = m;
  return out;
}

RepObject contra_to_cis_module(const RepObject& M) {
  if (M.flavor != Flavor::trans_contramodule)
    throw std::invalid_argument("trans-contramodule expected");
  RepObject out;
  out.flavor = Flavor::cis_module;
  out.arep = dual_algebra_rep(M.crep);
  out.dims = M.dims;
  for (int x = 0; x < int(M.dims.size()); x++)
    out.fiber_maps.push_back(
        contramodule_to_module(fiber_contramodule(M, x)).action);
  for (const auto& [k, m] : M.structure) out.structure[{k.second, k.first}] = m;
  return out;
}

Coalgebra finite_dual(const Algebra& A) { return dual_coalgebra(A); }

Coalgebra finite_dual(const FPAlgebraAction&) {
  throw UnsupportedInput(
      "finite dual of a presented algebra; provide a finite-dimensional "
      "algebra instead");
}

ContratensorCohomReport contratensor_cohom_certificates(
    const CoalgebraMorphism& alpha, const Contramodule& M,
    const ComoduleRight& N, const ComoduleRight& P) {
  ContratensorCohomReport rep;
  const Coalgebra& C = alpha.source;
  const Coalgebra& D = alpha.target;
  const Field& F = C.field;
  append_prefixed(rep.errors, "morphism: ", check_coalgebra_morphism(alpha));
  if (!cocommutative(C))
    rep.errors.push_back("source coalgebra is not cocommutative");
  if (!cocommutative(D))
    rep.errors.push_back("target coalgebra is not cocommutative");
  if (!(M.coalg == D))
    rep.errors.push_back("contramodule is not over the target coalgebra");
  if (!(N.coalg == D))
    rep.errors.push_back("comodule is not over the target coalgebra");
  if (!(P.coalg == C))
    rep.errors.push_back("test comodule is not over the source coalgebra");
  if (rep.errors.empty()) {
    append_prefixed(rep.errors, "contramodule: ", check_contramodule(M));
    append_prefixed(rep.errors, "comodule: ", check_comodule(N));
    append_prefixed(rep.errors, "test comodule: ", check_comodule(P));
  }
  if (!rep.errors.empty()) return rep;

  try {
    ContratensorResult ctD;
    ComoduleRight X = contratensor_comodule(M, N, &ctD);
    ContraextendResult EM = contraextend(alpha, M);
    CohomResult HN = cohom(alpha, N);
    ContratensorResult ctC;
    ComoduleRight Y = contratensor_comodule(EM.module, HN.module, &ctC);
    CohomResult HX = cohom(alpha, X);
    rep.lhs_tensor = HX.module.dim;
    rep.rhs_tensor = Y.dim;
    Mat etaM = contraextend_unit(alpha, M, EM);
    Mat etaN = cohom_unit(alpha, N, HN);
    ContratensorResult ct2;
    contratensor_comodule(contrarestrict(alpha, EM.module),
                          corestrict(alpha, HN.module), &ct2);
    Mat big = mul(F, ct2.proj, kron(F, etaM, etaN));
    Mat to2 = mul(F, big, ctD.sect);
    Mat kap = mul(F, ctC.proj, ct2.sect);
    Mat theta0 = mul(F, kap, to2);
    ComoduleRight aY = corestrict(alpha, Y);
    rep.tensor_descends = mul(F, to2, ctD.proj) == big &&
                          mul(F, kap, ct2.proj) == ctC.proj &&
                          check_comodule_morphism(X, aY, theta0).empty();
    if (rep.tensor_descends) {
      CohomResult HaY = cohom(alpha, aY);
      Mat theta = mul(F, cohom_counit(alpha, Y, HaY),
                      cohom_morphism(alpha, HX, HaY, theta0));
      rep.tensor_iso = theta.rows == theta.cols &&
                       rank(F, theta) == theta.rows &&
                       check_comodule_morphism(HX.module, Y, theta).empty();
    }
  } catch (const std::exception& e) {
    rep.errors.push_back(std::string("contratensor side: ") + e.what());
  }

  try {
    std::vector<Mat> basD, basC;
    ComoduleRight aP = corestrict(alpha, P);
    Contramodule HomD = hom_comodule_contra(N, aP, &basD);
    CohomResult HN = cohom(alpha, N);
    Contramodule HomC = hom_comodule_contra(HN.module, P, &basC);
    rep.lhs_hom = HomD.dim;
    rep.rhs_hom = HomC.dim;
    Mat etaN = cohom_unit(alpha, N, HN);
    Mat BD(P.dim * N.dim, HomD.dim);
    for (int s = 0; s < HomD.dim; s++)
      for (int i = 0; i < P.dim; i++)
        for (int j = 0; j < N.dim; j++)
          BD.at(i * N.dim + j, s) = basD[s].at(i, j);
    Mat X(HomD.dim, HomC.dim);
    for (int t = 0; t < HomC.dim; t++) {
      Mat g = mul(F, basC[t], etaN);
      Mat v(P.dim * N.dim, 1);
      for (int i = 0; i < P.dim; i++)
        for (int j = 0; j < N.dim; j++) v.at(i * N.dim + j, 0) = g.at(i, j);
      Mat coords = coords_in(F, BD, v);
      for (int s = 0; s < HomD.dim; s++) X.at(s, t) = coords.at(s, 0);
    }
    rep.hom_iso =
        HomD.dim == HomC.dim && rank(F, X) == HomD.dim;
    rep.hom_contra_morphism =
        check_contramodule_morphism(contrarestrict(alpha, HomC), HomD, X)
            .empty();
  } catch (const std::exception& e) {
    rep.errors.push_back(std::string("hom side: ") + e.what());
  }
  return rep;
}

}  // namespace comod
