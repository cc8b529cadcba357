#include <comod/repcat.hpp>

#include <functional>
#include <set>
#include <stdexcept>

namespace comod {

namespace {

std::string pair_label(const FinitePoset& P, int u, int v) {
  return P.elements[u] + "<" + P.elements[v];
}

void append_prefixed(std::vector<std::string>& errs, const std::string& prefix,
                     const std::vector<std::string>& more) {
  for (const auto& e : more) errs.push_back(prefix + e);
}

// Composites of the per-covering step matrices along every covering chain
// x -> y.  left_compose multiplies new steps on the left (ascending maps and
// fiber arrows), otherwise on the right (descending maps).
void chain_composites(const Field& F, const FinitePoset& P,
                      const std::vector<std::pair<int, int>>& covers,
                      const std::map<std::pair<int, int>, Mat>& step,
                      bool left_compose, int start_dim, int x, int y,
                      std::vector<Mat>& out) {
  std::function<void(int, const Mat&)> go = [&](int z, const Mat& acc) {
    if (z == y) {
      out.push_back(acc);
      return;
    }
    for (const auto& uv : covers)
      if (uv.first == z && P.le(uv.second, y)) {
        const Mat& s = step.at(uv);
        go(uv.second, left_compose ? mul(F, s, acc) : mul(F, acc, s));
      }
  };
  go(x, identity(start_dim));
}

struct ChainSynth {
  Mat first;
  bool found = false;
  bool all_equal = true;
};

ChainSynth synth_chains(const Field& F, const FinitePoset& P,
                        const std::vector<std::pair<int, int>>& covers,
                        const std::map<std::pair<int, int>, Mat>& step,
                        bool left_compose, int start_dim, int x, int y) {
  std::vector<Mat> comps;
  chain_composites(F, P, covers, step, left_compose, start_dim, x, y, comps);
  ChainSynth r;
  if (comps.empty()) return r;
  r.found = true;
  r.first = comps[0];
  for (const auto& m : comps)
    if (!(m == comps[0])) r.all_equal = false;
  return r;
}

}  // namespace

int FinitePoset::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  throw std::invalid_argument("unknown poset element: " + name);
}

std::vector<std::string> check_poset(const FinitePoset& P) {
  std::vector<std::string> errs;
  int n = P.size();
  if (int(P.leq.size()) != n) {
    errs.push_back("order relation has wrong row count");
    return errs;
  }
  for (const auto& row : P.leq)
    if (int(row.size()) != n) {
      errs.push_back("order relation has wrong column count");
      return errs;
    }
  std::set<std::string> names(P.elements.begin(), P.elements.end());
  if (int(names.size()) != n) errs.push_back("duplicate element names");
  for (int x = 0; x < n; ++x)
    if (!P.le(x, x)) errs.push_back("reflexivity fails at " + P.elements[x]);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (P.le(x, y) && P.le(y, x))
        errs.push_back("antisymmetry fails at " + P.elements[x] + ", " +
                       P.elements[y]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (P.le(x, y) && P.le(y, z) && !P.le(x, z))
          errs.push_back("transitivity fails at " + P.elements[x] + " <= " +
                         P.elements[y] + " <= " + P.elements[z]);
  return errs;
}

FinitePoset opposite_poset(const FinitePoset& P) {
  FinitePoset Q = P;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) Q.leq[x][y] = P.leq[y][x];
  return Q;
}

std::vector<std::pair<int, int>> covering_pairs(const FinitePoset& P) {
  std::vector<std::pair<int, int>> out;
  int n = P.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !P.le(x, y)) continue;
      bool between = false;
      for (int z = 0; z < n && !between; ++z)
        if (z != x && z != y && P.le(x, z) && P.le(z, y)) between = true;
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

namespace {

std::vector<std::string> fiber_errors(const Coalgebra& C) {
  return check_coalgebra(C);
}
std::vector<std::string> fiber_errors(const Algebra& A) {
  return check_algebra(A);
}
std::vector<std::string> arrow_errors(const Coalgebra& S, const Coalgebra& T,
                                      const Mat& m) {
  return check_coalgebra_morphism(CoalgebraMorphism{S, T, m});
}
std::vector<std::string> arrow_errors(const Algebra& S, const Algebra& T,
                                      const Mat& m) {
  return check_algebra_morphism(AlgebraMorphism{S, T, m});
}

template <typename Rep>
std::vector<std::string> check_rep_impl(const Rep& R) {
  std::vector<std::string> errs = check_poset(R.poset);
  if (!errs.empty()) return errs;
  int n = R.poset.size();
  if (int(R.fibers.size()) != n) {
    errs.push_back("fiber count does not match the poset");
    return errs;
  }
  for (int x = 1; x < n; ++x)
    if (!(R.fibers[x].field == R.fibers[0].field)) {
      errs.push_back("fibers live over different fields");
      return errs;
    }
  auto covers = covering_pairs(R.poset);
  std::set<std::pair<int, int>> want(covers.begin(), covers.end());
  for (const auto& [k, m] : R.arrows) {
    (void)m;
    if (!want.count(k)) errs.push_back("arrow on a non-covering pair");
  }
  for (const auto& uv : covers)
    if (!R.arrows.count(uv))
      errs.push_back("missing arrow " +
                     pair_label(R.poset, uv.first, uv.second));
  if (!errs.empty()) return errs;
  for (int x = 0; x < n; ++x)
    append_prefixed(errs, "fiber " + R.poset.elements[x] + ": ",
                    fiber_errors(R.fibers[x]));
  for (const auto& [u, v] : covers) {
    const Mat& m = R.arrows.at({u, v});
    if (m.rows != R.fibers[v].dim || m.cols != R.fibers[u].dim) {
      errs.push_back("arrow " + pair_label(R.poset, u, v) + ": wrong shape");
      continue;
    }
    append_prefixed(errs, "arrow " + pair_label(R.poset, u, v) + ": ",
                    arrow_errors(R.fibers[u], R.fibers[v], m));
  }
  if (!errs.empty()) return errs;
  const Field& F = R.fibers[0].field;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !R.poset.le(x, y)) continue;
      ChainSynth s = synth_chains(F, R.poset, covers, R.arrows, true,
                                  R.fibers[x].dim, x, y);
      if (!s.all_equal)
        errs.push_back("chain composites disagree between " +
                       R.poset.elements[x] + " and " + R.poset.elements[y]);
    }
  return errs;
}

template <typename Rep>
Mat rep_arrow_mat_impl(const Rep& R, int x, int y) {
  if (x == y) return identity(R.fibers[x].dim);
  if (!R.poset.le(x, y))
    throw std::invalid_argument("elements are not comparable");
  const Field& F = R.fibers[0].field;
  ChainSynth s = synth_chains(F, R.poset, covering_pairs(R.poset), R.arrows,
                              true, R.fibers[x].dim, x, y);
  if (!s.found) throw std::logic_error("no covering chain found");
  return s.first;
}

}  // namespace

std::vector<std::string> check_representation(const CoalgebraRep& R) {
  return check_rep_impl(R);
}
std::vector<std::string> check_representation(const AlgebraRep& R) {
  return check_rep_impl(R);
}

Mat rep_arrow_mat(const CoalgebraRep& R, int x, int y) {
  return rep_arrow_mat_impl(R, x, y);
}
Mat rep_arrow_mat(const AlgebraRep& R, int x, int y) {
  return rep_arrow_mat_impl(R, x, y);
}

CoalgebraMorphism rep_arrow(const CoalgebraRep& R, int x, int y) {
  return {R.fibers[x], R.fibers[y], rep_arrow_mat(R, x, y)};
}
AlgebraMorphism rep_arrow(const AlgebraRep& R, int x, int y) {
  return {R.fibers[x], R.fibers[y], rep_arrow_mat(R, x, y)};
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::cis_comodule: return "cis-comodule";
    case Flavor::trans_comodule: return "trans-comodule";
    case Flavor::trans_contramodule: return "trans-contramodule";
    case Flavor::cis_module: return "cis-module";
    case Flavor::trans_module: return "trans-module";
  }
  return "?";
}

bool flavor_ascending(Flavor f) {
  return f == Flavor::cis_comodule || f == Flavor::cis_module;
}

bool flavor_uses_algebras(Flavor f) {
  return f == Flavor::cis_module || f == Flavor::trans_module;
}

ComoduleRight fiber_comodule(const RepObject& M, int x) {
  if (M.flavor != Flavor::cis_comodule && M.flavor != Flavor::trans_comodule)
    throw std::invalid_argument("fiber is not a comodule");
  return {M.crep.fibers[x], M.dims[x], M.fiber_maps[x]};
}

Contramodule fiber_contramodule(const RepObject& M, int x) {
  if (M.flavor != Flavor::trans_contramodule)
    throw std::invalid_argument("fiber is not a contramodule");
  return {M.crep.fibers[x], M.dims[x], M.fiber_maps[x]};
}

ModuleRight fiber_module(const RepObject& M, int x) {
  if (!flavor_uses_algebras(M.flavor))
    throw std::invalid_argument("fiber is not a module");
  return {M.arep.fibers[x], M.dims[x], M.fiber_maps[x]};
}

Mat structure_mat(const RepObject& M, int x, int y) {
  if (x == y) return identity(M.dims[x]);
  const FinitePoset& P = M.poset();
  if (!P.le(x, y)) throw std::invalid_argument("elements are not comparable");
  ChainSynth s = synth_chains(M.field(), P, covering_pairs(P), M.structure,
                              flavor_ascending(M.flavor), M.dims[x], x, y);
  if (!s.found) throw std::logic_error("no covering chain found");
  return s.first;
}

namespace {

std::vector<std::string> module_morphism_errors(const ModuleRight& M,
                                                const ModuleRight& N,
                                                const Mat& g) {
  std::vector<std::string> errs;
  if (g.rows != N.dim || g.cols != M.dim) {
    errs.push_back("map has wrong shape");
    return errs;
  }
  const Field& F = M.alg.field;
  if (!(mul(F, g, M.action) ==
        mul(F, N.action, kron(F, g, identity(M.alg.dim)))))
    errs.push_back("map is not linear over the algebra");
  return errs;
}

bool same_crep(const CoalgebraRep& A, const CoalgebraRep& B) {
  return A.poset.elements == B.poset.elements && A.poset.leq == B.poset.leq &&
         A.fibers == B.fibers && A.arrows == B.arrows;
}
bool same_arep(const AlgebraRep& A, const AlgebraRep& B) {
  return A.poset.elements == B.poset.elements && A.poset.leq == B.poset.leq &&
         A.fibers == B.fibers && A.arrows == B.arrows;
}

}  // namespace

std::vector<std::string> check_object(const RepObject& M) {
  std::vector<std::string> errs;
  bool alg = flavor_uses_algebras(M.flavor);
  if (alg)
    append_prefixed(errs, "representation: ", check_representation(M.arep));
  else
    append_prefixed(errs, "representation: ", check_representation(M.crep));
  if (!errs.empty()) return errs;
  const FinitePoset& P = M.poset();
  int n = P.size();
  if (int(M.dims.size()) != n || int(M.fiber_maps.size()) != n) {
    errs.push_back("fiber data does not match the poset");
    return errs;
  }
  auto covers = covering_pairs(P);
  std::set<std::pair<int, int>> want(covers.begin(), covers.end());
  for (const auto& [k, m] : M.structure) {
    (void)m;
    if (!want.count(k)) errs.push_back("structure map on a non-covering pair");
  }
  for (const auto& uv : covers)
    if (!M.structure.count(uv))
      errs.push_back("missing structure map " +
                     pair_label(P, uv.first, uv.second));
  if (!errs.empty()) return errs;
  for (int x = 0; x < n; ++x) {
    std::vector<std::string> fe;
    switch (M.flavor) {
      case Flavor::cis_comodule:
      case Flavor::trans_comodule:
        fe = check_comodule(fiber_comodule(M, x));
        break;
      case Flavor::trans_contramodule:
        fe = check_contramodule(fiber_contramodule(M, x));
        break;
      default:
        fe = check_module(fiber_module(M, x));
    }
    append_prefixed(errs, "fiber " + P.elements[x] + ": ", fe);
  }
  if (!errs.empty()) return errs;
  bool asc = flavor_ascending(M.flavor);
  for (const auto& [u, v] : covers) {
    const Mat& T = M.structure.at({u, v});
    int rexp = asc ? M.dims[v] : M.dims[u];
    int cexp = asc ? M.dims[u] : M.dims[v];
    if (T.rows != rexp || T.cols != cexp) {
      errs.push_back("structure map " + pair_label(P, u, v) + ": wrong shape");
      continue;
    }
    std::vector<std::string> se;
    switch (M.flavor) {
      case Flavor::cis_comodule: {
        CoalgebraMorphism a = rep_arrow(M.crep, u, v);
        se = check_comodule_morphism(corestrict(a, fiber_comodule(M, u)),
                                     fiber_comodule(M, v), T);
        break;
      }
      case Flavor::trans_comodule: {
        CoalgebraMorphism a = rep_arrow(M.crep, u, v);
        se = check_comodule_morphism(fiber_comodule(M, v),
                                     corestrict(a, fiber_comodule(M, u)), T);
        break;
      }
      case Flavor::trans_contramodule: {
        CoalgebraMorphism a = rep_arrow(M.crep, u, v);
        se = check_contramodule_morphism(
            fiber_contramodule(M, v),
            contrarestrict(a, fiber_contramodule(M, u)), T);
        break;
      }
      case Flavor::cis_module: {
        AlgebraMorphism a = rep_arrow(M.arep, u, v);
        se = module_morphism_errors(fiber_module(M, u),
                                    restrict_module(a, fiber_module(M, v)), T);
        break;
      }
      case Flavor::trans_module: {
        AlgebraMorphism a = rep_arrow(M.arep, u, v);
        se = module_morphism_errors(restrict_module(a, fiber_module(M, v)),
                                    fiber_module(M, u), T);
        break;
      }
    }
    append_prefixed(errs, "structure map " + pair_label(P, u, v) + ": ", se);
  }
  if (!errs.empty()) return errs;
  const Field& F = M.field();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !P.le(x, y)) continue;
      ChainSynth s =
          synth_chains(F, P, covers, M.structure, asc, M.dims[x], x, y);
      if (!s.all_equal)
        errs.push_back("structure composites disagree between " +
                       P.elements[x] + " and " + P.elements[y]);
    }
  return errs;
}

std::vector<std::string> check_rep_morphism(const RepObject& M,
                                            const RepObject& N,
                                            const RepMorphism& eta) {
  std::vector<std::string> errs;
  if (M.flavor != N.flavor) {
    errs.push_back("flavor mismatch");
    return errs;
  }
  bool alg = flavor_uses_algebras(M.flavor);
  if (alg ? !same_arep(M.arep, N.arep) : !same_crep(M.crep, N.crep)) {
    errs.push_back("objects live over different representations");
    return errs;
  }
  const FinitePoset& P = M.poset();
  int n = P.size();
  if (int(eta.components.size()) != n) {
    errs.push_back("component count does not match the poset");
    return errs;
  }
  for (int x = 0; x < n; ++x) {
    const Mat& g = eta.components[x];
    if (g.rows != N.dims[x] || g.cols != M.dims[x]) {
      errs.push_back("component " + P.elements[x] + ": wrong shape");
      continue;
    }
    std::vector<std::string> fe;
    switch (M.flavor) {
      case Flavor::cis_comodule:
      case Flavor::trans_comodule:
        fe = check_comodule_morphism(fiber_comodule(M, x), fiber_comodule(N, x),
                                     g);
        break;
      case Flavor::trans_contramodule:
        fe = check_contramodule_morphism(fiber_contramodule(M, x),
                                         fiber_contramodule(N, x), g);
        break;
      default:
        fe = module_morphism_errors(fiber_module(M, x), fiber_module(N, x), g);
    }
    append_prefixed(errs, "component " + P.elements[x] + ": ", fe);
  }
  if (!errs.empty()) return errs;
  const Field& F = M.field();
  bool asc = flavor_ascending(M.flavor);
  for (const auto& [u, v] : covering_pairs(P)) {
    const Mat& TM = M.structure.at({u, v});
    const Mat& TN = N.structure.at({u, v});
    bool ok = asc ? mul(F, eta.components[v], TM) == mul(F, TN, eta.components[u])
                  : mul(F, eta.components[u], TM) == mul(F, TN, eta.components[v]);
    if (!ok)
      errs.push_back("square " + pair_label(P, u, v) + " does not commute");
  }
  return errs;
}

std::vector<RepMorphism> hom_rep(const RepObject& M, const RepObject& N) {
  if (M.flavor != N.flavor) throw std::invalid_argument("flavor mismatch");
  bool alg = flavor_uses_algebras(M.flavor);
  if (alg ? !same_arep(M.arep, N.arep) : !same_crep(M.crep, N.crep))
    throw std::invalid_argument("objects live over different representations");
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  int n = P.size();
  std::vector<int> off(n + 1, 0);
  for (int y = 0; y < n; ++y) off[y + 1] = off[y] + N.dims[y] * M.dims[y];
  int total = off[n];
  auto idx = [&](int y, int i, int j) { return off[y] + i * M.dims[y] + j; };
  std::vector<std::vector<Scalar>> rows;
  auto fresh = [&]() { return std::vector<Scalar>(total, Scalar(0)); };
  bool com =
      M.flavor == Flavor::cis_comodule || M.flavor == Flavor::trans_comodule;
  for (int y = 0; y < n; ++y) {
    int mm = M.dims[y], nn = N.dims[y];
    if (com) {
      int c = M.crep.fibers[y].dim;
      const Mat& rM = M.fiber_maps[y];
      const Mat& rN = N.fiber_maps[y];
      for (int i = 0; i < nn; ++i)
        for (int k = 0; k < c; ++k)
          for (int j = 0; j < mm; ++j) {
            auto row = fresh();
            for (int l = 0; l < nn; ++l)
              row[idx(y, l, j)] = F.add(row[idx(y, l, j)], rN.at(i * c + k, l));
            for (int l = 0; l < mm; ++l)
              row[idx(y, i, l)] = F.sub(row[idx(y, i, l)], rM.at(l * c + k, j));
            rows.push_back(std::move(row));
          }
    } else {
      int a = alg ? M.arep.fibers[y].dim : M.crep.fibers[y].dim;
      const Mat& aM = M.fiber_maps[y];
      const Mat& aN = N.fiber_maps[y];
      for (int i = 0; i < nn; ++i)
        for (int j = 0; j < mm; ++j)
          for (int k = 0; k < a; ++k) {
            auto row = fresh();
            for (int l = 0; l < mm; ++l)
              row[idx(y, i, l)] = F.add(row[idx(y, i, l)], aM.at(l, j * a + k));
            for (int l = 0; l < nn; ++l)
              row[idx(y, l, j)] = F.sub(row[idx(y, l, j)], aN.at(i, l * a + k));
            rows.push_back(std::move(row));
          }
    }
  }
  bool asc = flavor_ascending(M.flavor);
  for (const auto& [u, v] : covering_pairs(P)) {
    const Mat& TM = M.structure.at({u, v});
    const Mat& TN = N.structure.at({u, v});
    int sm = asc ? u : v;  // element where eta meets TM first
    int tm = asc ? v : u;
    for (int i = 0; i < N.dims[tm]; ++i)
      for (int j = 0; j < M.dims[sm]; ++j) {
        auto row = fresh();
        for (int l = 0; l < M.dims[tm]; ++l)
          row[idx(tm, i, l)] = F.add(row[idx(tm, i, l)], TM.at(l, j));
        for (int l = 0; l < N.dims[sm]; ++l)
          row[idx(sm, l, j)] = F.sub(row[idx(sm, l, j)], TN.at(i, l));
        rows.push_back(std::move(row));
      }
  }
  Mat sys(int(rows.size()), total);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < total; ++c) sys.at(r, c) = rows[r][c];
  Mat K = kernel_basis(F, sys);
  std::vector<RepMorphism> out;
  for (int col = 0; col < K.cols; ++col) {
    RepMorphism m;
    m.components.resize(n);
    for (int y = 0; y < n; ++y) {
      Mat X(N.dims[y], M.dims[y]);
      for (int i = 0; i < N.dims[y]; ++i)
        for (int j = 0; j < M.dims[y]; ++j) X.at(i, j) = K.at(idx(y, i, j), col);
      m.components[y] = X;
    }
    out.push_back(std::move(m));
  }
  return out;
}

SubobjectResult subobject_from_bases(const RepObject& M,
                                     const std::vector<Mat>& bases) {
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  int n = P.size();
  if (int(bases.size()) != n)
    throw std::invalid_argument("basis count does not match the poset");
  RepObject S = M;
  S.structure.clear();
  std::vector<Mat> incl(n);
  for (int x = 0; x < n; ++x) {
    Mat B = subspace_canon(F, bases[x]);
    if (B.rows != M.dims[x])
      throw std::invalid_argument("basis has wrong ambient dimension");
    incl[x] = B;
    S.dims[x] = B.cols;
    switch (M.flavor) {
      case Flavor::cis_comodule:
      case Flavor::trans_comodule:
        S.fiber_maps[x] = subcomodule_restrict(fiber_comodule(M, x), B).rho;
        break;
      case Flavor::trans_contramodule:
        S.fiber_maps[x] =
            submodule_restrict(contramodule_to_module(fiber_contramodule(M, x)),
                               B)
                .action;
        break;
      default:
        S.fiber_maps[x] = submodule_restrict(fiber_module(M, x), B).action;
    }
  }
  bool asc = flavor_ascending(M.flavor);
  for (const auto& [u, v] : covering_pairs(P)) {
    const Mat& T = M.structure.at({u, v});
    S.structure[{u, v}] = asc ? coords_in(F, incl[v], mul(F, T, incl[u]))
                              : coords_in(F, incl[u], mul(F, T, incl[v]));
  }
  return {S, incl};
}

QuotientResult quotient_from_bases(const RepObject& M,
                                   const std::vector<Mat>& bases) {
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  int n = P.size();
  if (int(bases.size()) != n)
    throw std::invalid_argument("basis count does not match the poset");
  RepObject Q = M;
  Q.structure.clear();
  std::vector<Mat> pr(n), se(n), canon(n);
  for (int x = 0; x < n; ++x) {
    Mat B = subspace_canon(F, bases[x]);
    if (B.rows != M.dims[x])
      throw std::invalid_argument("basis has wrong ambient dimension");
    canon[x] = B;
    Quotient q;
    switch (M.flavor) {
      case Flavor::cis_comodule:
      case Flavor::trans_comodule: {
        ComoduleRight W = quotient_comodule(fiber_comodule(M, x), B, &q);
        Q.dims[x] = W.dim;
        Q.fiber_maps[x] = W.rho;
        break;
      }
      case Flavor::trans_contramodule: {
        ModuleRight W = quotient_module(
            contramodule_to_module(fiber_contramodule(M, x)), B, &q);
        Q.dims[x] = W.dim;
        Q.fiber_maps[x] = W.action;
        break;
      }
      default: {
        ModuleRight W = quotient_module(fiber_module(M, x), B, &q);
        Q.dims[x] = W.dim;
        Q.fiber_maps[x] = W.action;
      }
    }
    pr[x] = q.proj;
    se[x] = q.sect;
  }
  bool asc = flavor_ascending(M.flavor);
  for (const auto& [u, v] : covering_pairs(P)) {
    const Mat& T = M.structure.at({u, v});
    int src = asc ? u : v, dst = asc ? v : u;
    if (canon[src].cols &&
        !subspace_contains(F, canon[dst], mul(F, T, canon[src])))
      throw std::invalid_argument("bases are not closed under the structure maps");
    Q.structure[{u, v}] = mul(F, pr[dst], mul(F, T, se[src]));
  }
  return {Q, pr};
}

SubobjectResult kernel_rep(const RepObject& M, const RepObject& N,
                           const RepMorphism& eta) {
  (void)N;
  const Field& F = M.field();
  int n = M.poset().size();
  std::vector<Mat> bases(n);
  for (int x = 0; x < n; ++x) bases[x] = kernel_basis(F, eta.components[x]);
  return subobject_from_bases(M, bases);
}

QuotientResult cokernel_rep(const RepObject& M, const RepObject& N,
                            const RepMorphism& eta) {
  (void)M;
  const Field& F = N.field();
  int n = N.poset().size();
  std::vector<Mat> bases(n);
  for (int x = 0; x < n; ++x) bases[x] = image_basis(F, eta.components[x]);
  return quotient_from_bases(N, bases);
}

namespace {

Mat fiber_closure(const RepObject& M, int y, const Mat& span) {
  switch (M.flavor) {
    case Flavor::cis_comodule:
    case Flavor::trans_comodule:
      return generated_subcomodule(fiber_comodule(M, y), span);
    case Flavor::trans_contramodule:
      return submodule_generated(
          contramodule_to_module(fiber_contramodule(M, y)), span);
    default:
      return submodule_generated(fiber_module(M, y), span);
  }
}

// one pass of fiber closure plus structure transport; true if anything grew
bool closure_pass(const RepObject& M,
                  const std::vector<std::pair<int, int>>& covers,
                  std::vector<Mat>& S) {
  const Field& F = M.field();
  bool asc = flavor_ascending(M.flavor);
  bool changed = false;
  for (int y = 0; y < int(S.size()); ++y) {
    if (S[y].cols == 0) continue;
    Mat closed = fiber_closure(M, y, S[y]);
    if (closed.cols != S[y].cols) {
      S[y] = closed;
      changed = true;
    }
  }
  for (const auto& [u, v] : covers) {
    const Mat& T = M.structure.at({u, v});
    int src = asc ? u : v, dst = asc ? v : u;
    if (S[src].cols == 0) continue;
    Mat ns = subspace_sum(F, S[dst], mul(F, T, S[src]));
    if (ns.cols != S[dst].cols) {
      S[dst] = ns;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

SubobjectResult generated_subobject(const RepObject& M, int x,
                                    const Mat& vectors) {
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  int n = P.size();
  if (vectors.rows != M.dims[x])
    throw std::invalid_argument("seed vectors have wrong dimension");
  std::vector<Mat> S(n);
  for (int y = 0; y < n; ++y) S[y] = Mat(M.dims[y], 0);
  S[x] = subspace_canon(F, vectors);
  auto covers = covering_pairs(P);
  while (closure_pass(M, covers, S)) {
  }
  return subobject_from_bases(M, S);
}

RepObject zero_object(Flavor f, const CoalgebraRep& R) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  RepObject M;
  M.flavor = f;
  M.crep = R;
  int n = R.poset.size();
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  for (const auto& uv : covering_pairs(R.poset)) M.structure[uv] = Mat(0, 0);
  return M;
}

RepObject zero_object(Flavor f, const AlgebraRep& R) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  RepObject M;
  M.flavor = f;
  M.arep = R;
  int n = R.poset.size();
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  for (const auto& uv : covering_pairs(R.poset)) M.structure[uv] = Mat(0, 0);
  return M;
}

RepObject ex_object(Flavor f, const CoalgebraRep& R, int x, int vdim,
                    const Mat& vmap) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  const Field& F = R.fibers[0].field;
  const FinitePoset& P = R.poset;
  int n = P.size();
  RepObject M;
  M.flavor = f;
  M.crep = R;
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  bool asc = flavor_ascending(f);
  std::vector<char> sup(n, 0);
  for (int y = 0; y < n; ++y) sup[y] = asc ? P.le(x, y) : P.le(y, x);
  auto covers = covering_pairs(P);
  if (f == Flavor::cis_comodule) {
    ComoduleRight V{R.fibers[x], vdim, vmap};
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      ComoduleRight W = corestrict(rep_arrow(R, x, y), V);
      M.dims[y] = W.dim;
      M.fiber_maps[y] = W.rho;
    }
    for (const auto& [u, v] : covers)
      M.structure[{u, v}] = (sup[u] && sup[v]) ? identity(vdim)
                                               : Mat(M.dims[v], M.dims[u]);
  } else if (f == Flavor::trans_comodule) {
    ComoduleRight V{R.fibers[x], vdim, vmap};
    std::vector<CohomResult> H(n);
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      H[y] = cohom(rep_arrow(R, y, x), V);
      M.dims[y] = H[y].module.dim;
      M.fiber_maps[y] = H[y].module.rho;
    }
    for (const auto& [u, v] : covers) {
      if (sup[u] && sup[v]) {
        Mat K = kron(F, identity(vdim), transpose(rep_arrow_mat(R, u, v)));
        Mat T = mul(F, H[u].proj, mul(F, K, H[v].sect));
        if (!(mul(F, T, H[v].proj) == mul(F, H[u].proj, K)))
          throw std::logic_error("transport does not descend");
        M.structure[{u, v}] = T;
      } else {
        M.structure[{u, v}] = Mat(M.dims[u], M.dims[v]);
      }
    }
  } else {
    Contramodule V{R.fibers[x], vdim, vmap};
    std::vector<ContraextendResult> E(n);
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      E[y] = contraextend(rep_arrow(R, y, x), V);
      M.dims[y] = E[y].module.dim;
      M.fiber_maps[y] = E[y].module.pi;
    }
    for (const auto& [u, v] : covers) {
      if (sup[u] && sup[v]) {
        Mat K = kron(F, identity(vdim), transpose(rep_arrow_mat(R, u, v)));
        Mat T = mul(F, E[u].proj, mul(F, K, E[v].sect));
        if (!(mul(F, T, E[v].proj) == mul(F, E[u].proj, K)))
          throw std::logic_error("transport does not descend");
        M.structure[{u, v}] = T;
      } else {
        M.structure[{u, v}] = Mat(M.dims[u], M.dims[v]);
      }
    }
  }
  return M;
}

RepObject ex_object(Flavor f, const AlgebraRep& R, int x, int vdim,
                    const Mat& vmap) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  const Field& F = R.fibers[0].field;
  const FinitePoset& P = R.poset;
  int n = P.size();
  RepObject M;
  M.flavor = f;
  M.arep = R;
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  bool asc = flavor_ascending(f);
  std::vector<char> sup(n, 0);
  for (int y = 0; y < n; ++y) sup[y] = asc ? P.le(x, y) : P.le(y, x);
  auto covers = covering_pairs(P);
  if (f == Flavor::cis_module) {
    ModuleRight V{R.fibers[x], vdim, vmap};
    std::vector<ExtendResult> E(n);
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      E[y] = extend_module(rep_arrow(R, x, y), V);
      M.dims[y] = E[y].module.dim;
      M.fiber_maps[y] = E[y].module.action;
    }
    for (const auto& [u, v] : covers) {
      if (sup[u] && sup[v]) {
        Mat K = kron(F, identity(vdim), rep_arrow_mat(R, u, v));
        Mat T = mul(F, E[v].proj, mul(F, K, E[u].sect));
        if (!(mul(F, T, E[u].proj) == mul(F, E[v].proj, K)))
          throw std::logic_error("transport does not descend");
        M.structure[{u, v}] = T;
      } else {
        M.structure[{u, v}] = Mat(M.dims[v], M.dims[u]);
      }
    }
  } else {
    ModuleRight V{R.fibers[x], vdim, vmap};
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      ModuleRight W = restrict_module(rep_arrow(R, y, x), V);
      M.dims[y] = W.dim;
      M.fiber_maps[y] = W.action;
    }
    for (const auto& [u, v] : covers)
      M.structure[{u, v}] = (sup[u] && sup[v]) ? identity(vdim)
                                               : Mat(M.dims[u], M.dims[v]);
  }
  return M;
}

RepObject coe_object(Flavor f, const CoalgebraRep& R, int x, int vdim,
                     const Mat& vmap) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  const Field& F = R.fibers[0].field;
  const FinitePoset& P = R.poset;
  int n = P.size();
  RepObject M;
  M.flavor = f;
  M.crep = R;
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  bool asc = flavor_ascending(f);
  std::vector<char> sup(n, 0);
  for (int y = 0; y < n; ++y) sup[y] = asc ? P.le(y, x) : P.le(x, y);
  auto covers = covering_pairs(P);
  if (f == Flavor::cis_comodule) {
    ComoduleRight V{R.fibers[x], vdim, vmap};
    std::vector<CoinduceResult> CI(n);
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      CI[y] = coinduce(rep_arrow(R, y, x), V);
      M.dims[y] = CI[y].module.dim;
      M.fiber_maps[y] = CI[y].module.rho;
    }
    for (const auto& [u, v] : covers) {
      if (sup[u] && sup[v]) {
        Mat K = kron(F, identity(vdim), rep_arrow_mat(R, u, v));
        M.structure[{u, v}] =
            coords_in(F, CI[v].incl, mul(F, K, CI[u].incl));
      } else {
        M.structure[{u, v}] = Mat(M.dims[v], M.dims[u]);
      }
    }
  } else if (f == Flavor::trans_comodule) {
    ComoduleRight V{R.fibers[x], vdim, vmap};
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      ComoduleRight W = corestrict(rep_arrow(R, x, y), V);
      M.dims[y] = W.dim;
      M.fiber_maps[y] = W.rho;
    }
    for (const auto& [u, v] : covers)
      M.structure[{u, v}] = (sup[u] && sup[v]) ? identity(vdim)
                                               : Mat(M.dims[u], M.dims[v]);
  } else {
    Contramodule V{R.fibers[x], vdim, vmap};
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      Contramodule W = contrarestrict(rep_arrow(R, x, y), V);
      M.dims[y] = W.dim;
      M.fiber_maps[y] = W.pi;
    }
    for (const auto& [u, v] : covers)
      M.structure[{u, v}] = (sup[u] && sup[v]) ? identity(vdim)
                                               : Mat(M.dims[u], M.dims[v]);
  }
  return M;
}

RepObject coe_object(Flavor f, const AlgebraRep& R, int x, int vdim,
                     const Mat& vmap) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  const Field& F = R.fibers[0].field;
  const FinitePoset& P = R.poset;
  int n = P.size();
  RepObject M;
  M.flavor = f;
  M.arep = R;
  M.dims.assign(n, 0);
  M.fiber_maps.assign(n, Mat(0, 0));
  bool asc = flavor_ascending(f);
  std::vector<char> sup(n, 0);
  for (int y = 0; y < n; ++y) sup[y] = asc ? P.le(y, x) : P.le(x, y);
  auto covers = covering_pairs(P);
  if (f == Flavor::cis_module) {
    ModuleRight V{R.fibers[x], vdim, vmap};
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      ModuleRight W = restrict_module(rep_arrow(R, y, x), V);
      M.dims[y] = W.dim;
      M.fiber_maps[y] = W.action;
    }
    for (const auto& [u, v] : covers)
      M.structure[{u, v}] = (sup[u] && sup[v]) ? identity(vdim)
                                               : Mat(M.dims[v], M.dims[u]);
  } else {
    ModuleRight V{R.fibers[x], vdim, vmap};
    std::vector<CoextendResult> CE(n);
    for (int y = 0; y < n; ++y) {
      if (!sup[y]) continue;
      CE[y] = coextend_module(rep_arrow(R, x, y), V);
      M.dims[y] = CE[y].module.dim;
      M.fiber_maps[y] = CE[y].module.action;
    }
    for (const auto& [u, v] : covers) {
      if (sup[u] && sup[v]) {
        Mat K = kron(F, identity(vdim), transpose(rep_arrow_mat(R, u, v)));
        M.structure[{u, v}] =
            coords_in(F, CE[u].incl, mul(F, K, CE[v].incl));
      } else {
        M.structure[{u, v}] = Mat(M.dims[u], M.dims[v]);
      }
    }
  }
  return M;
}

Mat ex_fiber_unit(const RepObject& exV, int x, int vdim, const Mat& vmap) {
  switch (exV.flavor) {
    case Flavor::cis_comodule:
    case Flavor::trans_module:
      return identity(vdim);
    case Flavor::trans_comodule: {
      const Coalgebra& C = exV.crep.fibers[x];
      CoalgebraMorphism idm{C, C, identity(C.dim)};
      ComoduleRight V{C, vdim, vmap};
      CohomResult H = cohom(idm, V);
      return cohom_unit(idm, V, H);
    }
    case Flavor::trans_contramodule: {
      const Coalgebra& C = exV.crep.fibers[x];
      CoalgebraMorphism idm{C, C, identity(C.dim)};
      Contramodule V{C, vdim, vmap};
      ContraextendResult E = contraextend(idm, V);
      return contraextend_unit(idm, V, E);
    }
    case Flavor::cis_module: {
      const Algebra& A = exV.arep.fibers[x];
      AlgebraMorphism idm{A, A, identity(A.dim)};
      ModuleRight V{A, vdim, vmap};
      ExtendResult E = extend_module(idm, V);
      return extend_unit(idm, V, E);
    }
  }
  throw std::logic_error("unreachable");
}

Mat coe_fiber_counit(const RepObject& coeV, int x, int vdim, const Mat& vmap) {
  switch (coeV.flavor) {
    case Flavor::trans_comodule:
    case Flavor::trans_contramodule:
    case Flavor::cis_module:
      return identity(vdim);
    case Flavor::cis_comodule: {
      const Coalgebra& C = coeV.crep.fibers[x];
      CoalgebraMorphism idm{C, C, identity(C.dim)};
      ComoduleRight V{C, vdim, vmap};
      CoinduceResult CV = coinduce(idm, V);
      return coinduce_counit(idm, V, CV);
    }
    case Flavor::trans_module: {
      const Algebra& A = coeV.arep.fibers[x];
      AlgebraMorphism idm{A, A, identity(A.dim)};
      ModuleRight V{A, vdim, vmap};
      CoextendResult CV = coextend_module(idm, V);
      return coextend_counit(idm, V, CV);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// The canonical mate of the synthesized structure map across u <= v: an
// isomorphism on every covering pair exactly when the object is cartesian.
Mat mate_along(const RepObject& M, int u, int v) {
  const Field& F = M.field();
  switch (M.flavor) {
    case Flavor::cis_comodule: {
      CoalgebraMorphism a = rep_arrow(M.crep, u, v);
      Mat T = structure_mat(M, u, v);
      CoinduceResult CI = coinduce(a, fiber_comodule(M, v));
      Mat amb = mul(F, kron(F, T, identity(a.source.dim)), M.fiber_maps[u]);
      return coords_in(F, CI.incl, amb);
    }
    case Flavor::trans_comodule: {
      CoalgebraMorphism a = rep_arrow(M.crep, u, v);
      Mat T = structure_mat(M, u, v);
      ComoduleRight Mu = fiber_comodule(M, u);
      CohomResult H = cohom(a, fiber_comodule(M, v));
      CohomResult H2 = cohom(a, corestrict(a, Mu));
      return mul(F, cohom_counit(a, Mu, H2), cohom_morphism(a, H, H2, T));
    }
    case Flavor::trans_contramodule: {
      CoalgebraMorphism a = rep_arrow(M.crep, u, v);
      Mat T = structure_mat(M, u, v);
      Contramodule Pu = fiber_contramodule(M, u);
      ContraextendResult E = contraextend(a, fiber_contramodule(M, v));
      ContraextendResult E2 = contraextend(a, contrarestrict(a, Pu));
      return mul(F, contraextend_counit(a, Pu, E2),
                 contraextend_morphism(a, E, E2, T));
    }
    case Flavor::cis_module: {
      AlgebraMorphism a = rep_arrow(M.arep, u, v);
      Mat T = structure_mat(M, u, v);
      ModuleRight Mv = fiber_module(M, v);
      ExtendResult E = extend_module(a, fiber_module(M, u));
      ExtendResult E2 = extend_module(a, restrict_module(a, Mv));
      return mul(F, extend_counit(a, Mv, E2), extend_morphism(a, E, E2, T));
    }
    case Flavor::trans_module: {
      AlgebraMorphism a = rep_arrow(M.arep, u, v);
      Mat T = structure_mat(M, u, v);
      ModuleRight Mv = fiber_module(M, v);
      CoextendResult C2 = coextend_module(a, restrict_module(a, Mv));
      CoextendResult CN = coextend_module(a, fiber_module(M, u));
      return mul(F, coextend_morphism(a, C2, CN, T), coextend_unit(a, Mv, C2));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Mat cartesian_mate(const RepObject& M, int u, int v) {
  if (!M.poset().le(u, v))
    throw std::invalid_argument("elements are not comparable");
  return mate_along(M, u, v);
}

RepMorphism ex_counit(const RepObject& M, int x) {
  const FinitePoset& P = M.poset();
  int n = P.size();
  bool asc = flavor_ascending(M.flavor);
  RepMorphism eta;
  eta.components.resize(n);
  for (int y = 0; y < n; ++y) {
    bool insup = asc ? P.le(x, y) : P.le(y, x);
    if (!insup) {
      eta.components[y] = Mat(M.dims[y], 0);
      continue;
    }
    switch (M.flavor) {
      case Flavor::cis_comodule:
        eta.components[y] = structure_mat(M, x, y);
        break;
      case Flavor::trans_module:
        eta.components[y] = structure_mat(M, y, x);
        break;
      case Flavor::trans_comodule:
      case Flavor::trans_contramodule:
        eta.components[y] = mate_along(M, y, x);
        break;
      case Flavor::cis_module:
        eta.components[y] = mate_along(M, x, y);
        break;
    }
  }
  return eta;
}

RepMorphism coe_unit(const RepObject& M, int x) {
  const FinitePoset& P = M.poset();
  int n = P.size();
  bool asc = flavor_ascending(M.flavor);
  RepMorphism eta;
  eta.components.resize(n);
  for (int y = 0; y < n; ++y) {
    bool insup = asc ? P.le(y, x) : P.le(x, y);
    if (!insup) {
      eta.components[y] = Mat(0, M.dims[y]);
      continue;
    }
    switch (M.flavor) {
      case Flavor::cis_comodule:
        eta.components[y] = mate_along(M, y, x);
        break;
      case Flavor::cis_module:
        eta.components[y] = structure_mat(M, y, x);
        break;
      case Flavor::trans_comodule:
      case Flavor::trans_contramodule:
        eta.components[y] = structure_mat(M, x, y);
        break;
      case Flavor::trans_module:
        eta.components[y] = mate_along(M, x, y);
        break;
    }
  }
  return eta;
}

RepMorphism ex_on_map(Flavor f, const CoalgebraRep& R, int x, int vdim,
                      const Mat& vmap, int wdim, const Mat& wmap,
                      const Mat& g) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  const FinitePoset& P = R.poset;
  int n = P.size();
  bool asc = flavor_ascending(f);
  RepMorphism eta;
  eta.components.assign(n, Mat(0, 0));
  for (int y = 0; y < n; ++y) {
    if (!(asc ? P.le(x, y) : P.le(y, x))) continue;
    switch (f) {
      case Flavor::cis_comodule:
        eta.components[y] = g;
        break;
      case Flavor::trans_comodule: {
        CoalgebraMorphism a = rep_arrow(R, y, x);
        ComoduleRight V{R.fibers[x], vdim, vmap}, W{R.fibers[x], wdim, wmap};
        eta.components[y] = cohom_morphism(a, cohom(a, V), cohom(a, W), g);
        break;
      }
      case Flavor::trans_contramodule: {
        CoalgebraMorphism a = rep_arrow(R, y, x);
        Contramodule V{R.fibers[x], vdim, vmap}, W{R.fibers[x], wdim, wmap};
        eta.components[y] =
            contraextend_morphism(a, contraextend(a, V), contraextend(a, W), g);
        break;
      }
      default:
        break;
    }
  }
  return eta;
}

RepMorphism ex_on_map(Flavor f, const AlgebraRep& R, int x, int vdim,
                      const Mat& vmap, int wdim, const Mat& wmap,
                      const Mat& g) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  const FinitePoset& P = R.poset;
  int n = P.size();
  bool asc = flavor_ascending(f);
  RepMorphism eta;
  eta.components.assign(n, Mat(0, 0));
  for (int y = 0; y < n; ++y) {
    if (!(asc ? P.le(x, y) : P.le(y, x))) continue;
    if (f == Flavor::cis_module) {
      AlgebraMorphism a = rep_arrow(R, x, y);
      ModuleRight V{R.fibers[x], vdim, vmap}, W{R.fibers[x], wdim, wmap};
      eta.components[y] =
          extend_morphism(a, extend_module(a, V), extend_module(a, W), g);
    } else {
      eta.components[y] = g;
    }
  }
  return eta;
}

RepMorphism coe_on_map(Flavor f, const CoalgebraRep& R, int x, int vdim,
                       const Mat& vmap, int wdim, const Mat& wmap,
                       const Mat& g) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  const FinitePoset& P = R.poset;
  int n = P.size();
  bool asc = flavor_ascending(f);
  RepMorphism eta;
  eta.components.assign(n, Mat(0, 0));
  for (int y = 0; y < n; ++y) {
    if (!(asc ? P.le(y, x) : P.le(x, y))) continue;
    if (f == Flavor::cis_comodule) {
      CoalgebraMorphism a = rep_arrow(R, y, x);
      ComoduleRight V{R.fibers[x], vdim, vmap}, W{R.fibers[x], wdim, wmap};
      eta.components[y] = coinduce_morphism(a, coinduce(a, V), coinduce(a, W), g);
    } else {
      eta.components[y] = g;
    }
  }
  return eta;
}

RepMorphism coe_on_map(Flavor f, const AlgebraRep& R, int x, int vdim,
                       const Mat& vmap, int wdim, const Mat& wmap,
                       const Mat& g) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  const FinitePoset& P = R.poset;
  int n = P.size();
  bool asc = flavor_ascending(f);
  RepMorphism eta;
  eta.components.assign(n, Mat(0, 0));
  for (int y = 0; y < n; ++y) {
    if (!(asc ? P.le(y, x) : P.le(x, y))) continue;
    if (f == Flavor::trans_module) {
      AlgebraMorphism a = rep_arrow(R, x, y);
      ModuleRight V{R.fibers[x], vdim, vmap}, W{R.fibers[x], wdim, wmap};
      eta.components[y] =
          coextend_morphism(a, coextend_module(a, V), coextend_module(a, W), g);
    } else {
      eta.components[y] = g;
    }
  }
  return eta;
}

std::vector<RepObject> projective_generator_family(Flavor f,
                                                   const CoalgebraRep& R) {
  if (flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs an algebra representation");
  std::vector<RepObject> out;
  for (int x = 0; x < R.poset.size(); ++x) {
    const Coalgebra& C = R.fibers[x];
    if (f == Flavor::trans_contramodule) {
      Contramodule P = free_contramodule(C, 1);
      out.push_back(ex_object(f, R, x, P.dim, P.pi));
    } else {
      Algebra D = dual_algebra(C);
      ComoduleRight G = module_to_comodule(ModuleLeft{D, D.dim, D.mult}, C);
      out.push_back(ex_object(f, R, x, G.dim, G.rho));
    }
  }
  return out;
}

std::vector<RepObject> projective_generator_family(Flavor f,
                                                   const AlgebraRep& R) {
  if (!flavor_uses_algebras(f))
    throw std::invalid_argument("flavor needs a coalgebra representation");
  std::vector<RepObject> out;
  for (int x = 0; x < R.poset.size(); ++x) {
    ModuleRight G = regular_right(R.fibers[x]);
    out.push_back(ex_object(f, R, x, G.dim, G.action));
  }
  return out;
}

CartesianReport is_cartesian(const RepObject& M) {
  CartesianReport rep;
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  for (const auto& [u, v] : covering_pairs(P)) {
    Mat mate = cartesian_mate(M, u, v);
    bool ok = mate.rows == mate.cols && rank(F, mate) == mate.rows;
    if (!ok) rep.value = false;
    rep.arrows.push_back(pair_label(P, u, v) + ": " +
                         (ok ? "cartesian" : "not cartesian"));
    bool hyp = false;
    std::string hname;
    switch (M.flavor) {
      case Flavor::cis_comodule:
        hyp = is_coflat(rep_arrow(M.crep, u, v));
        hname = "coflat";
        break;
      case Flavor::trans_comodule:
        hyp = is_sigma_injective(rep_arrow(M.crep, u, v));
        hname = "sigma-injective";
        break;
      case Flavor::trans_contramodule: {
        CoalgebraMorphism a = rep_arrow(M.crep, u, v);
        const Coalgebra& Cu = M.crep.fibers[u];
        Algebra DU = dual_algebra(Cu);
        Algebra DV = dual_algebra(M.crep.fibers[v]);
        ModuleLeft L{DV, Cu.dim,
                     mul(F, DU.mult,
                         kron(F, dual_morphism(a).map, identity(Cu.dim)))};
        hyp = is_projective(left_as_right_op(L)).ok;
        hname = "projective dual";
        break;
      }
      case Flavor::cis_module: {
        AlgebraMorphism a = rep_arrow(M.arep, u, v);
        ModuleLeft L{a.source, a.target.dim,
                     mul(F, a.target.mult,
                         kron(F, a.map, identity(a.target.dim)))};
        hyp = is_projective(left_as_right_op(L)).ok;
        hname = "projective target";
        break;
      }
      case Flavor::trans_module: {
        AlgebraMorphism a = rep_arrow(M.arep, u, v);
        hyp = is_projective(restrict_module(a, regular_right(a.target))).ok;
        hname = "projective target";
        break;
      }
    }
    rep.hypotheses.push_back(pair_label(P, u, v) + ": " + hname + "=" +
                             (hyp ? "yes" : "no"));
  }
  return rep;
}

namespace {

// span of the first-leg vectors of the columns of W inside K^m, where W's
// rows are indexed i*k + j with i < m
Mat leg_support(const Field& F, const Mat& W, int m, int k) {
  Mat out(m, W.cols * k);
  for (int col = 0; col < W.cols; ++col)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < m; ++i) out.at(i, col * k + j) = W.at(i * k + j, col);
  return subspace_canon(F, out);
}

void grow_span(const Field& F, Mat& S, const Mat& add, bool& changed) {
  if (add.cols == 0) return;
  Mat ns = subspace_sum(F, S, add);
  if (ns.cols != S.cols) {
    S = ns;
    changed = true;
  }
}

// one sweep of per-arrow forcings, growing fibers toward a family whose
// restricted mates are bijections
bool hull_forcing_pass(const RepObject& M,
                       const std::vector<std::pair<int, int>>& covers,
                       std::vector<Mat>& S) {
  const Field& F = M.field();
  bool changed = false;
  for (const auto& [u, v] : covers) {
    Mat mate = cartesian_mate(M, u, v);
    switch (M.flavor) {
      case Flavor::cis_comodule: {
        int cu = M.crep.fibers[u].dim;
        Mat A = mul(F, kron(F, M.structure.at({u, v}), identity(cu)),
                    M.fiber_maps[u]);
        if (S[u].cols)
          grow_span(F, S[v], leg_support(F, mul(F, A, S[u]), M.dims[v], cu),
                    changed);
        CoinduceResult CI =
            coinduce(rep_arrow(M.crep, u, v), fiber_comodule(M, v));
        Mat target =
            subspace_intersect(F, kron(F, S[v], identity(cu)), CI.incl);
        if (target.cols) {
          auto pre = solve(F, A, target);
          if (!pre) throw std::logic_error("downward forcing lost a preimage");
          grow_span(F, S[u], *pre, changed);
        }
        break;
      }
      case Flavor::trans_comodule: {
        int cu = M.crep.fibers[u].dim;
        CohomResult H = cohom(rep_arrow(M.crep, u, v), fiber_comodule(M, v));
        if (S[v].cols)
          grow_span(F, S[u],
                    mul(F, mate, mul(F, H.proj, kron(F, S[v], identity(cu)))),
                    changed);
        if (S[u].cols) {
          auto pre = solve(F, mate, S[u]);
          if (!pre) throw std::logic_error("upward forcing lost a preimage");
          grow_span(F, S[v],
                    leg_support(F, mul(F, H.sect, *pre), M.dims[v], cu),
                    changed);
        }
        break;
      }
      case Flavor::trans_contramodule: {
        int cu = M.crep.fibers[u].dim;
        ContraextendResult E =
            contraextend(rep_arrow(M.crep, u, v), fiber_contramodule(M, v));
        if (S[v].cols)
          grow_span(F, S[u],
                    mul(F, mate, mul(F, E.proj, kron(F, S[v], identity(cu)))),
                    changed);
        if (S[u].cols) {
          auto pre = solve(F, mate, S[u]);
          if (!pre) throw std::logic_error("upward forcing lost a preimage");
          grow_span(F, S[v],
                    leg_support(F, mul(F, E.sect, *pre), M.dims[v], cu),
                    changed);
        }
        break;
      }
      case Flavor::cis_module: {
        int av = M.arep.fibers[v].dim;
        ExtendResult E =
            extend_module(rep_arrow(M.arep, u, v), fiber_module(M, u));
        if (S[u].cols)
          grow_span(F, S[v],
                    mul(F, mate, mul(F, E.proj, kron(F, S[u], identity(av)))),
                    changed);
        if (S[v].cols) {
          auto pre = solve(F, mate, S[v]);
          if (!pre) throw std::logic_error("downward forcing lost a preimage");
          grow_span(F, S[u],
                    leg_support(F, mul(F, E.sect, *pre), M.dims[u], av),
                    changed);
        }
        break;
      }
      case Flavor::trans_module: {
        int av = M.arep.fibers[v].dim;
        CoextendResult CN =
            coextend_module(rep_arrow(M.arep, u, v), fiber_module(M, u));
        Mat A = mul(F, CN.incl, mate);
        if (S[v].cols)
          grow_span(F, S[u], leg_support(F, mul(F, A, S[v]), M.dims[u], av),
                    changed);
        Mat target =
            subspace_intersect(F, kron(F, S[u], identity(av)), CN.incl);
        if (target.cols) {
          auto pre = solve(F, A, target);
          if (!pre) throw std::logic_error("upward forcing lost a preimage");
          grow_span(F, S[v], *pre, changed);
        }
        break;
      }
    }
  }
  return changed;
}

}  // namespace

HullResult cartesian_hull(const RepObject& M, int x, const Mat& vectors) {
  const Field& F = M.field();
  if (!is_cartesian(M).value)
    throw std::invalid_argument("object is not cartesian");
  const FinitePoset& P = M.poset();
  int n = P.size();
  auto covers = covering_pairs(P);
  if (vectors.rows != M.dims[x])
    throw std::invalid_argument("seed vectors have wrong dimension");
  std::vector<Mat> S(n);
  for (int y = 0; y < n; ++y) S[y] = Mat(M.dims[y], 0);
  S[x] = subspace_canon(F, vectors);
  while (true) {
    bool changed = true;
    while (changed) {
      changed = closure_pass(M, covers, S);
      if (hull_forcing_pass(M, covers, S)) changed = true;
    }
    SubobjectResult sub = subobject_from_bases(M, S);
    if (is_cartesian(sub.object).value) return {sub.object, sub.incl};
    // At a fixed point every restricted mate is onto its target fiber, but
    // it can still fail to be injective when the fiber functor is not exact.
    // No family with the current source fiber is cartesian then, so grow
    // that fiber and close again.
    bool grew = false;
    for (const auto& [u, v] : covers) {
      Mat mate = cartesian_mate(sub.object, u, v);
      if (mate.rows == mate.cols && rank(F, mate) == mate.rows) continue;
      int f = flavor_uses_algebras(M.flavor) ? u : v;
      for (int i = 0; i < M.dims[f] && !grew; ++i) {
        Mat e = basis_vec(M.dims[f], i);
        if (!subspace_contains(F, S[f], e)) {
          S[f] = subspace_sum(F, S[f], e);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) throw std::logic_error("hull iteration is stuck");
  }
}

namespace {

Mat vec_of(const Mat& A) {
  Mat v(A.rows * A.cols, 1);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) v.at(i * A.cols + j, 0) = A.at(i, j);
  return v;
}

}  // namespace

RepObject trans_contratensor(const RepObject& M, const RepObject& N) {
  if (M.flavor != Flavor::trans_contramodule ||
      N.flavor != Flavor::trans_comodule)
    throw std::invalid_argument(
        "contratensor needs a trans-contramodule and a trans-comodule");
  if (!same_crep(M.crep, N.crep))
    throw std::invalid_argument("objects live over different representations");
  const Field& F = M.field();
  const FinitePoset& P = M.poset();
  int n = P.size();
  RepObject O;
  O.flavor = Flavor::trans_comodule;
  O.crep = M.crep;
  O.dims.assign(n, 0);
  O.fiber_maps.assign(n, Mat(0, 0));
  std::vector<ContratensorResult> ct(n);
  for (int y = 0; y < n; ++y) {
    ComoduleRight fy = contratensor_comodule(fiber_contramodule(M, y),
                                             fiber_comodule(N, y), &ct[y]);
    O.dims[y] = fy.dim;
    O.fiber_maps[y] = fy.rho;
  }
  for (const auto& [u, v] : covering_pairs(P)) {
    Mat K = kron(F, M.structure.at({u, v}), N.structure.at({u, v}));
    Mat T = mul(F, ct[u].proj, mul(F, K, ct[v].sect));
    if (!(mul(F, T, ct[v].proj) == mul(F, ct[u].proj, K)))
      throw std::logic_error("contratensor transport does not descend");
    O.structure[{u, v}] = T;
  }
  return O;
}

RepObject trans_hom(const RepObject& N, const RepObject& P) {
  if (N.flavor != Flavor::trans_comodule || P.flavor != Flavor::trans_comodule)
    throw std::invalid_argument("hom functor needs two trans-comodules");
  if (!same_crep(N.crep, P.crep))
    throw std::invalid_argument("objects live over different representations");
  const Field& F = N.field();
  const FinitePoset& Po = N.poset();
  int n = Po.size();
  RepObject G;
  G.flavor = Flavor::trans_contramodule;
  G.crep = N.crep;
  G.dims.assign(n, 0);
  G.fiber_maps.assign(n, Mat(0, 0));
  std::vector<std::vector<Mat>> basis(n);
  for (int y = 0; y < n; ++y) {
    Contramodule gy =
        hom_comodule_contra(fiber_comodule(N, y), fiber_comodule(P, y),
                            &basis[y]);
    G.dims[y] = gy.dim;
    G.fiber_maps[y] = gy.pi;
  }
  for (const auto& [u, v] : covering_pairs(Po)) {
    CoalgebraMorphism a = rep_arrow(N.crep, u, v);
    CohomResult HN = cohom(a, fiber_comodule(N, v));
    CohomResult HP = cohom(a, fiber_comodule(P, v));
    Mat mateN = cartesian_mate(N, u, v);
    if (mateN.rows != mateN.cols || rank(F, mateN) != mateN.rows)
      throw std::invalid_argument("source object is not cartesian");
    Mat invN = inverse(F, mateN);
    Mat mateP = cartesian_mate(P, u, v);
    Mat ubasis(P.dims[u] * N.dims[u], 0);
    {
      std::vector<Mat> vecs;
      for (const auto& b : basis[u]) vecs.push_back(vec_of(b));
      if (!vecs.empty()) ubasis = from_cols(vecs);
    }
    Mat T(G.dims[u], G.dims[v]);
    for (int j = 0; j < int(basis[v].size()); ++j) {
      Mat g = mul(F, mateP, mul(F, cohom_morphism(a, HN, HP, basis[v][j]), invN));
      Mat coords = coords_in(F, ubasis, vec_of(g));
      for (int i = 0; i < G.dims[u]; ++i) T.at(i, j) = coords.at(i, 0);
    }
    G.structure[{u, v}] = T;
  }
  return G;
}

}  // namespace comod
