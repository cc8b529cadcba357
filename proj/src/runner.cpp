#include <comod/runner.hpp>

#include <sstream>

#include "json_util.hpp"

namespace comod {

using nlohmann::json;

namespace {

struct Check {
  std::string name;
  std::string status;  // pass | fail | unsupported
  std::vector<std::string> witnesses;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  json results = json::object();

  void add(const std::string& name, const std::vector<std::string>& errors) {
    checks.push_back({name, errors.empty() ? "pass" : "fail", errors});
  }
  bool require(const std::string& name, bool ok, const std::string& witness) {
    checks.push_back({name, ok ? "pass" : "fail",
                      ok ? std::vector<std::string>{}
                         : std::vector<std::string>{witness}});
    return ok;
  }
};

std::string render_text(const Report& r) {
  std::ostringstream o;
  o << "command: " << r.command << "\n";
  for (const Check& c : r.checks) {
    o << "check " << c.name << ": " << c.status << "\n";
    for (const std::string& w : c.witnesses) o << "  - " << w << "\n";
  }
  for (auto it = r.results.begin(); it != r.results.end(); ++it)
    o << "result " << it.key() << " = " << it.value().dump() << "\n";
  return o.str();
}

std::string render_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back(json{
        {"name", c.name}, {"status", c.status}, {"witnesses", c.witnesses}});
  json j{{"command", r.command}, {"checks", checks}, {"results", r.results}};
  return j.dump(2) + "\n";
}

template <typename T>
const T& find_in(const std::map<std::string, T>& m, const std::string& name,
                 const char* kind) {
  auto it = m.find(name);
  if (it == m.end())
    throw UsageError("unknown " + std::string(kind) + " \"" + name + "\"");
  return it->second;
}

const std::string& need(const std::string& v, const char* flag,
                        const std::string& verb) {
  if (v.empty()) throw UsageError(verb + " needs " + flag);
  return v;
}

int element_of(const FinitePoset& P, const std::string& name,
               const std::string& verb) {
  if (name.empty()) throw UsageError(verb + " needs --at");
  for (int i = 0; i < P.size(); i++)
    if (P.elements[i] == name) return i;
  throw UsageError("unknown poset element \"" + name + "\"");
}

bool mat_is(const Field& F, const Mat& A, const Mat& B) {
  return A.rows == B.rows && A.cols == B.cols && is_zero_mat(F, sub(F, A, B));
}

bool same_poset(const FinitePoset& a, const FinitePoset& b) {
  return a.elements == b.elements && a.leq == b.leq;
}

bool same_crep(const CoalgebraRep& a, const CoalgebraRep& b) {
  return same_poset(a.poset, b.poset) && a.fibers == b.fibers &&
         a.arrows == b.arrows;
}

int fiber_end_dim(const RepObject& M, int x) {
  switch (M.flavor) {
    case Flavor::cis_comodule:
    case Flavor::trans_comodule: {
      ComoduleRight V = fiber_comodule(M, x);
      return int(hom_comodules(V, V).size());
    }
    case Flavor::trans_contramodule: {
      Contramodule V = fiber_contramodule(M, x);
      return int(hom_contramodules(V, V).size());
    }
    default: {
      ModuleRight V = fiber_module(M, x);
      return int(hom_modules(V, V).size());
    }
  }
}

void run_validate(const InstanceDocument& d, Report& rep) {
  int n = 0;
  for (auto& [name, C] : d.coalgebras) {
    rep.add("coalgebra " + name, check_coalgebra(C));
    n++;
  }
  for (auto& [name, A] : d.algebras) {
    rep.add("algebra " + name, check_algebra(A));
    n++;
  }
  {
    std::map<std::string, std::vector<std::string>> errs;
    for (auto& [name, f] : d.coalgebra_morphisms)
      errs[name] = check_coalgebra_morphism(f);
    for (auto& [name, f] : d.algebra_morphisms)
      errs[name] = check_algebra_morphism(f);
    for (auto& [name, e] : errs) {
      rep.add("morphism " + name, e);
      n++;
    }
  }
  for (auto& [name, P] : d.posets) {
    rep.add("poset " + name, check_poset(P));
    n++;
  }
  {
    std::map<std::string, std::vector<std::string>> errs;
    for (auto& [name, R] : d.coalgebra_reps) errs[name] = check_representation(R);
    for (auto& [name, R] : d.algebra_reps) errs[name] = check_representation(R);
    for (auto& [name, e] : errs) {
      rep.add("representation " + name, e);
      n++;
    }
  }
  for (auto& [name, M] : d.objects) {
    rep.add("object " + name, check_object(M));
    n++;
  }
  {
    std::map<std::string, std::vector<std::string>> errs;
    for (auto& [name, M] : d.right_comodules) errs[name] = check_comodule(M);
    for (auto& [name, M] : d.left_comodules) errs[name] = check_comodule(M);
    for (auto& [name, e] : errs) {
      rep.add("comodule " + name, e);
      n++;
    }
  }
  for (auto& [name, P] : d.contramodules) {
    rep.add("contramodule " + name, check_contramodule(P));
    n++;
  }
  {
    std::map<std::string, std::vector<std::string>> errs;
    for (auto& [name, M] : d.left_modules) errs[name] = check_module(M);
    for (auto& [name, D] : d.presented_modules) errs[name] = check_fp_action(D);
    for (auto& [name, e] : errs) {
      rep.add("module " + name, e);
      n++;
    }
  }
  for (auto& [name, p] : d.pairings) {
    rep.add("pairing " + name, check_pairing(p));
    n++;
  }
  rep.results["entities"] = n;
}

void run_compute(const InstanceDocument& d, const CliRequest& req,
                 Report& rep) {
  const Field& F = d.field;
  const std::string verb = "compute " + req.sub;
  if (req.sub == "cotensor") {
    const ComoduleRight& M =
        find_in(d.right_comodules, need(req.left, "--left", verb), "right comodule");
    const ComoduleLeft& N =
        find_in(d.left_comodules, need(req.right, "--right", verb), "left comodule");
    if (!rep.require("operands share a coalgebra", M.coalg == N.coalg,
                     "the two comodules live over different coalgebras"))
      return;
    Mat B = cotensor(M, N);
    rep.results["dim"] = B.cols;
    rep.results["basis"] = emit_matrix(F, B);
  } else if (req.sub == "coinduce" || req.sub == "cohom") {
    const CoalgebraMorphism& f = find_in(
        d.coalgebra_morphisms, need(req.left, "--left", verb), "coalgebra morphism");
    const ComoduleRight& N =
        find_in(d.right_comodules, need(req.right, "--right", verb), "right comodule");
    if (!rep.require("comodule lives over the morphism target",
                     N.coalg == f.target,
                     "expected a comodule over the target coalgebra"))
      return;
    if (req.sub == "coinduce") {
      CoinduceResult R = coinduce(f, N);
      rep.add("result comodule", check_comodule(R.module));
      rep.results["dim"] = R.module.dim;
    } else {
      CohomResult R = cohom(f, N);
      rep.add("result comodule", check_comodule(R.module));
      rep.results["dim"] = R.module.dim;
    }
  } else if (req.sub == "contraextend") {
    const CoalgebraMorphism& f = find_in(
        d.coalgebra_morphisms, need(req.left, "--left", verb), "coalgebra morphism");
    const Contramodule& P =
        find_in(d.contramodules, need(req.right, "--right", verb), "contramodule");
    if (!rep.require("contramodule lives over the morphism target",
                     P.coalg == f.target,
                     "expected a contramodule over the target coalgebra"))
      return;
    ContraextendResult R = contraextend(f, P);
    rep.add("result contramodule", check_contramodule(R.module));
    rep.results["dim"] = R.module.dim;
  } else if (req.sub == "contratensor") {
    const Contramodule& P =
        find_in(d.contramodules, need(req.left, "--left", verb), "contramodule");
    const ComoduleLeft& N =
        find_in(d.left_comodules, need(req.right, "--right", verb), "left comodule");
    if (!rep.require("operands share a coalgebra", P.coalg == N.coalg,
                     "the operands live over different coalgebras"))
      return;
    ContratensorResult R = contratensor(P, N);
    rep.results["dim"] = R.dim;
  } else if (req.sub == "finite-dual") {
    const Algebra& A =
        find_in(d.algebras, need(req.object, "--object", verb), "algebra");
    Coalgebra C = finite_dual(A);
    rep.add("result coalgebra", check_coalgebra(C));
    rep.results["dim"] = C.dim;
    rep.results["delta"] = emit_matrix(F, C.delta);
    rep.results["eps"] = emit_matrix(F, C.eps);
  } else {
    throw UsageError("unknown compute operation \"" + req.sub + "\"");
  }
}

void run_check(const InstanceDocument& d, const CliRequest& req, Report& rep) {
  const std::string verb = "check " + req.sub;
  if (req.sub == "coalgebra") {
    const std::string& n = need(req.object, "--object", verb);
    rep.add("coalgebra " + n, check_coalgebra(find_in(d.coalgebras, n, "coalgebra")));
  } else if (req.sub == "comodule") {
    const std::string& n = need(req.object, "--object", verb);
    if (d.right_comodules.count(n))
      rep.add("comodule " + n, check_comodule(d.right_comodules.at(n)));
    else if (d.left_comodules.count(n))
      rep.add("comodule " + n, check_comodule(d.left_comodules.at(n)));
    else
      throw UsageError("unknown comodule \"" + n + "\"");
  } else if (req.sub == "contramodule") {
    const std::string& n = need(req.object, "--object", verb);
    rep.add("contramodule " + n,
            check_contramodule(find_in(d.contramodules, n, "contramodule")));
  } else if (req.sub == "representation") {
    const std::string& n = need(req.object, "--object", verb);
    if (d.coalgebra_reps.count(n))
      rep.add("representation " + n,
              check_representation(d.coalgebra_reps.at(n)));
    else if (d.algebra_reps.count(n))
      rep.add("representation " + n, check_representation(d.algebra_reps.at(n)));
    else
      throw UsageError("unknown representation \"" + n + "\"");
  } else if (req.sub == "object") {
    const std::string& n = need(req.object, "--object", verb);
    rep.add("object " + n, check_object(find_in(d.objects, n, "object")));
  } else if (req.sub == "cartesian") {
    const std::string& n = need(req.object, "--object", verb);
    const RepObject& M = find_in(d.objects, n, "object");
    if (!rep.require("object " + n, check_object(M).empty(),
                     "not a valid object"))
      return;
    CartesianReport cr = is_cartesian(M);
    std::vector<std::string> notes = cr.arrows;
    notes.insert(notes.end(), cr.hypotheses.begin(), cr.hypotheses.end());
    rep.checks.push_back(
        {"cartesian " + n, cr.value ? "pass" : "fail", cr.value ? std::vector<std::string>{} : notes});
    rep.results["cartesian"] = cr.value;
    rep.results["arrows"] = cr.arrows;
  } else if (req.sub == "coflat" || req.sub == "sigma-injective") {
    const std::string& n = need(req.object, "--object", verb);
    const CoalgebraMorphism& f =
        find_in(d.coalgebra_morphisms, n, "coalgebra morphism");
    if (!rep.require("morphism " + n, check_coalgebra_morphism(f).empty(),
                     "not a valid coalgebra morphism"))
      return;
    bool v = req.sub == "coflat" ? is_coflat(f) : is_sigma_injective(f);
    rep.require(req.sub + " " + n, v, "the property fails");
    rep.results[req.sub == "coflat" ? "coflat" : "sigma_injective"] = v;
  } else if (req.sub == "pairing") {
    const std::string& n = need(req.pairing, "--pairing", verb);
    rep.add("pairing " + n, check_pairing(find_in(d.pairings, n, "pairing")));
  } else {
    throw UsageError("unknown check \"" + req.sub + "\"");
  }
}

void adj_point(const InstanceDocument& d, const CliRequest& req, Report& rep,
               bool ex_side) {
  const std::string verb = "adjunction " + req.sub;
  const std::string& n = need(req.object, "--object", verb);
  const RepObject& M = find_in(d.objects, n, "object");
  const Field& F = M.field();
  int x = element_of(M.poset(), req.at, verb);
  int vdim = M.dims[x];
  const Mat& vmap = M.fiber_maps[x];
  bool alg = flavor_uses_algebras(M.flavor);
  int np = M.poset().size();
  if (ex_side) {
    RepObject exV = alg ? ex_object(M.flavor, M.arep, x, vdim, vmap)
                        : ex_object(M.flavor, M.crep, x, vdim, vmap);
    int lhs = int(hom_rep(exV, M).size());
    int rhs = fiber_end_dim(M, x);
    rep.require("hom dimensions agree", lhs == rhs,
                "dim Hom(ex V, M) = " + std::to_string(lhs) +
                    " but dim Hom(V, ev M) = " + std::to_string(rhs));
    rep.results["hom_dim_left"] = lhs;
    rep.results["hom_dim_right"] = rhs;
    Mat u = ex_fiber_unit(exV, x, vdim, vmap);
    RepMorphism exu =
        alg ? ex_on_map(M.flavor, M.arep, x, vdim, vmap, exV.dims[x],
                        exV.fiber_maps[x], u)
            : ex_on_map(M.flavor, M.crep, x, vdim, vmap, exV.dims[x],
                        exV.fiber_maps[x], u);
    RepMorphism ce = ex_counit(exV, x);
    bool t1 = true;
    for (int i = 0; i < np; i++)
      t1 = t1 && mat_is(F, mul(F, ce.components[i], exu.components[i]),
                        identity(exV.dims[i]));
    rep.require("triangle on the left adjoint", t1,
                "counit after the image of the unit is not the identity");
    RepMorphism cm = ex_counit(M, x);
    bool t2 = mat_is(F, mul(F, cm.components[x], u), identity(vdim));
    rep.require("triangle on the right adjoint", t2,
                "evaluated counit after the unit is not the identity");
  } else {
    RepObject coeV = alg ? coe_object(M.flavor, M.arep, x, vdim, vmap)
                         : coe_object(M.flavor, M.crep, x, vdim, vmap);
    int lhs = fiber_end_dim(M, x);
    int rhs = int(hom_rep(M, coeV).size());
    rep.require("hom dimensions agree", lhs == rhs,
                "dim Hom(ev M, V) = " + std::to_string(lhs) +
                    " but dim Hom(M, coe V) = " + std::to_string(rhs));
    rep.results["hom_dim_left"] = lhs;
    rep.results["hom_dim_right"] = rhs;
    RepMorphism um = coe_unit(M, x);
    Mat c = coe_fiber_counit(coeV, x, vdim, vmap);
    bool t1 = mat_is(F, mul(F, c, um.components[x]), identity(vdim));
    rep.require("triangle on the left adjoint", t1,
                "counit after the evaluated unit is not the identity");
    RepMorphism uc = coe_unit(coeV, x);
    RepMorphism coec =
        alg ? coe_on_map(M.flavor, M.arep, x, coeV.dims[x], coeV.fiber_maps[x],
                         vdim, vmap, c)
            : coe_on_map(M.flavor, M.crep, x, coeV.dims[x], coeV.fiber_maps[x],
                         vdim, vmap, c);
    bool t2 = true;
    for (int i = 0; i < np; i++)
      t2 = t2 && mat_is(F, mul(F, coec.components[i], uc.components[i]),
                        identity(coeV.dims[i]));
    rep.require("triangle on the right adjoint", t2,
                "image of the counit after the unit is not the identity");
  }
}

void adj_corestrict_coinduce(const InstanceDocument& d, const CliRequest& req,
                             Report& rep) {
  const std::string verb = "adjunction " + req.sub;
  const CoalgebraMorphism& f = find_in(
      d.coalgebra_morphisms, need(req.object, "--object", verb), "coalgebra morphism");
  const ComoduleRight& M =
      find_in(d.right_comodules, need(req.left, "--left", verb), "right comodule");
  const ComoduleRight& N =
      find_in(d.right_comodules, need(req.right, "--right", verb), "right comodule");
  const Field& F = f.source.field;
  bool ok = rep.require("left operand lives over the source",
                        M.coalg == f.source,
                        "expected a comodule over the source coalgebra");
  ok = rep.require("right operand lives over the target", N.coalg == f.target,
                   "expected a comodule over the target coalgebra") &&
       ok;
  if (!ok) return;
  ComoduleRight rM = corestrict(f, M);
  CoinduceResult CN = coinduce(f, N);
  int lhs = int(hom_comodules(rM, N).size());
  int rhs = int(hom_comodules(M, CN.module).size());
  rep.require("hom dimensions agree", lhs == rhs,
              std::to_string(lhs) + " != " + std::to_string(rhs));
  rep.results["hom_dim_left"] = lhs;
  rep.results["hom_dim_right"] = rhs;
  CoinduceResult CRM = coinduce(f, rM);
  Mat eta = coinduce_unit(f, M, CRM);
  Mat epsRM = coinduce_counit(f, rM, CRM);
  rep.require("triangle on the left adjoint",
              mat_is(F, mul(F, epsRM, eta), identity(M.dim)),
              "counit after corestricted unit is not the identity");
  const ComoduleRight& RN = CN.module;
  ComoduleRight rRN = corestrict(f, RN);
  CoinduceResult CRRN = coinduce(f, rRN);
  Mat etaRN = coinduce_unit(f, RN, CRRN);
  Mat epsN = coinduce_counit(f, N, CN);
  Mat Reps = coinduce_morphism(f, CRRN, CN, epsN);
  rep.require("triangle on the right adjoint",
              mat_is(F, mul(F, Reps, etaRN), identity(RN.dim)),
              "coinduced counit after the unit is not the identity");
}

void adj_cohom_corestrict(const InstanceDocument& d, const CliRequest& req,
                          Report& rep) {
  const std::string verb = "adjunction " + req.sub;
  const CoalgebraMorphism& f = find_in(
      d.coalgebra_morphisms, need(req.object, "--object", verb), "coalgebra morphism");
  const ComoduleRight& N =
      find_in(d.right_comodules, need(req.left, "--left", verb), "right comodule");
  const ComoduleRight& W =
      find_in(d.right_comodules, need(req.right, "--right", verb), "right comodule");
  const Field& F = f.source.field;
  bool ok = rep.require("left operand lives over the target",
                        N.coalg == f.target,
                        "expected a comodule over the target coalgebra");
  ok = rep.require("right operand lives over the source", W.coalg == f.source,
                   "expected a comodule over the source coalgebra") &&
       ok;
  if (!ok) return;
  CohomResult HN = cohom(f, N);
  int lhs = int(hom_comodules(HN.module, W).size());
  int rhs = int(hom_comodules(N, corestrict(f, W)).size());
  rep.require("hom dimensions agree", lhs == rhs,
              std::to_string(lhs) + " != " + std::to_string(rhs));
  rep.results["hom_dim_left"] = lhs;
  rep.results["hom_dim_right"] = rhs;
  ComoduleRight rHN = corestrict(f, HN.module);
  CohomResult H2 = cohom(f, rHN);
  Mat etaN = cohom_unit(f, N, HN);
  Mat Leta = cohom_morphism(f, HN, H2, etaN);
  Mat epsHN = cohom_counit(f, HN.module, H2);
  rep.require("triangle on the left adjoint",
              mat_is(F, mul(F, epsHN, Leta), identity(HN.module.dim)),
              "counit after the image of the unit is not the identity");
  ComoduleRight rW = corestrict(f, W);
  CohomResult HrW = cohom(f, rW);
  Mat etaRW = cohom_unit(f, rW, HrW);
  Mat epsW = cohom_counit(f, W, HrW);
  rep.require("triangle on the right adjoint",
              mat_is(F, mul(F, epsW, etaRW), identity(W.dim)),
              "counit after the corestricted unit is not the identity");
}

void adj_contraextend(const InstanceDocument& d, const CliRequest& req,
                      Report& rep) {
  const std::string verb = "adjunction " + req.sub;
  const CoalgebraMorphism& f = find_in(
      d.coalgebra_morphisms, need(req.object, "--object", verb), "coalgebra morphism");
  const Contramodule& P =
      find_in(d.contramodules, need(req.left, "--left", verb), "contramodule");
  const Contramodule& Q =
      find_in(d.contramodules, need(req.right, "--right", verb), "contramodule");
  const Field& F = f.source.field;
  bool ok = rep.require("left operand lives over the target",
                        P.coalg == f.target,
                        "expected a contramodule over the target coalgebra");
  ok = rep.require("right operand lives over the source", Q.coalg == f.source,
                   "expected a contramodule over the source coalgebra") &&
       ok;
  if (!ok) return;
  ContraextendResult EP = contraextend(f, P);
  int lhs = int(hom_contramodules(EP.module, Q).size());
  int rhs = int(hom_contramodules(P, contrarestrict(f, Q)).size());
  rep.require("hom dimensions agree", lhs == rhs,
              std::to_string(lhs) + " != " + std::to_string(rhs));
  rep.results["hom_dim_left"] = lhs;
  rep.results["hom_dim_right"] = rhs;
  Contramodule rEP = contrarestrict(f, EP.module);
  ContraextendResult E2 = contraextend(f, rEP);
  Mat etaP = contraextend_unit(f, P, EP);
  Mat Leta = contraextend_morphism(f, EP, E2, etaP);
  Mat epsEP = contraextend_counit(f, EP.module, E2);
  rep.require("triangle on the left adjoint",
              mat_is(F, mul(F, epsEP, Leta), identity(EP.module.dim)),
              "counit after the image of the unit is not the identity");
  Contramodule rQ = contrarestrict(f, Q);
  ContraextendResult ErQ = contraextend(f, rQ);
  Mat etaRQ = contraextend_unit(f, rQ, ErQ);
  Mat epsQ = contraextend_counit(f, Q, ErQ);
  rep.require("triangle on the right adjoint",
              mat_is(F, mul(F, epsQ, etaRQ), identity(Q.dim)),
              "counit after the contrarestricted unit is not the identity");
}

void adj_fg(const InstanceDocument& d, const CliRequest& req, Report& rep) {
  const std::string verb = "adjunction FG";
  const RepObject& M =
      find_in(d.objects, need(req.left, "--left", verb), "object");
  const RepObject& N =
      find_in(d.objects, need(req.object, "--object", verb), "object");
  const RepObject& P =
      find_in(d.objects, need(req.right, "--right", verb), "object");
  bool ok = rep.require("left operand is a trans-contramodule",
                        M.flavor == Flavor::trans_contramodule,
                        std::string("got flavor ") + flavor_name(M.flavor));
  ok = rep.require("tensor operand is a trans-comodule",
                   N.flavor == Flavor::trans_comodule,
                   std::string("got flavor ") + flavor_name(N.flavor)) &&
       ok;
  ok = rep.require("right operand is a trans-comodule",
                   P.flavor == Flavor::trans_comodule,
                   std::string("got flavor ") + flavor_name(P.flavor)) &&
       ok;
  if (!ok) return;
  ok = rep.require("operands share a representation",
                   same_crep(M.crep, N.crep) && same_crep(N.crep, P.crep),
                   "the three objects live over different representations");
  ok = rep.require("tensor operand is cartesian", is_cartesian(N).value,
                   "the hom transport needs a cartesian middle operand") &&
       ok;
  if (!ok) return;
  RepObject FM = trans_contratensor(M, N);
  RepObject GP = trans_hom(N, P);
  int lhs = int(hom_rep(FM, P).size());
  int rhs = int(hom_rep(M, GP).size());
  rep.require("hom dimensions agree", lhs == rhs,
              std::to_string(lhs) + " != " + std::to_string(rhs));
  rep.results["hom_dim_left"] = lhs;
  rep.results["hom_dim_right"] = rhs;
}

void run_adjunction(const InstanceDocument& d, const CliRequest& req,
                    Report& rep) {
  if (req.sub == "ex-ev")
    adj_point(d, req, rep, true);
  else if (req.sub == "ev-coe")
    adj_point(d, req, rep, false);
  else if (req.sub == "corestrict-coinduce")
    adj_corestrict_coinduce(d, req, rep);
  else if (req.sub == "cohom-corestrict")
    adj_cohom_corestrict(d, req, rep);
  else if (req.sub == "contraextend-contrarestrict")
    adj_contraextend(d, req, rep);
  else if (req.sub == "FG")
    adj_fg(d, req, rep);
  else
    throw UsageError("unknown adjunction \"" + req.sub + "\"");
}

void run_hull(const InstanceDocument& d, const CliRequest& req, Report& rep) {
  const std::string& n = need(req.object, "--object", "hull");
  const RepObject& M = find_in(d.objects, n, "object");
  int x = element_of(M.poset(), req.at, "hull");
  if (!rep.require("object " + n, check_object(M).empty(), "not a valid object"))
    return;
  if (!rep.require("cartesian " + n, is_cartesian(M).value,
                   "the hull is only defined inside a cartesian object"))
    return;
  HullResult H = cartesian_hull(M, x, identity(M.dims[x]));
  rep.add("hull object", check_object(H.object));
  rep.require("hull is cartesian", is_cartesian(H.object).value,
              "the hull fails the cartesian conditions");
  rep.results["dims"] = H.object.dims;
}

void run_rationalize(const InstanceDocument& d, const CliRequest& req,
                     Report& rep) {
  const RationalPairing& p = find_in(
      d.pairings, need(req.pairing, "--pairing", "rationalize"), "pairing");
  const std::string& mn = need(req.module, "--module", "rationalize");
  rep.add("pairing " + req.pairing, check_pairing(p));
  TorsionWitness w;
  if (d.presented_modules.count(mn)) {
    const FPAlgebraAction& D = d.presented_modules.at(mn);
    rep.add("module " + mn, check_fp_action(D));
    w = torsion_witness(p, D);
  } else if (d.left_modules.count(mn)) {
    const ModuleLeft& N = d.left_modules.at(mn);
    rep.add("module " + mn, check_module(N));
    w = torsion_witness(p, N);
  } else {
    throw UsageError("unknown module \"" + mn + "\"");
  }
  rep.add("rational part comodule", check_comodule(w.rational.comodule));
  rep.results["rational_dim"] = w.rational.basis.cols;
  rep.results["quotient_dim"] = w.quotient_dim;
  rep.results["quotient_rational_dim"] = w.quotient_rational.basis.cols;
  rep.results["vanishing"] = w.vanishing;
}

void run_generators(const InstanceDocument& d, const CliRequest& req,
                    Report& rep) {
  const std::string& n = need(req.object, "--object", "generators");
  const RepObject& M = find_in(d.objects, n, "object");
  std::vector<RepObject> fam =
      flavor_uses_algebras(M.flavor)
          ? projective_generator_family(M.flavor, M.arep)
          : projective_generator_family(M.flavor, M.crep);
  std::vector<std::string> errs;
  json dims = json::array();
  for (size_t i = 0; i < fam.size(); i++) {
    for (const std::string& e : check_object(fam[i]))
      errs.push_back("member " + std::to_string(i) + ": " + e);
    dims.push_back(fam[i].dims);
  }
  rep.add("generator family", errs);
  rep.results["count"] = int(fam.size());
  rep.results["dims"] = dims;
}

void dispatch(const InstanceDocument& d, const CliRequest& req, Report& rep) {
  if (req.verb == "validate")
    run_validate(d, rep);
  else if (req.verb == "compute")
    run_compute(d, req, rep);
  else if (req.verb == "check")
    run_check(d, req, rep);
  else if (req.verb == "adjunction")
    run_adjunction(d, req, rep);
  else if (req.verb == "hull")
    run_hull(d, req, rep);
  else if (req.verb == "rationalize")
    run_rationalize(d, req, rep);
  else if (req.verb == "generators")
    run_generators(d, req, rep);
  else
    throw UsageError("unknown command \"" + req.verb + "\"");
}

std::string command_line(const CliRequest& req) {
  std::string s = req.verb;
  if (!req.sub.empty()) s += " " + req.sub;
  if (!req.at.empty()) s += " --at " + req.at;
  if (!req.object.empty()) s += " --object " + req.object;
  if (!req.pairing.empty()) s += " --pairing " + req.pairing;
  if (!req.module.empty()) s += " --module " + req.module;
  if (!req.left.empty()) s += " --left " + req.left;
  if (!req.right.empty()) s += " --right " + req.right;
  return s;
}

}  // namespace

CliResult run_request(const InstanceDocument& doc, const CliRequest& req) {
  Report rep;
  rep.command = command_line(req);
  try {
    dispatch(doc, req, rep);
  } catch (const UnsupportedInput& e) {
    rep.checks.push_back({"computation", "unsupported", {e.what()}});
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    rep.checks.push_back({"computation", "fail", {e.what()}});
  }
  CliResult out;
  for (const Check& c : rep.checks)
    if (c.status == "fail") out.code = 1;
  out.text = req.output == "json" ? render_json(rep) : render_text(rep);
  return out;
}

CliResult run_request(const CliRequest& req) {
  try {
    if (req.input.empty()) throw UsageError("--input FILE is required");
    if (req.output != "text" && req.output != "json")
      throw UsageError("--output must be \"text\" or \"json\"");
    InstanceDocument doc = parse_instance_file(req.input);
    return run_request(doc, req);
  } catch (const ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace comod
