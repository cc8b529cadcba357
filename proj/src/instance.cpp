#include <comod/instance.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace comod {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ParseError(path, reason);
}

const json& member(const std::string& path, const json& j,
                   const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

void reject_unknown_keys(const std::string& path, const json& j,
                         std::initializer_list<const char*> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) fail(path + "." + it.key(), "unknown key");
  }
}

long long get_int(const std::string& path, const json& j) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

std::string get_string(const std::string& path, const json& j) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Scalar parse_scalar(const std::string& path, const Field& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (F.is_gf()) fail(path, "GF(p) entries must be integers");
  if (!j.is_string()) fail(path, "expected an integer or a \"num/den\" string");
  auto v = F.parse(j.get<std::string>());
  if (!v) fail(path, "not a rational literal: \"" + j.get<std::string>() + "\"");
  return *v;
}

Mat parse_matrix(const std::string& path, const Field& F, const json& j) {
  if (!j.is_array()) fail(path, "expected a matrix (array of rows)");
  int rows = int(j.size());
  if (rows == 0) return Mat(0, 0);
  if (!j[0].is_array()) fail(path + "[0]", "expected a row (array)");
  int cols = int(j[0].size());
  Mat A(rows, cols);
  for (int i = 0; i < rows; i++) {
    const json& row = j[i];
    std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(rp, "expected a row (array)");
    if (int(row.size()) != cols) fail(rp, "rows have unequal lengths");
    for (int k = 0; k < cols; k++)
      A.at(i, k) = parse_scalar(rp + "[" + std::to_string(k) + "]", F, row[k]);
  }
  return A;
}

// Empty matrices serialize as [] and lose their shape; restore it from the
// expected one as long as both are genuinely empty.
Mat fit_shape(const std::string& path, const Mat& A, int rows, int cols) {
  if (A.rows == rows && A.cols == cols) return A;
  if (A.rows * A.cols == 0 && rows * cols == 0 && A.rows <= rows &&
      A.cols <= cols)
    return Mat(rows, cols);
  fail(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                 " matrix, got " + std::to_string(A.rows) + "x" +
                 std::to_string(A.cols));
}

Field parse_field(const json& j) {
  if (!j.is_object()) fail("field", "expected an object");
  std::string kind = get_string("field.kind", member("field", j, "kind"));
  if (kind == "q") {
    reject_unknown_keys("field", j, {"kind"});
    return Field::rationals();
  }
  if (kind == "gf") {
    reject_unknown_keys("field", j, {"kind", "p"});
    long long p = get_int("field.p", member("field", j, "p"));
    if (p < 2) fail("field.p", "p must be a prime >= 2");
    for (long long d = 2; d * d <= p; d++)
      if (p % d == 0) fail("field.p", std::to_string(p) + " is not prime");
    return Field::gf(long(p));
  }
  fail("field.kind", "unknown field kind \"" + kind + "\"");
}

// Entity names are object keys and also appear inside covering-pair keys,
// which are comma-separated; commas are therefore reserved.
void check_name(const std::string& path, const std::string& name) {
  if (name.empty()) fail(path, "names must be nonempty");
  if (name.find(',') != std::string::npos)
    fail(path, "names must not contain a comma");
}

template <typename T, typename Fn>
void parse_section(const json& doc, const std::string& section,
                   std::map<std::string, T>& out, Fn parse_one) {
  auto it = doc.find(section);
  if (it == doc.end()) return;
  if (!it->is_object()) fail(section, "expected an object of named entries");
  for (auto e = it->begin(); e != it->end(); ++e) {
    check_name(section + "." + e.key(), e.key());
    out.emplace(e.key(), parse_one(section + "." + e.key(), e.value()));
  }
}

Coalgebra parse_coalgebra(const std::string& path, const Field& F,
                          const json& j) {
  reject_unknown_keys(path, j, {"dim", "delta", "eps"});
  int d = int(get_int(path + ".dim", member(path, j, "dim")));
  if (d < 0) fail(path + ".dim", "dimension must be >= 0");
  Coalgebra C{F, d, Mat(), Mat()};
  C.delta = fit_shape(path + ".delta",
                      parse_matrix(path + ".delta", F, member(path, j, "delta")),
                      d * d, d);
  C.eps = fit_shape(path + ".eps",
                    parse_matrix(path + ".eps", F, member(path, j, "eps")), 1, d);
  return C;
}

Algebra parse_algebra(const std::string& path, const Field& F, const json& j) {
  reject_unknown_keys(path, j, {"dim", "mult", "unit"});
  int d = int(get_int(path + ".dim", member(path, j, "dim")));
  if (d < 0) fail(path + ".dim", "dimension must be >= 0");
  Algebra A{F, d, Mat(), Mat()};
  A.mult = fit_shape(path + ".mult",
                     parse_matrix(path + ".mult", F, member(path, j, "mult")), d,
                     d * d);
  A.unit = fit_shape(path + ".unit",
                     parse_matrix(path + ".unit", F, member(path, j, "unit")), d,
                     1);
  return A;
}

FinitePoset parse_poset(const std::string& path, const json& j) {
  reject_unknown_keys(path, j, {"elements", "leq"});
  const json& el = member(path, j, "elements");
  if (!el.is_array() || el.empty())
    fail(path + ".elements", "expected a nonempty array of names");
  FinitePoset P;
  std::set<std::string> seen;
  for (size_t i = 0; i < el.size(); i++) {
    std::string ep = path + ".elements[" + std::to_string(i) + "]";
    std::string name = get_string(ep, el[i]);
    check_name(ep, name);
    if (!seen.insert(name).second) fail(ep, "duplicate element \"" + name + "\"");
    P.elements.push_back(name);
  }
  int n = P.size();
  const json& lq = member(path, j, "leq");
  if (!lq.is_array() || int(lq.size()) != n)
    fail(path + ".leq", "expected " + std::to_string(n) + " rows");
  for (int x = 0; x < n; x++) {
    std::string rp = path + ".leq[" + std::to_string(x) + "]";
    if (!lq[x].is_array() || int(lq[x].size()) != n)
      fail(rp, "expected " + std::to_string(n) + " entries");
    std::vector<int> row;
    for (int y = 0; y < n; y++) {
      long long v = get_int(rp + "[" + std::to_string(y) + "]", lq[x][y]);
      if (v != 0 && v != 1)
        fail(rp + "[" + std::to_string(y) + "]", "leq entries must be 0 or 1");
      row.push_back(int(v));
    }
    P.leq.push_back(row);
  }
  return P;
}

int element_index(const std::string& path, const FinitePoset& P,
                  const std::string& name) {
  for (int i = 0; i < P.size(); i++)
    if (P.elements[i] == name) return i;
  fail(path, "unknown poset element \"" + name + "\"");
}

// Keys of arrow/structure tables are "u,v" pairs of element names covering
// each other in the poset; every covering pair must appear exactly once.
std::map<std::pair<int, int>, Mat> parse_pair_table(
    const std::string& path, const Field& F, const FinitePoset& P,
    const json& j) {
  if (!j.is_object()) fail(path, "expected an object keyed by \"u,v\" pairs");
  std::map<std::pair<int, int>, Mat> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string kp = path + "." + it.key();
    auto comma = it.key().find(',');
    if (comma == std::string::npos) fail(kp, "keys must be \"u,v\" pairs");
    int u = element_index(kp, P, it.key().substr(0, comma));
    int v = element_index(kp, P, it.key().substr(comma + 1));
    out.emplace(std::make_pair(u, v), parse_matrix(kp, F, it.value()));
  }
  auto covers = covering_pairs(P);
  if (out.size() != covers.size() ||
      !std::all_of(covers.begin(), covers.end(),
                   [&](const std::pair<int, int>& c) { return out.count(c); }))
    fail(path, "expected one entry per covering pair of the poset");
  return out;
}

std::string pair_key(const FinitePoset& P, const std::pair<int, int>& c) {
  return P.elements[c.first] + "," + P.elements[c.second];
}

std::vector<FPRelation> parse_relations(const std::string& path, const Field& F,
                                        const json& j) {
  if (!j.is_array()) fail(path, "expected an array of relations");
  std::vector<FPRelation> rels;
  for (size_t r = 0; r < j.size(); r++) {
    std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(rp, "expected an array of terms");
    FPRelation rel;
    for (size_t t = 0; t < j[r].size(); t++) {
      std::string tp = rp + "[" + std::to_string(t) + "]";
      const json& term = j[r][t];
      if (!term.is_object()) fail(tp, "expected a {coeff, word} term");
      reject_unknown_keys(tp, term, {"coeff", "word"});
      FPRelationTerm ft;
      ft.coeff = parse_scalar(tp + ".coeff", F, member(tp, term, "coeff"));
      const json& w = member(tp, term, "word");
      if (!w.is_array()) fail(tp + ".word", "expected an array of indices");
      for (size_t k = 0; k < w.size(); k++)
        ft.word.push_back(
            int(get_int(tp + ".word[" + std::to_string(k) + "]", w[k])));
      rel.push_back(ft);
    }
    rels.push_back(rel);
  }
  return rels;
}

json emit_relations(const Field& F, const std::vector<FPRelation>& rels) {
  json out = json::array();
  for (const FPRelation& rel : rels) {
    json jr = json::array();
    for (const FPRelationTerm& t : rel)
      jr.push_back(json{{"coeff", emit_scalar(F, t.coeff)}, {"word", t.word}});
    out.push_back(jr);
  }
  return out;
}

}  // namespace

InstanceDocument parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail("$", e.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  reject_unknown_keys(
      "$", doc,
      {"field", "coalgebras", "algebras", "morphisms", "posets",
       "representations", "objects", "comodules", "contramodules", "modules",
       "pairings"});

  InstanceDocument d;
  d.field = parse_field(member("$", doc, "field"));
  const Field& F = d.field;

  parse_section(doc, "coalgebras", d.coalgebras,
                [&](const std::string& p, const json& j) {
                  return parse_coalgebra(p, F, j);
                });
  parse_section(doc, "algebras", d.algebras,
                [&](const std::string& p, const json& j) {
                  return parse_algebra(p, F, j);
                });
  parse_section(doc, "posets", d.posets,
                [&](const std::string& p, const json& j) {
                  return parse_poset(p, j);
                });

  if (doc.contains("morphisms")) {
    const json& sec = doc["morphisms"];
    if (!sec.is_object()) fail("morphisms", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "morphisms." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      reject_unknown_keys(path, j, {"kind", "source", "target", "matrix"});
      std::string kind = get_string(path + ".kind", member(path, j, "kind"));
      std::string src = get_string(path + ".source", member(path, j, "source"));
      std::string tgt = get_string(path + ".target", member(path, j, "target"));
      Mat m = parse_matrix(path + ".matrix", F, member(path, j, "matrix"));
      if (kind == "coalgebra") {
        if (!d.coalgebras.count(src))
          fail(path + ".source", "unknown coalgebra \"" + src + "\"");
        if (!d.coalgebras.count(tgt))
          fail(path + ".target", "unknown coalgebra \"" + tgt + "\"");
        const Coalgebra& S = d.coalgebras.at(src);
        const Coalgebra& T = d.coalgebras.at(tgt);
        d.coalgebra_morphisms.emplace(
            it.key(), CoalgebraMorphism{
                          S, T, fit_shape(path + ".matrix", m, T.dim, S.dim)});
      } else if (kind == "algebra") {
        if (!d.algebras.count(src))
          fail(path + ".source", "unknown algebra \"" + src + "\"");
        if (!d.algebras.count(tgt))
          fail(path + ".target", "unknown algebra \"" + tgt + "\"");
        const Algebra& S = d.algebras.at(src);
        const Algebra& T = d.algebras.at(tgt);
        d.algebra_morphisms.emplace(
            it.key(),
            AlgebraMorphism{S, T, fit_shape(path + ".matrix", m, T.dim, S.dim)});
      } else {
        fail(path + ".kind", "unknown morphism kind \"" + kind + "\"");
      }
      d.refs[path] = {src, tgt};
    }
  }

  if (doc.contains("representations")) {
    const json& sec = doc["representations"];
    if (!sec.is_object()) fail("representations", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "representations." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      reject_unknown_keys(path, j, {"kind", "poset", "fibers", "arrows"});
      std::string kind = get_string(path + ".kind", member(path, j, "kind"));
      std::string pn = get_string(path + ".poset", member(path, j, "poset"));
      if (!d.posets.count(pn))
        fail(path + ".poset", "unknown poset \"" + pn + "\"");
      const FinitePoset& P = d.posets.at(pn);
      const json& fib = member(path, j, "fibers");
      if (!fib.is_array() || int(fib.size()) != P.size())
        fail(path + ".fibers",
             "expected " + std::to_string(P.size()) + " fiber names");
      std::vector<std::string> names{pn};
      auto arrows = parse_pair_table(path + ".arrows", F, P,
                                     member(path, j, "arrows"));
      if (kind == "coalgebra") {
        CoalgebraRep R;
        R.poset = P;
        for (size_t i = 0; i < fib.size(); i++) {
          std::string fp = path + ".fibers[" + std::to_string(i) + "]";
          std::string fn = get_string(fp, fib[i]);
          if (!d.coalgebras.count(fn))
            fail(fp, "unknown coalgebra \"" + fn + "\"");
          R.fibers.push_back(d.coalgebras.at(fn));
          names.push_back(fn);
        }
        for (auto& [c, m] : arrows)
          R.arrows[c] = fit_shape(path + ".arrows." + pair_key(P, c), m,
                                  R.fibers[c.second].dim, R.fibers[c.first].dim);
        d.coalgebra_reps.emplace(it.key(), R);
      } else if (kind == "algebra") {
        AlgebraRep R;
        R.poset = P;
        for (size_t i = 0; i < fib.size(); i++) {
          std::string fp = path + ".fibers[" + std::to_string(i) + "]";
          std::string fn = get_string(fp, fib[i]);
          if (!d.algebras.count(fn)) fail(fp, "unknown algebra \"" + fn + "\"");
          R.fibers.push_back(d.algebras.at(fn));
          names.push_back(fn);
        }
        for (auto& [c, m] : arrows)
          R.arrows[c] = fit_shape(path + ".arrows." + pair_key(P, c), m,
                                  R.fibers[c.second].dim, R.fibers[c.first].dim);
        d.algebra_reps.emplace(it.key(), R);
      } else {
        fail(path + ".kind", "unknown representation kind \"" + kind + "\"");
      }
      d.refs[path] = names;
    }
  }

  if (doc.contains("objects")) {
    const json& sec = doc["objects"];
    if (!sec.is_object()) fail("objects", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "objects." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      reject_unknown_keys(path, j, {"flavor", "rep", "fibers", "structure"});
      std::string fs = get_string(path + ".flavor", member(path, j, "flavor"));
      RepObject M;
      bool found = false;
      for (Flavor f :
           {Flavor::cis_comodule, Flavor::trans_comodule,
            Flavor::trans_contramodule, Flavor::cis_module,
            Flavor::trans_module})
        if (fs == flavor_name(f)) {
          M.flavor = f;
          found = true;
        }
      if (!found) fail(path + ".flavor", "unknown flavor \"" + fs + "\"");
      std::string rn = get_string(path + ".rep", member(path, j, "rep"));
      int cdim = 0;  // coalgebra/algebra dimension per element
      if (flavor_uses_algebras(M.flavor)) {
        if (!d.algebra_reps.count(rn))
          fail(path + ".rep",
               "flavor \"" + fs + "\" needs an algebra representation; \"" +
                   rn + "\" is not one");
        M.arep = d.algebra_reps.at(rn);
      } else {
        if (!d.coalgebra_reps.count(rn))
          fail(path + ".rep",
               "flavor \"" + fs + "\" needs a coalgebra representation; \"" +
                   rn + "\" is not one");
        M.crep = d.coalgebra_reps.at(rn);
      }
      const FinitePoset& P = M.poset();
      const json& fib = member(path, j, "fibers");
      if (!fib.is_object()) fail(path + ".fibers", "expected an object");
      for (int x = 0; x < P.size(); x++) {
        std::string fp = path + ".fibers." + P.elements[x];
        if (!fib.contains(P.elements[x]))
          fail(path + ".fibers", "missing fiber \"" + P.elements[x] + "\"");
        Mat m = parse_matrix(fp, F, fib[P.elements[x]]);
        cdim = flavor_uses_algebras(M.flavor) ? M.arep.fibers[x].dim
                                              : M.crep.fibers[x].dim;
        int dim;
        if (M.flavor == Flavor::cis_comodule ||
            M.flavor == Flavor::trans_comodule) {
          dim = m.cols;  // coaction is (dim * c) x dim
          m = fit_shape(fp, m, dim * cdim, dim);
        } else {
          dim = m.rows;  // action is dim x (dim * c)
          m = fit_shape(fp, m, dim, dim * cdim);
        }
        M.dims.push_back(dim);
        M.fiber_maps.push_back(m);
      }
      for (auto f = fib.begin(); f != fib.end(); ++f)
        element_index(path + ".fibers." + f.key(), P, f.key());
      auto table =
          parse_pair_table(path + ".structure", F, P, member(path, j, "structure"));
      for (auto& [c, m] : table) {
        int r = flavor_ascending(M.flavor) ? M.dims[c.second] : M.dims[c.first];
        int cc = flavor_ascending(M.flavor) ? M.dims[c.first] : M.dims[c.second];
        M.structure[c] =
            fit_shape(path + ".structure." + pair_key(P, c), m, r, cc);
      }
      d.objects.emplace(it.key(), M);
      d.refs[path] = {rn};
    }
  }

  if (doc.contains("comodules")) {
    const json& sec = doc["comodules"];
    if (!sec.is_object()) fail("comodules", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "comodules." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      reject_unknown_keys(path, j, {"side", "coalgebra", "rho"});
      std::string side = get_string(path + ".side", member(path, j, "side"));
      std::string cn =
          get_string(path + ".coalgebra", member(path, j, "coalgebra"));
      if (!d.coalgebras.count(cn))
        fail(path + ".coalgebra", "unknown coalgebra \"" + cn + "\"");
      const Coalgebra& C = d.coalgebras.at(cn);
      Mat rho = parse_matrix(path + ".rho", F, member(path, j, "rho"));
      int dim = rho.cols;
      rho = fit_shape(path + ".rho", rho, dim * C.dim, dim);
      if (side == "right")
        d.right_comodules.emplace(it.key(), ComoduleRight{C, dim, rho});
      else if (side == "left")
        d.left_comodules.emplace(it.key(), ComoduleLeft{C, dim, rho});
      else
        fail(path + ".side", "side must be \"right\" or \"left\"");
      d.refs[path] = {cn};
    }
  }

  if (doc.contains("contramodules")) {
    const json& sec = doc["contramodules"];
    if (!sec.is_object()) fail("contramodules", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "contramodules." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      reject_unknown_keys(path, j, {"coalgebra", "pi"});
      std::string cn =
          get_string(path + ".coalgebra", member(path, j, "coalgebra"));
      if (!d.coalgebras.count(cn))
        fail(path + ".coalgebra", "unknown coalgebra \"" + cn + "\"");
      const Coalgebra& C = d.coalgebras.at(cn);
      Mat pi = parse_matrix(path + ".pi", F, member(path, j, "pi"));
      int dim = pi.rows;
      pi = fit_shape(path + ".pi", pi, dim, dim * C.dim);
      d.contramodules.emplace(it.key(), Contramodule{C, dim, pi});
      d.refs[path] = {cn};
    }
  }

  if (doc.contains("modules")) {
    const json& sec = doc["modules"];
    if (!sec.is_object()) fail("modules", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "modules." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      std::string kind = get_string(path + ".kind", member(path, j, "kind"));
      if (kind == "left") {
        reject_unknown_keys(path, j, {"kind", "algebra", "action"});
        std::string an =
            get_string(path + ".algebra", member(path, j, "algebra"));
        if (!d.algebras.count(an))
          fail(path + ".algebra", "unknown algebra \"" + an + "\"");
        const Algebra& A = d.algebras.at(an);
        Mat act = parse_matrix(path + ".action", F, member(path, j, "action"));
        int dim = act.rows;
        act = fit_shape(path + ".action", act, dim, A.dim * dim);
        d.left_modules.emplace(it.key(), ModuleLeft{A, dim, act});
        d.refs[path] = {an};
      } else if (kind == "presented") {
        reject_unknown_keys(path, j,
                            {"kind", "generators", "dim", "mats", "relations"});
        FPAlgebraAction D;
        D.field = F;
        D.gen_count =
            int(get_int(path + ".generators", member(path, j, "generators")));
        D.module_dim = int(get_int(path + ".dim", member(path, j, "dim")));
        if (D.gen_count < 0) fail(path + ".generators", "must be >= 0");
        if (D.module_dim < 0) fail(path + ".dim", "must be >= 0");
        const json& mats = member(path, j, "mats");
        if (!mats.is_array() || int(mats.size()) != D.gen_count)
          fail(path + ".mats",
               "expected " + std::to_string(D.gen_count) + " matrices");
        for (size_t g = 0; g < mats.size(); g++) {
          std::string mp = path + ".mats[" + std::to_string(g) + "]";
          D.gen_mats.push_back(fit_shape(mp, parse_matrix(mp, F, mats[g]),
                                         D.module_dim, D.module_dim));
        }
        D.relations =
            parse_relations(path + ".relations", F, member(path, j, "relations"));
        for (size_t r = 0; r < D.relations.size(); r++)
          for (const FPRelationTerm& t : D.relations[r])
            for (int g : t.word)
              if (g < 0 || g >= D.gen_count)
                fail(path + ".relations[" + std::to_string(r) + "]",
                     "relation uses an unknown generator");
        d.presented_modules.emplace(it.key(), D);
        d.refs[path] = {};
      } else {
        fail(path + ".kind", "unknown module kind \"" + kind + "\"");
      }
    }
  }

  if (doc.contains("pairings")) {
    const json& sec = doc["pairings"];
    if (!sec.is_object()) fail("pairings", "expected an object");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      std::string path = "pairings." + it.key();
      check_name(path, it.key());
      const json& j = it.value();
      std::string kind = get_string(path + ".kind", member(path, j, "kind"));
      std::string cn =
          get_string(path + ".coalgebra", member(path, j, "coalgebra"));
      if (!d.coalgebras.count(cn))
        fail(path + ".coalgebra", "unknown coalgebra \"" + cn + "\"");
      const Coalgebra& C = d.coalgebras.at(cn);
      if (kind == "evaluation") {
        reject_unknown_keys(path, j, {"kind", "coalgebra"});
        d.pairings.emplace(it.key(), evaluation_pairing(C));
        d.refs[path] = {cn};
      } else if (kind == "full") {
        reject_unknown_keys(path, j, {"kind", "coalgebra", "algebra", "phi"});
        std::string an =
            get_string(path + ".algebra", member(path, j, "algebra"));
        if (!d.algebras.count(an))
          fail(path + ".algebra", "unknown algebra \"" + an + "\"");
        const Algebra& A = d.algebras.at(an);
        Mat phi = fit_shape(path + ".phi",
                            parse_matrix(path + ".phi", F, member(path, j, "phi")),
                            1, C.dim * A.dim);
        d.pairings.emplace(it.key(), full_pairing(C, A, phi));
        d.refs[path] = {cn, an};
      } else if (kind == "presented") {
        reject_unknown_keys(path, j,
                            {"kind", "coalgebra", "generators", "relations",
                             "words"});
        int gens =
            int(get_int(path + ".generators", member(path, j, "generators")));
        if (gens < 0) fail(path + ".generators", "must be >= 0");
        auto rels = parse_relations(path + ".relations",
                                    F, member(path, j, "relations"));
        const json& words = member(path, j, "words");
        if (!words.is_array())
          fail(path + ".words", "expected an array of {word, row} entries");
        std::vector<std::pair<std::vector<int>, Mat>> pw;
        for (size_t w = 0; w < words.size(); w++) {
          std::string wp = path + ".words[" + std::to_string(w) + "]";
          if (!words[w].is_object()) fail(wp, "expected a {word, row} entry");
          reject_unknown_keys(wp, words[w], {"word", "row"});
          const json& wj = member(wp, words[w], "word");
          if (!wj.is_array()) fail(wp + ".word", "expected an array of indices");
          std::vector<int> word;
          for (size_t k = 0; k < wj.size(); k++)
            word.push_back(
                int(get_int(wp + ".word[" + std::to_string(k) + "]", wj[k])));
          Mat row = fit_shape(wp + ".row",
                              parse_matrix(wp + ".row", F,
                                           member(wp, words[w], "row")),
                              1, C.dim);
          pw.emplace_back(word, row);
        }
        d.pairings.emplace(it.key(), presented_pairing(C, gens, rels, pw));
        d.refs[path] = {cn};
      } else {
        fail(path + ".kind", "unknown pairing kind \"" + kind + "\"");
      }
    }
  }

  return d;
}

InstanceDocument parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string instance_to_text(const InstanceDocument& d) {
  const Field& F = d.field;
  json doc;
  if (F.is_gf())
    doc["field"] = {{"kind", "gf"}, {"p", F.p.convert_to<long long>()}};
  else
    doc["field"] = {{"kind", "q"}};

  auto ref = [&](const std::string& key, size_t i) -> const std::string& {
    return d.refs.at(key)[i];
  };

  if (!d.coalgebras.empty()) {
    json sec;
    for (auto& [n, C] : d.coalgebras)
      sec[n] = {{"dim", C.dim},
                {"delta", emit_matrix(F, C.delta)},
                {"eps", emit_matrix(F, C.eps)}};
    doc["coalgebras"] = sec;
  }
  if (!d.algebras.empty()) {
    json sec;
    for (auto& [n, A] : d.algebras)
      sec[n] = {{"dim", A.dim},
                {"mult", emit_matrix(F, A.mult)},
                {"unit", emit_matrix(F, A.unit)}};
    doc["algebras"] = sec;
  }
  if (!d.coalgebra_morphisms.empty() || !d.algebra_morphisms.empty()) {
    json sec;
    for (auto& [n, f] : d.coalgebra_morphisms)
      sec[n] = {{"kind", "coalgebra"},
                {"source", ref("morphisms." + n, 0)},
                {"target", ref("morphisms." + n, 1)},
                {"matrix", emit_matrix(F, f.map)}};
    for (auto& [n, f] : d.algebra_morphisms)
      sec[n] = {{"kind", "algebra"},
                {"source", ref("morphisms." + n, 0)},
                {"target", ref("morphisms." + n, 1)},
                {"matrix", emit_matrix(F, f.map)}};
    doc["morphisms"] = sec;
  }
  if (!d.posets.empty()) {
    json sec;
    for (auto& [n, P] : d.posets) sec[n] = {{"elements", P.elements},
                                            {"leq", P.leq}};
    doc["posets"] = sec;
  }
  auto emit_rep = [&](json& sec, const std::string& n, const FinitePoset& P,
                      const std::map<std::pair<int, int>, Mat>& arrows,
                      const char* kind) {
    const auto& names = d.refs.at("representations." + n);
    json arr;
    for (auto& [c, m] : arrows) arr[pair_key(P, c)] = emit_matrix(F, m);
    if (arrows.empty()) arr = json::object();
    sec[n] = {{"kind", kind},
              {"poset", names[0]},
              {"fibers",
               std::vector<std::string>(names.begin() + 1, names.end())},
              {"arrows", arr}};
  };
  if (!d.coalgebra_reps.empty() || !d.algebra_reps.empty()) {
    json sec;
    for (auto& [n, R] : d.coalgebra_reps)
      emit_rep(sec, n, R.poset, R.arrows, "coalgebra");
    for (auto& [n, R] : d.algebra_reps)
      emit_rep(sec, n, R.poset, R.arrows, "algebra");
    doc["representations"] = sec;
  }
  if (!d.objects.empty()) {
    json sec;
    for (auto& [n, M] : d.objects) {
      const FinitePoset& P = M.poset();
      json fib = json::object();
      for (int x = 0; x < P.size(); x++)
        fib[P.elements[x]] = emit_matrix(F, M.fiber_maps[x]);
      json st = json::object();
      for (auto& [c, m] : M.structure) st[pair_key(P, c)] = emit_matrix(F, m);
      sec[n] = {{"flavor", flavor_name(M.flavor)},
                {"rep", ref("objects." + n, 0)},
                {"fibers", fib},
                {"structure", st}};
    }
    doc["objects"] = sec;
  }
  if (!d.right_comodules.empty() || !d.left_comodules.empty()) {
    json sec;
    for (auto& [n, M] : d.right_comodules)
      sec[n] = {{"side", "right"},
                {"coalgebra", ref("comodules." + n, 0)},
                {"rho", emit_matrix(F, M.rho)}};
    for (auto& [n, M] : d.left_comodules)
      sec[n] = {{"side", "left"},
                {"coalgebra", ref("comodules." + n, 0)},
                {"rho", emit_matrix(F, M.rho)}};
    doc["comodules"] = sec;
  }
  if (!d.contramodules.empty()) {
    json sec;
    for (auto& [n, Pc] : d.contramodules)
      sec[n] = {{"coalgebra", ref("contramodules." + n, 0)},
                {"pi", emit_matrix(F, Pc.pi)}};
    doc["contramodules"] = sec;
  }
  if (!d.left_modules.empty() || !d.presented_modules.empty()) {
    json sec;
    for (auto& [n, M] : d.left_modules)
      sec[n] = {{"kind", "left"},
                {"algebra", ref("modules." + n, 0)},
                {"action", emit_matrix(F, M.action)}};
    for (auto& [n, D] : d.presented_modules) {
      json mats = json::array();
      for (const Mat& m : D.gen_mats) mats.push_back(emit_matrix(F, m));
      sec[n] = {{"kind", "presented"},
                {"generators", D.gen_count},
                {"dim", D.module_dim},
                {"mats", mats},
                {"relations", emit_relations(F, D.relations)}};
    }
    doc["modules"] = sec;
  }
  if (!d.pairings.empty()) {
    json sec;
    for (auto& [n, p] : d.pairings) {
      if (p.presented) {
        json words = json::array();
        for (auto& [w, row] : p.phi_words)
          words.push_back(json{{"word", w}, {"row", emit_matrix(F, row)}});
        sec[n] = {{"kind", "presented"},
                  {"coalgebra", ref("pairings." + n, 0)},
                  {"generators", p.gen_count},
                  {"relations", emit_relations(F, p.relations)},
                  {"words", words}};
      } else if (d.refs.at("pairings." + n).size() > 1) {
        sec[n] = {{"kind", "full"},
                  {"coalgebra", ref("pairings." + n, 0)},
                  {"algebra", ref("pairings." + n, 1)},
                  {"phi", emit_matrix(F, p.phi)}};
      } else {
        sec[n] = {{"kind", "evaluation"},
                  {"coalgebra", ref("pairings." + n, 0)}};
      }
    }
    doc["pairings"] = sec;
  }
  return doc.dump(2) + "\n";
}

}  // namespace comod
