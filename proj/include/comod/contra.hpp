#pragma once

#include <comod/coalg.hpp>

namespace comod {

// Contramodule over a finite-dimensional coalgebra, presented through the
// identification Hom(C, M) = M (x) C^* (M-major). pi is the contraaction
// Hom(C, M) -> M, a dim x (dim * coalg.dim) matrix; the axioms make M a
// right module over the dual algebra with this very matrix as the action.
struct Contramodule {
  Coalgebra coalg;
  int dim = 0;
  Mat pi;
};

std::vector<std::string> check_contramodule(const Contramodule& P);
std::vector<std::string> check_contramodule_morphism(const Contramodule& P,
                                                     const Contramodule& Q,
                                                     const Mat& f);

ModuleRight contramodule_to_module(const Contramodule& P);
Contramodule module_to_contramodule(const ModuleRight& M, const Coalgebra& C);

// T_C(V) = V (x) C^* with pi = id (x) mult.
Contramodule free_contramodule(const Coalgebra& C, int v);
Contramodule direct_sum_contramodule(const Contramodule& P,
                                     const Contramodule& Q);

std::vector<Mat> hom_contramodules(const Contramodule& P,
                                   const Contramodule& Q);

// Push a contramodule over f.source forward to one over f.target by
// precomposing functionals with f.
Contramodule contrarestrict(const CoalgebraMorphism& f, const Contramodule& P);

// Left adjoint of contrarestriction: extension of scalars along the dual
// algebra map. proj/sect realize the carrier as a quotient of P (x) C^*
// (source side), P-major.
struct ContraextendResult {
  Contramodule module;
  Mat proj;
  Mat sect;
};
ContraextendResult contraextend(const CoalgebraMorphism& f,
                                const Contramodule& P);
Mat contraextend_morphism(const CoalgebraMorphism& f,
                          const ContraextendResult& EP,
                          const ContraextendResult& EQ, const Mat& g);
Mat contraextend_unit(const CoalgebraMorphism& f, const Contramodule& P,
                      const ContraextendResult& EP);
Mat contraextend_counit(const CoalgebraMorphism& f, const Contramodule& Q,
                        const ContraextendResult& ERQ);

// Contratensor P (.) N of a contramodule with a left comodule: the quotient
// of P (x) N by the contraaction/coaction exchange relations.
struct ContratensorResult {
  int dim = 0;
  Mat proj;
  Mat sect;
};
ContratensorResult contratensor(const Contramodule& P, const ComoduleLeft& N);

// Contratensor against a right comodule, read as a left comodule through the
// flip; the result inherits a right coaction from N whenever the flip is
// compatible with the relations (always for cocommutative coalgebras).
// Throws if no coaction descends.
ComoduleRight contratensor_comodule(const Contramodule& P,
                                    const ComoduleRight& N,
                                    ContratensorResult* out = nullptr);

// Hom^C(N, P) of right comodules as a contramodule: functionals act by
// precomposition with the coaction slices. Throws if a slice fails to be
// colinear (it always is over a cocommutative coalgebra).
Contramodule hom_comodule_contra(const ComoduleRight& N,
                                 const ComoduleRight& P,
                                 std::vector<Mat>* basis_out = nullptr);

// Cohom from a left comodule to a contramodule: the quotient of
// Hom(P, M) = M (x) P^* (M-major) by the two evaluation routes through C.
struct CohomContraResult {
  int dim = 0;
  Mat proj;
  Mat sect;
};
CohomContraResult cohom_contra(const ComoduleLeft& P, const Contramodule& M);

}  // namespace comod
