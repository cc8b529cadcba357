#pragma once

#include <comod/algmod.hpp>
#include <comod/mat.hpp>

namespace comod {

// Finite-dimensional coalgebra. delta is dim^2 x dim (i-major on C (x) C),
// eps is 1 x dim.
struct Coalgebra {
  Field field;
  int dim = 0;
  Mat delta;
  Mat eps;

  bool operator==(const Coalgebra&) const = default;
};

// map is target.dim x source.dim.
struct CoalgebraMorphism {
  Coalgebra source, target;
  Mat map;
};

// Right comodule: rho is (dim * coalg.dim) x dim.
struct ComoduleRight {
  Coalgebra coalg;
  int dim = 0;
  Mat rho;
};

// Left comodule: rho is (coalg.dim * dim) x dim.
struct ComoduleLeft {
  Coalgebra coalg;
  int dim = 0;
  Mat rho;
};

std::vector<std::string> check_coalgebra(const Coalgebra& C);
std::vector<std::string> check_coalgebra_morphism(const CoalgebraMorphism& f);
std::vector<std::string> check_comodule(const ComoduleRight& M);
std::vector<std::string> check_comodule(const ComoduleLeft& M);
std::vector<std::string> check_comodule_morphism(const ComoduleRight& M,
                                                 const ComoduleRight& N,
                                                 const Mat& f);

bool cocommutative(const Coalgebra& C);
Coalgebra base_field_coalgebra(const Field& F);

// Convolution algebra C^*: mult = dual of delta, unit = dual of eps.
Algebra dual_algebra(const Coalgebra& C);
// Dual coalgebra of a finite-dimensional algebra: delta = dual of mult.
Coalgebra dual_coalgebra(const Algebra& A);
// Dual of a coalgebra morphism C -> D as an algebra morphism D^* -> C^*.
AlgebraMorphism dual_morphism(const CoalgebraMorphism& f);

// Finite-dimensional comodule/module bridges over the dual algebra.
ModuleLeft comodule_to_module(const ComoduleRight& M);
ComoduleRight module_to_comodule(const ModuleLeft& N, const Coalgebra& C);
ModuleRight left_comodule_to_right_module(const ComoduleLeft& M);
ComoduleLeft right_module_to_left_comodule(const ModuleRight& N,
                                           const Coalgebra& C);

ComoduleRight regular_comodule_right(const Coalgebra& C);
ComoduleLeft regular_comodule_left(const Coalgebra& C);
ComoduleRight direct_sum_comodule(const ComoduleRight& M,
                                  const ComoduleRight& N);

// Equalizer subspace of M (x) N on which the two coactions agree.
Mat cotensor(const ComoduleRight& M, const ComoduleLeft& N);

ComoduleRight corestrict(const CoalgebraMorphism& f, const ComoduleRight& M);

// C as a left D-comodule along f: C -> D.
ComoduleLeft corestricted_left_regular(const CoalgebraMorphism& f);

// N |_D C with the coaction inherited from delta_C; incl embeds into N (x) C.
struct CoinduceResult {
  ComoduleRight module;
  Mat incl;
};
CoinduceResult coinduce(const CoalgebraMorphism& f, const ComoduleRight& N);
Mat coinduce_morphism(const CoalgebraMorphism& f, const CoinduceResult& CM,
                      const CoinduceResult& CN, const Mat& g);
Mat coinduce_unit(const CoalgebraMorphism& f, const ComoduleRight& M,
                  const CoinduceResult& CRM);
Mat coinduce_counit(const CoalgebraMorphism& f, const ComoduleRight& N,
                    const CoinduceResult& CN);

// Left adjoint of corestriction, computed as extension of scalars over the
// dual algebras; proj/sect realize the carrier as a quotient of N (x) C^*.
struct CohomResult {
  ComoduleRight module;
  Mat proj;
  Mat sect;
};
CohomResult cohom(const CoalgebraMorphism& f, const ComoduleRight& N);
Mat cohom_morphism(const CoalgebraMorphism& f, const CohomResult& HM,
                   const CohomResult& HN, const Mat& g);
Mat cohom_unit(const CoalgebraMorphism& f, const ComoduleRight& N,
               const CohomResult& HN);
Mat cohom_counit(const CoalgebraMorphism& f, const ComoduleRight& W,
                 const CohomResult& HRW);

bool is_coflat(const CoalgebraMorphism& f);
bool is_sigma_injective(const CoalgebraMorphism& f);
struct QuasiFiniteReport {
  bool value = true;
  std::string note;
};
QuasiFiniteReport is_quasi_finite(const CoalgebraMorphism& f);

std::vector<Mat> hom_comodules(const ComoduleRight& M, const ComoduleRight& N);

Mat generated_subcomodule(const ComoduleRight& M, const Mat& vectors);
ComoduleRight subcomodule_restrict(const ComoduleRight& M, const Mat& basis);
ComoduleRight quotient_comodule(const ComoduleRight& M, const Mat& basis,
                                Quotient* out_q = nullptr);

}  // namespace comod
