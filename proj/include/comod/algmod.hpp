#pragma once

#include <comod/mat.hpp>
#include <string>
#include <vector>

namespace comod {

// Finite-dimensional associative unital algebra. mult is dim x dim^2
// (i-major on A (x) A), unit is dim x 1.
struct Algebra {
  Field field;
  int dim = 0;
  Mat mult;
  Mat unit;

  bool operator==(const Algebra&) const = default;
};

// map is target.dim x source.dim.
struct AlgebraMorphism {
  Algebra source, target;
  Mat map;
};

// Right module: action M (x) A -> M, dim x (dim * alg.dim).
struct ModuleRight {
  Algebra alg;
  int dim = 0;
  Mat action;
};

// Left module: action A (x) M -> M, dim x (alg.dim * dim).
struct ModuleLeft {
  Algebra alg;
  int dim = 0;
  Mat action;
};

// Law violations by name; empty means valid.
std::vector<std::string> check_algebra(const Algebra& A);
std::vector<std::string> check_algebra_morphism(const AlgebraMorphism& f);
std::vector<std::string> check_module(const ModuleRight& M);
std::vector<std::string> check_module(const ModuleLeft& M);

Algebra opposite(const Algebra& A);
Algebra base_field_algebra(const Field& F);
AlgebraMorphism opposite_morphism(const AlgebraMorphism& f);

// A left module is the same data as a right module over the opposite algebra.
ModuleRight left_as_right_op(const ModuleLeft& M);
ModuleLeft right_op_as_left(const ModuleRight& M);

ModuleRight regular_right(const Algebra& A);
ModuleRight zero_module_right(const Algebra& A);
ModuleRight trivial_module_right(const Algebra& A, int dim, const Mat& eps);
ModuleRight direct_sum_module(const ModuleRight& M, const ModuleRight& N);

// Operator of right multiplication by the j-th basis element.
Mat right_mult_op(const ModuleRight& M, int j);

// --- scalar functors along an algebra morphism ---

ModuleRight restrict_module(const AlgebraMorphism& f, const ModuleRight& M);

// M (x)_{A_src} A_tgt as a coequalizer; proj/sect realize the quotient of
// M (x) A_tgt.
struct ExtendResult {
  ModuleRight module;
  Mat proj;
  Mat sect;
};
ExtendResult extend_module(const AlgebraMorphism& f, const ModuleRight& M);
Mat extend_morphism(const AlgebraMorphism& f, const ExtendResult& EM,
                    const ExtendResult& EN, const Mat& g);

// Hom_{A_src}(A_tgt, N) inside N (x) A_tgt^* (N-major), with right
// A_tgt-action (h.b)(b') = h(bb').
struct CoextendResult {
  ModuleRight module;
  Mat incl;
};
CoextendResult coextend_module(const AlgebraMorphism& f, const ModuleRight& N);
Mat coextend_morphism(const AlgebraMorphism& f, const CoextendResult& CM,
                      const CoextendResult& CN, const Mat& g);

// Unit/counit of (extend -| restrict) and (restrict -| coextend).
Mat extend_unit(const AlgebraMorphism& f, const ModuleRight& M,
                const ExtendResult& EM);
Mat extend_counit(const AlgebraMorphism& f, const ModuleRight& N,
                  const ExtendResult& ERN);
Mat coextend_unit(const AlgebraMorphism& f, const ModuleRight& M,
                  const CoextendResult& CRM);
Mat coextend_counit(const AlgebraMorphism& f, const ModuleRight& N,
                    const CoextendResult& CN);

std::vector<Mat> hom_modules(const ModuleRight& M, const ModuleRight& N);

struct SplitCertificate {
  bool ok = false;
  Mat split;
};
SplitCertificate is_projective(const ModuleRight& M);
bool is_injective(const ModuleRight& M);

// M^* as a right module over opposite(A).
ModuleRight dual_module_op(const ModuleRight& M);

Mat submodule_generated(const ModuleRight& M, const Mat& vectors);
ModuleRight submodule_restrict(const ModuleRight& M, const Mat& basis);
ModuleRight quotient_module(const ModuleRight& M, const Mat& basis,
                            Quotient* out_q = nullptr);

// --- finitely presented algebras acting on finite-dimensional spaces ---

struct FPRelationTerm {
  Scalar coeff;
  std::vector<int> word;  // generator indices, applied left to right
};
using FPRelation = std::vector<FPRelationTerm>;

struct FPAlgebraAction {
  Field field;
  int gen_count = 0;
  int module_dim = 0;
  std::vector<Mat> gen_mats;  // right-action operators of the generators
  std::vector<FPRelation> relations;
};

std::vector<std::string> check_fp_action(const FPAlgebraAction& D);
Mat fp_word_matrix(const FPAlgebraAction& D, const std::vector<int>& word);
Mat fp_submodule_generated(const FPAlgebraAction& D, const Mat& vectors);
FPAlgebraAction fp_quotient(const FPAlgebraAction& D, const Mat& sub,
                            Quotient* out_q = nullptr);

}  // namespace comod
