#pragma once

#include <map>
#include <utility>

#include <comod/contra.hpp>

namespace comod {

struct FinitePoset {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> leq;  // leq[x][y] = 1 iff x <= y

  int size() const { return int(elements.size()); }
  bool le(int x, int y) const { return leq[x][y] != 0; }
  int index(const std::string& name) const;
};

std::vector<std::string> check_poset(const FinitePoset& P);
FinitePoset opposite_poset(const FinitePoset& P);
// pairs (x, y) with x < y and nothing strictly between
std::vector<std::pair<int, int>> covering_pairs(const FinitePoset& P);

// Functor from the poset into coalgebras: arrows are given on covering pairs
// and composed along chains; functoriality demands all chains agree.
struct CoalgebraRep {
  FinitePoset poset;
  std::vector<Coalgebra> fibers;
  std::map<std::pair<int, int>, Mat> arrows;
};
struct AlgebraRep {
  FinitePoset poset;
  std::vector<Algebra> fibers;
  std::map<std::pair<int, int>, Mat> arrows;
};

std::vector<std::string> check_representation(const CoalgebraRep& R);
std::vector<std::string> check_representation(const AlgebraRep& R);
Mat rep_arrow_mat(const CoalgebraRep& R, int x, int y);
Mat rep_arrow_mat(const AlgebraRep& R, int x, int y);
CoalgebraMorphism rep_arrow(const CoalgebraRep& R, int x, int y);
AlgebraMorphism rep_arrow(const AlgebraRep& R, int x, int y);

enum class Flavor {
  cis_comodule,
  trans_comodule,
  trans_contramodule,
  cis_module,
  trans_module,
};

const char* flavor_name(Flavor f);
// structure maps run with the order (M_x -> M_y for x <= y) or against it
bool flavor_ascending(Flavor f);
bool flavor_uses_algebras(Flavor f);

// An object of one of the five flavors over a representation.  fiber_maps
// holds the coaction/contraaction/action matrix per element; structure holds
// one plain matrix per covering pair x < y, oriented by the flavor
// (ascending: M_x -> M_y, descending: M_y -> M_x).  The plain matrix is the
// mate of the definition's structure morphism along the flavor's adjunction;
// the canonical form is recovered by cartesian_mate.
struct RepObject {
  Flavor flavor = Flavor::cis_comodule;
  CoalgebraRep crep;
  AlgebraRep arep;
  std::vector<int> dims;
  std::vector<Mat> fiber_maps;
  std::map<std::pair<int, int>, Mat> structure;

  const FinitePoset& poset() const {
    return flavor_uses_algebras(flavor) ? arep.poset : crep.poset;
  }
  const Field& field() const {
    return flavor_uses_algebras(flavor) ? arep.fibers[0].field
                                        : crep.fibers[0].field;
  }
};

ComoduleRight fiber_comodule(const RepObject& M, int x);
Contramodule fiber_contramodule(const RepObject& M, int x);
ModuleRight fiber_module(const RepObject& M, int x);
// synthesized structure matrix between comparable elements (identity at x==x)
Mat structure_mat(const RepObject& M, int x, int y);

std::vector<std::string> check_object(const RepObject& M);

struct RepMorphism {
  std::vector<Mat> components;
};
std::vector<std::string> check_rep_morphism(const RepObject& M,
                                            const RepObject& N,
                                            const RepMorphism& eta);
std::vector<RepMorphism> hom_rep(const RepObject& M, const RepObject& N);

struct SubobjectResult {
  RepObject object;
  std::vector<Mat> incl;
};
struct QuotientResult {
  RepObject object;
  std::vector<Mat> proj;
};

SubobjectResult kernel_rep(const RepObject& M, const RepObject& N,
                           const RepMorphism& eta);
QuotientResult cokernel_rep(const RepObject& M, const RepObject& N,
                            const RepMorphism& eta);

// subobject built from fiberwise subspace bases (must be closed; throws
// otherwise), with the restricted structure maps
SubobjectResult subobject_from_bases(const RepObject& M,
                                     const std::vector<Mat>& bases);
QuotientResult quotient_from_bases(const RepObject& M,
                                   const std::vector<Mat>& bases);

SubobjectResult generated_subobject(const RepObject& M, int x,
                                    const Mat& vectors);

RepObject zero_object(Flavor f, const CoalgebraRep& R);
RepObject zero_object(Flavor f, const AlgebraRep& R);

// Point functors.  V is the fiber datum at x, passed as its dimension plus
// its coaction/contraaction/action matrix.  ex_object is left adjoint to
// evaluation at x, coe_object its right adjoint; supports sit on the up- or
// down-set of x as dictated by the flavor's transport functors.
RepObject ex_object(Flavor f, const CoalgebraRep& R, int x, int vdim,
                    const Mat& vmap);
RepObject ex_object(Flavor f, const AlgebraRep& R, int x, int vdim,
                    const Mat& vmap);
RepObject coe_object(Flavor f, const CoalgebraRep& R, int x, int vdim,
                     const Mat& vmap);
RepObject coe_object(Flavor f, const AlgebraRep& R, int x, int vdim,
                     const Mat& vmap);

// adjunction data for (ex_x -| ev_x) and (ev_x -| coe_x)
Mat ex_fiber_unit(const RepObject& exV, int x, int vdim,
                  const Mat& vmap);                   // V -> ev ex V
RepMorphism ex_counit(const RepObject& M, int x);     // ex ev M -> M
Mat coe_fiber_counit(const RepObject& coeV, int x, int vdim,
                     const Mat& vmap);                // ev coe V -> V
RepMorphism coe_unit(const RepObject& M, int x);      // M -> coe ev M

// functorial action on a fiber morphism g: V -> W at x
RepMorphism ex_on_map(Flavor f, const CoalgebraRep& R, int x, int vdim,
                      const Mat& vmap, int wdim, const Mat& wmap,
                      const Mat& g);
RepMorphism ex_on_map(Flavor f, const AlgebraRep& R, int x, int vdim,
                      const Mat& vmap, int wdim, const Mat& wmap,
                      const Mat& g);
RepMorphism coe_on_map(Flavor f, const CoalgebraRep& R, int x, int vdim,
                       const Mat& vmap, int wdim, const Mat& wmap,
                       const Mat& g);
RepMorphism coe_on_map(Flavor f, const AlgebraRep& R, int x, int vdim,
                       const Mat& vmap, int wdim, const Mat& wmap,
                       const Mat& g);

std::vector<RepObject> projective_generator_family(Flavor f,
                                                   const CoalgebraRep& R);
std::vector<RepObject> projective_generator_family(Flavor f,
                                                   const AlgebraRep& R);

// canonical mate of the structure map across a covering pair, as the
// definition states it (an isomorphism exactly when the object is cartesian
// across that pair)
Mat cartesian_mate(const RepObject& M, int u, int v);

struct CartesianReport {
  bool value = true;
  std::vector<std::string> arrows;      // per-arrow verdicts
  std::vector<std::string> hypotheses;  // per-arrow exactness flags
};
CartesianReport is_cartesian(const RepObject& M);

struct HullResult {
  RepObject object;
  std::vector<Mat> incl;
};
// smallest cartesian subobject containing the seed vectors at fiber x;
// precondition: M cartesian
HullResult cartesian_hull(const RepObject& M, int x, const Mat& vectors);

// the contratensor/hom adjoint pair between trans-contramodules and
// trans-comodules over one cocommutative representation; N must be cartesian
// for trans_hom's transport maps
RepObject trans_contratensor(const RepObject& M, const RepObject& N);
RepObject trans_hom(const RepObject& N, const RepObject& P);

}  // namespace comod
