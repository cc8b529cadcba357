#pragma once

#include <comod/contra.hpp>
#include <comod/repcat.hpp>
#include <stdexcept>

namespace comod {

// Thrown for inputs the engine refuses on principle (rather than inputs that
// merely fail a law): most notably the finite dual of a presented algebra.
struct UnsupportedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pairing phi : C (x) A -> K.  The full form stores phi as a
// 1 x (C.dim * A.dim) row, c_i (x) a_j at i * A.dim + j.  The presented form
// pairs C against an algebra given by generators and relations; phi_words
// lists pairs (word, row) where row is the 1 x C.dim functional
// c |-> phi(c (x) word).  Words are indices into the generators; the empty
// word stands for the unit and pairs as the counit.  Every generator must be
// listed as a one-letter word; rows for longer words are synthesized by
// convolution, and any longer words that are listed are cross-checked
// against their synthesized rows.
struct RationalPairing {
  Coalgebra coalg;
  bool presented = false;
  Algebra alg;
  Mat phi;
  int gen_count = 0;
  std::vector<FPRelation> relations;
  std::vector<std::pair<std::vector<int>, Mat>> phi_words;
};

RationalPairing evaluation_pairing(const Coalgebra& C);
RationalPairing full_pairing(const Coalgebra& C, const Algebra& A,
                             const Mat& phi);
RationalPairing presented_pairing(
    const Coalgebra& C, int gen_count, std::vector<FPRelation> relations,
    std::vector<std::pair<std::vector<int>, Mat>> phi_words);

// Checks the two pairing conditions: the induced map C -> A^* is injective
// (with a kernel witness on failure) and the induced map A -> C^* is an
// algebra morphism.
std::vector<std::string> check_pairing(const RationalPairing& p);

// Per-element pairings of a coalgebra representation over X with an algebra
// representation over X^op (same element order); compatible when both ways
// around each covering square of functionals agree.
struct RepPairing {
  CoalgebraRep crep;
  AlgebraRep arep;
  std::vector<RationalPairing> pairings;
};
std::vector<std::string> check_rep_pairing(const RepPairing& P);

// basis includes the rational part into the ambient module; the comodule is
// the witnessing coaction in those coordinates.
struct RationalizeResult {
  Mat basis;
  ComoduleRight comodule;
};

// Largest submodule of the left module N whose action factors through a
// C-comodule structure along the pairing; greatest fixed point of the
// one-step shrinking operator.
RationalizeResult rationalize(const RationalPairing& p, const ModuleLeft& N);
RationalizeResult rationalize(const RationalPairing& p,
                              const FPAlgebraAction& N);

// The short exact sequence 0 -> R(N) -> N -> N/R(N) -> 0 together with the
// rational part of the quotient; vanishing records whether R(N/R(N)) = 0.
struct TorsionWitness {
  RationalizeResult rational;
  Quotient seq;
  int quotient_dim = 0;
  RationalizeResult quotient_rational;
  bool vanishing = false;
};
TorsionWitness torsion_witness(const RationalPairing& p, const ModuleLeft& N);
TorsionWitness torsion_witness(const RationalPairing& p,
                               const FPAlgebraAction& N);

// A right module over the opposite algebra is the same data as a left
// module, which is the side the pairing acts on; opposite_rep transports a
// whole representation.  For commutative fibers it is the identity.
AlgebraRep opposite_rep(const AlgebraRep& R);

// Fiberwise rational part of a trans-module, cut down so every transport map
// lands in the rational part of its target fiber; a subobject of N.  The
// fibers carry left actions of the paired algebras, so N must live over
// opposite_rep(P.arep).
SubobjectResult rationalize_rep(const RepPairing& P, const RepObject& N);

// Fiberwise dualization of representations.  dual_algebra_rep lives over the
// opposite poset with the same element order; dual_coalgebra_rep inverts it
// exactly on finite-dimensional fibers.
AlgebraRep dual_algebra_rep(const CoalgebraRep& R);
CoalgebraRep dual_coalgebra_rep(const AlgebraRep& R);

// Carrier-preserving bridges between comodule representations over C and
// module representations over C^*: cis comodules become trans modules and
// trans comodules become cis modules, both over dual_algebra_rep; the inverse
// rebuilds the coalgebra representation by dualizing back.  Trans
// contramodules land in cis modules the same way.
RepObject comodule_rep_to_modules(const RepObject& M);
RepObject module_rep_to_comodules(const RepObject& M);
RepObject contra_to_cis_module(const RepObject& M);

// Dual coalgebra of a finite-dimensional algebra (the finite dual, which is
// all of A^* here).  The presented overload always throws: deciding the
// finite dual of an infinite-dimensional presented algebra is out of scope
// and is reported as unsupported input rather than approximated.
Coalgebra finite_dual(const Algebra& A);
Coalgebra finite_dual(const FPAlgebraAction& A);

// Base-change certificates for the contratensor product and comodule homs
// along a morphism alpha : C -> D of cocommutative coalgebras, for a
// contramodule M over D, a comodule N over D, and a comodule P over C.
// tensor: contraextend(alpha, M) boxtimes_C cohom(alpha, N) versus
// M boxtimes_D N; hom: Hom^D(N, corestrict(alpha, P)) versus the
// contrarestriction of Hom^C(cohom(alpha, N), P).  The canonical comparison
// maps are computed and checked to be isomorphisms of comodules respectively
// contramodules.
struct ContratensorCohomReport {
  int lhs_tensor = 0;
  int rhs_tensor = 0;
  bool tensor_descends = false;
  bool tensor_iso = false;
  int lhs_hom = 0;
  int rhs_hom = 0;
  bool hom_iso = false;
  bool hom_contra_morphism = false;
  std::vector<std::string> errors;
};
ContratensorCohomReport contratensor_cohom_certificates(
    const CoalgebraMorphism& alpha, const Contramodule& M,
    const ComoduleRight& N, const ComoduleRight& P);

}  // namespace comod
