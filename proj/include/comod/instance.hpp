#pragma once

#include <comod/rational.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace comod {

// Thrown on the first schema violation; what() is "<path>: <reason>" with the
// path in dotted JSON-pointer style ("objects.M.fibers.x").
struct ParseError : std::runtime_error {
  std::string path;
  std::string reason;
  ParseError(const std::string& p, const std::string& r)
      : std::runtime_error(p + ": " + r), path(p), reason(r) {}
};

// One document's worth of named entities over a single field.  refs keeps the
// names each entity was built from ("section.name" -> referenced names in
// positional order) so serialization can reproduce the reference structure.
struct InstanceDocument {
  Field field;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, CoalgebraMorphism> coalgebra_morphisms;
  std::map<std::string, AlgebraMorphism> algebra_morphisms;
  std::map<std::string, FinitePoset> posets;
  std::map<std::string, CoalgebraRep> coalgebra_reps;
  std::map<std::string, AlgebraRep> algebra_reps;
  std::map<std::string, RepObject> objects;
  std::map<std::string, ComoduleRight> right_comodules;
  std::map<std::string, ComoduleLeft> left_comodules;
  std::map<std::string, Contramodule> contramodules;
  std::map<std::string, ModuleLeft> left_modules;
  std::map<std::string, FPAlgebraAction> presented_modules;
  std::map<std::string, RationalPairing> pairings;
  std::map<std::string, std::vector<std::string>> refs;
};

InstanceDocument parse_instance_text(const std::string& text);
InstanceDocument parse_instance_file(const std::string& path);

// Canonical serialization: two-space indent, sorted keys, GF entries as
// integers, rational entries as "num/den" strings, empty matrices as [].
// parse(serialize(d)) reproduces d up to the one-time normalizations that
// parsing performs (scalars reduced, evaluation pairings stored in full form).
std::string instance_to_text(const InstanceDocument& doc);

}  // namespace comod
