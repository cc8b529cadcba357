#include <CLI11.hpp>
#include <comod/runner.hpp>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{
      "exact engine for comodules, contramodules and modules over "
      "representations of finite posets"};
  app.require_subcommand(1);

  comod::CliRequest req;
  auto add_flags = [&](CLI::App* c, bool with_operation) {
    if (with_operation)
      c->add_option("operation", req.sub, "sub-operation to run")->required();
    c->add_option("--input", req.input, "instance document (JSON file)");
    c->add_option("--output", req.output, "report form: text (default) or json");
    c->add_option("--at", req.at, "poset element name");
    c->add_option("--object", req.object, "entity name");
    c->add_option("--pairing", req.pairing, "pairing name");
    c->add_option("--module", req.module, "module name");
    c->add_option("--left", req.left, "first operand name");
    c->add_option("--right", req.right, "second operand name");
  };

  struct Verb {
    const char* name;
    const char* help;
    bool with_operation;
  };
  const Verb verbs[] = {
      {"validate", "run every structural check in the document", false},
      {"compute",
       "cotensor | coinduce | cohom | contraextend | contratensor | finite-dual",
       true},
      {"check",
       "coalgebra | comodule | contramodule | representation | object | "
       "cartesian | coflat | sigma-injective | pairing",
       true},
      {"adjunction",
       "ex-ev | ev-coe | corestrict-coinduce | cohom-corestrict | "
       "contraextend-contrarestrict | FG",
       true},
      {"hull", "smallest cartesian subobject containing a full fiber", false},
      {"rationalize", "rational part and torsion quotient of a module", false},
      {"generators", "projective generator family of an object's category",
       false},
  };
  for (const Verb& v : verbs) {
    CLI::App* c = app.add_subcommand(v.name, v.help);
    add_flags(c, v.with_operation);
    c->callback([&req, name = v.name] { req.verb = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  comod::CliResult r = comod::run_request(req);
  if (r.code == 2)
    std::cerr << r.text;
  else
    std::cout << r.text;
  return r.code;
}
