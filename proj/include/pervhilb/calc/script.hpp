#ifndef PERVHILB_CALC_SCRIPT_HPP
#define PERVHILB_CALC_SCRIPT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pervhilb/calc/calculus.hpp"

#include <json.hpp>

namespace pervhilb::calc {

// Line-oriented derivation scripts. One declaration or step per line:
//
//   SPACE <name> r=<int> [mult] [strong]
//   PRODUCT <name> = <space> x <space>
//   MAP <name> : <src> -> <dst> <pullback|pushforward> [dp=<int>] [dd=<int>]
//   AXIOM <name> ON <space> [d=<int>, p<=<int>] [balanced]
//   STEP <id>: <rule>(<input ids or axiom names>) => <class name> [d=<int>, p<=<int>]
//
// For pullback/pushforward steps the first argument is the map name.
// '#' starts a comment. Scripts may also be checked against a pre-built
// calculus, in which case declarations are optional.

struct Script {
  std::vector<SpaceDecl> spaces;
  std::vector<std::array<std::string, 3>> products;  // {product, a, b}
  std::vector<MapDecl> maps;
  std::vector<std::pair<ClassTerm, std::string>> axioms;
  std::vector<DerivationStep> steps;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

Script parse_script(std::string_view text);

std::string to_dsl(const Script& script);
nlohmann::json to_json(const Script& script);
Script script_from_json(const nlohmann::json& j);

struct Verdict {
  bool accepted = false;
  int failing_step = 0;  // step id of the first failure; 0 when accepted
  std::string message;
};

// Rebuilds a calculus from the script's declarations (on top of `base` when
// given) and recomputes every step; accepts iff each step's claimed degree
// and bound equal the recomputed ones.
Verdict check_derivation(const Script& script);
Verdict check_derivation(const Calculus& base, const Script& script);

}  // namespace pervhilb::calc

#endif
