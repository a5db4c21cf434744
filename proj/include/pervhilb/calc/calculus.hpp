#ifndef PERVHILB_CALC_CALCULUS_HPP
#define PERVHILB_CALC_CALCULUS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pervhilb::calc {

// A perversity-bound calculus: spaces with declared relative dimension and
// multiplicativity, maps registered as perversity-functorial, axioms, and
// six rules that compute bounds. Bounds are upper bounds for the perversity
// of a named cohomology class; the engine never asserts a bound freely.

enum class Rule {
  axiom,
  cup,
  kunneth,
  pullback,
  pushforward,
  linear_combination,
};

const char* rule_name(Rule r);
Rule rule_from_name(const std::string& s);  // throws on unknown rule

struct SpaceDecl {
  std::string name;
  int relative_dim = 0;  // defect of semismallness r; bounds live in [0, 2r]
  bool multiplicative = false;
  bool strongly_multiplicative = false;
};

enum class Transport { pullback, pushforward };

// A map registered as perversity-functorial for one transport direction.
// bound_shift / degree_shift are 0 for the functorial maps of the nested
// Hilbert scheme; the small-diagonal embedding pushes with shifts (+2, +4).
struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  Transport transport = Transport::pullback;
  int bound_shift = 0;
  int degree_shift = 0;
  std::string justification;
};

struct ClassTerm {
  std::string name;
  std::string space;
  int degree = 0;      // cohomological degree
  int perv_bound = 0;  // upper bound, not an exact perversity
  // Membership in the direct sum of G_i H^{2i}: closed under cup on strongly
  // multiplicative spaces and preserved by registered maps.
  bool balanced = false;
};

struct DerivationStep {
  int id = 0;
  Rule rule = Rule::axiom;
  std::string map;                  // for pullback / pushforward
  std::vector<std::string> inputs;  // decimal step ids or axiom names
  ClassTerm output;
  std::string justification;
};

struct CalcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Calculus {
 public:
  void declare_space(SpaceDecl space);
  // Registers `product` (an already declared space) as the Kunneth target
  // of the unordered pair (a, b).
  void declare_product(const std::string& product, const std::string& a,
                       const std::string& b);
  void register_map(MapDecl map);
  // Rejected unless 0 <= bound <= 2 * relative_dim of the space.
  void register_axiom(ClassTerm term, std::string justification);

  bool has_space(const std::string& name) const;
  const SpaceDecl& space(const std::string& name) const;
  bool has_map(const std::string& name) const;
  const MapDecl& map(const std::string& name) const;
  bool has_axiom(const std::string& name) const;
  const ClassTerm& axiom(const std::string& name) const;
  const std::string& axiom_justification(const std::string& name) const;
  // Product space of an unordered pair; throws when not registered.
  const std::string& product_of(const std::string& a, const std::string& b) const;

  const std::vector<SpaceDecl>& spaces() const { return spaces_; }
  const std::vector<MapDecl>& maps() const { return maps_; }
  const std::vector<std::pair<ClassTerm, std::string>>& axioms() const { return axioms_; }
  const std::vector<std::array<std::string, 3>>& products() const { return products_; }

  // Recomputes the output of one rule application. Throws CalcError when a
  // side condition fails (cup on a non-multiplicative space, transport along
  // an unregistered map, mixed spaces, ...). `map_name` is used by the two
  // transport rules only.
  ClassTerm apply_rule(Rule rule, const std::vector<ClassTerm>& inputs,
                       const std::string& map_name, const std::string& output_name) const;

 private:
  int cap_bound(int bound, const std::string& space_name) const;

  std::vector<SpaceDecl> spaces_;
  std::vector<MapDecl> maps_;
  std::vector<std::pair<ClassTerm, std::string>> axioms_;
  std::vector<std::array<std::string, 3>> products_;  // {product, a, b}
  std::map<std::string, std::size_t> space_index_;
  std::map<std::string, std::size_t> map_index_;
  std::map<std::string, std::size_t> axiom_index_;
  std::map<std::pair<std::string, std::string>, std::string> product_index_;
};

// An append-only derivation trace against a fixed calculus. Steps are
// numbered in application order starting from 1.
class Derivation {
 public:
  explicit Derivation(const Calculus& calculus) : calc_(&calculus) {}

  // Resolves input references (decimal step ids or axiom names), applies the
  // rule, appends the step, and returns its id.
  int add(Rule rule, std::vector<std::string> inputs, std::string output_name,
          std::string justification, std::string map_name = {});

  const std::vector<DerivationStep>& steps() const { return steps_; }
  const ClassTerm& term(int id) const;
  const Calculus& calculus() const { return *calc_; }

  // Resolves a reference against this trace (shared with the checker).
  ClassTerm resolve(const std::string& ref) const;

 private:
  const Calculus* calc_;
  std::vector<DerivationStep> steps_;
};

}  // namespace pervhilb::calc

#endif
