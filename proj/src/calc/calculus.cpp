#include "pervhilb/calc/calculus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace pervhilb::calc {

namespace {

bool is_step_ref(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::axiom: return "axiom";
    case Rule::cup: return "cup";
    case Rule::kunneth: return "kunneth";
    case Rule::pullback: return "pullback";
    case Rule::pushforward: return "pushforward";
    case Rule::linear_combination: return "linear_combination";
  }
  return "?";
}

Rule rule_from_name(const std::string& s) {
  for (Rule r : {Rule::axiom, Rule::cup, Rule::kunneth, Rule::pullback,
                 Rule::pushforward, Rule::linear_combination}) {
    if (s == rule_name(r)) return r;
  }
  throw CalcError("unknown rule: " + s);
}

void Calculus::declare_space(SpaceDecl space) {
  if (space.relative_dim < 0) throw CalcError("space with negative relative dimension");
  if (space_index_.count(space.name)) throw CalcError("duplicate space: " + space.name);
  space_index_[space.name] = spaces_.size();
  spaces_.push_back(std::move(space));
}

void Calculus::declare_product(const std::string& product, const std::string& a,
                               const std::string& b) {
  space(product);
  space(a);
  space(b);
  auto key = std::minmax(a, b);
  auto [it, fresh] = product_index_.emplace(key, product);
  if (!fresh && it->second != product)
    throw CalcError("conflicting product registration for " + a + " x " + b);
  if (fresh) products_.push_back({product, key.first, key.second});
}

void Calculus::register_map(MapDecl map) {
  space(map.source);
  space(map.target);
  if (map_index_.count(map.name)) throw CalcError("duplicate map: " + map.name);
  map_index_[map.name] = maps_.size();
  maps_.push_back(std::move(map));
}

void Calculus::register_axiom(ClassTerm term, std::string justification) {
  const SpaceDecl& sp = space(term.space);
  if (term.degree < 0) throw CalcError("axiom with negative degree: " + term.name);
  if (term.perv_bound < 0 || term.perv_bound > 2 * sp.relative_dim) {
    std::ostringstream msg;
    msg << "axiom " << term.name << ": bound " << term.perv_bound
        << " outside [0, " << 2 * sp.relative_dim << "] on " << sp.name;
    throw CalcError(msg.str());
  }
  if (axiom_index_.count(term.name)) throw CalcError("duplicate axiom: " + term.name);
  axiom_index_[term.name] = axioms_.size();
  axioms_.emplace_back(std::move(term), std::move(justification));
}

bool Calculus::has_space(const std::string& name) const { return space_index_.count(name) > 0; }

const SpaceDecl& Calculus::space(const std::string& name) const {
  auto it = space_index_.find(name);
  if (it == space_index_.end()) throw CalcError("undeclared space: " + name);
  return spaces_[it->second];
}

bool Calculus::has_map(const std::string& name) const { return map_index_.count(name) > 0; }

const MapDecl& Calculus::map(const std::string& name) const {
  auto it = map_index_.find(name);
  if (it == map_index_.end())
    throw CalcError("map not registered as perversity-functorial: " + name);
  return maps_[it->second];
}

bool Calculus::has_axiom(const std::string& name) const { return axiom_index_.count(name) > 0; }

const ClassTerm& Calculus::axiom(const std::string& name) const {
  auto it = axiom_index_.find(name);
  if (it == axiom_index_.end()) throw CalcError("unknown axiom: " + name);
  return axioms_[it->second].first;
}

const std::string& Calculus::axiom_justification(const std::string& name) const {
  auto it = axiom_index_.find(name);
  if (it == axiom_index_.end()) throw CalcError("unknown axiom: " + name);
  return axioms_[it->second].second;
}

const std::string& Calculus::product_of(const std::string& a, const std::string& b) const {
  auto it = product_index_.find(std::minmax(a, b));
  if (it == product_index_.end())
    throw CalcError("no registered product space for " + a + " x " + b);
  return it->second;
}

int Calculus::cap_bound(int bound, const std::string& space_name) const {
  // Perversity is concentrated in [0, 2r]; no bound can exceed the range.
  return std::min(bound, 2 * space(space_name).relative_dim);
}

ClassTerm Calculus::apply_rule(Rule rule, const std::vector<ClassTerm>& inputs,
                               const std::string& map_name,
                               const std::string& output_name) const {
  ClassTerm out;
  out.name = output_name;
  switch (rule) {
    case Rule::axiom: {
      if (inputs.size() != 1) throw CalcError("axiom step takes exactly one axiom");
      out = inputs[0];
      out.name = output_name;
      return out;
    }
    case Rule::cup: {
      if (inputs.size() < 2) throw CalcError("cup needs at least two inputs");
      const std::string& sp = inputs[0].space;
      const SpaceDecl& decl = space(sp);
      if (!decl.multiplicative)
        throw CalcError("cup on a space without the multiplicative flag: " + sp);
      int degree = 0, bound = 0;
      bool balanced = decl.strongly_multiplicative;
      for (const ClassTerm& in : inputs) {
        if (in.space != sp) throw CalcError("cup inputs live on different spaces");
        degree += in.degree;
        bound += in.perv_bound;
        balanced = balanced && in.balanced;
      }
      out.space = sp;
      out.degree = degree;
      out.perv_bound = cap_bound(bound, sp);
      out.balanced = balanced;
      return out;
    }
    case Rule::kunneth: {
      if (inputs.size() != 2) throw CalcError("kunneth takes exactly two inputs");
      const std::string& prod = product_of(inputs[0].space, inputs[1].space);
      out.space = prod;
      out.degree = inputs[0].degree + inputs[1].degree;
      out.perv_bound = cap_bound(inputs[0].perv_bound + inputs[1].perv_bound, prod);
      out.balanced = inputs[0].balanced && inputs[1].balanced;
      return out;
    }
    case Rule::pullback:
    case Rule::pushforward: {
      if (inputs.size() != 1) throw CalcError("transport rules take exactly one input");
      const MapDecl& m = map(map_name);
      const bool is_pull = rule == Rule::pullback;
      if (is_pull && m.transport != Transport::pullback)
        throw CalcError("map " + m.name + " is not registered for pullback");
      if (!is_pull && m.transport != Transport::pushforward)
        throw CalcError("map " + m.name + " is not registered for pushforward");
      const std::string& from = is_pull ? m.target : m.source;
      const std::string& to = is_pull ? m.source : m.target;
      if (inputs[0].space != from)
        throw CalcError("class " + inputs[0].name + " does not live on " + from);
      out.space = to;
      out.degree = inputs[0].degree + m.degree_shift;
      if (out.degree < 0) throw CalcError("transport produced a negative degree");
      out.perv_bound = cap_bound(inputs[0].perv_bound + m.bound_shift, to);
      if (out.perv_bound < 0) throw CalcError("transport produced a negative bound");
      out.balanced = inputs[0].balanced;
      return out;
    }
    case Rule::linear_combination: {
      if (inputs.empty()) throw CalcError("linear_combination needs inputs");
      const std::string& sp = inputs[0].space;
      const int degree = inputs[0].degree;
      int bound = 0;
      bool balanced = true;
      for (const ClassTerm& in : inputs) {
        if (in.space != sp)
          throw CalcError("linear_combination inputs live on different spaces");
        if (in.degree != degree)
          throw CalcError("linear_combination inputs have mixed degrees");
        bound = std::max(bound, in.perv_bound);
        balanced = balanced && in.balanced;
      }
      out.space = sp;
      out.degree = degree;
      out.perv_bound = bound;
      out.balanced = balanced;
      return out;
    }
  }
  throw CalcError("unhandled rule");
}

int Derivation::add(Rule rule, std::vector<std::string> inputs, std::string output_name,
                    std::string justification, std::string map_name) {
  std::vector<ClassTerm> resolved;
  resolved.reserve(inputs.size());
  for (const std::string& ref : inputs) resolved.push_back(resolve(ref));
  ClassTerm out = calc_->apply_rule(rule, resolved, map_name, output_name);
  DerivationStep step;
  step.id = static_cast<int>(steps_.size()) + 1;
  step.rule = rule;
  step.map = std::move(map_name);
  step.inputs = std::move(inputs);
  step.output = std::move(out);
  step.justification = std::move(justification);
  steps_.push_back(std::move(step));
  return steps_.back().id;
}

const ClassTerm& Derivation::term(int id) const {
  if (id < 1 || id > static_cast<int>(steps_.size()))
    throw CalcError("step reference out of range");
  return steps_[static_cast<std::size_t>(id - 1)].output;
}

ClassTerm Derivation::resolve(const std::string& ref) const {
  if (is_step_ref(ref)) return term(std::stoi(ref));
  return calc_->axiom(ref);
}

}  // namespace pervhilb::calc
