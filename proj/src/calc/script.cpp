#include "pervhilb/calc/script.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pervhilb::calc {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

// Parses "key=value" style tokens like r=3, dp=2.
bool key_value(const std::string& tok, std::string_view key, std::string& value) {
  if (tok.size() > key.size() + 1 && tok.compare(0, key.size(), key) == 0 &&
      tok[key.size()] == '=') {
    value = tok.substr(key.size() + 1);
    return true;
  }
  return false;
}

// Parses the trailing "[d=<int>, p<=<int>] [balanced]" attribute block.
void parse_attributes(std::string attrs, int line, ClassTerm& term) {
  bool have_d = false, have_p = false;
  std::replace(attrs.begin(), attrs.end(), '[', ' ');
  std::replace(attrs.begin(), attrs.end(), ']', ' ');
  std::replace(attrs.begin(), attrs.end(), ',', ' ');
  for (const std::string& tok : split_ws(attrs)) {
    std::string value;
    if (key_value(tok, "d", value)) {
      term.degree = parse_int(value, line);
      have_d = true;
    } else if (tok.rfind("p<=", 0) == 0) {
      term.perv_bound = parse_int(tok.substr(3), line);
      have_p = true;
    } else if (tok == "balanced") {
      term.balanced = true;
    } else {
      throw ParseError(line, "unknown attribute '" + tok + "'");
    }
  }
  if (!have_d || !have_p) throw ParseError(line, "missing d= or p<= attribute");
}

void parse_space(const std::string& rest, int line, Script& script) {
  auto toks = split_ws(rest);
  if (toks.empty()) throw ParseError(line, "SPACE needs a name");
  SpaceDecl sp;
  sp.name = toks[0];
  bool have_r = false;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    std::string value;
    if (key_value(toks[i], "r", value)) {
      sp.relative_dim = parse_int(value, line);
      have_r = true;
    } else if (toks[i] == "mult") {
      sp.multiplicative = true;
    } else if (toks[i] == "strong") {
      sp.strongly_multiplicative = true;
    } else {
      throw ParseError(line, "unknown SPACE attribute '" + toks[i] + "'");
    }
  }
  if (!have_r) throw ParseError(line, "SPACE needs r=<int>");
  script.spaces.push_back(std::move(sp));
}

void parse_product(const std::string& rest, int line, Script& script) {
  // <name> = <a> x <b>
  auto toks = split_ws(rest);
  if (toks.size() != 5 || toks[1] != "=" || toks[3] != "x")
    throw ParseError(line, "PRODUCT syntax: PRODUCT <name> = <a> x <b>");
  script.products.push_back({toks[0], toks[2], toks[4]});
}

void parse_map(const std::string& rest, int line, Script& script) {
  // <name> : <src> -> <dst> <pullback|pushforward> [dp=..] [dd=..]
  auto toks = split_ws(rest);
  if (toks.size() < 6 || toks[1] != ":" || toks[3] != "->")
    throw ParseError(line, "MAP syntax: MAP <name> : <src> -> <dst> <pullback|pushforward>");
  MapDecl m;
  m.name = toks[0];
  m.source = toks[2];
  m.target = toks[4];
  if (toks[5] == "pullback") {
    m.transport = Transport::pullback;
  } else if (toks[5] == "pushforward") {
    m.transport = Transport::pushforward;
  } else {
    throw ParseError(line, "map transport must be pullback or pushforward");
  }
  for (std::size_t i = 6; i < toks.size(); ++i) {
    std::string value;
    if (key_value(toks[i], "dp", value)) {
      m.bound_shift = parse_int(value, line);
    } else if (key_value(toks[i], "dd", value)) {
      m.degree_shift = parse_int(value, line);
    } else {
      throw ParseError(line, "unknown MAP attribute '" + toks[i] + "'");
    }
  }
  script.maps.push_back(std::move(m));
}

void parse_axiom(const std::string& rest, int line, Script& script) {
  // <name> ON <space> [d=.., p<=..] [balanced]
  auto bracket = rest.find('[');
  if (bracket == std::string::npos) throw ParseError(line, "AXIOM needs [d=.., p<=..]");
  auto head = split_ws(strip(rest.substr(0, bracket)));
  if (head.size() != 3 || head[1] != "ON")
    throw ParseError(line, "AXIOM syntax: AXIOM <name> ON <space> [d=.., p<=..]");
  ClassTerm term;
  term.name = head[0];
  term.space = head[2];
  parse_attributes(rest.substr(bracket), line, term);
  script.axioms.emplace_back(std::move(term), std::string());
}

void parse_step(const std::string& rest, int line, Script& script) {
  // <id>: <rule>(<args>) => <name> [d=.., p<=..]
  auto colon = rest.find(':');
  if (colon == std::string::npos) throw ParseError(line, "STEP needs '<id>:'");
  DerivationStep step;
  step.id = parse_int(strip(rest.substr(0, colon)), line);

  auto arrow = rest.find("=>", colon);
  if (arrow == std::string::npos) throw ParseError(line, "STEP needs '=>'");
  std::string call = strip(rest.substr(colon + 1, arrow - colon - 1));
  auto open = call.find('(');
  auto close = call.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError(line, "STEP rule call needs parentheses");
  step.rule = [&] {
    try {
      return rule_from_name(strip(call.substr(0, open)));
    } catch (const CalcError& e) {
      throw ParseError(line, e.what());
    }
  }();
  std::string args = call.substr(open + 1, close - open - 1);
  std::vector<std::string> arg_list;
  std::istringstream in(args);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    piece = strip(piece);
    if (!piece.empty()) arg_list.push_back(piece);
  }
  if ((step.rule == Rule::pullback || step.rule == Rule::pushforward)) {
    if (arg_list.empty()) throw ParseError(line, "transport step needs a map argument");
    step.map = arg_list.front();
    arg_list.erase(arg_list.begin());
  }
  step.inputs = std::move(arg_list);

  auto bracket = rest.find('[', arrow);
  if (bracket == std::string::npos) throw ParseError(line, "STEP needs [d=.., p<=..]");
  step.output.name = strip(rest.substr(arrow + 2, bracket - arrow - 2));
  if (step.output.name.empty()) throw ParseError(line, "STEP needs an output name");
  parse_attributes(rest.substr(bracket), line, step.output);
  script.steps.push_back(std::move(step));
}

std::string term_attrs(const ClassTerm& t) {
  std::ostringstream out;
  out << "[d=" << t.degree << ", p<=" << t.perv_bound << "]";
  if (t.balanced) out << " balanced";
  return out.str();
}

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto space_pos = line.find(' ');
    std::string head = line.substr(0, space_pos);
    std::string rest = space_pos == std::string::npos ? "" : strip(line.substr(space_pos));
    if (head == "SPACE") {
      parse_space(rest, line_no, script);
    } else if (head == "PRODUCT") {
      parse_product(rest, line_no, script);
    } else if (head == "MAP") {
      parse_map(rest, line_no, script);
    } else if (head == "AXIOM") {
      parse_axiom(rest, line_no, script);
    } else if (head == "STEP") {
      parse_step(rest, line_no, script);
    } else {
      throw ParseError(line_no, "unknown directive '" + head + "'");
    }
  }
  return script;
}

std::string to_dsl(const Script& script) {
  std::ostringstream out;
  for (const SpaceDecl& sp : script.spaces) {
    out << "SPACE " << sp.name << " r=" << sp.relative_dim;
    if (sp.multiplicative) out << " mult";
    if (sp.strongly_multiplicative) out << " strong";
    out << '\n';
  }
  for (const auto& pr : script.products)
    out << "PRODUCT " << pr[0] << " = " << pr[1] << " x " << pr[2] << '\n';
  for (const MapDecl& m : script.maps) {
    out << "MAP " << m.name << " : " << m.source << " -> " << m.target << ' '
        << (m.transport == Transport::pullback ? "pullback" : "pushforward");
    if (m.bound_shift != 0) out << " dp=" << m.bound_shift;
    if (m.degree_shift != 0) out << " dd=" << m.degree_shift;
    out << '\n';
  }
  for (const auto& [term, unused] : script.axioms) {
    out << "AXIOM " << term.name << " ON " << term.space << ' ' << term_attrs(term)
        << '\n';
  }
  for (const DerivationStep& step : script.steps) {
    out << "STEP " << step.id << ": " << rule_name(step.rule) << '(';
    bool first = true;
    if (!step.map.empty()) {
      out << step.map;
      first = false;
    }
    for (const std::string& in : step.inputs) {
      if (!first) out << ", ";
      out << in;
      first = false;
    }
    out << ") => " << step.output.name << ' ' << term_attrs(step.output);
    if (!step.justification.empty()) out << "  # " << step.justification;
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Script& script) {
  nlohmann::json j;
  j["spaces"] = nlohmann::json::array();
  for (const SpaceDecl& sp : script.spaces)
    j["spaces"].push_back({{"name", sp.name},
                           {"relative_dim", sp.relative_dim},
                           {"multiplicative", sp.multiplicative},
                           {"strongly_multiplicative", sp.strongly_multiplicative}});
  j["products"] = nlohmann::json::array();
  for (const auto& pr : script.products)
    j["products"].push_back({{"product", pr[0]}, {"a", pr[1]}, {"b", pr[2]}});
  j["maps"] = nlohmann::json::array();
  for (const MapDecl& m : script.maps)
    j["maps"].push_back({{"name", m.name},
                         {"source", m.source},
                         {"target", m.target},
                         {"transport", m.transport == Transport::pullback ? "pullback"
                                                                          : "pushforward"},
                         {"bound_shift", m.bound_shift},
                         {"degree_shift", m.degree_shift}});
  j["axioms"] = nlohmann::json::array();
  for (const auto& [term, just] : script.axioms)
    j["axioms"].push_back({{"name", term.name},
                           {"space", term.space},
                           {"d", term.degree},
                           {"p_bound", term.perv_bound},
                           {"balanced", term.balanced},
                           {"justification", just}});
  j["steps"] = nlohmann::json::array();
  for (const DerivationStep& step : script.steps) {
    nlohmann::json s = {{"id", step.id},
                        {"rule", rule_name(step.rule)},
                        {"inputs", step.inputs},
                        {"output",
                         {{"name", step.output.name},
                          {"space", step.output.space},
                          {"d", step.output.degree},
                          {"p_bound", step.output.perv_bound},
                          {"balanced", step.output.balanced}}},
                        {"justification", step.justification}};
    if (!step.map.empty()) s["map"] = step.map;
    j["steps"].push_back(std::move(s));
  }
  return j;
}

Script script_from_json(const nlohmann::json& j) {
  Script script;
  for (const auto& sp : j.value("spaces", nlohmann::json::array())) {
    script.spaces.push_back(SpaceDecl{sp.at("name").get<std::string>(),
                                      sp.at("relative_dim").get<int>(),
                                      sp.value("multiplicative", false),
                                      sp.value("strongly_multiplicative", false)});
  }
  for (const auto& pr : j.value("products", nlohmann::json::array()))
    script.products.push_back({pr.at("product").get<std::string>(),
                               pr.at("a").get<std::string>(),
                               pr.at("b").get<std::string>()});
  for (const auto& m : j.value("maps", nlohmann::json::array())) {
    MapDecl decl;
    decl.name = m.at("name").get<std::string>();
    decl.source = m.at("source").get<std::string>();
    decl.target = m.at("target").get<std::string>();
    decl.transport = m.at("transport").get<std::string>() == "pullback"
                         ? Transport::pullback
                         : Transport::pushforward;
    decl.bound_shift = m.value("bound_shift", 0);
    decl.degree_shift = m.value("degree_shift", 0);
    script.maps.push_back(std::move(decl));
  }
  for (const auto& a : j.value("axioms", nlohmann::json::array())) {
    ClassTerm term;
    term.name = a.at("name").get<std::string>();
    term.space = a.at("space").get<std::string>();
    term.degree = a.at("d").get<int>();
    term.perv_bound = a.at("p_bound").get<int>();
    term.balanced = a.value("balanced", false);
    script.axioms.emplace_back(std::move(term), a.value("justification", std::string()));
  }
  for (const auto& s : j.value("steps", nlohmann::json::array())) {
    DerivationStep step;
    step.id = s.at("id").get<int>();
    step.rule = rule_from_name(s.at("rule").get<std::string>());
    step.map = s.value("map", std::string());
    step.inputs = s.at("inputs").get<std::vector<std::string>>();
    const auto& o = s.at("output");
    step.output.name = o.at("name").get<std::string>();
    step.output.space = o.value("space", std::string());
    step.output.degree = o.at("d").get<int>();
    step.output.perv_bound = o.at("p_bound").get<int>();
    step.output.balanced = o.value("balanced", false);
    step.justification = s.value("justification", std::string());
    script.steps.push_back(std::move(step));
  }
  return script;
}

Verdict check_derivation(const Script& script) {
  Calculus calc;
  return check_derivation(calc, script);
}

Verdict check_derivation(const Calculus& base, const Script& script) {
  Calculus calc = base;
  Verdict verdict;
  try {
    for (const SpaceDecl& sp : script.spaces) calc.declare_space(sp);
    for (const auto& pr : script.products) calc.declare_product(pr[0], pr[1], pr[2]);
    for (const MapDecl& m : script.maps) calc.register_map(m);
    for (const auto& [term, just] : script.axioms) calc.register_axiom(term, just);
  } catch (const CalcError& e) {
    verdict.message = std::string("declaration error: ") + e.what();
    return verdict;
  }

  Derivation deriv(calc);
  for (const DerivationStep& step : script.steps) {
    if (step.id != static_cast<int>(deriv.steps().size()) + 1) {
      verdict.failing_step = step.id;
      verdict.message = "steps must be numbered consecutively from 1";
      return verdict;
    }
    ClassTerm recomputed;
    try {
      int id = deriv.add(step.rule, step.inputs, step.output.name, step.justification,
                         step.map);
      recomputed = deriv.term(id);
    } catch (const CalcError& e) {
      verdict.failing_step = step.id;
      verdict.message = e.what();
      return verdict;
    }
    if (recomputed.degree != step.output.degree ||
        recomputed.perv_bound != step.output.perv_bound) {
      std::ostringstream msg;
      msg << "step " << step.id << ": claimed [d=" << step.output.degree
          << ", p<=" << step.output.perv_bound << "] but the rule recomputes to [d="
          << recomputed.degree << ", p<=" << recomputed.perv_bound << "]";
      verdict.failing_step = step.id;
      verdict.message = msg.str();
      return verdict;
    }
    if (step.output.balanced && !recomputed.balanced) {
      verdict.failing_step = step.id;
      verdict.message = "step " + std::to_string(step.id) +
                        ": claimed balanced but the rule does not propagate it";
      return verdict;
    }
  }
  verdict.accepted = true;
  return verdict;
}

}  // namespace pervhilb::calc
