#include "pervhilb/calc/theorem.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pervhilb/partition.hpp"

namespace pervhilb::calc {

namespace {

std::string hilb(int n) { return n == 1 ? "S" : "H" + std::to_string(n); }
std::string hilb_x_s(int n) { return n == 1 ? "SxS" : "H" + std::to_string(n) + "xS"; }
std::string hilb_x_s_x_s(int n) {
  return n == 1 ? "SxSxS" : "H" + std::to_string(n) + "xSxS";
}
std::string nested_x_s(int n) { return "N" + std::to_string(n) + "xS"; }
std::string bdry(int n) { return "bdry_" + std::to_string(n); }

std::string chz(int n, int k) {
  return n == 1 ? "chD_" + std::to_string(k)
                : "chZ_" + std::to_string(n) + "_" + std::to_string(k);
}

}  // namespace

const char* fixture_name(SurfaceFixture f) {
  return f == SurfaceFixture::elliptic ? "elliptic" : "p1xp1";
}

const Conclusion& Certificate::conclusion(int n, int k) const {
  for (const Conclusion& c : conclusions)
    if (c.n == n && c.k == k) return c;
  throw CalcError("no conclusion for (n, k)");
}

std::string Certificate::to_dsl() const {
  std::ostringstream out;
  out << "# universal-subscheme perversity bounds, fixture=" << fixture_name(options.fixture)
      << " n_max=" << options.n_max << " k_max=" << options.k_max << '\n';
  out << calc::to_dsl(script);
  for (const Conclusion& c : conclusions) {
    out << "# conclude n=" << c.n << " k=" << c.k << ": step " << c.step_id
        << " gives p<=" << c.bound << " in degree " << c.degree << '\n';
  }
  return out.str();
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["fixture"] = fixture_name(options.fixture);
  j["n_max"] = options.n_max;
  j["k_max"] = options.k_max;
  j["strong"] = options.strong;
  j["script"] = calc::to_json(script);
  j["conclusions"] = nlohmann::json::array();
  for (const Conclusion& c : conclusions)
    j["conclusions"].push_back({{"n", c.n},
                                {"k", c.k},
                                {"step", c.step_id},
                                {"d", c.degree},
                                {"p_bound", c.bound},
                                {"balanced", c.balanced}});
  return j;
}

Script fixture_declarations(SurfaceFixture fixture, int n_max, int k_max, bool strong) {
  if (n_max < 1) throw CalcError("fixture needs n_max >= 1");
  if (k_max < 0) throw CalcError("fixture needs k_max >= 0");
  Script decl;
  const bool mult = true;

  auto add_space = [&](const std::string& name, int r, bool multiplicative) {
    decl.spaces.push_back(SpaceDecl{name, r, multiplicative,
                                    multiplicative && strong});
  };
  add_space("S", 1, mult);
  add_space("SxS", 2, mult);
  decl.products.push_back({"SxS", "S", "S"});
  if (n_max >= 2) {
    add_space("SxSxS", 3, mult);
    decl.products.push_back({"SxSxS", "SxS", "S"});
  }
  for (int n = 2; n <= n_max; ++n) {
    add_space(hilb(n), n, mult);
    add_space(hilb_x_s(n), n + 1, mult);
    decl.products.push_back({hilb_x_s(n), hilb(n), "S"});
    if (n < n_max) {
      add_space(hilb_x_s_x_s(n), n + 2, mult);
      decl.products.push_back({hilb_x_s_x_s(n), hilb_x_s(n), "S"});
      decl.products.push_back({hilb_x_s_x_s(n), hilb(n), "SxS"});
    }
  }
  for (int n = 1; n < n_max; ++n) {
    // Nested Hilbert scheme times the surface, fibered over C^(n) x C x C.
    add_space(nested_x_s(n), n + 2, false);
  }

  // Small-diagonal pushforward: perversity climbs by twice the codimension,
  // degree by twice the real codimension.
  decl.maps.push_back(MapDecl{"diag", "S", "SxS", Transport::pushforward, 2, 4,
                              "small-diagonal pushforward"});
  for (int n = 1; n < n_max; ++n) {
    decl.maps.push_back(MapDecl{"q" + std::to_string(n), nested_x_s(n),
                                hilb_x_s_x_s(n), Transport::pullback, 0, 0,
                                "blow-down to the universal subscheme preserves "
                                "the perverse filtration"});
    decl.maps.push_back(MapDecl{"p" + std::to_string(n + 1), nested_x_s(n),
                                hilb_x_s(n + 1), Transport::pushforward, 0, 0,
                                "generically finite projection preserves the "
                                "perverse filtration"});
  }

  auto add_axiom = [&](std::string name, std::string space, int d, int p,
                       bool balanced, std::string why) {
    ClassTerm t;
    t.name = std::move(name);
    t.space = std::move(space);
    t.degree = d;
    t.perv_bound = p;
    t.balanced = balanced;
    decl.axioms.emplace_back(std::move(t), std::move(why));
  };

  add_axiom("one_S", "S", 0, 0, true, "fundamental class sits in the zeroth piece");
  if (fixture == SurfaceFixture::elliptic) {
    add_axiom("c1_S", "S", 2, 1, true,
              "canonical class is supported on fibers of the elliptic fibration");
  } else {
    add_axiom("c1_S", "S", 2, 2, false,
              "canonical class of the quadric is not fiber-supported");
  }
  add_axiom("top_S", "S", 4, 2, true, "top degree; the filtration ends at 2r");
  add_axiom("ch0_diag", "SxS", 0, 0, true, "rank term of the diagonal sheaf vanishes");
  add_axiom("ch1_diag", "SxS", 2, 1, true,
            "first Chern class of the diagonal sheaf vanishes");
  for (int k = 5; k <= k_max; ++k) {
    add_axiom("ch" + std::to_string(k) + "_diag_zero", "SxS", 2 * k, 4, true,
              "vanishes: degree exceeds the dimension of the product");
  }
  add_axiom(bdry(1), "S", 2, 1, true,
            "length-one subschemes are reduced; the boundary class is zero");
  for (int n = 2; n <= n_max; ++n) {
    add_axiom(bdry(n), hilb(n), 2, 1, true,
              "boundary divisor of non-reduced subschemes has perversity one");
    add_axiom("one_" + hilb(n), hilb(n), 0, 0, true,
              "fundamental class sits in the zeroth piece");
  }
  return decl;
}

Certificate derive_universal_bound(const InductionOptions& options) {
  Certificate cert;
  cert.options = options;
  cert.script = fixture_declarations(options.fixture, options.n_max, options.k_max,
                                     options.strong);
  if (!options.axiom_bound_overrides.empty()) {
    std::map<std::string, int> caps;
    for (const SpaceDecl& sp : cert.script.spaces) caps[sp.name] = 2 * sp.relative_dim;
    for (auto& [term, just] : cert.script.axioms) {
      auto it = options.axiom_bound_overrides.find(term.name);
      if (it == options.axiom_bound_overrides.end()) continue;
      term.perv_bound = std::clamp(it->second, 0, caps.at(term.space));
      term.balanced = false;  // an overridden bound carries no membership claim
    }
  }

  Calculus calc;
  for (const SpaceDecl& sp : cert.script.spaces) calc.declare_space(sp);
  for (const auto& pr : cert.script.products) calc.declare_product(pr[0], pr[1], pr[2]);
  for (const MapDecl& m : cert.script.maps) calc.register_map(m);
  for (const auto& [term, just] : cert.script.axioms) calc.register_axiom(term, just);

  Derivation deriv(calc);
  auto ref = [](int id) { return std::to_string(id); };

  // ---- base case: Chern characters of the diagonal sheaf on S x S ----
  std::map<int, int> chD;  // k -> step id
  chD[0] = deriv.add(Rule::axiom, {"ch0_diag"}, chz(1, 0), "vanishing rank term");
  if (options.k_max >= 1)
    chD[1] = deriv.add(Rule::axiom, {"ch1_diag"}, chz(1, 1), "vanishing first Chern class");
  if (options.k_max >= 2)
    chD[2] = deriv.add(Rule::pushforward, {"one_S"}, chz(1, 2),
                       "diagonal class as pushforward of the fundamental class", "diag");
  if (options.k_max >= 3)
    chD[3] = deriv.add(Rule::pushforward, {"c1_S"}, chz(1, 3),
                       "Riemann-Roch: the degree-6 part is proportional to the "
                       "diagonal pushforward of c1",
                       "diag");
  if (options.k_max >= 4)
    chD[4] = deriv.add(Rule::pushforward, {"top_S"}, chz(1, 4),
                       "Riemann-Roch tail in top degree", "diag");
  for (int k = 5; k <= options.k_max; ++k)
    chD[k] = deriv.add(Rule::axiom, {"ch" + std::to_string(k) + "_diag_zero"},
                       chz(1, k), "zero class beyond the top degree");
  for (int k = 0; k <= options.k_max; ++k) {
    const ClassTerm& t = deriv.term(chD[k]);
    cert.conclusions.push_back({1, k, chD[k], t.degree, t.perv_bound, t.balanced});
  }

  if (options.n_max == 1) {
    cert.script.steps = deriv.steps();
    return cert;
  }

  const int one_sxs = deriv.add(Rule::kunneth, {"one_S", "one_S"}, "one_SxS",
                                "fundamental class of the surface square");

  // chZ[k] -> step id of ch_k of the universal subscheme at the current n
  std::map<int, int> chZ = chD;

  for (int n = 1; n < options.n_max; ++n) {
    const std::string qn = "q" + std::to_string(n);
    const std::string pn1 = "p" + std::to_string(n + 1);

    // Boundary classes spread to the product spaces.
    const int bdry_x =
        deriv.add(Rule::kunneth, {bdry(n), ref(one_sxs)},
                  "bdryx_" + std::to_string(n),
                  "boundary divisor of the length-" + std::to_string(n) +
                      " factor times the fundamental class");
    const int bdry_s =
        deriv.add(Rule::kunneth, {bdry(n + 1), "one_S"},
                  "bdrys_" + std::to_string(n + 1),
                  "boundary divisor of the length-" + std::to_string(n + 1) +
                      " factor times the fundamental class");

    // gamma' factors: powers of the boundary divisor upstairs.
    std::map<int, int> bpow;  // j >= 1 -> step id
    bpow[1] = bdry_s;
    for (int j = 2; j <= options.k_max; ++j) {
      std::vector<std::string> ins(static_cast<std::size_t>(j), ref(bdry_s));
      bpow[j] = deriv.add(Rule::cup, std::move(ins),
                          "bpow_" + std::to_string(n + 1) + "_" + std::to_string(j),
                          "power of the exceptional-divisor summand supported "
                          "upstairs (exceptional divisor relation)");
    }

    // Kunneth spreads of the diagonal Chern characters.
    std::map<int, int> gkun;  // k1 -> step id
    for (int k1 = 0; k1 <= options.k_max; ++k1) {
      gkun[k1] = deriv.add(
          Rule::kunneth, {n == 1 ? "one_S" : "one_" + hilb(n), ref(chD[k1])},
          "gk_" + std::to_string(n) + "_" + std::to_string(k1),
          "diagonal Chern character spread over the Hilbert factor");
    }

    std::map<int, int> next;
    for (int k = 0; k <= options.k_max; ++k) {
      std::ostringstream nk;
      nk << n + 1 << "_" << k;

      // term 1: the untwisted summand of the comparison sequence
      const int t1a = deriv.add(Rule::kunneth, {ref(chZ[k]), "one_S"},
                                "t1a_" + nk.str(),
                                "universal-subscheme Chern character times the "
                                "fundamental class of the extra factor");
      const int t1b = deriv.add(Rule::pullback, {ref(t1a)}, "t1b_" + nk.str(),
                                "pullback along the blow-down", qn);
      const int t1c = deriv.add(Rule::pushforward, {ref(t1b)}, "t1c_" + nk.str(),
                                "projection formula: pushforward to the larger "
                                "Hilbert scheme",
                                pn1);

      std::vector<std::string> pieces{ref(t1c)};
      for (int k1 = 0; k1 <= k; ++k1) {
        const int k2 = k - k1;
        for (int j = 0; j <= k2; ++j) {
          std::ostringstream tag;
          tag << n + 1 << "_" << k1 << "_" << k2 << "_" << j;
          int g = gkun[k1];
          if (k2 - j > 0) {
            std::vector<std::string> ins{ref(gkun[k1])};
            ins.insert(ins.end(), static_cast<std::size_t>(k2 - j), ref(bdry_x));
            g = deriv.add(Rule::cup, std::move(ins), "g_" + tag.str(),
                          "diagonal term cupped with boundary powers from the "
                          "exceptional divisor relation");
          }
          const int pv = deriv.add(Rule::pullback, {ref(g)}, "pv_" + tag.str(),
                                   "pullback along the blow-down", qn);
          const int pw = deriv.add(Rule::pushforward, {ref(pv)}, "pw_" + tag.str(),
                                   "projection formula: pushforward to the larger "
                                   "Hilbert scheme",
                                   pn1);
          int t = pw;
          if (j > 0) {
            t = deriv.add(Rule::cup, {ref(bpow[j]), ref(pw)}, "t_" + tag.str(),
                          "projection formula: the upstairs factor stays outside "
                          "the pushforward");
          }
          pieces.push_back(ref(t));
        }
      }
      next[k] = deriv.add(Rule::linear_combination, std::move(pieces), chz(n + 1, k),
                          "comparison sequence of universal families, exceptional "
                          "divisor relation, and projection formula");
      const ClassTerm& t = deriv.term(next[k]);
      cert.conclusions.push_back({n + 1, k, next[k], t.degree, t.perv_bound, t.balanced});
    }
    chZ = std::move(next);
  }

  cert.script.steps = deriv.steps();
  return cert;
}

std::vector<Conclusion> append_chern_class_bounds(Certificate& cert) {
  Calculus calc;
  for (const SpaceDecl& sp : cert.script.spaces) calc.declare_space(sp);
  for (const auto& pr : cert.script.products) calc.declare_product(pr[0], pr[1], pr[2]);
  for (const MapDecl& m : cert.script.maps) calc.register_map(m);
  for (const auto& [term, just] : cert.script.axioms) calc.register_axiom(term, just);

  Derivation deriv(calc);
  for (const DerivationStep& step : cert.script.steps)
    deriv.add(step.rule, step.inputs, step.output.name, step.justification, step.map);

  std::vector<Conclusion> out;
  for (int n = 1; n <= cert.options.n_max; ++n) {
    for (int k = 0; k <= cert.options.k_max; ++k) {
      std::ostringstream name;
      name << (n == 1 ? "cD_" : "cZ_");
      if (n > 1) name << n << "_";
      name << k;
      std::vector<std::string> pieces;
      for (const pervhilb::Partition& lambda : pervhilb::partitions(k)) {
        std::vector<std::string> monomial;
        for (int j = 1; j <= lambda.max_part(); ++j) {
          for (int rep = 0; rep < lambda.multiplicity(j); ++rep)
            monomial.push_back(std::to_string(cert.conclusion(n, j).step_id));
        }
        if (monomial.size() <= 1) {
          pieces.push_back(monomial.empty()
                               ? std::to_string(cert.conclusion(n, k).step_id)
                               : monomial.front());
        } else {
          const int id = deriv.add(Rule::cup, std::move(monomial),
                                   name.str() + "_mon" + std::to_string(pieces.size()),
                                   "Newton monomial in the Chern characters");
          pieces.push_back(std::to_string(id));
        }
      }
      const int id = deriv.add(Rule::linear_combination, std::move(pieces), name.str(),
                               "Chern class as a polynomial in the characters");
      const ClassTerm& term = deriv.term(id);
      out.push_back({n, k, id, term.degree, term.perv_bound, term.balanced});
    }
  }
  cert.script.steps = deriv.steps();
  return out;
}

}  // namespace pervhilb::calc
