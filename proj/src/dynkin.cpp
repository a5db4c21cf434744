#include "pervhilb/dynkin.hpp"

#include <sstream>
#include <stdexcept>

namespace pervhilb {

namespace {

FamilySpec make_spec(Family id, std::string name, std::optional<int> K) {
  FamilySpec spec;
  spec.id = id;
  spec.name = std::move(name);
  spec.K = K;
  if (!K) {
    // Elliptic member: H^0 = 1, H^1 = 2 at perversity 1, H^2 = 1 at
    // perversity 2 (the fibration is the projection off the elliptic curve).
    spec.surface.add(0, 0, 1);
    spec.surface.add(1, 1, 2);
    spec.surface.add(2, 2, 1);
    spec.orb_dim = 4;
  } else {
    // Resolution member: K exceptional curves at perversity 1, the section
    // class at perversity 2.
    spec.surface.add(0, 0, 1);
    spec.surface.add(1, 2, *K);
    spec.surface.add(2, 2, 1);
    spec.orb_dim = *K + 2;
  }
  return spec;
}

const std::vector<FamilySpec>& specs() {
  static const std::vector<FamilySpec> all = {
      make_spec(Family::A0, "A0~", std::nullopt),
      make_spec(Family::D4, "D4~", 4),
      make_spec(Family::E6, "E6~", 6),
      make_spec(Family::E7, "E7~", 7),
      make_spec(Family::E8, "E8~", 8),
  };
  return all;
}

}  // namespace

const FamilySpec& family(Family f) {
  for (const FamilySpec& spec : specs())
    if (spec.id == f) return spec;
  throw std::invalid_argument("family: unknown family");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> ids = {Family::A0, Family::D4, Family::E6,
                                          Family::E7, Family::E8};
  return ids;
}

std::optional<Family> family_from_string(std::string_view s) {
  if (!s.empty() && s.back() == '~') s.remove_suffix(1);
  if (s == "A0") return Family::A0;
  if (s == "D4") return Family::D4;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  return std::nullopt;
}

TruncatedSeries family_series(Family f, int trunc) {
  return hilb_series(family(f).surface, trunc);
}

TruncatedSeries poincare_series(Family f, int trunc) {
  Substitution q_to_one;
  q_to_one.assign(Var::q, Int(1));
  return substitute(family_series(f, trunc), q_to_one);
}

Poly mixed_hodge_polynomial(Family f, int n) {
  if (n < 0) throw std::invalid_argument("mixed_hodge_polynomial: negative n");
  Substitution q_to_xy;
  Monomial xy;
  xy[Var::x] = 1;
  xy[Var::y] = 1;
  q_to_xy.assign(Var::q, xy);
  return substitute(family_series(f, n).coefficient_of_s(n), q_to_xy);
}

std::string export_csv(Family f, int n_max) {
  if (n_max < 0) throw std::invalid_argument("export: negative n_max");
  const FamilySpec& spec = family(f);
  std::ostringstream out;
  out << "family,n,p,d,dim\n";
  for (int n = 0; n <= n_max; ++n) {
    const PervBettiTable table = hilb_table(spec.surface, n);
    for (const auto& [key, dim] : table.entries()) {
      out << spec.name << ',' << n << ',' << key.p << ',' << key.d << ','
          << dim << '\n';
    }
  }
  return out.str();
}

nlohmann::json export_json(Family f, int n_max) {
  if (n_max < 0) throw std::invalid_argument("export: negative n_max");
  const FamilySpec& spec = family(f);
  nlohmann::json doc;
  doc["family"] = spec.name;
  if (spec.K) doc["K"] = *spec.K;
  doc["orb_dim"] = spec.orb_dim;
  doc["p_label"] = "perversity (= weight/2 under P=W)";

  nlohmann::json tables = nlohmann::json::array();
  nlohmann::json mhps = nlohmann::json::array();
  nlohmann::json poincare = nlohmann::json::array();
  nlohmann::json epoly = nlohmann::json::array();

  Substitution t_minus_one;
  t_minus_one.assign(Var::t, Int(-1));
  Substitution q_one;
  q_one.assign(Var::q, Int(1));

  for (int n = 0; n <= n_max; ++n) {
    const PervBettiTable table = hilb_table(spec.surface, n);
    tables.push_back({{"n", n}, {"entries", table.to_json()}});
    const Poly mhp = mixed_hodge_polynomial(f, n);
    mhps.push_back({{"n", n}, {"poly", mhp.str()}});
    poincare.push_back({{"n", n}, {"poly", substitute(table.to_poly(), q_one).str()}});
    epoly.push_back({{"n", n}, {"poly", substitute(mhp, t_minus_one).str()}});
  }
  doc["tables"] = std::move(tables);
  doc["mhp"] = std::move(mhps);
  doc["poincare"] = std::move(poincare);
  doc["e_polynomial"] = std::move(epoly);
  return doc;
}

}  // namespace pervhilb
