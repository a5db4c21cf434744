#include "pervhilb/verify.hpp"

#include <sstream>

namespace pervhilb {

namespace {

// First monomial where two polynomials disagree, rendered for diagnostics.
std::string first_mismatch(const Poly& a, const Poly& b, int n) {
  Poly diff = a - b;
  if (diff.is_zero()) return {};
  const auto& [mono, coeff] = *diff.terms().begin();
  std::ostringstream out;
  out << "first mismatching coefficient at s^" << n << ", monomial " << mono.str()
      << ": series gives " << a.coeff(mono) << ", table gives " << b.coeff(mono);
  return out.str();
}

CheckResult oracle_equivalence(const PervBettiTable& surface, int n_max, int trunc) {
  CheckResult r{"oracle-equivalence", true, {}};
  const TruncatedSeries series = hilb_series(surface, trunc);
  for (int n = 0; n <= n_max; ++n) {
    const Poly from_series = series.coefficient_of_s(n);
    const Poly from_table = hilb_table(surface, n).to_poly();
    if (from_series == from_table) continue;
    r.pass = false;
    r.detail = first_mismatch(from_series, from_table, n);
    return r;
  }
  return r;
}

CheckResult gottsche_specialization(const PervBettiTable& surface, int trunc) {
  CheckResult r{"gottsche-specialization", true, {}};
  Substitution q_one;
  q_one.assign(Var::q, Int(1));
  const TruncatedSeries specialized = substitute(hilb_series(surface, trunc), q_one);

  // Independent route: the classical product driven by the degree marginals
  // alone, never touching perversities.
  TruncatedSeries classical = TruncatedSeries::constant(trunc, Int(1));
  const std::vector<Int> b = surface.degree_marginals();
  for (int m = 1; m <= trunc; ++m) {
    for (std::size_t d = 0; d < b.size(); ++d) {
      if (b[d] == 0) continue;
      const Monomial mono = Monomial::sqt(m, 0, 2 * (m - 1) + static_cast<int>(d));
      const int dim = static_cast<int>(b[d].convert_to<long long>());
      const TruncatedSeries factor = d % 2 == 0
                                         ? geometric_factor(mono, -dim, Sign::minus, trunc)
                                         : geometric_factor(mono, dim, Sign::plus, trunc);
      classical = mul(classical, factor);
    }
  }
  if (specialized == classical) return r;
  r.pass = false;
  for (int n = 0; n <= trunc; ++n) {
    if (specialized.coefficient_of_s(n) == classical.coefficient_of_s(n)) continue;
    r.detail = first_mismatch(specialized.coefficient_of_s(n),
                              classical.coefficient_of_s(n), n);
    break;
  }
  return r;
}

CheckResult nested_consistency(const PervBettiTable& surface) {
  CheckResult r{"nested-consistency", true, {}};
  const PervBettiTable lhs = nested_table(surface, 1);
  const PervBettiTable rhs = direct_sum(kunneth(surface, surface), shift(surface, 1, 2));
  if (lhs == rhs) return r;
  r.pass = false;
  r.detail = "nested table of (1,2) differs from the blow-up decomposition";
  return r;
}

CheckResult curious_lefschetz(const PervBettiTable& surface, int n_max) {
  CheckResult r{"curious-hard-lefschetz", true, {}};
  for (int n = 1; n <= n_max; ++n) {
    const PervBettiTable table = hilb_table(surface, n);
    for (const auto& [key, dim] : table.entries()) {
      const int p2 = 2 * n - key.p;
      const int d2 = key.d + 2 * (n - key.p);
      if (p2 >= 0 && d2 >= 0 && table.at(p2, d2) == dim) continue;
      r.pass = false;
      std::ostringstream out;
      out << "n=" << n << ": entry (p=" << key.p << ", d=" << key.d << ") has dim " << dim
          << " but its mirror (p=" << p2 << ", d=" << d2 << ") has dim "
          << (p2 >= 0 && d2 >= 0 ? table.at(p2, d2) : Int(-1));
      r.detail = out.str();
      return r;
    }
  }
  return r;
}

CheckResult perversity_range(const PervBettiTable& surface, int n_max) {
  CheckResult r{"perversity-range", true, {}};
  for (int n = 0; n <= n_max; ++n) {
    const PervBettiTable table = hilb_table(surface, n);
    for (const auto& [key, dim] : table.entries()) {
      if (key.p <= 2 * n && key.d <= 2 * n) continue;
      r.pass = false;
      std::ostringstream out;
      out << "n=" << n << ": entry (p=" << key.p << ", d=" << key.d
          << ") leaves the range [0, 2n]";
      r.detail = out.str();
      return r;
    }
  }
  return r;
}

CheckResult factor_form(Family f, int trunc) {
  CheckResult r{"series-factor-form", true, {}};
  const auto actual = hilb_series_factors(family(f).surface, trunc);
  const auto expected = family_closed_form_factors(f, trunc);
  if (actual.size() != expected.size()) {
    r.pass = false;
    r.detail = "factor lists have different lengths";
    return r;
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i].m == expected[i].m && actual[i].exponent == expected[i].exponent &&
        actual[i].sign == expected[i].sign)
      continue;
    r.pass = false;
    r.detail = "factor " + std::to_string(i) + " differs from the closed form";
    return r;
  }
  return r;
}

CheckResult betti_consistency(Family f, int n_max, int trunc) {
  CheckResult r{"total-betti-consistency", true, {}};
  Substitution qt_one;
  qt_one.assign(Var::q, Int(1)).assign(Var::t, Int(1));
  const TruncatedSeries counts = substitute(family_series(f, trunc), qt_one);
  for (int n = 0; n <= n_max; ++n) {
    const Int from_series = counts.coefficient_of_s(n).coeff(Monomial::one());
    const Int from_table = hilb_table(family(f).surface, n).total_dim();
    if (from_series == from_table) continue;
    r.pass = false;
    std::ostringstream out;
    out << "n=" << n << ": series counts " << from_series << ", table counts "
        << from_table;
    r.detail = out.str();
    return r;
  }
  return r;
}

}  // namespace

std::vector<SeriesFactor> family_closed_form_factors(Family f, int trunc) {
  std::vector<SeriesFactor> factors;
  const FamilySpec& spec = family(f);
  for (int m = 1; m <= trunc; ++m) {
    factors.push_back({Monomial::sqt(m, m - 1, 2 * m - 2), -1, Sign::minus});
    if (!spec.K) {
      factors.push_back({Monomial::sqt(m, m, 2 * m - 1), 2, Sign::plus});
    } else {
      factors.push_back({Monomial::sqt(m, m, 2 * m), -*spec.K, Sign::minus});
    }
    factors.push_back({Monomial::sqt(m, m + 1, 2 * m), -1, Sign::minus});
  }
  return factors;
}

std::vector<CheckResult> verify_surface(const PervBettiTable& surface, int n_max,
                                        int trunc) {
  std::vector<CheckResult> out;
  out.push_back(oracle_equivalence(surface, n_max, trunc));
  out.push_back(gottsche_specialization(surface, trunc));
  out.push_back(nested_consistency(surface));
  return out;
}

std::vector<CheckResult> verify_family(Family f, int n_max, int trunc) {
  const PervBettiTable& surface = family(f).surface;
  std::vector<CheckResult> out = verify_surface(surface, n_max, trunc);
  out.push_back(curious_lefschetz(surface, std::min(n_max, 8)));
  out.push_back(perversity_range(surface, n_max));
  out.push_back(factor_form(f, std::min(trunc, 4)));
  out.push_back(betti_consistency(f, n_max, trunc));
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace pervhilb
