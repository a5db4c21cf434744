#include "pervhilb/hilb.hpp"

#include <stdexcept>

namespace pervhilb {

namespace {

void require_surface(const PervBettiTable& surface, const char* who) {
  if (!surface.is_surface_table())
    throw std::invalid_argument(std::string(who) +
                                ": surface tables carry perversities in {0,1,2}");
}

}  // namespace

PervBettiTable sym_stratum_table(const PervBettiTable& surface, const Partition& nu) {
  PervBettiTable out = PervBettiTable::point();
  for (int j = 1; j <= nu.max_part(); ++j) {
    const int a = nu.multiplicity(j);
    if (a == 0) continue;
    out = kunneth(out, sym_power(surface, a));
  }
  return out;
}

PervBettiTable hilb_table(const PervBettiTable& surface, int n) {
  require_surface(surface, "hilb_table");
  if (n < 0) throw std::invalid_argument("hilb_table: negative n");
  PervBettiTable out;
  for (const Partition& nu : partitions(n)) {
    const int l = nu.length();
    out = direct_sum(out, shift(sym_stratum_table(surface, nu), n - l, 2 * (n - l)));
  }
  return out;
}

std::vector<SeriesFactor> hilb_series_factors(const PervBettiTable& surface, int trunc) {
  require_surface(surface, "hilb_series");
  if (trunc < 0) throw std::invalid_argument("hilb_series: negative truncation");
  std::vector<SeriesFactor> factors;
  for (int m = 1; m <= trunc; ++m) {
    for (const auto& [key, dim] : surface.entries()) {
      SeriesFactor f;
      f.m = Monomial::sqt(m, m - 1 + key.p, 2 * (m - 1) + key.d);
      const long long dim_ll = dim.convert_to<long long>();
      if (key.d % 2 == 0) {
        f.sign = Sign::minus;
        f.exponent = static_cast<int>(-dim_ll);
      } else {
        f.sign = Sign::plus;
        f.exponent = static_cast<int>(dim_ll);
      }
      factors.push_back(f);
    }
  }
  return factors;
}

TruncatedSeries hilb_series(const PervBettiTable& surface, int trunc) {
  TruncatedSeries out = TruncatedSeries::constant(trunc, Int(1));
  for (const SeriesFactor& f : hilb_series_factors(surface, trunc))
    out = mul(out, geometric_factor(f.m, f.exponent, f.sign, trunc));
  return out;
}

std::vector<NestedStratum> nested_strata(int n) {
  if (n < 0) throw std::invalid_argument("nested_strata: negative n");
  std::vector<NestedStratum> out;
  for (const Partition& nu : partitions(n)) {
    const int l = nu.length();
    out.push_back(NestedStratum{nu, 0, n - l});
    for (int j = 1; j <= n; ++j) {
      if (nu.multiplicity(j) >= 1) out.push_back(NestedStratum{nu, j, n + 1 - l});
    }
  }
  return out;
}

PervBettiTable nested_table(const PervBettiTable& surface, int n) {
  require_surface(surface, "nested_table");
  PervBettiTable out;
  for (const NestedStratum& st : nested_strata(n)) {
    const Partition base = st.j == 0 ? st.nu : st.nu.remove_one_part(st.j);
    PervBettiTable stratum = kunneth(sym_stratum_table(surface, base), surface);
    out = direct_sum(out, shift(stratum, st.m, 2 * st.m));
  }
  return out;
}

}  // namespace pervhilb
