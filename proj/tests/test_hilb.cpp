#include <doctest.h>

#include <random>

#include "pervhilb/hilb.hpp"

using namespace pervhilb;

namespace {

PervBettiTable a0_surface() {
  PervBettiTable t;
  t.add(0, 0, 1);
  t.add(1, 1, 2);
  t.add(2, 2, 1);
  return t;
}

PervBettiTable d4_surface() {
  PervBettiTable t;
  t.add(0, 0, 1);
  t.add(1, 2, 4);
  t.add(2, 2, 1);
  return t;
}

PervBettiTable random_surface(std::mt19937& rng) {
  std::uniform_int_distribution<int> keep(0, 2), dim(1, 3);
  PervBettiTable t;
  for (int p = 0; p <= 2; ++p)
    for (int d = 0; d <= 4; ++d)
      if (keep(rng) == 0) t.add(p, d, dim(rng));
  if (t.empty()) t.add(0, 0, 1);
  return t;
}

}  // namespace

TEST_CASE("sym_stratum_table: single parts and mixed partitions") {
  const PervBettiTable a0 = a0_surface();
  CHECK(sym_stratum_table(a0, Partition({1})) == a0);
  CHECK(sym_stratum_table(a0, Partition({2})) == sym_power(a0, 2));
  // 1^1 2^1: both symmetric powers are first powers
  CHECK(sym_stratum_table(a0, Partition({1, 1})) == kunneth(a0, a0));
  CHECK(sym_stratum_table(a0, Partition::empty()) == PervBettiTable::point());
}

TEST_CASE("hilb_table: small goldens") {
  const PervBettiTable a0 = a0_surface();
  CHECK(hilb_table(a0, 0) == PervBettiTable::point());
  CHECK(hilb_table(a0, 1) == a0);

  PervBettiTable a0_2;
  a0_2.add(0, 0, 1);
  a0_2.add(1, 1, 2);
  a0_2.add(1, 2, 1);
  a0_2.add(2, 2, 2);
  a0_2.add(2, 3, 2);
  a0_2.add(3, 3, 2);
  a0_2.add(3, 4, 1);
  a0_2.add(4, 4, 1);
  CHECK(hilb_table(a0, 2) == a0_2);

  PervBettiTable d4_2;
  d4_2.add(0, 0, 1);
  d4_2.add(1, 2, 5);
  d4_2.add(2, 2, 1);
  d4_2.add(2, 4, 14);
  d4_2.add(3, 4, 5);
  d4_2.add(4, 4, 1);
  CHECK(hilb_table(d4_surface(), 2) == d4_2);
}

TEST_CASE("hilb_table rejects non-surface input") {
  PervBettiTable bad;
  bad.add(3, 2, 1);
  CHECK_THROWS_AS(hilb_table(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(hilb_series(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(nested_table(bad, 1), std::invalid_argument);
}

TEST_CASE("oracle equivalence: product series vs partition sum") {
  // The module's core theorem-level test: the s^n coefficient of the
  // product equals the (q, t)-polynomial of the partition-sum table.
  std::mt19937 rng(117);
  std::vector<PervBettiTable> inputs = {a0_surface(), d4_surface()};
  for (int trial = 0; trial < 8; ++trial) inputs.push_back(random_surface(rng));
  const int N = 5;
  for (const PervBettiTable& surface : inputs) {
    const TruncatedSeries series = hilb_series(surface, N);
    for (int n = 0; n <= N; ++n)
      CHECK(series.coefficient_of_s(n) == hilb_table(surface, n).to_poly());
  }
}

TEST_CASE("series factors carry the expected monomials") {
  // m-th factor block for the elliptic surface:
  // (1-s^m q^(m-1) t^(2m-2))^-1 (1+s^m q^m t^(2m-1))^2 (1-s^m q^(m+1) t^(2m))^-1
  const auto factors = hilb_series_factors(a0_surface(), 2);
  REQUIRE(factors.size() == 6);
  CHECK(factors[0].m == Monomial::sqt(1, 0, 0));
  CHECK(factors[0].exponent == -1);
  CHECK(factors[0].sign == Sign::minus);
  CHECK(factors[1].m == Monomial::sqt(1, 1, 1));
  CHECK(factors[1].exponent == 2);
  CHECK(factors[1].sign == Sign::plus);
  CHECK(factors[2].m == Monomial::sqt(1, 2, 2));
  CHECK(factors[2].exponent == -1);
  CHECK(factors[3].m == Monomial::sqt(2, 1, 2));
  CHECK(factors[4].m == Monomial::sqt(2, 2, 3));
  CHECK(factors[5].m == Monomial::sqt(2, 3, 4));
}

TEST_CASE("curious hard Lefschetz for the family surfaces") {
  for (const PervBettiTable& surface : {a0_surface(), d4_surface()}) {
    for (int n = 1; n <= 4; ++n) {
      const PervBettiTable table = hilb_table(surface, n);
      for (const auto& [key, dim] : table.entries())
        CHECK(table.at(2 * n - key.p, key.d + 2 * (n - key.p)) == dim);
    }
  }
}

TEST_CASE("nested strata enumeration") {
  const auto strata = nested_strata(2);
  // partitions of 2: 1^2 (j=0,1), 2^1 (j=0,2)
  REQUIRE(strata.size() == 4);
  CHECK(strata[0].nu == Partition({2}));
  CHECK(strata[0].j == 0);
  CHECK(strata[0].m == 0);
  CHECK(strata[1].j == 1);
  CHECK(strata[1].m == 1);
  CHECK(strata[2].nu == Partition({0, 1}));
  CHECK(strata[2].j == 0);
  CHECK(strata[2].m == 1);
  CHECK(strata[3].j == 2);
  CHECK(strata[3].m == 2);
  for (const NestedStratum& st : strata) {
    if (st.j == 0) {
      CHECK(st.m == 2 - st.nu.length());
    } else {
      CHECK(st.nu.multiplicity(st.j) >= 1);
      CHECK(st.m == 3 - st.nu.length());
    }
  }
}

TEST_CASE("nested_table: base case and blow-up golden") {
  const PervBettiTable a0 = a0_surface();
  CHECK(nested_table(a0, 0) == a0);

  PervBettiTable expected;
  expected.add(0, 0, 1);
  expected.add(1, 1, 4);
  expected.add(1, 2, 1);
  expected.add(2, 2, 6);
  expected.add(2, 3, 2);
  expected.add(3, 3, 4);
  expected.add(3, 4, 1);
  expected.add(4, 4, 1);
  CHECK(nested_table(a0, 1) == expected);

  const auto marg = nested_table(a0, 1).degree_marginals();
  CHECK(marg == std::vector<Int>{Int(1), Int(4), Int(7), Int(6), Int(2)});
}

TEST_CASE("nested_table(A,1) is the blow-up decomposition for any surface") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const PervBettiTable surface = random_surface(rng);
    CHECK(nested_table(surface, 1) ==
          direct_sum(kunneth(surface, surface), shift(surface, 1, 2)));
  }
}

TEST_CASE("perversity range of family tables") {
  for (const PervBettiTable& surface : {a0_surface(), d4_surface()}) {
    for (int n = 0; n <= 4; ++n) {
      const PervBettiTable table = hilb_table(surface, n);
      for (const auto& [key, dim] : table.entries()) {
        CHECK(key.p <= 2 * n);
        CHECK(key.d <= 2 * n);
      }
    }
  }
}
