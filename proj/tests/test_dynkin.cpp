#include <doctest.h>

#include "pervhilb/dynkin.hpp"
#include "pervhilb/verify.hpp"

using namespace pervhilb;

TEST_CASE("family data") {
  CHECK(!family(Family::A0).K.has_value());
  CHECK(family(Family::D4).K == 4);
  CHECK(family(Family::E6).K == 6);
  CHECK(family(Family::E7).K == 7);
  CHECK(family(Family::E8).K == 8);

  PervBettiTable a0;
  a0.add(0, 0, 1);
  a0.add(1, 1, 2);
  a0.add(2, 2, 1);
  CHECK(family(Family::A0).surface == a0);

  PervBettiTable e6;
  e6.add(0, 0, 1);
  e6.add(1, 2, 6);
  e6.add(2, 2, 1);
  CHECK(family(Family::E6).surface == e6);

  CHECK(family(Family::A0).orb_dim == 4);
  CHECK(family(Family::E8).orb_dim == 10);

  CHECK(family_from_string("A0") == Family::A0);
  CHECK(family_from_string("E7~") == Family::E7);
  CHECK(!family_from_string("B2").has_value());
}

TEST_CASE("one-point coefficients") {
  CHECK(family_series(Family::A0, 4).coefficient_of_s(1).str() == "1+2*q*t+q^2*t^2");
  CHECK(family_series(Family::D4, 4).coefficient_of_s(1).str() == "1+4*q*t^2+q^2*t^2");
  CHECK(family_series(Family::E6, 4).coefficient_of_s(1).str() == "1+6*q*t^2+q^2*t^2");
  CHECK(family_series(Family::E7, 4).coefficient_of_s(1).str() == "1+7*q*t^2+q^2*t^2");
  CHECK(family_series(Family::E8, 4).coefficient_of_s(1).str() == "1+8*q*t^2+q^2*t^2");
}

TEST_CASE("two-point coefficients, confirmed by the partition sum") {
  const Poly a0 = family_series(Family::A0, 4).coefficient_of_s(2);
  CHECK(a0.str() ==
        "1+2*q*t+q*t^2+2*q^2*t^2+2*q^2*t^3+2*q^3*t^3+q^3*t^4+q^4*t^4");
  CHECK(a0 == hilb_table(family(Family::A0).surface, 2).to_poly());

  const Poly d4 = family_series(Family::D4, 4).coefficient_of_s(2);
  CHECK(d4.str() == "1+5*q*t^2+q^2*t^2+14*q^2*t^4+5*q^3*t^4+q^4*t^4");
  CHECK(d4 == hilb_table(family(Family::D4).surface, 2).to_poly());
}

TEST_CASE("factor lists match the closed forms") {
  for (Family f : all_families()) {
    const auto actual = hilb_series_factors(family(f).surface, 3);
    const auto expected = family_closed_form_factors(f, 3);
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) {
      CHECK(actual[i].m == expected[i].m);
      CHECK(actual[i].exponent == expected[i].exponent);
      CHECK((actual[i].sign == expected[i].sign));
    }
  }
}

TEST_CASE("mixed Hodge polynomials") {
  CHECK(mixed_hodge_polynomial(Family::A0, 1).str() == "1+2*x*y*t+x^2*y^2*t^2");
  CHECK(mixed_hodge_polynomial(Family::D4, 1).str() == "1+4*x*y*t^2+x^2*y^2*t^2");
  for (Family f : all_families())
    CHECK(mixed_hodge_polynomial(f, 0).str() == "1");
}

TEST_CASE("Poincare specialization") {
  const TruncatedSeries p = poincare_series(Family::D4, 2);
  CHECK(p.coefficient_of_s(0).str() == "1");
  CHECK(p.coefficient_of_s(1).str() == "1+5*t^2");

  // q drops out entirely
  for (const auto& [m, c] : p.terms()) CHECK(m.q_exp() == 0);

  // A0: q -> 1 in the s^1 coefficient gives the Betti numbers (1,2,1)
  const Poly a0 = poincare_series(Family::A0, 2).coefficient_of_s(1);
  CHECK(a0.str() == "1+2*t+t^2");
}

TEST_CASE("export CSV shape and goldens") {
  const std::string csv = export_csv(Family::E8, 0);
  CHECK(csv == "family,n,p,d,dim\nE8~,0,0,0,1\n");

  const std::string a0 = export_csv(Family::A0, 1);
  CHECK(a0 ==
        "family,n,p,d,dim\n"
        "A0~,0,0,0,1\n"
        "A0~,1,0,0,1\n"
        "A0~,1,1,1,2\n"
        "A0~,1,2,2,1\n");
}

TEST_CASE("export JSON content") {
  const nlohmann::json e8 = export_json(Family::E8, 0);
  CHECK(e8["family"] == "E8~");
  CHECK(e8["K"] == 8);
  REQUIRE(e8["tables"].size() == 1);
  REQUIRE(e8["tables"][0]["entries"].size() == 1);
  CHECK(e8["tables"][0]["entries"][0]["p"] == 0);
  CHECK(e8["tables"][0]["entries"][0]["d"] == 0);
  CHECK(e8["tables"][0]["entries"][0]["dim"] == 1);

  const nlohmann::json a0 = export_json(Family::A0, 1);
  long long total = 0;
  for (const auto& row : a0["tables"][1]["entries"]) total += row["dim"].get<long long>();
  CHECK(total == 4);  // total Betti number of the one-point space
  CHECK(a0["mhp"][1]["poly"] == "1+2*x*y*t+x^2*y^2*t^2");
  CHECK(a0["e_polynomial"][1]["poly"] == "1-2*x*y+x^2*y^2");
  CHECK(a0["poincare"][1]["poly"] == "1+2*t+t^2");
}

TEST_CASE("curious hard Lefschetz up to eight points") {
  for (Family f : all_families()) {
    for (int n = 7; n <= 8; ++n) {
      const PervBettiTable table = hilb_table(family(f).surface, n);
      for (const auto& [key, dim] : table.entries())
        CHECK(table.at(2 * n - key.p, key.d + 2 * (n - key.p)) == dim);
    }
  }
}

TEST_CASE("total Betti consistency across the two routes") {
  Substitution qt_one;
  qt_one.assign(Var::q, Int(1)).assign(Var::t, Int(1));
  for (Family f : all_families()) {
    const TruncatedSeries counts = substitute(family_series(f, 5), qt_one);
    for (int n = 0; n <= 5; ++n) {
      CHECK(counts.coefficient_of_s(n).coeff(Monomial::one()) ==
            hilb_table(family(f).surface, n).total_dim());
    }
  }
}

TEST_CASE("verify_family reports all green") {
  for (Family f : {Family::A0, Family::E7}) {
    const auto results = verify_family(f, 4, 4);
    CHECK(all_pass(results));
    CHECK(results.size() == 7);
  }
}
