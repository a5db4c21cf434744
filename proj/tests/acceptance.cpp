// Acceptance suite: runs every release criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion.
//
//   acceptance [--fixtures <dir>] [--cli <path>]
//
// The fixtures directory holds the custom surface tables and the negative
// derivation scripts; the CLI path is used for the byte-determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pervhilb/calc/search.hpp"
#include "pervhilb/calc/theorem.hpp"
#include "pervhilb/dynkin.hpp"

using namespace pervhilb;

namespace {

std::string g_fixtures = PERVHILB_FIXTURE_DIR;
std::string g_cli = PERVHILB_CLI_DEFAULT;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(std::string&)> run;  // appends failure details
};

std::vector<PervBettiTable> fixture_surfaces() {
  std::vector<PervBettiTable> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(g_fixtures)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("surface_", 0) == 0 && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    out.push_back(PervBettiTable::from_json(j));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void expect(bool ok, const std::string& what, std::string& fail) {
  if (!ok && fail.empty()) fail = what;
}

// ---- criterion 1: family one-point goldens -------------------------------
void crit_one_point(std::string& fail) {
  expect(family_series(Family::A0, 2).coefficient_of_s(1).str() ==
             "1+2*q*t+q^2*t^2",
         "A0 one-point coefficient", fail);
  const std::pair<Family, int> de[] = {
      {Family::D4, 4}, {Family::E6, 6}, {Family::E7, 7}, {Family::E8, 8}};
  for (const auto& [f, K] : de) {
    std::ostringstream want;
    want << "1+" << K << "*q*t^2+q^2*t^2";
    expect(family_series(f, 2).coefficient_of_s(1).str() == want.str(),
           family(f).name + " one-point coefficient", fail);
  }
}

// ---- criterion 2: oracle equivalence --------------------------------------
void crit_oracle_equivalence(std::string& fail) {
  std::vector<PervBettiTable> inputs;
  for (Family f : all_families()) inputs.push_back(family(f).surface);
  for (PervBettiTable& t : fixture_surfaces()) inputs.push_back(std::move(t));
  expect(inputs.size() >= 8, "fixture set not found", fail);
  const int N = 8;
  for (const PervBettiTable& surface : inputs) {
    const TruncatedSeries series = hilb_series(surface, N);
    for (int n = 0; n <= N; ++n) {
      if (series.coefficient_of_s(n) == hilb_table(surface, n).to_poly()) continue;
      std::ostringstream msg;
      msg << "series and partition sum disagree at s^" << n;
      expect(false, msg.str(), fail);
      return;
    }
  }
}

// ---- criterion 3: Gottsche specialization ---------------------------------
void crit_gottsche(std::string& fail) {
  const int N = 8;
  Substitution q_one;
  q_one.assign(Var::q, Int(1));
  for (Family f : all_families()) {
    // independent classical product, driven by the degree marginals alone
    const auto marginals = family(f).surface.degree_marginals();
    if (f == Family::A0) {
      expect(marginals == std::vector<Int>{Int(1), Int(2), Int(1)},
             "A0 marginals are (1,2,1)", fail);
    } else {
      expect(marginals == std::vector<Int>{Int(1), Int(0), Int(*family(f).K + 1)},
             family(f).name + " marginals are (1,0,K+1)", fail);
    }
    TruncatedSeries classical = TruncatedSeries::constant(N, Int(1));
    for (int m = 1; m <= N; ++m) {
      for (std::size_t d = 0; d < marginals.size(); ++d) {
        const long long b = marginals[d].convert_to<long long>();
        if (b == 0) continue;
        const Monomial z = Monomial::sqt(m, 0, 2 * (m - 1) + static_cast<int>(d));
        TruncatedSeries factor(N);
        if (d % 2 == 0) {
          for (int j = 0; j * m <= N; ++j)
            factor.add_term(z.pow(j), multiset_coefficient(b, j));
        } else {
          for (int j = 0; j <= b && j * m <= N; ++j)
            factor.add_term(z.pow(j), binomial(b, j));
        }
        classical = mul(classical, factor);
      }
    }
    const TruncatedSeries specialized = substitute(family_series(f, N), q_one);
    expect(specialized == classical,
           family(f).name + " q->1 differs from the classical product", fail);
  }
}

// ---- criterion 4: frozen two-point coefficients ---------------------------
void crit_two_point(std::string& fail) {
  // both computations must reproduce the frozen values
  const std::string a0 = "1+2*q*t+q*t^2+2*q^2*t^2+2*q^2*t^3+2*q^3*t^3+q^3*t^4+q^4*t^4";
  const std::string d4 = "1+5*q*t^2+q^2*t^2+14*q^2*t^4+5*q^3*t^4+q^4*t^4";
  expect(family_series(Family::A0, 2).coefficient_of_s(2).str() == a0,
         "A0 two-point series coefficient", fail);
  expect(hilb_table(family(Family::A0).surface, 2).to_poly().str() == a0,
         "A0 two-point partition sum", fail);
  expect(family_series(Family::D4, 2).coefficient_of_s(2).str() == d4,
         "D4 two-point series coefficient", fail);
  expect(hilb_table(family(Family::D4).surface, 2).to_poly().str() == d4,
         "D4 two-point partition sum", fail);
}

// ---- criterion 5: relative hard Lefschetz ---------------------------------
void crit_lefschetz(std::string& fail) {
  for (Family f : all_families()) {
    for (int n = 1; n <= 6; ++n) {
      const PervBettiTable table = hilb_table(family(f).surface, n);
      for (const auto& [key, dim] : table.entries()) {
        if (table.at(2 * n - key.p, key.d + 2 * (n - key.p)) == dim) continue;
        std::ostringstream msg;
        msg << family(f).name << " n=" << n << " asymmetric at (p=" << key.p
            << ", d=" << key.d << ")";
        expect(false, msg.str(), fail);
        return;
      }
    }
  }
}

// ---- criterion 6: nested Hilbert consistency ------------------------------
void crit_nested(std::string& fail) {
  std::vector<PervBettiTable> inputs;
  for (Family f : all_families()) inputs.push_back(family(f).surface);
  for (PervBettiTable& t : fixture_surfaces()) inputs.push_back(std::move(t));
  for (const PervBettiTable& surface : inputs) {
    expect(nested_table(surface, 1) ==
               direct_sum(kunneth(surface, surface), shift(surface, 1, 2)),
           "nested table differs from the blow-up decomposition", fail);
  }
  const auto marg = nested_table(family(Family::A0).surface, 1).degree_marginals();
  expect(marg == std::vector<Int>{Int(1), Int(4), Int(7), Int(6), Int(2)},
         "A0 nested degree marginals", fail);
}

// ---- criterion 7: perversity certificate ----------------------------------
void crit_certificate(std::string& fail) {
  calc::InductionOptions opt;
  opt.n_max = 10;
  opt.k_max = 12;
  const calc::Certificate cert = calc::derive_universal_bound(opt);
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= 12; ++k) {
      const calc::Conclusion& c = cert.conclusion(n, k);
      const int cap = 2 * (n + 1);  // filtration range on the ambient product
      const int want = std::min(k, cap);
      if (c.bound == want && c.bound <= k && c.degree == 2 * k) continue;
      std::ostringstream msg;
      msg << "(n=" << n << ", k=" << k << ") certifies p<=" << c.bound
          << ", expected " << want;
      expect(false, msg.str(), fail);
      return;
    }
  }
  const calc::Verdict verdict = calc::check_derivation(cert.script);
  expect(verdict.accepted, "replay rejected: " + verdict.message, fail);
}

// ---- criterion 8: negative fixtures ----------------------------------------
void crit_negative(std::string& fail) {
  for (const char* name : {"blowup_pullback.dsl", "point_pushforward.dsl"}) {
    const std::string text = read_file(std::filesystem::path(g_fixtures) / name);
    expect(!text.empty(), std::string("missing fixture ") + name, fail);
    const calc::Verdict verdict = calc::check_derivation(calc::parse_script(text));
    expect(!verdict.accepted, std::string(name) + " was not rejected", fail);
  }
  const calc::SearchResult search =
      calc::search_diagonal_ch3(calc::SurfaceFixture::p1xp1, 3, {6});
  expect(!search.found, "quadric search found a bound-3 derivation", fail);
  expect(search.best_bound == 4, "quadric best bound is not 4", fail);
  const calc::SearchResult control =
      calc::search_diagonal_ch3(calc::SurfaceFixture::elliptic, 3, {6});
  expect(control.found && control.best_bound == 3,
         "elliptic control failed to reach bound 3", fail);
}

// ---- criterion 9: byte determinism of export -------------------------------
void crit_determinism(std::string& fail) {
  if (g_cli.empty() || !std::filesystem::exists(g_cli)) {
    expect(false, "CLI binary not found (pass --cli)", fail);
    return;
  }
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  for (const char* format : {"json", "csv"}) {
    const auto f1 = dir / (std::string("pervhilb_e8_run1.") + format);
    const auto f2 = dir / (std::string("pervhilb_e8_run2.") + format);
    for (const auto& [path, tag] : {std::pair{f1, "1"}, std::pair{f2, "2"}}) {
      std::ostringstream cmd;
      cmd << '"' << g_cli << "\" export --family E8 --n-max 8 --format " << format
          << " --out \"" << path.string() << '"';
      const int rc = std::system(cmd.str().c_str());
      expect(rc == 0, std::string("export run failed (") + format + ")", fail);
    }
    const std::string run1 = read_file(f1), run2 = read_file(f2);
    expect(!run1.empty() && run1 == run2,
           std::string("export runs differ (") + format + ")", fail);
    std::filesystem::remove(f1);
    std::filesystem::remove(f2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--fixtures") g_fixtures = argv[i + 1];
    if (flag == "--cli") g_cli = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {"1. family one-point goldens", 1.0, crit_one_point},
      {"2. oracle equivalence (series vs partition sum, n<=8)", 10.0,
       crit_oracle_equivalence},
      {"3. Gottsche specialization q->1", 5.0, crit_gottsche},
      {"4. frozen two-point coefficients", 5.0, crit_two_point},
      {"5. relative hard Lefschetz symmetry (n<=6)", 5.0, crit_lefschetz},
      {"6. nested Hilbert consistency", 1.0, crit_nested},
      {"7. perversity certificate (n<=10, k<=12)", 5.0, crit_certificate},
      {"8. negative fixtures and exhaustive search", 30.0, crit_negative},
      {"9. export determinism (byte-identical runs)", 30.0, crit_determinism},
  };

  int passed = 0;
  for (const Criterion& c : criteria) {
    std::string fail;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(fail);
    } catch (const std::exception& e) {
      if (fail.empty()) fail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (fail.empty() && seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "exceeded budget of " << c.budget_seconds << " s";
      fail = msg.str();
    }
    const bool ok = fail.empty();
    passed += ok ? 1 : 0;
    std::printf("[%s] %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                seconds, ok ? "" : " -- ", fail.c_str());
  }
  std::printf("ACCEPTANCE: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
