#include "pervhilb/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pervhilb {

namespace {
// Print order of variables inside a term (t last, matching x^a*y^b*t^c).
constexpr Var kPrintOrder[kNumVars] = {Var::s, Var::q, Var::x, Var::y, Var::t};
constexpr const char* kVarNames[kNumVars] = {"s", "q", "t", "x", "y"};
}  // namespace

Monomial Monomial::sqt(int s_exp, int q_exp, int t_exp) {
  if (s_exp < 0 || q_exp < 0 || t_exp < 0)
    throw std::invalid_argument("Monomial: exponents must be nonnegative");
  Monomial m;
  m[Var::s] = s_exp;
  m[Var::q] = q_exp;
  m[Var::t] = t_exp;
  return m;
}

bool Monomial::is_one() const {
  for (int e : exp)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Monomial::pow: negative exponent");
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] * k;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  // (s, t, q, x, y) lexicographic
  constexpr Var order[kNumVars] = {Var::s, Var::t, Var::q, Var::x, Var::y};
  for (Var v : order) {
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (Var v : kPrintOrder) {
    int e = (*this)[v];
    if (e == 0) continue;
    if (!first) out << '*';
    out << kVarNames[static_cast<int>(v)];
    if (e > 1) out << '^' << e;
    first = false;
  }
  return out.str();
}

}  // namespace pervhilb
