#include "pervhilb/series.hpp"

#include <sstream>
#include <stdexcept>

namespace pervhilb {

namespace {

void add_into(TermMap& terms, const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string render(const TermMap& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    if (m.is_one()) {
      out << a;
    } else {
      if (a != 1) out << a << '*';
      out << m.str();
    }
    first = false;
  }
  return out.str();
}

// Power of a single (monomial, coefficient) replacement.
void expand_replacement(const std::variant<Int, Monomial>& repl, int e,
                        Monomial& mono_acc, Int& coeff_acc) {
  if (std::holds_alternative<Int>(repl)) {
    const Int& v = std::get<Int>(repl);
    for (int i = 0; i < e; ++i) coeff_acc *= v;
  } else {
    mono_acc = mono_acc * std::get<Monomial>(repl).pow(e);
  }
}

TermMap substitute_terms(const TermMap& terms, const Substitution& sub);

}  // namespace

Poly::Poly(Int constant) {
  if (constant != 0) terms_.emplace(Monomial::one(), std::move(constant));
}

Poly Poly::monomial(const Monomial& m, Int coeff) {
  Poly p;
  if (coeff != 0) p.terms_.emplace(m, std::move(coeff));
  return p;
}

Int Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

int Poly::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) add_into(r.terms_, ma * mb, ca * cb);
  return r;
}

std::string Poly::str() const { return render(terms_); }

void Poly::add_term(const Monomial& m, const Int& c) { add_into(terms_, m, c); }

TruncatedSeries::TruncatedSeries(int truncation_order) : trunc_(truncation_order) {
  if (truncation_order < 0)
    throw std::invalid_argument("TruncatedSeries: negative truncation order");
}

TruncatedSeries TruncatedSeries::constant(int truncation_order, Int c) {
  TruncatedSeries f(truncation_order);
  f.add_term(Monomial::one(), c);
  return f;
}

TruncatedSeries TruncatedSeries::monomial(int truncation_order, const Monomial& m,
                                          Int coeff) {
  TruncatedSeries f(truncation_order);
  f.add_term(m, coeff);
  return f;
}

Int TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > trunc_)
    throw std::invalid_argument("truncated: cannot extend a truncated series");
  TruncatedSeries f(order);
  for (const auto& [m, c] : terms_) f.add_term(m, c);
  return f;
}

Poly TruncatedSeries::coefficient_of_s(int n) const {
  if (n < 0) throw std::invalid_argument("coefficient_of_s: negative degree");
  if (n > trunc_)
    throw std::invalid_argument("coefficient_of_s: degree exceeds truncation order");
  Poly p;
  for (const auto& [m, c] : terms_) {
    if (m.s_exp() != n) continue;
    Monomial stripped = m;
    stripped[Var::s] = 0;
    p.add_term(stripped, c);
  }
  return p;
}

std::string TruncatedSeries::str() const { return render(terms_); }

void TruncatedSeries::add_term(const Monomial& m, const Int& c) {
  if (m.s_exp() > trunc_) return;
  add_into(terms_, m, c);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_order() != b.truncation_order())
    throw std::invalid_argument("add: incompatible truncation orders");
  TruncatedSeries r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_order() != b.truncation_order())
    throw std::invalid_argument("mul: incompatible truncation orders");
  TruncatedSeries r(a.truncation_order());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.s_exp() + mb.s_exp() > r.truncation_order()) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

TruncatedSeries geometric_factor(const Monomial& m, int exponent, Sign sign,
                                 int truncation_order) {
  if (m.s_exp() < 1)
    throw std::invalid_argument(
        "geometric_factor: monomial needs positive s-exponent");
  TruncatedSeries f = TruncatedSeries::constant(truncation_order, Int(1));
  const int jmax = truncation_order / m.s_exp();
  const Int unit_sign = (sign == Sign::plus) ? Int(1) : Int(-1);
  for (int j = 1; j <= jmax; ++j) {
    Int c;
    if (exponent >= 0) {
      if (j > exponent) break;
      c = binomial(exponent, j);
    } else {
      // C(exponent, j) = (-1)^j C(-exponent + j - 1, j)
      c = multiset_coefficient(-exponent, j);
      if (j % 2 == 1) c = -c;
    }
    Int term_sign(1);
    if (unit_sign < 0 && j % 2 == 1) term_sign = -1;
    f.add_term(m.pow(j), c * term_sign);
  }
  return f;
}

Substitution& Substitution::assign(Var v, Int constant) {
  repl_[static_cast<int>(v)] = std::variant<Int, Monomial>(std::move(constant));
  return *this;
}

Substitution& Substitution::assign(Var v, const Monomial& m) {
  repl_[static_cast<int>(v)] = std::variant<Int, Monomial>(m);
  return *this;
}

bool Substitution::assigns(Var v) const {
  return repl_[static_cast<int>(v)].has_value();
}

namespace {

TermMap substitute_terms(const TermMap& terms, const Substitution& sub) {
  TermMap out;
  for (const auto& [m, c] : terms) {
    Monomial mono;
    Int coeff = c;
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.exp[i];
      if (e == 0) continue;
      const auto& r = sub.replacement(static_cast<Var>(i));
      if (!r) {
        mono.exp[i] += e;
      } else {
        expand_replacement(*r, e, mono, coeff);
      }
    }
    add_into(out, mono, coeff);
  }
  return out;
}

}  // namespace

Poly substitute(const Poly& f, const Substitution& sub) {
  Poly out;
  for (const auto& [m, c] : substitute_terms(f.terms(), sub)) out.add_term(m, c);
  return out;
}

TruncatedSeries substitute(const TruncatedSeries& f, const Substitution& sub) {
  TruncatedSeries out(f.truncation_order());
  for (const auto& [m, c] : substitute_terms(f.terms(), sub)) out.add_term(m, c);
  return out;
}

}  // namespace pervhilb
