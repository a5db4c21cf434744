#ifndef PERVHILB_SERIES_HPP
#define PERVHILB_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "pervhilb/bigint.hpp"
#include "pervhilb/monomial.hpp"

namespace pervhilb {

using TermMap = std::map<Monomial, Int>;

// A finite integer polynomial in the formal variables. No truncation: every
// operation is exact. Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int constant);
  static Poly monomial(const Monomial& m, Int coeff = Int(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Monomial& m) const;
  int degree(Var v) const;  // -1 for the zero polynomial

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Canonical string: terms in ascending (t, x, y) order (monomial order),
  // each rendered as c*x^a*y^b*t^c with unit coefficients and zero exponents
  // omitted. Bit-exact for golden files.
  std::string str() const;

  void add_term(const Monomial& m, const Int& c);

 private:
  TermMap terms_;
};

// Formal power series in s, q, t truncated in s-degree: terms with
// s-exponent above the truncation order are discarded, everything else is
// exact. q and t degrees are unbounded but finitely supported per s-degree.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation_order);
  static TruncatedSeries constant(int truncation_order, Int c);
  static TruncatedSeries monomial(int truncation_order, const Monomial& m,
                                  Int coeff = Int(1));

  int truncation_order() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Monomial& m) const;

  // Copy re-truncated to a smaller (or equal) order.
  TruncatedSeries truncated(int order) const;

  // The exact sub-polynomial with s-exponent n, with s removed.
  // Throws std::invalid_argument when n exceeds the truncation order.
  Poly coefficient_of_s(int n) const;

  std::string str() const;

  void add_term(const Monomial& m, const Int& c);  // drops terms beyond order

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  int trunc_;
  TermMap terms_;
};

// Coefficientwise sum / Cauchy product. Both operands must carry the same
// truncation order; mixing orders is an error (re-truncate explicitly).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

enum class Sign { plus, minus };

// (1 sign m)^exponent expanded as a truncated series: binomial for
// exponent >= 0, the multiset series for exponent < 0. Requires the
// monomial to have positive s-exponent so the expansion terminates.
TruncatedSeries geometric_factor(const Monomial& m, int exponent, Sign sign,
                                 int truncation_order);

// Per-variable replacement by an integer constant or by a monomial in the
// target variable set. Unassigned variables pass through.
class Substitution {
 public:
  using Replacement = std::variant<Int, Monomial>;

  Substitution& assign(Var v, Int constant);
  Substitution& assign(Var v, const Monomial& m);
  bool assigns(Var v) const;
  const std::optional<Replacement>& replacement(Var v) const {
    return repl_[static_cast<int>(v)];
  }

 private:
  std::array<std::optional<Replacement>, kNumVars> repl_;
};

Poly substitute(const Poly& f, const Substitution& sub);
TruncatedSeries substitute(const TruncatedSeries& f, const Substitution& sub);

}  // namespace pervhilb

#endif
