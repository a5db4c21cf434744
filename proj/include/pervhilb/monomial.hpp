#ifndef PERVHILB_MONOMIAL_HPP
#define PERVHILB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <string>

namespace pervhilb {

// Formal variables. Series arithmetic lives in (s, q, t); substitution may
// introduce x and y (q -> x*y recovers the Hodge bigrading).
enum class Var : int { s = 0, q = 1, t = 2, x = 3, y = 4 };

inline constexpr int kNumVars = 5;

struct Monomial {
  std::array<int, kNumVars> exp{};  // exponents, all nonnegative

  Monomial() = default;

  static Monomial one() { return Monomial{}; }

  // Convenience for the series variables.
  static Monomial sqt(int s_exp, int q_exp, int t_exp);

  int operator[](Var v) const { return exp[static_cast<int>(v)]; }
  int& operator[](Var v) { return exp[static_cast<int>(v)]; }

  int s_exp() const { return (*this)[Var::s]; }
  int q_exp() const { return (*this)[Var::q]; }
  int t_exp() const { return (*this)[Var::t]; }

  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int k) const;  // k >= 0

  // Canonical term order used by every printer and container: ascending in
  // (s, t, q, x, y). With s and q zero this is exactly the (t, x, y) order
  // of the canonical polynomial strings.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // Rendering of the variable part, e.g. "s^2*q*t^3"; "1" for the unit.
  std::string str() const;
};

}  // namespace pervhilb

#endif
