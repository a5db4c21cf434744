#include "pervhilb/bigint.hpp"

#include <stdexcept>

namespace pervhilb {

Int binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

Int multiset_coefficient(long long e, long long j) {
  if (e < 0 || j < 0) throw std::invalid_argument("multiset_coefficient: negative argument");
  if (j == 0) return Int(1);
  if (e == 0) return Int(0);
  return binomial(e + j - 1, j);
}

}  // namespace pervhilb
