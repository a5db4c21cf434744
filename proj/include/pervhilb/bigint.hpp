#ifndef PERVHILB_BIGINT_HPP
#define PERVHILB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pervhilb {

// Exact integer arithmetic everywhere; no coefficient in scope is fractional.
using Int = boost::multiprecision::cpp_int;

// C(n, k) for n >= 0; zero outside the valid range.
Int binomial(long long n, long long k);

// C(e + j - 1, j): number of multisets of size j from e symbols.
Int multiset_coefficient(long long e, long long j);

}  // namespace pervhilb

#endif
