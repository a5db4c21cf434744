#ifndef PERVHILB_HILB_HPP
#define PERVHILB_HILB_HPP

#include <vector>

#include "pervhilb/betti_table.hpp"
#include "pervhilb/partition.hpp"
#include "pervhilb/series.hpp"

namespace pervhilb {

// Perverse-graded Betti tables of the Hilbert scheme of n points on a
// fibered surface, computed two genuinely different ways:
//
//   hilb_table   — the partition sum over strata (symmetric powers with
//                  uniform (p, d) shifts),
//   hilb_series  — the infinite product whose s^n coefficient encodes the
//                  same data.
//
// The two computations share no code on purpose; each is the other's
// oracle, and `verify` checks them coefficient by coefficient.

// Table of the symmetric-power stratum attached to a partition:
// the Kunneth product over part sizes j of sym_power(surface, a_j).
PervBettiTable sym_stratum_table(const PervBettiTable& surface, const Partition& nu);

// Table of the n-point Hilbert scheme: direct sum over partitions nu of n
// of the stratum table shifted by (n - l(nu), 2n - 2 l(nu)).
// Requires a surface table (perversities in {0, 1, 2}).
PervBettiTable hilb_table(const PervBettiTable& surface, int n);

// One factor (1 sign m)^exponent of the product form.
struct SeriesFactor {
  Monomial m;
  int exponent = 0;
  Sign sign = Sign::minus;
};

// The factor list of the product: for every m >= 1 and surface entry
// (p, d, dim),
//   d even: (1 - s^m q^(m-1+p) t^(2(m-1)+d))^(-dim)
//   d odd:  (1 + s^m q^(m-1+p) t^(2(m-1)+d))^(+dim)
// Stated in closed form for the five Dynkin families; for an arbitrary
// surface table it is the (proven) partition sum repackaged as a product.
std::vector<SeriesFactor> hilb_series_factors(const PervBettiTable& surface, int trunc);

// Product of the factors above, truncated at s-degree trunc.
TruncatedSeries hilb_series(const PervBettiTable& surface, int trunc);

// One stratum of the nested Hilbert scheme: a partition nu of n together
// with a marker j and the uniform shift m applied to its table.
//   j =  0: stratum S^(nu) x S,        m = n - l(nu)
//   j >= 1: stratum S^(nu - one j) x S, m = n + 1 - l(nu); requires a_j >= 1
struct NestedStratum {
  Partition nu;
  int j = 0;
  int m = 0;
};

// All strata for the nested Hilbert scheme of (n, n+1): j ranges over
// 0..n, and positive j only where the part is present.
std::vector<NestedStratum> nested_strata(int n);

// Table of the nested Hilbert scheme of pairs of lengths (n, n+1):
// direct sum over strata of kunneth(stratum table, surface) shifted by
// (m, 2m). For n = 0 this is the surface itself.
PervBettiTable nested_table(const PervBettiTable& surface, int n);

}  // namespace pervhilb

#endif
