#ifndef PERVHILB_CALC_SEARCH_HPP
#define PERVHILB_CALC_SEARCH_HPP

#include "pervhilb/calc/theorem.hpp"

namespace pervhilb::calc {

struct SearchOptions {
  int max_depth = 6;  // maximal nesting of rule applications
};

struct SearchResult {
  bool found = false;       // a derivation with bound <= target exists
  int best_bound = -1;      // best bound reached for the target; -1 if never built
  long long expressions = 0;  // distinct canonical expressions enumerated
};

// Exhaustive enumeration of every class expression derivable from the
// fixture's surface axioms with the Kunneth rule, functorial transport
// along the registered maps, and cup products, up to the given nesting
// depth. Expressions are canonicalized (cups flattened and sorted, unit
// factors dropped), so each derivable class is visited once.
//
// The target is the degree-6 diagonal Chern character, whose only
// registered identity is the diagonal pushforward of c1. For the quadric
// fixture no derivation reaches bound 3; for the elliptic fixture the
// two-step derivation at bound 3 is found (positive control).
SearchResult search_diagonal_ch3(SurfaceFixture fixture, int target_bound,
                                 const SearchOptions& options = {});

}  // namespace pervhilb::calc

#endif
