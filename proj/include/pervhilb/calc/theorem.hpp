#ifndef PERVHILB_CALC_THEOREM_HPP
#define PERVHILB_CALC_THEOREM_HPP

#include <map>
#include <string>
#include <vector>

#include "pervhilb/calc/calculus.hpp"
#include "pervhilb/calc/script.hpp"

namespace pervhilb::calc {

// Base-surface fixtures for the universal-subscheme bound. The elliptic
// fixture carries the fiber-supported canonical class (bound 1); the
// quadric fixture is the negative control where that bound becomes 2 and
// the degree-6 diagonal term can no longer be pushed below 4.
enum class SurfaceFixture { elliptic, p1xp1 };

const char* fixture_name(SurfaceFixture f);

struct InductionOptions {
  int n_max = 1;
  int k_max = 4;
  SurfaceFixture fixture = SurfaceFixture::elliptic;
  // Run against strongly multiplicative decompositions and propagate
  // membership in the graded pieces alongside the bound.
  bool strong = false;
  // Replaces the bound of a named axiom (clamped to its space's range).
  // Weakening an axiom must never strengthen a derived bound; the
  // perturbation tests rely on this hook.
  std::map<std::string, int> axiom_bound_overrides;
};

struct Conclusion {
  int n = 0;
  int k = 0;
  int step_id = 0;
  int degree = 0;
  int bound = 0;
  bool balanced = false;
};

struct Certificate {
  InductionOptions options;
  Script script;  // self-contained: declarations plus the full trace
  std::vector<Conclusion> conclusions;

  const Conclusion& conclusion(int n, int k) const;
  std::string to_dsl() const;
  nlohmann::json to_json() const;
};

// Declarations shared by the replay and the negative search: spaces for the
// Hilbert schemes of up to n_max points (with the surface factors), the
// functorial maps of the nested Hilbert scheme, the diagonal pushforward,
// and the boundary/base axioms of the chosen fixture.
Script fixture_declarations(SurfaceFixture fixture, int n_max, int k_max, bool strong);

// Replays the induction for the Chern characters of the universal
// subscheme: base case on the surface square, then for each n the expansion
// of the pulled-back Chern character into the three-term form, the
// exceptional-divisor rewriting into boundary classes, and the projection
// formula step. Produces one trace per (n, k) with n <= n_max, k <= k_max,
// all sharing one step list.
Certificate derive_universal_bound(const InductionOptions& options);

// Chern-class translation macro: c_k is a polynomial in the characters up
// to degree k, so on a multiplicative space each monomial is a cup of
// certified terms with bounds summing to k and the combination is again
// bounded by k. Appends the derivations to the certificate and returns the
// new conclusions, one per (n, k).
std::vector<Conclusion> append_chern_class_bounds(Certificate& cert);

}  // namespace pervhilb::calc

#endif
