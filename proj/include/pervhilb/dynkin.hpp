#ifndef PERVHILB_DYNKIN_HPP
#define PERVHILB_DYNKIN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pervhilb/betti_table.hpp"
#include "pervhilb/hilb.hpp"
#include "pervhilb/series.hpp"

#include <json.hpp>

namespace pervhilb {

// The five families of parabolic Higgs moduli labeled by affine Dynkin
// diagrams. For each family, the n-th moduli space is the Hilbert scheme of
// n points on the two-dimensional member, so everything reduces to the
// surface table below.
enum class Family { A0, D4, E6, E7, E8 };

struct FamilySpec {
  Family id = Family::A0;
  std::string name;             // "A0~", "D4~", "E6~", "E7~", "E8~"
  std::optional<int> K;         // number of exceptional curves; absent for A0~
  PervBettiTable surface;       // perverse Betti table of the surface member
  int orb_dim = 0;              // total orbifold cohomology dimension (metadata)
};

const FamilySpec& family(Family f);
const std::vector<Family>& all_families();

// Accepts "A0" or "A0~" (and so on); nullopt for anything else.
std::optional<Family> family_from_string(std::string_view s);

// Generating series of the perverse/mixed-Hodge data: hilb_series of the
// family surface. The exponent of q is the perversity, which for these
// families also equals half the weight (P = W).
TruncatedSeries family_series(Family f, int trunc);

// The same product with the q-grading forgotten (q -> 1): a series in s, t
// whose s^n coefficient is the Poincare polynomial of the n-th moduli space.
TruncatedSeries poincare_series(Family f, int trunc);

// Mixed Hodge polynomial of the n-th member: the s^n coefficient with
// q -> x*y. Valid because every weight-2k class has Hodge type (k, k).
Poly mixed_hodge_polynomial(Family f, int n);

// Batch export for n = 0..n_max.
// CSV: header family,n,p,d,dim with rows sorted by (n, d, p).
std::string export_csv(Family f, int n_max);
// JSON: tables, canonical mixed-Hodge polynomial strings, and the q->1 /
// t->-1 specializations per n.
nlohmann::json export_json(Family f, int n_max);

}  // namespace pervhilb

#endif
