#ifndef PERVHILB_VERIFY_HPP
#define PERVHILB_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pervhilb/dynkin.hpp"

namespace pervhilb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatching coefficient on failure
};

// Cross-validations between the two independent computations (partition sum
// vs product series) and the table-level properties. The family variant
// additionally checks the closed product form, the perversity range, and
// the relative hard Lefschetz symmetry of the tables.
std::vector<CheckResult> verify_surface(const PervBettiTable& surface, int n_max,
                                        int trunc);
std::vector<CheckResult> verify_family(Family f, int n_max, int trunc);

bool all_pass(const std::vector<CheckResult>& results);

// The closed product form of the family series, built from the family data
// (K or the elliptic shape) rather than from the surface table. Used to pin
// the factor lists of the generating series symbol by symbol.
std::vector<SeriesFactor> family_closed_form_factors(Family f, int trunc);

}  // namespace pervhilb

#endif
