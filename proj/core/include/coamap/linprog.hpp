#ifndef COAMAP_LINPROG_HPP
#define COAMAP_LINPROG_HPP

#include <vector>

#include "coamap/numeric.hpp"

namespace coamap {

// Exact linear programming via Fourier-Motzkin elimination.  Sizes here
// are tiny (a handful of variables, tens of constraints), where FM is
// simple and exact.

// sum_i coeffs[i] * x[i] <= rhs
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
};

// a * x = b rows for equality systems.
struct LinearEquation {
  std::vector<Rat> coeffs;
  Rat rhs;
};

/// Feasibility of {equalities, inequalities} over the rationals.
/// Equalities are pivoted out by substitution first.
bool lp_feasible(const std::vector<LinearEquation>& equalities,
                 std::vector<LinearConstraint> inequalities, int nvars);

struct LpOptimum {
  bool feasible = false;
  bool bounded = true;
  Rat value;               // max of the objective variable
  std::vector<Rat> point;  // one maximizer (deterministic tie-break)
};

/// Maximize x[objective] subject to the inequalities.  The returned
/// point fixes the objective at its maximum and completes the remaining
/// coordinates lexicographically smallest (lowest feasible value in
/// elimination order).
LpOptimum lp_maximize(std::vector<LinearConstraint> inequalities, int nvars, int objective);

}  // namespace coamap

#endif
