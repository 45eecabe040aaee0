#ifndef COAMAP_TORUS_HPP
#define COAMAP_TORUS_HPP

#include <vector>

#include "coamap/lpoly.hpp"

namespace coamap {

// Tolerance for the gap-versus-pi comparisons in float mode.  The
// closed/open distinction is exact in exact mode; float mode flags a
// band of width eps around the boundary as indeterminate instead of
// silently picking a side.
inline constexpr double kGapEps = 1e-9;

// The list of phases e^{i(arg(c_k) + <alpha_k, theta>)}, one per term.
struct PhaseList {
  std::vector<Angle> angles;  // normalized to (-pi, pi]
  bool exact = false;

  int size() const { return static_cast<int>(angles.size()); }
};

PhaseList phase_list(const LaurentPolynomial& f, const TorusPoint& theta);

// Largest angular gap between circularly consecutive phases.  The arc
// complementary to the gap contains every phase; `arc_start`/`arc_end`
// are its endpoints (arc_end = arc_start + (2pi - size) as a lift).
struct CircularGap {
  Angle size;       // in [0, 2pi]
  Angle midpoint;   // direction at the middle of the gap, normalized
  Angle arc_start;  // phase opening the occupied arc
  Angle arc_end;    // phase closing the occupied arc
  bool exact = false;
  bool boundary_indeterminate = false;  // float mode, |size - pi| <= eps
};

CircularGap max_circular_gap(const PhaseList& phases);

/// theta in LA'(f): the phase list is NOT lopsided, i.e. gap < pi, or
/// gap = pi with every phase at the two antipodal arc endpoints.
bool in_lopsided_coamoeba(const LaurentPolynomial& f, const TorusPoint& theta);

/// theta in the complement of the closed lopsided coamoeba: all phases
/// inside an open half-plane, i.e. gap strictly greater than pi.
bool in_closed_complement(const LaurentPolynomial& f, const TorusPoint& theta);

/// gap <= pi (complement of in_closed_complement).
bool in_closed_lopsided(const LaurentPolynomial& f, const TorusPoint& theta);

/// Union over trinomials: some g in Tri(f) has gap <= pi at theta.
/// Agrees with in_closed_lopsided for every theta.
bool trinomial_union_check(const LaurentPolynomial& f, const TorusPoint& theta);

/// Exact coamoeba membership for simple polynomials (the support is a
/// full set of simplex vertices, where the coamoeba and the lopsided
/// coamoeba coincide); UnsupportedError for non-simple supports, whose
/// coamoebas are only reachable by sampling.
bool in_coamoeba_simple(const LaurentPolynomial& f, const TorusPoint& theta);

// One family of parallel torus hyperplanes
// { theta : <normal, theta> = offset (mod 2pi) }.
struct HyperplaneFamily {
  std::vector<Int> normal;  // beta - alpha, nonzero
  Angle offset;             // normalized
};

/// The shell: one hyperplane family per binomial of f, with
/// normal = beta - alpha and offset = pi + arg(c_alpha) - arg(c_beta).
std::vector<HyperplaneFamily> shell(const LaurentPolynomial& f);

bool on_shell(const LaurentPolynomial& f, const TorusPoint& theta, double eps = kGapEps);

}  // namespace coamap

#endif
