#ifndef COAMAP_CIRCUITS_HPP
#define COAMAP_CIRCUITS_HPP

#include <vector>

#include "coamap/ordermap.hpp"

namespace coamap {

// The codimension-one binomial system on arguments:
// theta * M^t = psi (mod 2pi), rows of M are alpha_1 - alpha_i
// (i = 2..n) followed by alpha_{n+1}, after normalizing f so the first
// term is the constant.
struct BinomialSystem {
  IntMat exponent_matrix;        // n x n, det != 0
  std::vector<Angle> rhs_angles; // psi, normalized
};

struct CircuitCount {
  Int count;
  bool multiplicity_warning = false;  // g_A != 1: the order map is g_A to one
  Int g_a;
};

/// Generic complement-component count of a circuit: half the sum of the
/// absolute maximal minors (= n! Vol of the Newton polytope).
CircuitCount circuit_count(const PointConfiguration& a);

/// Every support point is a vertex of the Newton polytope.
bool is_maximally_sparse(const PointConfiguration& a);
bool is_maximally_sparse(const LaurentPolynomial& f);

/// The binomial argument system for a circuit with the first term
/// normalized to a constant.
BinomialSystem binomial_system(const LaurentPolynomial& f);

/// Base points: one torus point per complement component of the closed
/// coamoeba, constructed by solving the binomial system exactly via the
/// Smith normal form (solution classes indexed by Z^n / M^t Z^n).
/// Requires a circuit with n >= 2 and generic coefficients; failures of
/// genericity (a non-lopsided sample or an order collision) are
/// reported as errors, not dropped.  For n = 1 the construction does not
/// apply and the arguments of the numeric roots of f are returned
/// instead (float mode).
std::vector<TorusPoint> base_points(const LaurentPolynomial& f);

}  // namespace coamap

#endif
