#ifndef COAMAP_GALE_HPP
#define COAMAP_GALE_HPP

#include "coamap/intlin.hpp"
#include "coamap/lpoly.hpp"

namespace coamap {

// An integer N x m matrix B of full rank with A*B = 0.  is_gale marks
// whether the columns span the whole integer kernel of A.
struct DualMatrix {
  IntMat b;
  bool is_gale = false;
  LatticeBasis row_lattice;  // lattice generated by the rows of B
};

/// The canonical Gale dual: integer kernel basis of A, column-HNF
/// canonicalized, with each column's sign pinned so that its last
/// nonzero entry is positive.  (A Gale dual is only determined up to
/// GL_m(Z); downstream order values depend on this choice, so it is
/// fixed once here and reported alongside every result.)
DualMatrix gale_dual(const PointConfiguration& a);

/// Wrap an externally chosen dual matrix (checks A*B = 0 and full rank).
DualMatrix dual_from_matrix(const PointConfiguration& a, const IntMat& b);

/// Codimension one with all maximal minors nonzero.
bool is_circuit(const PointConfiguration& a);

/// The alternating-minor dual of a circuit:
/// B_j = (-1)^j det(A with column j removed).
DualMatrix circuit_dual(const PointConfiguration& a);

/// n! times the Euclidean volume of the Newton polytope.  Supported:
/// circuits (half the sum of |maximal minors|), n = 1 (lattice length)
/// and n = 2 (exact shoelace on the convex hull).
Rat normalized_volume(const PointConfiguration& a);

}  // namespace coamap

#endif
