#ifndef COAMAP_INTLIN_HPP
#define COAMAP_INTLIN_HPP

#include <optional>
#include <vector>

#include "coamap/matrix.hpp"

namespace coamap {

// Exact integer linear algebra on arbitrary-precision scalars.  Hermite
// normal form convention used throughout: row style, echelon with zeros
// below the pivots, pivots positive, entries above a pivot reduced into
// [0, pivot).

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMat& m);

struct HnfResult {
  IntMat h;  // row Hermite normal form
  IntMat u;  // unimodular, h = u * m
};
HnfResult hnf(const IntMat& m);

struct SnfResult {
  IntMat s;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMat u;  // unimodular
  IntMat v;  // unimodular, s = u * m * v
};
SnfResult snf(const IntMat& m);

/// Rank over the rationals (= number of nonzero HNF rows).
int rank_int(const IntMat& m);

/// N x m matrix whose columns form a Z-basis of {v : A v = 0}, in a
/// canonical form (column-wise HNF of the kernel lattice).  m = 0 yields
/// an N x 0 matrix.
IntMat integer_kernel_basis(const IntMat& a);

/// gcd of the absolute values of all k x k minors (all row subsets x all
/// column subsets); 0 iff every such minor vanishes.
Int maximal_minor_gcd(const IntMat& m, int k);

// The lattice generated by a set of integer row vectors, held as its
// canonical HNF basis.
struct LatticeBasis {
  int dim = 0;            // ambient dimension
  IntMat basis;           // rows = basis vectors (rank many), row HNF
  bool is_full_integer_lattice = false;  // lattice == Z^dim

  int rank() const { return basis.rows(); }
};
LatticeBasis lattice_from_rows(const IntMat& b);

/// Integer solution x of x * M = target (row-vector convention), if one
/// exists. Uses the Smith normal form of M.
std::optional<std::vector<Int>> solve_row_system(const IntMat& m, const std::vector<Int>& target);

/// Solve square rational system: x * M = rhs (row-vector convention).
/// Requires det(M) != 0.
std::vector<Rat> solve_rational_row_system(const RatMat& m, const std::vector<Rat>& rhs);

}  // namespace coamap

#endif
