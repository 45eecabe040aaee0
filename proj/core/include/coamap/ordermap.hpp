#ifndef COAMAP_ORDERMAP_HPP
#define COAMAP_ORDERMAP_HPP

#include <vector>

#include "coamap/gale.hpp"
#include "coamap/torus.hpp"

namespace coamap {

// Exact values are carried in units of pi throughout this module: a Rat
// q stands for the real number q*pi.

// The zonotope Z_B = { sum_j (pi/2) mu_j b_j : |mu_j| <= 1 } over the
// rows b_j of B, held by its support description: for every facet
// normal u, the support value is h(u) = (pi/2) sum_j |<u, b_j>|.
struct Zonotope {
  int dim = 0;                            // m
  RatMat generators;                      // rows: (1/2) b_j, in pi units
  std::vector<std::vector<Int>> facet_normals;  // primitive, deduplicated
  std::vector<Rat> support;               // h(u) in pi units, per normal
  std::vector<std::vector<Rat>> vertices; // populated for m <= 2 (empty for m = 0)

  /// Coordinate-box bound: |p_i| <= coordinate_bound(i) for p in Z_B.
  Rat coordinate_bound(int i) const;
};

Zonotope zonotope(const IntMat& b);

enum class ZonoRegion { Interior, Boundary, Outside };

struct ZonoClassification {
  ZonoRegion region = ZonoRegion::Outside;
  bool is_vertex = false;  // computed for m <= 2; always false otherwise
};

/// Classify an exact point (pi units) against Z_B.
ZonoClassification zonotope_classify(const Zonotope& z, const std::vector<Rat>& p_pi);

/// Vertex test; UnsupportedError for m >= 3.
bool zonotope_is_vertex(const Zonotope& z, const std::vector<Rat>& p_pi);

// A point of the translated lattice Arg_pi(c)B + 2*pi*Z[B].
struct OrderPoint {
  std::vector<Rat> value_pi;     // coordinates, units of pi
  std::vector<Int> lattice_tag;  // w in Z[B] with value = t + 2w (pi units)

  friend bool operator==(const OrderPoint& a, const OrderPoint& b) {
    return a.value_pi == b.value_pi;
  }
  friend bool operator<(const OrderPoint& a, const OrderPoint& b) {
    return a.value_pi < b.value_pi;
  }
};

/// The integer vector l with p_alpha(theta) = 2*pi*l (one entry per
/// term): l_k counts the windings that reduce the phase of the ratio
/// (c_k e^{i<alpha_k,theta>}) / (c_alpha e^{i<alpha,theta>}) to the
/// principal branch.  theta is a lift in R^n (a TorusPoint's coordinates
/// are its canonical lift).  Exact inputs give exact integers; float
/// inputs are rounded with residual checked against `eps`.
std::vector<Int> p_vector(const LaurentPolynomial& f, const std::vector<Angle>& theta_lift,
                          int alpha_index, double eps = 1e-8);

/// v_alpha(theta) = (Arg_pi(c) + p_alpha(theta)) B, evaluated by the
/// manifestly 2pi-periodic ratio form.  Exact for exact inputs;
/// independent of alpha_index.
OrderPoint order_value(const LaurentPolynomial& f, const IntMat& b,
                       const std::vector<Angle>& theta_lift, int alpha_index = 0);

/// The order of the complement component containing theta.  Requires
/// in_closed_complement(f, theta).
OrderPoint cord(const LaurentPolynomial& f, const IntMat& b, const TorusPoint& theta);

/// Float-mode shadow of order_value for inputs with inexact angles:
/// windings are rounded (residual-checked), the value is returned in pi
/// units as doubles.
std::vector<double> order_value_float(const LaurentPolynomial& f, const IntMat& b,
                                      const TorusPoint& theta);

/// Translation Arg_pi(c) * B in pi units.
std::vector<Rat> translation(const LaurentPolynomial& f, const IntMat& b);

/// All points of the translated lattice in the open interior of Z_B,
/// sorted lexicographically.  Exact coefficient angles required.
std::vector<OrderPoint> enumerate_orders(const LaurentPolynomial& f, const IntMat& b);

/// Open variant: lattice points in the closed zonotope minus its
/// vertices.  Restricted to m <= 2 (vertex test bound).
std::vector<OrderPoint> enumerate_orders_open(const LaurentPolynomial& f, const IntMat& b);

/// A torus point whose component maps to the given order: solves the
/// half-plane slack system on the fiber parameters exactly, maximizing
/// the margin 1 - max|lambda_k| (Chebyshev style; deterministic
/// tie-break).  Requires p interior to Z_B.
TorusPoint witness_theta(const LaurentPolynomial& f, const IntMat& b, const OrderPoint& p);

struct ComponentCount {
  Int count;
  bool bijective = false;  // g_A = 1 and B a Gale dual
  Int g_a;
  Int g_b;
};

/// |enumerate_orders| together with the multiplicity data g_A, g_B.
ComponentCount count_components(const LaurentPolynomial& f, const DualMatrix& b);

/// Whether the translation avoids the finite set of boundary-hitting
/// lattice translates (the operational meaning of "generic
/// coefficients" for counting results).
bool coefficients_generic(const LaurentPolynomial& f, const IntMat& b);

}  // namespace coamap

#endif
