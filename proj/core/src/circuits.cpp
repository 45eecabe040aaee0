#include "coamap/circuits.hpp"

#include <algorithm>
#include <set>

#include "coamap/errors.hpp"
#include "coamap/render.hpp"

namespace coamap {

CircuitCount circuit_count(const PointConfiguration& a) {
  if (!is_circuit(a)) throw InputError("circuit_count: configuration is not a circuit");
  CircuitCount out;
  Rat vol = normalized_volume(a);
  if (!is_integer(vol)) throw InputError("circuit_count: non-integer normalized volume");
  out.count = vol.get_num();
  out.g_a = maximal_minor_gcd(a.matrix, a.n + 1);
  out.multiplicity_warning = out.g_a != 1;
  return out;
}

bool is_maximally_sparse(const PointConfiguration& a) {
  std::vector<std::vector<Int>> pts;
  for (int k = 0; k < a.num_points; ++k) pts.push_back(a.exponent_column(k));
  return static_cast<int>(newton_vertices(pts).size()) == a.num_points;
}

bool is_maximally_sparse(const LaurentPolynomial& f) {
  return static_cast<int>(newton_vertices(f).size()) == f.term_count();
}

namespace {

// Shift so the first term is the constant; roles are then
// c_0 = term 0, alpha_1..alpha_n = terms 1..n, alpha_{n+1} = last term.
LaurentPolynomial normalize_constant_term(const LaurentPolynomial& f) {
  std::vector<Int> shift(f.n);
  for (int i = 0; i < f.n; ++i) shift[i] = -f.terms[0].exponent[i];
  return multiply_monomial(f, shift, Coefficient::one());
}

// The argument system solves the binomials pairing the constant role c
// with the last role e; its solution count is |B_c + B_e|.  That equals
// n!Vol exactly when {c, e} is a complete sign class of the circuit
// dual, so prefer a two-element class when one exists.
std::pair<int, int> select_roles(const IntMat& dual_column) {
  std::vector<int> pos, neg;
  for (int j = 0; j < dual_column.rows(); ++j) {
    if (dual_column(j, 0) > 0) pos.push_back(j);
    if (dual_column(j, 0) < 0) neg.push_back(j);
  }
  if (pos.size() == 2) return {pos[0], pos[1]};
  if (neg.size() == 2) return {neg[0], neg[1]};
  return {0, dual_column.rows() - 1};
}

LaurentPolynomial permute_terms(const LaurentPolynomial& f, int constant_role, int last_role) {
  LaurentPolynomial g;
  g.n = f.n;
  g.terms.push_back(f.terms[constant_role]);
  for (int k = 0; k < f.term_count(); ++k)
    if (k != constant_role && k != last_role) g.terms.push_back(f.terms[k]);
  g.terms.push_back(f.terms[last_role]);
  return g;
}

}  // namespace

BinomialSystem binomial_system(const LaurentPolynomial& f_in) {
  int n = f_in.n;
  if (f_in.term_count() != n + 2)
    throw InputError("binomial_system: a circuit support has n + 2 points");
  LaurentPolynomial f = normalize_constant_term(f_in);
  BinomialSystem sys;
  sys.exponent_matrix = IntMat(n, n);
  sys.rhs_angles.resize(n);
  // Rows alpha_1 - alpha_i for i = 2..n.
  for (int i = 2; i <= n; ++i) {
    for (int j = 0; j < n; ++j)
      sys.exponent_matrix(i - 2, j) = f.terms[1].exponent[j] - f.terms[i].exponent[j];
    sys.rhs_angles[i - 2] = (f.terms[i].coeff.angle - f.terms[1].coeff.angle).normalized();
  }
  // Row alpha_{n+1}.
  for (int j = 0; j < n; ++j) sys.exponent_matrix(n - 1, j) = f.terms[n + 1].exponent[j];
  sys.rhs_angles[n - 1] =
      (f.terms[0].coeff.angle - f.terms[n + 1].coeff.angle).normalized();
  return sys;
}

namespace {

// All solutions of theta * M^t = psi (mod 2pi) on T^n: with the Smith
// form S = U M^t V, classes are residues modulo the diagonal of S.
std::vector<TorusPoint> solve_argument_system(const BinomialSystem& sys) {
  int n = sys.exponent_matrix.rows();
  IntMat mt = sys.exponent_matrix.transposed();
  Int det = det_exact(mt);
  if (det == 0) throw InputError("binomial argument system is degenerate (det M = 0)");
  SnfResult fact = snf(mt);
  // theta = (psi + 2pi k) (M^t)^{-1}, k = r V^{-1}, r residues mod diag S.
  RatMat mt_inv_scaled = to_rational(mt);  // solve rather than invert
  std::vector<TorusPoint> out;
  std::vector<Int> r(n, Int(0));
  std::vector<Rat> psi(n);
  for (int i = 0; i < n; ++i) {
    if (!sys.rhs_angles[i].exact())
      throw UnsupportedError("base_points: exact coefficient angles required");
    psi[i] = sys.rhs_angles[i].pi_value();
  }
  // V^{-1} rows via x * V = e_i; integer since V is unimodular.
  IntMat v_inv(n, n);
  {
    RatMat vr = to_rational(fact.v);
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      std::vector<Rat> x = solve_rational_row_system(vr, e);
      for (int j = 0; j < n; ++j) {
        if (!is_integer(x[j])) throw InputError("base_points: V inverse not integral");
        v_inv(i, j) = x[j].get_num();
      }
    }
  }
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<Int> k = vec_mat(r, v_inv);
      std::vector<Rat> rhs(n);
      for (int j = 0; j < n; ++j) rhs[j] = psi[j] + 2 * Rat(k[j]);
      std::vector<Rat> theta = solve_rational_row_system(to_rational(mt), rhs);
      std::vector<Angle> coords(n);
      for (int j = 0; j < n; ++j) coords[j] = Angle::pi_units(theta[j]);
      out.push_back(TorusPoint(std::move(coords)));
      return;
    }
    Int d = abs(fact.s(i, i));
    for (Int rv(0); rv < d; ++rv) {
      r[i] = rv;
      rec(i + 1);
    }
  };
  rec(0);
  (void)mt_inv_scaled;
  return out;
}

}  // namespace

std::vector<TorusPoint> base_points(const LaurentPolynomial& f) {
  PointConfiguration a = support_matrix(f);
  if (!is_circuit(a)) throw InputError("base_points: support is not a circuit");
  if (f.n == 1) {
    // The binomial-system construction needs n >= 2; fall back to the
    // arguments of the numeric roots.
    std::vector<TorusPoint> out;
    for (const auto& root : aberth_roots(univariate_from(f))) {
      std::vector<Angle> c{Angle::radians(std::arg(root))};
      out.push_back(TorusPoint(std::move(c)));
    }
    return out;
  }
  if (!f.exact()) throw UnsupportedError("base_points: exact coefficient angles required");
  DualMatrix circuit_b = circuit_dual(a);
  auto [constant_role, last_role] = select_roles(circuit_b.b);
  BinomialSystem sys = binomial_system(permute_terms(f, constant_role, last_role));
  std::vector<TorusPoint> points = solve_argument_system(sys);

  // Post-verification: S must hit every complement component of these
  // coefficients exactly once.  A failure means either non-generic
  // coefficients, or a circuit whose dual has no two-element sign class
  // (the binomial construction then reaches |B_c + B_e| < n!Vol
  // components).
  DualMatrix b = gale_dual(a);
  std::vector<OrderPoint> expected = enumerate_orders(f, b.b);
  if (points.size() != expected.size())
    throw InputError("base_points: " + std::to_string(points.size()) +
                     " solutions for " + std::to_string(expected.size()) +
                     " components (non-generic coefficients or unbalanced circuit dual)");
  std::set<std::vector<Rat>> orders;
  for (const auto& theta : points) {
    if (!in_closed_complement(f, theta))
      throw InputError("base_points: non-lopsided sample; coefficients are not generic");
    OrderPoint p = cord(f, b.b, theta);
    if (!orders.insert(p.value_pi).second)
      throw InputError("base_points: order collision; coefficients are not generic");
  }
  for (const auto& p : expected)
    if (orders.find(p.value_pi) == orders.end())
      throw InputError("base_points: a complement component has no base point");
  return points;
}

}  // namespace coamap
