#include "coamap/lpoly.hpp"

#include <algorithm>
#include <cmath>

#include "coamap/errors.hpp"
#include "coamap/intlin.hpp"
#include "coamap/linprog.hpp"

namespace coamap {

Coefficient Coefficient::real(double value) {
  if (value == 0.0) throw InputError("coefficient must be nonzero");
  return {std::abs(value), value > 0 ? Angle::zero() : Angle::pi()};
}

Coefficient Coefficient::polar(double modulus, const Angle& angle) {
  if (modulus <= 0.0) throw InputError("coefficient modulus must be positive");
  return {modulus, angle.normalized()};
}

std::string to_string(const LaurentPolynomial& f) {
  std::string out;
  for (int k = 0; k < f.term_count(); ++k) {
    const Term& t = f.terms[k];
    const Coefficient& c = t.coeff;
    bool negative_real = c.angle.exact() && c.angle.pi_value() == 1;
    if (k == 0) {
      if (negative_real) out += "-";
    } else {
      out += negative_real ? " - " : " + ";
    }
    std::string monomial;
    for (int i = 0; i < f.n; ++i) {
      if (t.exponent[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "z" + std::to_string(i + 1);
      if (t.exponent[i] != 1) monomial += "^" + to_string(t.exponent[i]);
    }
    std::string coeff;
    if (c.angle.exact()) {
      const Rat& q = c.angle.pi_value();
      if (q == 0 || q == 1) {
        if (c.modulus != 1.0 || monomial.empty()) coeff = double_str(c.modulus);
      } else {
        if (c.modulus != 1.0) coeff = double_str(c.modulus) + "*";
        coeff += "e^(" + to_string(q) + "*pi*i)";
      }
    } else {
      if (c.modulus != 1.0) coeff = double_str(c.modulus) + "*";
      coeff += "e^(" + double_str(c.angle.rad()) + "*i)";
    }
    if (coeff.empty())
      out += monomial;
    else if (monomial.empty())
      out += coeff;
    else
      out += coeff + "*" + monomial;
  }
  return out;
}

PointConfiguration support_matrix(const LaurentPolynomial& f) {
  PointConfiguration a;
  a.n = f.n;
  a.num_points = f.term_count();
  a.codim = a.num_points - a.n - 1;
  a.matrix = IntMat(f.n + 1, a.num_points);
  for (int k = 0; k < a.num_points; ++k) {
    a.matrix(0, k) = 1;
    for (int i = 0; i < f.n; ++i) a.matrix(i + 1, k) = f.terms[k].exponent[i];
  }
  a.full_dimensional = rank_int(a.matrix) == f.n + 1;
  return a;
}

PointConfiguration point_configuration(const std::vector<std::vector<Int>>& exponents) {
  if (exponents.empty()) throw InputError("point configuration needs at least one point");
  PointConfiguration a;
  a.n = static_cast<int>(exponents.front().size());
  a.num_points = static_cast<int>(exponents.size());
  a.codim = a.num_points - a.n - 1;
  a.matrix = IntMat(a.n + 1, a.num_points);
  for (int k = 0; k < a.num_points; ++k) {
    if (static_cast<int>(exponents[k].size()) != a.n)
      throw InputError("point configuration: inconsistent dimensions");
    a.matrix(0, k) = 1;
    for (int i = 0; i < a.n; ++i) a.matrix(i + 1, k) = exponents[k][i];
  }
  a.full_dimensional = rank_int(a.matrix) == a.n + 1;
  return a;
}

LaurentPolynomial multiply_monomial(const LaurentPolynomial& f, const std::vector<Int>& shift,
                                    const Coefficient& scale) {
  if (static_cast<int>(shift.size()) != f.n) throw InputError("multiply_monomial: shift dimension");
  if (scale.modulus <= 0.0) throw InputError("multiply_monomial: scale must be nonzero");
  LaurentPolynomial g = f;
  for (auto& t : g.terms) {
    for (int i = 0; i < f.n; ++i) t.exponent[i] += shift[i];
    t.coeff.modulus *= scale.modulus;
    t.coeff.angle = (t.coeff.angle + scale.angle).normalized();
  }
  return g;
}

namespace {

std::vector<LaurentPolynomial> subpolynomials(const LaurentPolynomial& f, int size) {
  int n_terms = f.term_count();
  std::vector<LaurentPolynomial> out;
  std::vector<int> sel(size);
  for (int i = 0; i < size; ++i) sel[i] = i;
  while (true) {
    LaurentPolynomial g;
    g.n = f.n;
    for (int i : sel) g.terms.push_back(f.terms[i]);
    out.push_back(std::move(g));
    int i = size - 1;
    while (i >= 0 && sel[i] == n_terms - size + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<LaurentPolynomial> trinomials(const LaurentPolynomial& f) {
  if (f.term_count() < 3) throw InputError("trinomials: need at least three terms");
  return subpolynomials(f, 3);
}

std::vector<LaurentPolynomial> binomials(const LaurentPolynomial& f) {
  if (f.term_count() < 2) throw InputError("binomials: need at least two terms");
  return subpolynomials(f, 2);
}

LaurentPolynomial apply_transform(const LaurentPolynomial& f, const TransformMatrix& t) {
  int n = f.n;
  if (t.t.rows() != n || t.t.cols() != n) throw InputError("apply_transform: shape mismatch");
  LaurentPolynomial g = f;
  for (auto& term : g.terms) {
    std::vector<Rat> alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = Rat(term.exponent[i]);
    std::vector<Rat> image = mat_vec(t.t, alpha);
    for (int i = 0; i < n; ++i) {
      if (!is_integer(image[i]))
        throw InputError("apply_transform: T violates integrality (diag(1,T)*A not integer)");
      term.exponent[i] = image[i].get_num();
    }
  }
  return g;
}

std::vector<int> newton_vertices(const std::vector<std::vector<Int>>& points) {
  int count = static_cast<int>(points.size());
  std::vector<int> out;
  if (count == 0) return out;
  int n = static_cast<int>(points.front().size());
  for (int k = 0; k < count; ++k) {
    // alpha_k = sum_{j != k} t_j alpha_j, sum t_j = 1, t_j >= 0.
    std::vector<int> others;
    for (int j = 0; j < count; ++j)
      if (j != k) others.push_back(j);
    int nvars = static_cast<int>(others.size());
    std::vector<LinearEquation> eqs;
    for (int i = 0; i < n; ++i) {
      LinearEquation e;
      e.coeffs.resize(nvars);
      for (int v = 0; v < nvars; ++v) e.coeffs[v] = Rat(points[others[v]][i]);
      e.rhs = Rat(points[k][i]);
      eqs.push_back(std::move(e));
    }
    {
      LinearEquation e;
      e.coeffs.assign(nvars, Rat(1));
      e.rhs = Rat(1);
      eqs.push_back(std::move(e));
    }
    std::vector<LinearConstraint> ineqs;
    for (int v = 0; v < nvars; ++v) {
      LinearConstraint c;
      c.coeffs.assign(nvars, Rat(0));
      c.coeffs[v] = Rat(-1);
      c.rhs = Rat(0);
      ineqs.push_back(std::move(c));
    }
    if (!lp_feasible(eqs, std::move(ineqs), nvars)) out.push_back(k);
  }
  return out;
}

std::vector<int> newton_vertices(const LaurentPolynomial& f) {
  std::vector<std::vector<Int>> pts;
  pts.reserve(f.terms.size());
  for (const auto& t : f.terms) pts.push_back(t.exponent);
  return newton_vertices(pts);
}

}  // namespace coamap
