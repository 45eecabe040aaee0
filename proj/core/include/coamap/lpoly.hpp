#ifndef COAMAP_LPOLY_HPP
#define COAMAP_LPOLY_HPP

#include <string>
#include <vector>

#include "coamap/angle.hpp"
#include "coamap/matrix.hpp"

namespace coamap {

// A nonzero complex coefficient in polar form.  The angle is exact (a
// rational number of pi units) whenever that is syntactically evident
// from the input: real or imaginary values, +-45 degree Cartesian ones,
// and explicit polar angles.  The modulus is always a double; only
// phases need exactness here.
struct Coefficient {
  double modulus = 1.0;
  Angle angle;  // normalized to (-pi, pi]

  static Coefficient one() { return {1.0, Angle::zero()}; }
  static Coefficient real(double value);
  static Coefficient polar(double modulus, const Angle& angle);
};

struct Term {
  std::vector<Int> exponent;
  Coefficient coeff;
};

// f(z) = sum_k c_k z^{alpha_k}; term order is input order and is
// preserved by every operation.
struct LaurentPolynomial {
  int n = 0;  // number of variables
  std::vector<Term> terms;

  int term_count() const { return static_cast<int>(terms.size()); }
  bool exact() const {
    for (const auto& t : terms)
      if (!t.coeff.angle.exact()) return false;
    return true;
  }
  std::vector<Angle> coefficient_angles() const {
    std::vector<Angle> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.coeff.angle);
    return out;
  }
};

// The homogenized support matrix: first row all ones, column k below is
// the exponent vector of term k.
struct PointConfiguration {
  IntMat matrix;  // (n+1) x N
  int n = 0;
  int num_points = 0;   // N
  int codim = 0;        // m = N - n - 1
  bool full_dimensional = false;

  std::vector<Int> exponent_column(int k) const {
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = matrix(i + 1, k);
    return out;
  }
};

// Rational change of variables T with the integrality condition
// diag(1, T) * A integral.
struct TransformMatrix {
  RatMat t;
};

/// Parse polynomial text.  Grammar (terms joined by + and -):
///   term    := factor ('*' factor)*
///   factor  := scalar | variable
///   variable:= 'z' [index] ['^' int]        (bare 'z' means z1 when n = 1)
///   scalar  := rational | decimal | 'i' | 'e' '^' '(' angle ')' | '(' complex ')'
///   angle   := [rational '*'] 'pi' '*' 'i'  |  decimal '*' 'i'   (the latter in radians)
///   complex := cartesian a + b*i with rational parts
/// Duplicate exponents and zero coefficients are errors, not merged.
LaurentPolynomial parse_polynomial(const std::string& text, int n);

/// Number of variables the text mentions (highest z-index, at least 1);
/// convenience for CLI input.
int infer_variable_count(const std::string& text);

/// Canonical printer: terms in input order, polar-exact coefficients as
/// r*e^(p/q*pi*i).  parse(print(f)) reproduces f's term list exactly.
std::string to_string(const LaurentPolynomial& f);

PointConfiguration support_matrix(const LaurentPolynomial& f);

/// Point configuration straight from exponent columns (n inferred).
PointConfiguration point_configuration(const std::vector<std::vector<Int>>& exponents);

/// z^shift * scale * f; exponents shift, moduli multiply, angles add.
LaurentPolynomial multiply_monomial(const LaurentPolynomial& f, const std::vector<Int>& shift,
                                    const Coefficient& scale);

/// All C(N,3) (resp. C(N,2)) sub-polynomials, term order inherited.
std::vector<LaurentPolynomial> trinomials(const LaurentPolynomial& f);
std::vector<LaurentPolynomial> binomials(const LaurentPolynomial& f);

/// Monomial change of variables by T; exponents become T * alpha_k.
LaurentPolynomial apply_transform(const LaurentPolynomial& f, const TransformMatrix& t);

/// Indices k such that alpha_k is a vertex of Conv(A), decided exactly:
/// alpha_k is a vertex iff it is not a convex combination of the other
/// points (rational feasibility via Fourier-Motzkin).
std::vector<int> newton_vertices(const LaurentPolynomial& f);
std::vector<int> newton_vertices(const std::vector<std::vector<Int>>& points);

}  // namespace coamap

#endif
