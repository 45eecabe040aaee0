#include <algorithm>
#include <cmath>

#include "coamap/errors.hpp"
#include "coamap/render.hpp"

namespace coamap {

std::complex<double> UnivariatePoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * z + coeffs[k];
  return acc;
}

UnivariatePoly univariate_from(const LaurentPolynomial& f) {
  if (f.n != 1) throw InputError("univariate_from: polynomial is not univariate");
  Int emin = f.terms[0].exponent[0], emax = emin;
  for (const auto& t : f.terms) {
    emin = std::min(emin, t.exponent[0]);
    emax = std::max(emax, t.exponent[0]);
  }
  long span = Int(emax - emin).get_si();
  UnivariatePoly p;
  p.coeffs.assign(span + 1, std::complex<double>(0.0, 0.0));
  for (const auto& t : f.terms) {
    long k = Int(t.exponent[0] - emin).get_si();
    p.coeffs[k] += std::polar(t.coeff.modulus, t.coeff.angle.rad());
  }
  return p;
}

std::vector<std::complex<double>> aberth_roots(const UnivariatePoly& p, AberthOptions opts) {
  int deg = p.degree();
  if (deg < 1) throw InputError("aberth_roots: degree must be at least 1");
  if (std::abs(p.coeffs.back()) == 0.0) throw InputError("aberth_roots: leading coefficient is zero");

  // Strip roots at the origin first.
  int zero_roots = 0;
  while (zero_roots < deg && std::abs(p.coeffs[zero_roots]) == 0.0) ++zero_roots;
  std::vector<std::complex<double>> c(p.coeffs.begin() + zero_roots, p.coeffs.end());
  int d = static_cast<int>(c.size()) - 1;

  std::vector<std::complex<double>> z(d);
  std::vector<std::complex<double>> roots;
  roots.reserve(deg);
  for (int i = 0; i < zero_roots; ++i) roots.emplace_back(0.0, 0.0);
  if (d == 0) return roots;

  // Initial guesses on a perturbed circle scaled by the coefficient
  // magnitudes (geometric-mean style radius).
  double lead = std::abs(c.back());
  double radius = 0.0;
  for (int k = 0; k < d; ++k) {
    double m = std::abs(c[k]);
    if (m > 0.0) radius = std::max(radius, std::pow(m / lead, 1.0 / (d - k)));
  }
  if (radius == 0.0) radius = 1.0;
  for (int j = 0; j < d; ++j) {
    double ang = kTwoPi * j / d + 0.39 + 0.13 / d;
    z[j] = std::polar(radius * (1.0 + 0.05 * ((j % 3) - 1)), ang);
  }

  auto eval_with_derivative = [&](std::complex<double> x, std::complex<double>& dv) {
    std::complex<double> v = 0.0;
    dv = 0.0;
    for (int k = d; k >= 0; --k) {
      dv = dv * x + v;
      v = v * x + c[k];
    }
    return v;
  };

  double scale = 0.0;
  for (const auto& ck : c) scale = std::max(scale, std::abs(ck));
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < d; ++j) {
      std::complex<double> dv;
      std::complex<double> v = eval_with_derivative(z[j], dv);
      if (std::abs(v) == 0.0) continue;
      std::complex<double> newton = dv == std::complex<double>(0.0) ? v : v / dv;
      std::complex<double> repulsion = 0.0;
      for (int k = 0; k < d; ++k) {
        if (k == j) continue;
        std::complex<double> diff = z[j] - z[k];
        if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0.0);
        repulsion += 1.0 / diff;
      }
      std::complex<double> denom = 1.0 - newton * repulsion;
      std::complex<double> step = std::abs(denom) < 1e-300 ? newton : newton / denom;
      z[j] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[j])));
    }
    if (max_step < opts.tolerance) break;
  }

  // Residual check relative to the coefficient scale.
  for (int j = 0; j < d; ++j) {
    double zm = std::max(1.0, std::abs(z[j]));
    double bound = opts.tolerance * scale * std::pow(zm, d) * (d + 1) * 1e4;
    if (std::abs(p.eval(z[j])) > std::max(bound, 1e-6 * scale))
      throw InputError("aberth_roots: no convergence (residual " +
                       double_str(std::abs(p.eval(z[j]))) + ")");
  }
  for (int j = 0; j < d; ++j) roots.push_back(z[j]);
  return roots;
}

}  // namespace coamap
