#include "coamap/torus.hpp"

#include <algorithm>
#include <cmath>

#include "coamap/errors.hpp"

namespace coamap {

PhaseList phase_list(const LaurentPolynomial& f, const TorusPoint& theta) {
  if (theta.dim() != f.n) throw InputError("phase_list: dimension mismatch");
  PhaseList out;
  out.exact = f.exact() && theta.exact();
  out.angles.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    Angle phi = t.coeff.angle + dot(t.exponent, theta.coords);
    if (!out.exact && phi.exact()) phi = Angle::radians(phi.rad());
    out.angles.push_back(phi.normalized());
  }
  return out;
}

CircularGap max_circular_gap(const PhaseList& phases) {
  if (phases.size() == 0) throw InputError("max_circular_gap: empty phase list");
  CircularGap g;
  g.exact = phases.exact;
  if (phases.exact) {
    std::vector<Rat> v;
    v.reserve(phases.angles.size());
    for (const auto& a : phases.angles) v.push_back(a.pi_value());
    std::sort(v.begin(), v.end());
    // Gap from v[i] to its successor; wrap closes the circle.
    Rat best = v.front() + 2 - v.back();
    std::size_t best_i = v.size() - 1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      Rat d = v[i + 1] - v[i];
      if (d > best) {
        best = d;
        best_i = i;
      }
    }
    Rat start = v[best_i];
    g.size = Angle::pi_units(best);
    g.midpoint = Angle::pi_units(start + best / 2).normalized();
    g.arc_end = Angle::pi_units(start);
    g.arc_start = Angle::pi_units(best_i + 1 < v.size() ? v[best_i + 1] : v.front());
  } else {
    std::vector<double> v;
    v.reserve(phases.angles.size());
    for (const auto& a : phases.angles) v.push_back(a.rad());
    std::sort(v.begin(), v.end());
    double best = v.front() + kTwoPi - v.back();
    std::size_t best_i = v.size() - 1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      double d = v[i + 1] - v[i];
      if (d > best) {
        best = d;
        best_i = i;
      }
    }
    double start = v[best_i];
    g.size = Angle::radians(best);
    g.midpoint = Angle::radians(start + best / 2).normalized();
    g.arc_end = Angle::radians(start);
    g.arc_start = Angle::radians(best_i + 1 < v.size() ? v[best_i + 1] : v.front());
    g.boundary_indeterminate = std::abs(best - kPi) <= kGapEps;
  }
  return g;
}

namespace {

// gap == pi case: every phase must sit at one of the two antipodal arc
// endpoints {a, a+pi}.
bool phases_on_two_antipodal_points(const PhaseList& phases, const CircularGap& g) {
  for (const auto& a : phases.angles) {
    if (same_circle_point(a, g.arc_start, kGapEps)) continue;
    if (same_circle_point(a, g.arc_end, kGapEps)) continue;
    return false;
  }
  return true;
}

}  // namespace

bool in_lopsided_coamoeba(const LaurentPolynomial& f, const TorusPoint& theta) {
  PhaseList phases = phase_list(f, theta);
  CircularGap g = max_circular_gap(phases);
  if (g.exact) {
    const Rat& s = g.size.pi_value();
    if (s < 1) return true;
    if (s == 1) return phases_on_two_antipodal_points(phases, g);
    return false;
  }
  double s = g.size.rad();
  if (s < kPi - kGapEps) return true;
  if (std::abs(s - kPi) <= kGapEps) return phases_on_two_antipodal_points(phases, g);
  return false;
}

bool in_closed_complement(const LaurentPolynomial& f, const TorusPoint& theta) {
  CircularGap g = max_circular_gap(phase_list(f, theta));
  if (g.exact) return g.size.pi_value() > 1;
  return g.size.rad() > kPi + kGapEps;
}

bool in_closed_lopsided(const LaurentPolynomial& f, const TorusPoint& theta) {
  return !in_closed_complement(f, theta);
}

bool trinomial_union_check(const LaurentPolynomial& f, const TorusPoint& theta) {
  if (f.term_count() < 3) throw InputError("trinomial_union_check: need at least three terms");
  for (const auto& g : trinomials(f))
    if (in_closed_lopsided(g, theta)) return true;
  return false;
}

bool in_coamoeba_simple(const LaurentPolynomial& f, const TorusPoint& theta) {
  PointConfiguration a = support_matrix(f);
  if (a.num_points != f.n + 1 || !a.full_dimensional)
    throw UnsupportedError("in_coamoeba_simple: support is not a simplex");
  return in_lopsided_coamoeba(f, theta);
}

std::vector<HyperplaneFamily> shell(const LaurentPolynomial& f) {
  if (f.term_count() < 2) throw InputError("shell: need at least two terms");
  std::vector<HyperplaneFamily> out;
  for (int a = 0; a < f.term_count(); ++a)
    for (int b = a + 1; b < f.term_count(); ++b) {
      HyperplaneFamily fam;
      fam.normal.resize(f.n);
      for (int i = 0; i < f.n; ++i) fam.normal[i] = f.terms[b].exponent[i] - f.terms[a].exponent[i];
      fam.offset =
          (Angle::pi() + f.terms[a].coeff.angle - f.terms[b].coeff.angle).normalized();
      out.push_back(std::move(fam));
    }
  return out;
}

bool on_shell(const LaurentPolynomial& f, const TorusPoint& theta, double eps) {
  for (const auto& fam : shell(f)) {
    Angle value = dot(fam.normal, theta.coords);
    if (value.exact() && fam.offset.exact()) {
      if (normalize_pi_units(value.pi_value() - fam.offset.pi_value()) == 0) return true;
    } else {
      double d = normalize_radians(value.rad() - fam.offset.rad());
      if (std::abs(d) <= eps) return true;
    }
  }
  return false;
}

}  // namespace coamap
