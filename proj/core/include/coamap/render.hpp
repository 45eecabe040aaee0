#ifndef COAMAP_RENDER_HPP
#define COAMAP_RENDER_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "coamap/ordermap.hpp"

namespace coamap {

// coeffs[k] * z^k, leading coefficient nonzero.
struct UnivariatePoly {
  std::vector<std::complex<double>> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> eval(std::complex<double> z) const;
};

struct AberthOptions {
  int max_iterations = 100;
  double tolerance = 1e-12;
};

/// All complex roots by simultaneous (Aberth-Ehrlich) iteration.
/// Multiple roots come back as clusters.  Throws InputError when the
/// residuals fail to meet the tolerance.
std::vector<std::complex<double>> aberth_roots(const UnivariatePoly& p, AberthOptions opts = {});

/// Ordinary polynomial whose C* roots match a univariate Laurent
/// polynomial (exponents shifted to start at zero).
UnivariatePoly univariate_from(const LaurentPolynomial& f);

// Raster over the fundamental domain [-pi, pi)^2, or a [-pi, pi) strip
// of height 1 when n = 1.  Pixel (row, col) covers the square centered
// at theta = (-pi + (col + 1/2) dx, -pi + (row + 1/2) dy).
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;        // membership layer
  std::vector<std::uint8_t> complement;  // closed-complement layer
  std::vector<std::uint8_t> overlay;     // shell overlay layer

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  double theta1(int col) const { return -kPi + (col + 0.5) * kTwoPi / width; }
  double theta2(int row) const { return -kPi + (row + 0.5) * kTwoPi / height; }
};

/// Per-pixel membership in the (closed when `closed`) lopsided coamoeba,
/// float mode; also fills the closed-complement layer.  n = 1 renders a
/// one-pixel-high strip; n must be 1 or 2.
RasterImage raster_lopsided(const LaurentPolynomial& f, int resolution, bool closed = false);

struct SampleStats {
  long fibers = 0;
  long degenerate_fibers = 0;  // leading coefficient vanished; skipped
  long samples = 0;
};

/// Sampled coamoeba: sweep z1 = e^{x + i phi} over phi columns and an
/// adaptively refined x range, solve the fiber polynomial in z2, and
/// mark pixels at (phi, arg root).  n = 1 marks the root arguments on a
/// strip.  More than 1% degenerate fibers is an error.
RasterImage raster_coamoeba_sampled(const LaurentPolynomial& f, int resolution,
                                    int fiber_samples = 0, double x_max = 14.0,
                                    SampleStats* stats = nullptr);

/// Mark pixels within half a pixel of some shell hyperplane.
void draw_shell_overlay(RasterImage& img, const LaurentPolynomial& f);

/// Wraparound 4-connected component count of a pixel layer.  When f is
/// given, adjacency is cut where the step between pixel centers crosses
/// a shell hyperplane: the closed-lopsided complement never meets the
/// shell, but distinct components can pinch at shell intersection
/// points thinner than a pixel, and the cut restores the separation
/// exactly (each component lives in a single cell of the arrangement).
int flood_fill_components(const RasterImage& img, const std::vector<std::uint8_t>& layer,
                          const LaurentPolynomial* f = nullptr);

/// Fraction of mask pixels set.
double coverage_fraction(const RasterImage& img);

/// Binary P6 image: white background, mask in blue, overlay in red,
/// composed deterministically.  Strips are replicated to a visible
/// height.
void write_ppm(const RasterImage& img, const std::string& path);

/// Zonotope plot (interval or zonogon) with the translated lattice:
/// interior points filled, boundary non-vertex points open, outside
/// candidates faint, the translation marked.  m <= 2.
std::string zonotope_svg(const Zonotope& z, const std::vector<Rat>& translation,
                         const std::vector<OrderPoint>& orders);

}  // namespace coamap

#endif
