#include "coamap/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <queue>
#include <thread>

#include "coamap/errors.hpp"

namespace coamap {

namespace {

LaurentPolynomial float_copy(const LaurentPolynomial& f) {
  LaurentPolynomial g = f;
  for (auto& t : g.terms)
    if (t.coeff.angle.exact()) t.coeff.angle = Angle::radians(t.coeff.angle.rad());
  return g;
}

void parallel_rows(int height, const std::function<void(int, int)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = std::max(1, static_cast<int>(std::min<unsigned>(hw, 8)));
  if (height < 4 * workers) {
    body(0, height);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (height + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = w * chunk, hi = std::min(height, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

RasterImage raster_lopsided(const LaurentPolynomial& f, int resolution, bool closed) {
  if (f.n != 1 && f.n != 2) throw InputError("raster_lopsided: n must be 1 or 2");
  if (resolution < 2) throw InputError("raster_lopsided: resolution too small");
  RasterImage img;
  img.width = resolution;
  img.height = f.n == 2 ? resolution : 1;
  img.mask.assign(static_cast<std::size_t>(img.width) * img.height, 0);
  img.complement.assign(img.mask.size(), 0);
  img.overlay.assign(img.mask.size(), 0);
  LaurentPolynomial g = float_copy(f);
  parallel_rows(img.height, [&](int row_lo, int row_hi) {
    for (int row = row_lo; row < row_hi; ++row) {
      for (int col = 0; col < img.width; ++col) {
        std::vector<Angle> coords;
        coords.push_back(Angle::radians(img.theta1(col)));
        if (f.n == 2) coords.push_back(Angle::radians(img.theta2(row)));
        TorusPoint theta(std::move(coords));
        bool member = closed ? in_closed_lopsided(g, theta) : in_lopsided_coamoeba(g, theta);
        img.mask[img.index(row, col)] = member ? 1 : 0;
        img.complement[img.index(row, col)] = in_closed_complement(g, theta) ? 1 : 0;
      }
    }
  });
  return img;
}

namespace {

// Fiber polynomial in z2 at fixed z1; exponents shifted so the lowest
// z2 power is constant (roots in C* are unaffected).  term_scale[k]
// accumulates |contributions| so catastrophic cancellation in a
// coefficient is detectable.
struct FiberPoly {
  UnivariatePoly p;
  std::vector<double> term_scale;
};

FiberPoly fiber_poly(const LaurentPolynomial& f, std::complex<double> z1) {
  Int lo = f.terms[0].exponent[1], hi = lo;
  for (const auto& t : f.terms) {
    lo = std::min(lo, t.exponent[1]);
    hi = std::max(hi, t.exponent[1]);
  }
  long span = Int(hi - lo).get_si();
  FiberPoly out;
  out.p.coeffs.assign(span + 1, std::complex<double>(0.0, 0.0));
  out.term_scale.assign(span + 1, 0.0);
  for (const auto& t : f.terms) {
    long k = Int(t.exponent[1] - lo).get_si();
    std::complex<double> c = std::polar(t.coeff.modulus, t.coeff.angle.rad());
    long e1 = t.exponent[0].get_si();
    std::complex<double> contrib = c * std::pow(z1, static_cast<double>(e1));
    out.p.coeffs[k] += contrib;
    out.term_scale[k] += std::abs(contrib);
  }
  return out;
}

struct FiberSample {
  std::vector<double> args;  // root arguments, sorted
  bool ok = false;
};

FiberSample solve_fiber(const LaurentPolynomial& f, double phi, double x, double degenerate_eps) {
  FiberSample s;
  std::complex<double> z1 = std::polar(std::exp(x), phi);
  FiberPoly fp = fiber_poly(f, z1);
  // The fiber is degenerate when the top z2 coefficient vanishes (its
  // term contributions cancel); compare against its own scale, not the
  // scale of the other coefficients.
  double lead = std::abs(fp.p.coeffs.back());
  if (lead == 0.0 || lead < degenerate_eps * fp.term_scale.back()) return s;
  try {
    auto roots = aberth_roots(fp.p);
    for (const auto& r : roots)
      if (std::abs(r) > 0.0) s.args.push_back(std::arg(r));
    std::sort(s.args.begin(), s.args.end());
    s.ok = true;
  } catch (const InputError&) {
    s.ok = false;
  }
  return s;
}

double circ_dist(double a, double b) {
  double d = std::abs(normalize_radians(a - b));
  return d;
}

// Largest gap when greedily matching two sorted argument lists; a
// mismatch in count maxes the distance out.
double matching_distance(const FiberSample& a, const FiberSample& b) {
  if (a.args.size() != b.args.size()) return kTwoPi;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    worst = std::max(worst, circ_dist(a.args[i], b.args[i]));
  return worst;
}

}  // namespace

RasterImage raster_coamoeba_sampled(const LaurentPolynomial& f, int resolution, int fiber_samples,
                                    double x_max, SampleStats* stats) {
  if (f.n != 1 && f.n != 2) throw InputError("raster_coamoeba_sampled: n must be 1 or 2");
  if (resolution < 2) throw InputError("raster_coamoeba_sampled: resolution too small");
  if (f.n == 1) {
    // Univariate coamoebas are the root arguments themselves.
    RasterImage img;
    img.width = resolution;
    img.height = 1;
    img.mask.assign(resolution, 0);
    img.complement.assign(resolution, 0);
    img.overlay.assign(resolution, 0);
    SampleStats local;
    local.fibers = 1;
    for (const auto& root : aberth_roots(univariate_from(f))) {
      if (std::abs(root) == 0.0) continue;
      ++local.samples;
      double y = normalize_radians(std::arg(root));
      if (y >= kPi) y -= kTwoPi;
      int col = std::min(static_cast<int>((y + kPi) / (kTwoPi / resolution)), resolution - 1);
      img.mask[img.index(0, col)] = 1;
    }
    if (stats) *stats = local;
    return img;
  }
  RasterImage img;
  img.width = resolution;
  img.height = resolution;
  img.mask.assign(static_cast<std::size_t>(resolution) * resolution, 0);
  img.complement.assign(img.mask.size(), 0);
  img.overlay.assign(img.mask.size(), 0);
  if (fiber_samples <= 0) fiber_samples = resolution;
  const double pixel = kTwoPi / resolution;
  const double degenerate_eps = 1e-13;
  const int initial = 48;
  const int max_depth = 14;
  const long column_budget = 4 * resolution;
  SampleStats local;
  LaurentPolynomial g = float_copy(f);

  std::vector<long> degenerate_per_column(fiber_samples, 0);
  std::vector<long> samples_per_column(fiber_samples, 0);

  parallel_rows(fiber_samples, [&](int lo_col, int hi_col) {
    for (int fc = lo_col; fc < hi_col; ++fc) {
      // Fibers run at pixel-column centers so every sample lands in its
      // own column.
      double phi = -kPi + (fc + 0.5) * kTwoPi / fiber_samples;
      int col = static_cast<int>((phi + kPi) / kTwoPi * resolution);
      col = std::min(col, resolution - 1);
      auto mark = [&](double arg) {
        double y = normalize_radians(arg);
        if (y >= kPi) y -= kTwoPi;
        int row = static_cast<int>((y + kPi) / pixel);
        row = std::min(std::max(row, 0), resolution - 1);
        img.mask[img.index(row, col)] = 1;
      };
      // Adaptive subdivision in x: split the segment whose matched root
      // arguments moved the most, until every jump fits in a pixel or
      // the per-column solve budget runs out.
      struct Seg {
        double badness;
        double x0, x1;
        FiberSample s0, s1;
        int depth;
        bool operator<(const Seg& o) const { return badness < o.badness; }
      };
      auto badness_of = [&](const FiberSample& a, const FiberSample& b) {
        if (!a.ok || !b.ok) return kTwoPi;
        return matching_distance(a, b);
      };
      std::vector<double> xs(initial + 1);
      for (int i = 0; i <= initial; ++i) xs[i] = -x_max + 2.0 * x_max * i / initial;
      std::vector<FiberSample> samples(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        samples[i] = solve_fiber(g, phi, xs[i], degenerate_eps);
        ++samples_per_column[fc];
        if (!samples[i].ok) ++degenerate_per_column[fc];
        for (double a : samples[i].args) mark(a);
      }
      std::priority_queue<Seg> work;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        work.push({badness_of(samples[i], samples[i + 1]), xs[i], xs[i + 1], samples[i],
                   samples[i + 1], 0});
      long budget = column_budget;
      while (!work.empty() && budget > 0) {
        Seg seg = work.top();
        work.pop();
        if (seg.badness <= pixel * 0.9) break;
        if (seg.depth >= max_depth) continue;
        double xm = 0.5 * (seg.x0 + seg.x1);
        FiberSample sm = solve_fiber(g, phi, xm, degenerate_eps);
        --budget;
        ++samples_per_column[fc];
        if (!sm.ok) ++degenerate_per_column[fc];
        for (double a : sm.args) mark(a);
        work.push({badness_of(seg.s0, sm), seg.x0, xm, seg.s0, sm, seg.depth + 1});
        work.push({badness_of(sm, seg.s1), xm, seg.x1, sm, seg.s1, seg.depth + 1});
      }
    }
  });

  for (int fc = 0; fc < fiber_samples; ++fc) {
    local.degenerate_fibers += degenerate_per_column[fc];
    local.samples += samples_per_column[fc];
  }
  local.fibers = fiber_samples;
  if (stats) *stats = local;
  if (local.samples > 0 && local.degenerate_fibers * 100 > local.samples)
    throw InputError("raster_coamoeba_sampled: " + std::to_string(local.degenerate_fibers) +
                     " of " + std::to_string(local.samples) +
                     " fiber solves degenerate; undersampling would fake components");
  return img;
}

void draw_shell_overlay(RasterImage& img, const LaurentPolynomial& f) {
  if (f.n != 1 && f.n != 2) throw InputError("draw_shell_overlay: n must be 1 or 2");
  auto families = shell(f);
  double dx = kTwoPi / img.width;
  double dy = img.height > 1 ? kTwoPi / img.height : 0.0;
  for (int row = 0; row < img.height; ++row)
    for (int col = 0; col < img.width; ++col) {
      double t1 = img.theta1(col);
      double t2 = img.height > 1 ? img.theta2(row) : 0.0;
      for (const auto& fam : families) {
        double n1 = to_double(fam.normal[0]);
        double n2 = f.n == 2 ? to_double(fam.normal[1]) : 0.0;
        double val = normalize_radians(n1 * t1 + n2 * t2 - fam.offset.rad());
        double band = 0.5 * (std::abs(n1) * dx + std::abs(n2) * dy);
        if (std::abs(val) <= band) {
          img.overlay[img.index(row, col)] = 1;
          break;
        }
      }
    }
}

int flood_fill_components(const RasterImage& img, const std::vector<std::uint8_t>& layer,
                          const LaurentPolynomial* f) {
  int w = img.width, h = img.height;
  std::vector<HyperplaneFamily> families;
  if (f) families = shell(*f);
  double dx = kTwoPi / w;
  double dy = h > 1 ? kTwoPi / h : 0.0;
  // The step from (r, c) in direction k crosses a shell hyperplane when
  // the transverse coordinate (<n, theta> - offset)/2pi passes an
  // integer between the two centers.
  auto crosses_shell = [&](int r, int c, double step1, double step2) {
    if (families.empty()) return false;
    double t1 = img.theta1(c);
    double t2 = h > 1 ? img.theta2(r) : 0.0;
    for (const auto& fam : families) {
      double n1 = to_double(fam.normal[0]);
      double n2 = fam.normal.size() > 1 ? to_double(fam.normal[1]) : 0.0;
      double g0 = (n1 * t1 + n2 * t2 - fam.offset.rad()) / kTwoPi;
      double g1 = g0 + (n1 * step1 + n2 * step2) / kTwoPi;
      if (std::floor(g0) != std::floor(g1)) return true;
    }
    return false;
  };
  std::vector<std::uint8_t> seen(layer.size(), 0);
  int components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int row = 0; row < h; ++row)
    for (int col = 0; col < w; ++col) {
      std::size_t at = img.index(row, col);
      if (!layer[at] || seen[at]) continue;
      ++components;
      stack.emplace_back(row, col);
      seen[at] = 1;
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        const int dr[] = {1, -1, 0, 0};
        const int dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          int nr = (r + dr[k] + h) % h;
          int nc = (c + dc[k] + w) % w;
          std::size_t ni = img.index(nr, nc);
          if (!layer[ni] || seen[ni]) continue;
          if (crosses_shell(r, c, dc[k] * dx, dr[k] * dy)) continue;
          seen[ni] = 1;
          stack.emplace_back(nr, nc);
        }
      }
    }
  return components;
}

double coverage_fraction(const RasterImage& img) {
  long set = 0;
  for (auto v : img.mask) set += v;
  return static_cast<double>(set) / static_cast<double>(img.mask.size());
}

void write_ppm(const RasterImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("write_ppm: cannot open " + path);
  int replicate = img.height == 1 ? 32 : 1;
  int h = img.height * replicate;
  out << "P6\n" << img.width << " " << h << "\n255\n";
  for (int row = 0; row < h; ++row) {
    int src_row = img.height == 1 ? 0 : row;
    for (int col = 0; col < img.width; ++col) {
      std::size_t at = img.index(src_row, col);
      std::uint8_t rgb[3] = {255, 255, 255};
      if (img.mask[at]) {
        rgb[0] = 45;
        rgb[1] = 65;
        rgb[2] = 150;
      }
      if (img.overlay[at]) {
        rgb[0] = 220;
        rgb[1] = 60;
        rgb[2] = 50;
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

namespace {

std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string zonotope_svg(const Zonotope& z, const std::vector<Rat>& translation,
                         const std::vector<OrderPoint>& orders) {
  if (z.dim > 2) throw UnsupportedError("zonotope_svg: m <= 2 only");
  double extent = 1.0;
  for (int i = 0; i < z.dim; ++i) extent = std::max(extent, to_double(z.coordinate_bound(i)));
  double scale = 180.0 / extent;
  double cx = 200.0, cy = 200.0;
  auto px = [&](double x) { return cx + scale * x; };
  auto py = [&](double y) { return cy - scale * y; };
  std::string svg;
  svg += "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400' "
         "viewBox='0 0 400 400'>\n";
  svg += "<rect width='400' height='400' fill='white'/>\n";
  if (z.dim == 0) {
    svg += "<circle cx='200' cy='200' r='4' class='order interior' fill='black'/>\n";
  } else if (z.dim == 1) {
    double h = to_double(z.support[0]);
    svg += "<line x1='" + svg_num(px(-h)) + "' y1='200' x2='" + svg_num(px(h)) +
           "' y2='200' stroke='black' stroke-width='2'/>\n";
    for (double v : {-h, h})
      svg += "<line x1='" + svg_num(px(v)) + "' y1='192' x2='" + svg_num(px(v)) +
             "' y2='208' stroke='black' stroke-width='2'/>\n";
  } else {
    svg += "<polygon points='";
    for (const auto& v : z.vertices)
      svg += svg_num(px(to_double(v[0]))) + "," + svg_num(py(to_double(v[1]))) + " ";
    svg += "' fill='none' stroke='black' stroke-width='2'/>\n";
  }
  // Translation marker.
  {
    double tx = z.dim >= 1 ? to_double(translation[0]) : 0.0;
    double ty = z.dim >= 2 ? to_double(translation[1]) : 0.0;
    svg += "<circle cx='" + svg_num(px(tx)) + "' cy='" + svg_num(py(ty)) +
           "' r='3' class='translation' fill='none' stroke='green' stroke-width='1.5'/>\n";
  }
  for (const auto& p : orders) {
    double x = z.dim >= 1 ? to_double(p.value_pi[0]) : 0.0;
    double y = z.dim >= 2 ? to_double(p.value_pi[1]) : 0.0;
    ZonoClassification c = zonotope_classify(z, p.value_pi);
    const char* cls = c.region == ZonoRegion::Interior ? "order interior" : "order boundary";
    std::string fill = c.region == ZonoRegion::Interior ? "#2b4196" : "none";
    svg += "<circle cx='" + svg_num(px(x)) + "' cy='" + svg_num(py(y)) + "' r='5' class='" + cls +
           "' fill='" + fill + "' stroke='#2b4196' stroke-width='1.5'/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace coamap
