#include "coamap/ordermap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "coamap/errors.hpp"
#include "coamap/linprog.hpp"

namespace coamap {

Rat Zonotope::coordinate_bound(int i) const {
  Rat h(0);
  for (int j = 0; j < generators.rows(); ++j) h += abs(generators(j, i));
  return h;
}

namespace {

std::vector<Int> primitive(std::vector<Int> v) {
  Int g(0);
  for (const auto& x : v) g = gcd_int(g, x);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  // Canonical sign: first nonzero entry positive.
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

// Generalized cross product of m-1 rows in R^m: the vector of signed
// maximal minors, normal to their span.
std::vector<Int> cross_product(const IntMat& rows) {
  int m = rows.cols();
  std::vector<Int> u(m);
  for (int i = 0; i < m; ++i) {
    IntMat minor(m - 1, m - 1);
    for (int r = 0; r < m - 1; ++r) {
      int jj = 0;
      for (int c = 0; c < m; ++c) {
        if (c == i) continue;
        minor(r, jj++) = rows(r, c);
      }
    }
    Int d = det_exact(minor);
    u[i] = (i % 2 == 0) ? d : Int(-d);
  }
  return u;
}

// Vertices of the zonogon (m = 2) by the angular-sort construction:
// merge parallel generators, sort by direction, walk the boundary.
std::vector<std::vector<Rat>> zonogon_vertices(const RatMat& gens) {
  std::vector<std::array<Rat, 2>> dirs;  // all flipped to the upper half plane
  for (int j = 0; j < gens.rows(); ++j) {
    Rat x = gens(j, 0), y = gens(j, 1);
    if (x == 0 && y == 0) continue;
    if (y < 0 || (y == 0 && x < 0)) {
      x = -x;
      y = -y;
    }
    bool merged = false;
    for (auto& d : dirs)
      if (d[0] * y == d[1] * x) {  // parallel, same half plane
        d[0] += x;
        d[1] += y;
        merged = true;
        break;
      }
    if (!merged) dirs.push_back({x, y});
  }
  std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
    // ascending angle in [0, pi)
    return a[0] * b[1] > a[1] * b[0];
  });
  std::array<Rat, 2> v{Rat(0), Rat(0)};
  for (const auto& d : dirs) {
    v[0] -= d[0];
    v[1] -= d[1];
  }
  std::vector<std::vector<Rat>> verts;
  for (const auto& d : dirs) {
    verts.push_back({v[0], v[1]});
    v[0] += 2 * d[0];
    v[1] += 2 * d[1];
  }
  std::size_t half = verts.size();
  for (std::size_t i = 0; i < half; ++i) verts.push_back({-verts[i][0], -verts[i][1]});
  return verts;
}

}  // namespace

Zonotope zonotope(const IntMat& b) {
  int n_rows = b.rows(), m = b.cols();
  if (m > 0 && rank_int(b) != m) throw InputError("zonotope: B is rank deficient");
  Zonotope z;
  z.dim = m;
  z.generators = RatMat(n_rows, m);
  for (int j = 0; j < n_rows; ++j)
    for (int i = 0; i < m; ++i) z.generators(j, i) = make_rat(b(j, i), Int(2));
  if (m == 0) return z;
  if (m == 1) {
    z.facet_normals.push_back({Int(1)});
  } else {
    // Normals from all (m-1)-subsets of rows.
    std::vector<int> sel(m - 1);
    for (int i = 0; i < m - 1; ++i) sel[i] = i;
    while (true) {
      IntMat rows(m - 1, m);
      for (int r = 0; r < m - 1; ++r)
        for (int c = 0; c < m; ++c) rows(r, c) = b(sel[r], c);
      std::vector<Int> u = primitive(cross_product(rows));
      bool zero = std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
      if (!zero && std::find(z.facet_normals.begin(), z.facet_normals.end(), u) ==
                       z.facet_normals.end())
        z.facet_normals.push_back(std::move(u));
      int i = m - 2;
      while (i >= 0 && sel[i] == n_rows - (m - 1) + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < m - 1; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  for (const auto& u : z.facet_normals) {
    Rat h(0);
    for (int j = 0; j < n_rows; ++j) {
      Rat dot(0);
      for (int i = 0; i < m; ++i) dot += Rat(u[i]) * z.generators(j, i);
      h += abs(dot);
    }
    z.support.push_back(h);
  }
  if (m == 1) {
    z.vertices = {{-z.support[0]}, {z.support[0]}};
  } else if (m == 2) {
    z.vertices = zonogon_vertices(z.generators);
  }
  return z;
}

ZonoClassification zonotope_classify(const Zonotope& z, const std::vector<Rat>& p_pi) {
  if (static_cast<int>(p_pi.size()) != z.dim)
    throw InputError("zonotope_classify: dimension mismatch");
  ZonoClassification out;
  bool tight = false;
  for (std::size_t k = 0; k < z.facet_normals.size(); ++k) {
    Rat dot(0);
    for (int i = 0; i < z.dim; ++i) dot += Rat(z.facet_normals[k][i]) * p_pi[i];
    Rat a = abs(dot);
    if (a > z.support[k]) {
      out.region = ZonoRegion::Outside;
      return out;
    }
    if (a == z.support[k]) tight = true;
  }
  out.region = tight ? ZonoRegion::Boundary : ZonoRegion::Interior;
  if (out.region == ZonoRegion::Boundary && z.dim <= 2)
    out.is_vertex = std::find(z.vertices.begin(), z.vertices.end(), p_pi) != z.vertices.end();
  return out;
}

bool zonotope_is_vertex(const Zonotope& z, const std::vector<Rat>& p_pi) {
  if (z.dim >= 3) throw UnsupportedError("zonotope vertex query unsupported for m >= 3");
  if (z.dim == 0) return false;
  return std::find(z.vertices.begin(), z.vertices.end(), p_pi) != z.vertices.end();
}

std::vector<Int> p_vector(const LaurentPolynomial& f, const std::vector<Angle>& theta_lift,
                          int alpha_index, double eps) {
  if (static_cast<int>(theta_lift.size()) != f.n) throw InputError("p_vector: dimension mismatch");
  if (alpha_index < 0 || alpha_index >= f.term_count())
    throw InputError("p_vector: alpha index out of range");
  bool exact = f.exact();
  for (const auto& a : theta_lift) exact &= a.exact();
  const Term& base = f.terms[alpha_index];
  std::vector<Int> l(f.terms.size());
  for (int k = 0; k < f.term_count(); ++k) {
    const Term& t = f.terms[k];
    std::vector<Int> diff(f.n);
    for (int i = 0; i < f.n; ++i) diff[i] = t.exponent[i] - base.exponent[i];
    Angle lift = t.coeff.angle - base.coeff.angle + dot(diff, theta_lift);
    if (exact) {
      // arg_pi(ratio) - lift = 2*pi*l_k; in pi units the winding is
      // (normalized - raw) / 2, an exact integer.
      Rat w = (normalize_pi_units(lift.pi_value()) - lift.pi_value()) / 2;
      if (!is_integer(w)) throw InputError("p_vector: non-integer winding (internal error)");
      l[k] = w.get_num();
    } else {
      double w = (normalize_radians(lift.rad()) - lift.rad()) / kTwoPi;
      double rounded = std::round(w);
      if (std::abs(w - rounded) > eps)
        throw InputError("p_vector: winding residual " + double_str(std::abs(w - rounded)) +
                         " exceeds tolerance");
      l[k] = Int(static_cast<long>(rounded));
    }
  }
  return l;
}

namespace {

std::vector<Rat> ratio_args_pi(const LaurentPolynomial& f, const std::vector<Angle>& theta_lift,
                               int alpha_index) {
  const Term& base = f.terms[alpha_index];
  std::vector<Rat> args(f.terms.size());
  for (int k = 0; k < f.term_count(); ++k) {
    const Term& t = f.terms[k];
    std::vector<Int> diff(f.n);
    for (int i = 0; i < f.n; ++i) diff[i] = t.exponent[i] - base.exponent[i];
    Angle lift = t.coeff.angle - base.coeff.angle + dot(diff, theta_lift);
    if (!lift.exact()) throw UnsupportedError("exact coefficient and theta angles required");
    args[k] = normalize_pi_units(lift.pi_value());
  }
  return args;
}

}  // namespace

std::vector<Rat> translation(const LaurentPolynomial& f, const IntMat& b) {
  if (!f.exact()) throw UnsupportedError("translation: exact coefficient angles required");
  std::vector<Rat> q(f.terms.size());
  for (int k = 0; k < f.term_count(); ++k) q[k] = f.terms[k].coeff.angle.pi_value();
  return vec_mat(q, to_rational(b));
}

OrderPoint order_value(const LaurentPolynomial& f, const IntMat& b,
                       const std::vector<Angle>& theta_lift, int alpha_index) {
  if (b.rows() != f.term_count()) throw InputError("order_value: B has wrong number of rows");
  bool exact = f.exact();
  for (const auto& a : theta_lift) exact &= a.exact();
  if (!exact)
    throw UnsupportedError("order_value requires exact mode; see order_value_float");
  OrderPoint p;
  std::vector<Rat> args = ratio_args_pi(f, theta_lift, alpha_index);
  p.value_pi = vec_mat(args, to_rational(b));
  // value = t + 2*(l*B) in pi units, so the tag is (value - t)/2.
  std::vector<Rat> t = translation(f, b);
  p.lattice_tag.resize(b.cols());
  for (int i = 0; i < b.cols(); ++i) {
    Rat w_i = (p.value_pi[i] - t[i]) / 2;
    if (!is_integer(w_i))
      throw InputError("order_value: value not on the translated lattice (is B a dual of A?)");
    p.lattice_tag[i] = w_i.get_num();
  }
  return p;
}

std::vector<double> order_value_float(const LaurentPolynomial& f, const IntMat& b,
                                      const TorusPoint& theta) {
  if (b.rows() != f.term_count()) throw InputError("order_value_float: B shape mismatch");
  std::vector<Int> l = p_vector(f, theta.coords, 0);
  std::vector<double> shifted(f.terms.size());
  for (int k = 0; k < f.term_count(); ++k)
    shifted[k] = f.terms[k].coeff.angle.rad() / kPi + 2.0 * to_double(l[k]);
  std::vector<double> out(b.cols(), 0.0);
  for (int k = 0; k < f.term_count(); ++k)
    for (int i = 0; i < b.cols(); ++i) out[i] += shifted[k] * to_double(b(k, i));
  return out;
}

OrderPoint cord(const LaurentPolynomial& f, const IntMat& b, const TorusPoint& theta) {
  if (!in_closed_complement(f, theta))
    throw InputError("cord: theta is not in the closed lopsided coamoeba complement");
  return order_value(f, b, theta.coords, 0);
}

namespace {

// Enumerate lattice vectors w = k * G (G upper-triangular row basis)
// with t + 2w inside the coordinate box of Z_B, then classify.
void enumerate_box(const IntMat& g, const std::vector<Rat>& t, const Zonotope& z,
                   const std::function<void(std::vector<Int>, std::vector<Rat>)>& emit) {
  int m = g.cols();
  std::vector<Rat> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    Rat h = z.coordinate_bound(i);
    lo[i] = (-h - t[i]) / 2;
    hi[i] = (h - t[i]) / 2;
  }
  std::vector<Int> k(m);
  std::vector<Rat> w(m, Rat(0));
  // G is in row HNF: row i first touches coordinate i (full rank), so
  // coordinate i is fixed once k_0..k_i are chosen.
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      std::vector<Rat> value(m);
      std::vector<Int> tag(m);
      for (int j = 0; j < m; ++j) {
        value[j] = t[j] + 2 * w[j];
        tag[j] = w[j].get_num();
      }
      emit(std::move(tag), std::move(value));
      return;
    }
    // w_i = sum_{j <= i} k_j G(j, i); only k_i remains free here.
    Rat base(0);
    for (int j = 0; j < i; ++j) base += Rat(k[j]) * Rat(g(j, i));
    Rat step = Rat(g(i, i));
    Int k_lo = rat_ceil((lo[i] - base) / step);
    Int k_hi = rat_floor((hi[i] - base) / step);
    for (Int kv = k_lo; kv <= k_hi; ++kv) {
      k[i] = kv;
      std::vector<Rat> saved = w;
      for (int j = i; j < m; ++j) w[j] += Rat(kv) * Rat(g(i, j));
      rec(i + 1);
      w = saved;
    }
  };
  rec(0);
}

std::vector<OrderPoint> enumerate_impl(const LaurentPolynomial& f, const IntMat& b, bool open) {
  if (!f.exact())
    throw UnsupportedError(
        "enumerate_orders: float-mode coefficients; exact rational angles required");
  if (b.rows() != f.term_count()) throw InputError("enumerate_orders: B has wrong number of rows");
  int m = b.cols();
  Zonotope z = zonotope(b);
  if (open && m > 2)
    throw UnsupportedError("enumerate_orders_open: vertex queries unsupported for m >= 3");
  std::vector<OrderPoint> out;
  if (m == 0) {
    out.push_back(OrderPoint{});  // the zonotope is the origin of R^0
    return out;
  }
  LatticeBasis lat = lattice_from_rows(b);
  if (lat.rank() != m) throw InputError("enumerate_orders: row lattice is rank deficient");
  std::vector<Rat> t = translation(f, b);
  enumerate_box(lat.basis, t, z, [&](std::vector<Int> tag, std::vector<Rat> value) {
    ZonoClassification c = zonotope_classify(z, value);
    bool keep = open ? (c.region != ZonoRegion::Outside && !c.is_vertex)
                     : (c.region == ZonoRegion::Interior);
    if (keep) out.push_back(OrderPoint{std::move(value), std::move(tag)});
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<OrderPoint> enumerate_orders(const LaurentPolynomial& f, const IntMat& b) {
  return enumerate_impl(f, b, false);
}

std::vector<OrderPoint> enumerate_orders_open(const LaurentPolynomial& f, const IntMat& b) {
  return enumerate_impl(f, b, true);
}

TorusPoint witness_theta(const LaurentPolynomial& f, const IntMat& b, const OrderPoint& p) {
  if (!f.exact()) throw UnsupportedError("witness_theta: exact coefficient angles required");
  int n = f.n, n_terms = f.term_count(), m = b.cols();
  if (b.rows() != n_terms) throw InputError("witness_theta: B has wrong number of rows");
  if (static_cast<int>(p.value_pi.size()) != m) throw InputError("witness_theta: dimension");

  // Integer vector l with l * B = lattice_tag.
  std::optional<std::vector<Int>> l = solve_row_system(b, p.lattice_tag);
  if (!l) throw InputError("witness_theta: order point is not on the translated lattice");

  // lambda_k(s, theta) = 2*(q_k + 2 l_k + s + <alpha_k, theta>) must lie
  // in (-1, 1); everything in pi units.
  std::vector<Rat> offs(n_terms);
  for (int k = 0; k < n_terms; ++k)
    offs[k] = f.terms[k].coeff.angle.pi_value() + 2 * Rat((*l)[k]);

  std::vector<Rat> params(n + 1);  // s, theta_1..theta_n (pi units)
  if (m == 1) {
    // Closed form: the margin-maximizing lambda is tau * sign(b_k).
    Rat sum_abs(0);
    for (int k = 0; k < n_terms; ++k) sum_abs += abs(Rat(b(k, 0)));
    Rat rho = 2 * p.value_pi[0];
    if (abs(rho) >= sum_abs)
      throw InputError("witness_theta: order point is not interior to the zonotope");
    Rat tau = rho / sum_abs;
    std::vector<Rat> lambda(n_terms);
    for (int k = 0; k < n_terms; ++k)
      lambda[k] = b(k, 0) > 0 ? tau : (b(k, 0) < 0 ? -tau : Rat(0));
    // Solve lambda_k / 2 = offs_k + s + <alpha_k, theta>: pick n+1 rows
    // of (1 | alpha_k) that are independent, solve, verify the rest.
    RatMat sys(n + 1, n + 1);
    std::vector<Rat> rhs(n + 1);
    RatMat elim(n + 1, n + 1);  // row-echelon shadow used for rank probing
    int filled = 0;
    for (int k = 0; k < n_terms && filled <= n; ++k) {
      std::vector<Rat> row(n + 1);
      row[0] = 1;
      for (int i = 0; i < n; ++i) row[i + 1] = Rat(f.terms[k].exponent[i]);
      std::vector<Rat> reduced = row;
      for (int r = 0; r < filled; ++r) {
        int piv = 0;
        while (piv <= n && elim(r, piv) == 0) ++piv;
        if (piv > n || reduced[piv] == 0) continue;
        Rat fac = reduced[piv] / elim(r, piv);
        for (int c2 = 0; c2 <= n; ++c2) reduced[c2] -= fac * elim(r, c2);
      }
      bool nonzero = false;
      for (int c2 = 0; c2 <= n; ++c2)
        if (reduced[c2] != 0) nonzero = true;
      if (!nonzero) continue;
      for (int c2 = 0; c2 <= n; ++c2) {
        sys(filled, c2) = row[c2];
        elim(filled, c2) = reduced[c2];
      }
      rhs[filled] = lambda[k] / 2 - offs[k];
      ++filled;
    }
    if (filled != n + 1) throw InputError("witness_theta: support matrix is not full rank");
    params = solve_rational_row_system(sys.transposed(), rhs);
    for (int k = 0; k < n_terms; ++k) {
      Rat acc = params[0];
      for (int i = 0; i < n; ++i) acc += Rat(f.terms[k].exponent[i]) * params[i + 1];
      if (acc != lambda[k] / 2 - offs[k])
        throw InputError("witness_theta: inconsistent system (is B a dual of A?)");
    }
  } else {
    // Exact LP: maximize eps subject to
    //   +-(offs_k + s + <alpha_k, theta>) + eps/2 <= 1/2.
    int nvars = n + 2;  // s, theta_1..theta_n, eps
    std::vector<LinearConstraint> cons;
    for (int k = 0; k < n_terms; ++k) {
      for (int sign = -1; sign <= 1; sign += 2) {
        LinearConstraint c;
        c.coeffs.assign(nvars, Rat(0));
        c.coeffs[0] = Rat(sign);
        for (int i = 0; i < n; ++i) c.coeffs[i + 1] = Rat(sign) * Rat(f.terms[k].exponent[i]);
        c.coeffs[nvars - 1] = make_rat(Int(1), Int(2));
        c.rhs = make_rat(Int(1), Int(2)) - Rat(sign) * offs[k];
        cons.push_back(std::move(c));
      }
    }
    LpOptimum opt = lp_maximize(std::move(cons), nvars, nvars - 1);
    if (!opt.feasible || !opt.bounded || opt.value <= 0)
      throw InputError("witness_theta: order point is not interior to the zonotope");
    for (int i = 0; i <= n; ++i) params[i] = opt.point[i];
  }

  std::vector<Angle> coords(n);
  for (int i = 0; i < n; ++i) coords[i] = Angle::pi_units(params[i + 1]);
  return TorusPoint(std::move(coords));
}

ComponentCount count_components(const LaurentPolynomial& f, const DualMatrix& b) {
  ComponentCount out;
  out.count = Int(static_cast<long>(enumerate_orders(f, b.b).size()));
  PointConfiguration a = support_matrix(f);
  out.g_a = maximal_minor_gcd(a.matrix, a.n + 1);
  out.g_b = b.b.cols() == 0 ? Int(1) : maximal_minor_gcd(b.b, b.b.cols());
  out.bijective = (out.g_a == 1) && b.is_gale;
  return out;
}

bool coefficients_generic(const LaurentPolynomial& f, const IntMat& b) {
  if (!f.exact()) throw UnsupportedError("coefficients_generic: exact angles required");
  int m = b.cols();
  if (m == 0) return true;
  Zonotope z = zonotope(b);
  LatticeBasis lat = lattice_from_rows(b);
  if (lat.rank() != m) throw InputError("coefficients_generic: rank-deficient row lattice");
  std::vector<Rat> t = translation(f, b);
  bool generic = true;
  enumerate_box(lat.basis, t, z, [&](std::vector<Int>, std::vector<Rat> value) {
    if (!generic) return;
    if (zonotope_classify(z, value).region == ZonoRegion::Boundary) generic = false;
  });
  return generic;
}

}  // namespace coamap
