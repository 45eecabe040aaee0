#include "coamap/gale.hpp"

#include <algorithm>
#include <array>

#include "coamap/errors.hpp"

namespace coamap {

namespace {

IntMat drop_column(const IntMat& m, int col) {
  IntMat out(m.rows(), m.cols() - 1);
  for (int i = 0; i < m.rows(); ++i) {
    int jj = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(i, jj++) = m(i, j);
    }
  }
  return out;
}

void pin_column_signs(IntMat& b) {
  for (int j = 0; j < b.cols(); ++j) {
    int last = -1;
    for (int i = 0; i < b.rows(); ++i)
      if (b(i, j) != 0) last = i;
    if (last >= 0 && b(last, j) < 0)
      for (int i = 0; i < b.rows(); ++i) b(i, j) = -b(i, j);
  }
}

}  // namespace

DualMatrix gale_dual(const PointConfiguration& a) {
  if (!a.full_dimensional) throw InputError("gale_dual: point configuration is not full rank");
  if (a.codim < 1) throw InputError("gale_dual: codimension is zero (simplex support)");
  DualMatrix d;
  d.b = integer_kernel_basis(a.matrix);
  pin_column_signs(d.b);
  d.is_gale = true;
  d.row_lattice = lattice_from_rows(d.b);
  return d;
}

DualMatrix dual_from_matrix(const PointConfiguration& a, const IntMat& b) {
  if (b.rows() != a.num_points) throw InputError("dual matrix has wrong number of rows");
  if (!(a.matrix * b).is_zero()) throw InputError("dual matrix: A*B != 0");
  if (rank_int(b) != b.cols()) throw InputError("dual matrix is rank deficient");
  DualMatrix d;
  d.b = b;
  d.row_lattice = lattice_from_rows(b);
  // Gale iff the column lattice equals the full kernel lattice.
  IntMat kernel = integer_kernel_basis(a.matrix);
  d.is_gale = (hnf(b.transposed()).h == hnf(kernel.transposed()).h);
  return d;
}

bool is_circuit(const PointConfiguration& a) {
  if (a.codim != 1) return false;
  int size = a.n + 1;
  for (int j = 0; j < a.num_points; ++j)
    if (det_exact(drop_column(a.matrix, j)) == 0) return false;
  (void)size;
  return true;
}

DualMatrix circuit_dual(const PointConfiguration& a) {
  if (!is_circuit(a)) throw InputError("circuit_dual: configuration is not a circuit");
  int n_pts = a.num_points;
  IntMat b(n_pts, 1);
  Int g(0);
  for (int j = 0; j < n_pts; ++j) {
    Int d = det_exact(drop_column(a.matrix, j));
    b(j, 0) = (j % 2 == 0) ? d : Int(-d);
    g = gcd_int(g, d);
  }
  if (!(a.matrix * b).is_zero()) throw InputError("circuit_dual: A*B != 0 (internal error)");
  DualMatrix d;
  d.b = b;
  d.is_gale = (g == 1);
  d.row_lattice = lattice_from_rows(b);
  return d;
}

namespace {

// 2 * area of the convex hull, exact shoelace on integer points.
Int hull_double_area(std::vector<std::array<Int, 2>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    if (p[0] != q[0]) return p[0] < q[0];
    return p[1] < q[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int n_pts = static_cast<int>(pts.size());
  if (n_pts < 3) return Int(0);
  auto cross = [](const std::array<Int, 2>& o, const std::array<Int, 2>& a,
                  const std::array<Int, 2>& b) -> Int {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<Int, 2>> hull(2 * n_pts);
  int k = 0;
  for (int i = 0; i < n_pts; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n_pts - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  Int two_area(0);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    two_area += p[0] * q[1] - q[0] * p[1];
  }
  return abs(two_area);
}

}  // namespace

Rat normalized_volume(const PointConfiguration& a) {
  if (!a.full_dimensional)
    throw InputError("normalized_volume: point configuration is not full dimensional");
  if (is_circuit(a)) {
    Int sum(0);
    for (int j = 0; j < a.num_points; ++j) {
      Int d = det_exact(drop_column(a.matrix, j));
      sum += abs(d);
    }
    return make_rat(sum, Int(2));
  }
  if (a.n == 1) {
    Int lo = a.matrix(1, 0), hi = a.matrix(1, 0);
    for (int j = 1; j < a.num_points; ++j) {
      lo = std::min(lo, a.matrix(1, j));
      hi = std::max(hi, a.matrix(1, j));
    }
    return Rat(hi - lo);
  }
  if (a.n == 2) {
    std::vector<std::array<Int, 2>> pts;
    for (int j = 0; j < a.num_points; ++j) pts.push_back({a.matrix(1, j), a.matrix(2, j)});
    return Rat(hull_double_area(std::move(pts)));
  }
  throw UnsupportedError("normalized_volume: n >= 3 non-circuit volume is not supported");
}

}  // namespace coamap
