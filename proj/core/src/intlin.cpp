#include "coamap/intlin.hpp"

#include <algorithm>
#include <stdexcept>

#include "coamap/errors.hpp"

namespace coamap {

Int det_exact(const IntMat& m) {
  if (m.rows() != m.cols()) throw InputError("det_exact: matrix is not square");
  int n = m.rows();
  if (n == 0) return Int(1);
  IntMat a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division is exact.
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row a -= q * row b
void row_axpy(IntMat& m, int a, const Int& q, int b) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void swap_cols(IntMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_col(IntMat& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// col a -= q * col b
void col_axpy(IntMat& m, int a, const Int& q, int b) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  HnfResult res{m, IntMat::identity(m.rows())};
  IntMat& h = res.h;
  IntMat& u = res.u;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Gcd elimination below row r in column c.
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (h(i, c) != 0 && (piv < 0 || cmp(abs(h(i, c)), abs(h(piv, c))) < 0)) piv = i;
      if (piv < 0) break;
      if (piv != r) {
        swap_rows(h, r, piv);
        swap_rows(u, r, piv);
      }
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, q, r);
        row_axpy(u, i, q, r);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      row_axpy(h, i, q, r);
      row_axpy(u, i, q, r);
    }
    ++r;
  }
  return res;
}

int rank_int(const IntMat& m) {
  if (m.empty()) return 0;
  IntMat h = hnf(m).h;
  int r = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  return r;
}

SnfResult snf(const IntMat& m) {
  SnfResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;
  int rows = m.rows(), cols = m.cols();
  int t = 0;
  while (t < rows && t < cols) {
    // Find the entry of smallest absolute value in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s(i, j) != 0 && (pi < 0 || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);
    }
    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (s(i, t) == 0) continue;
      Int q = floor_div(s(i, t), s(t, t));
      row_axpy(s, i, q, t);
      row_axpy(u, i, q, t);
      if (s(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (s(t, j) == 0) continue;
      Int q = floor_div(s(t, j), s(t, t));
      col_axpy(s, j, q, t);
      col_axpy(v, j, q, t);
      if (s(t, j) != 0) dirty = true;
    }
    if (dirty) continue;
    // Divisibility: s(t,t) must divide every remaining entry.
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (s(i, j) % s(t, t) != 0) {
          // Fold row i into row t and restart the pivot step.
          row_axpy(s, t, Int(-1), i);
          row_axpy(u, t, Int(-1), i);
          fixed = false;
        }
    if (!fixed) continue;
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
    ++t;
  }
  return res;
}

IntMat integer_kernel_basis(const IntMat& a) {
  int n = a.cols();
  // Row-reduce A^t; rows of the transform matching zero rows of the HNF
  // span the integer kernel of A.
  HnfResult t = hnf(a.transposed());
  std::vector<std::vector<Int>> kernel_rows;
  for (int i = 0; i < t.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < t.h.cols(); ++j)
      if (t.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) kernel_rows.push_back(t.u.row(i));
  }
  int m = static_cast<int>(kernel_rows.size());
  IntMat k(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = kernel_rows[i][j];
  // Canonical basis of the kernel lattice.
  IntMat h = hnf(k).h;
  IntMat out(n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(j, i) = h(i, j);
  return out;
}

Int maximal_minor_gcd(const IntMat& m, int k) {
  if (k < 0 || k > m.rows() || k > m.cols())
    throw InputError("maximal_minor_gcd: minor size out of range");
  if (k == 0) return Int(1);
  std::vector<int> rsel(k), csel(k);
  Int g(0);
  // All k-subsets of rows x columns, in lexicographic order.
  auto next_subset = [](std::vector<int>& sel, int limit) {
    int k2 = static_cast<int>(sel.size());
    int i = k2 - 1;
    while (i >= 0 && sel[i] == limit - k2 + i) --i;
    if (i < 0) return false;
    ++sel[i];
    for (int j = i + 1; j < k2; ++j) sel[j] = sel[j - 1] + 1;
    return true;
  };
  for (int i = 0; i < k; ++i) rsel[i] = i;
  do {
    for (int i = 0; i < k; ++i) csel[i] = i;
    do {
      IntMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
      Int d = det_exact(sub);
      g = gcd_int(g, d);
      if (g == 1) return g;
    } while (next_subset(csel, m.cols()));
  } while (next_subset(rsel, m.rows()));
  return g;
}

LatticeBasis lattice_from_rows(const IntMat& b) {
  LatticeBasis lat;
  lat.dim = b.cols();
  IntMat h = hnf(b).h;
  int r = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  IntMat basis(r, lat.dim);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < lat.dim; ++j) basis(i, j) = h(i, j);
  lat.basis = basis;
  lat.is_full_integer_lattice = (r == lat.dim) && (basis == IntMat::identity(lat.dim));
  return lat;
}

std::optional<std::vector<Int>> solve_row_system(const IntMat& m, const std::vector<Int>& target) {
  // x * M = t  <=>  M^t x^t = t^t. With S = U M^t V: solve S z = U t^t,
  // then x^t = V z.
  IntMat mt = m.transposed();
  SnfResult f = snf(mt);
  std::vector<Int> rhs = mat_vec(f.u, target);
  int rows = f.s.rows(), cols = f.s.cols();
  std::vector<Int> z(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    Int d = i < cols ? f.s(i, i) : Int(0);
    if (d == 0) {
      if (rhs[i] != 0) return std::nullopt;
      continue;
    }
    if (rhs[i] % d != 0) return std::nullopt;
    z[i] = rhs[i] / d;
  }
  return mat_vec(f.v, z);
}

std::vector<Rat> solve_rational_row_system(const RatMat& m, const std::vector<Rat>& rhs) {
  // x * M = rhs  <=>  M^t y = rhs^t with y = x^t; Gaussian elimination.
  int n = m.rows();
  if (m.cols() != n || static_cast<int>(rhs.size()) != n)
    throw InputError("solve_rational_row_system: shape mismatch");
  RatMat a(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m(j, i);
    a(i, n) = rhs[i];
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw InputError("solve_rational_row_system: singular matrix");
    if (piv != k)
      for (int j = 0; j <= n; ++j) std::swap(a(k, j), a(piv, j));
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int j = k; j <= n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = a(i, n) / a(i, i);
  return x;
}

}  // namespace coamap
