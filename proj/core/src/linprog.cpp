#include "coamap/linprog.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "coamap/errors.hpp"

namespace coamap {

namespace {

// Scale to integer coefficients divided by their gcd, for duplicate
// detection. Keeps constraint lists from ballooning during elimination.
void canonicalize(LinearConstraint& c) {
  Int lcm(1);
  for (const auto& x : c.coeffs) {
    Int d = x.get_den();
    lcm = lcm / gcd_int(lcm, d) * d;
  }
  {
    Int d = c.rhs.get_den();
    lcm = lcm / gcd_int(lcm, d) * d;
  }
  Int g(0);
  std::vector<Int> num(c.coeffs.size());
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    num[i] = Int(c.coeffs[i] * Rat(lcm));
    g = gcd_int(g, num[i]);
  }
  Int rhs_num = Int(c.rhs * Rat(lcm));
  g = gcd_int(g, rhs_num);
  if (g == 0) g = 1;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = Rat(num[i] / g);
  c.rhs = Rat(rhs_num / g);
}

struct ConstraintLess {
  bool operator()(const LinearConstraint& a, const LinearConstraint& b) const {
    if (a.rhs != b.rhs) return a.rhs < b.rhs;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
  }
};

std::vector<LinearConstraint> dedupe(std::vector<LinearConstraint> cons) {
  std::set<LinearConstraint, ConstraintLess> seen;
  std::vector<LinearConstraint> out;
  for (auto& c : cons) {
    canonicalize(c);
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

// Eliminate variable `v`: all pairings of lower bounds with upper
// bounds. Returns nullopt on a constant contradiction.
std::optional<std::vector<LinearConstraint>> eliminate(const std::vector<LinearConstraint>& cons,
                                                       int v) {
  std::vector<const LinearConstraint*> lower, upper;
  std::vector<LinearConstraint> out;
  for (const auto& c : cons) {
    if (c.coeffs[v] > 0)
      upper.push_back(&c);
    else if (c.coeffs[v] < 0)
      lower.push_back(&c);
    else
      out.push_back(c);
  }
  for (const auto* lo : lower)
    for (const auto* up : upper) {
      // (-lo.coef) and up.coef are positive; combine to cancel x_v.
      Rat a = -lo->coeffs[v];
      Rat b = up->coeffs[v];
      LinearConstraint c;
      c.coeffs.resize(lo->coeffs.size());
      for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] = lo->coeffs[i] * b + up->coeffs[i] * a;
      c.rhs = lo->rhs * b + up->rhs * a;
      bool all_zero = true;
      for (const auto& x : c.coeffs)
        if (x != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        if (c.rhs < 0) return std::nullopt;
        continue;
      }
      out.push_back(std::move(c));
    }
  return dedupe(std::move(out));
}

bool constants_consistent(const std::vector<LinearConstraint>& cons) {
  for (const auto& c : cons) {
    bool all_zero = true;
    for (const auto& x : c.coeffs)
      if (x != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && c.rhs < 0) return false;
  }
  return true;
}

}  // namespace

bool lp_feasible(const std::vector<LinearEquation>& equalities,
                 std::vector<LinearConstraint> inequalities, int nvars) {
  // Substitute equalities out by Gaussian pivoting.
  std::vector<LinearEquation> eqs = equalities;
  std::vector<bool> eliminated(nvars, false);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    int piv = -1;
    for (int v = 0; v < nvars; ++v)
      if (!eliminated[v] && eqs[e].coeffs[v] != 0) {
        piv = v;
        break;
      }
    if (piv < 0) {
      if (eqs[e].rhs != 0) return false;
      continue;
    }
    eliminated[piv] = true;
    Rat p = eqs[e].coeffs[piv];
    for (std::size_t e2 = 0; e2 < eqs.size(); ++e2) {
      if (e2 == e || eqs[e2].coeffs[piv] == 0) continue;
      Rat f = eqs[e2].coeffs[piv] / p;
      for (int v = 0; v < nvars; ++v) eqs[e2].coeffs[v] -= f * eqs[e].coeffs[v];
      eqs[e2].rhs -= f * eqs[e].rhs;
    }
    for (auto& c : inequalities) {
      if (c.coeffs[piv] == 0) continue;
      Rat f = c.coeffs[piv] / p;
      for (int v = 0; v < nvars; ++v) c.coeffs[v] -= f * eqs[e].coeffs[v];
      c.rhs -= f * eqs[e].rhs;
    }
  }
  std::vector<LinearConstraint> cons = dedupe(std::move(inequalities));
  for (int v = 0; v < nvars; ++v) {
    bool present = false;
    for (const auto& c : cons)
      if (c.coeffs[v] != 0) {
        present = true;
        break;
      }
    if (!present) continue;
    auto next = eliminate(cons, v);
    if (!next) return false;
    cons = std::move(*next);
  }
  return constants_consistent(cons);
}

LpOptimum lp_maximize(std::vector<LinearConstraint> inequalities, int nvars, int objective) {
  LpOptimum res;
  std::vector<LinearConstraint> cons = dedupe(std::move(inequalities));
  std::vector<std::pair<int, std::vector<LinearConstraint>>> stack;
  for (int v = 0; v < nvars; ++v) {
    if (v == objective) continue;
    stack.emplace_back(v, cons);
    auto next = eliminate(cons, v);
    if (!next) return res;  // infeasible
    cons = std::move(*next);
  }
  if (!constants_consistent(cons)) return res;
  // Bounds on the objective alone.
  bool has_upper = false, has_lower = false;
  Rat best, lowest;
  for (const auto& c : cons) {
    if (c.coeffs[objective] > 0) {
      Rat bound = c.rhs / c.coeffs[objective];
      if (!has_upper || bound < best) {
        best = bound;
        has_upper = true;
      }
    } else if (c.coeffs[objective] < 0) {
      Rat bound = c.rhs / c.coeffs[objective];
      if (!has_lower || bound > lowest) {
        lowest = bound;
        has_lower = true;
      }
    }
  }
  if (has_upper && has_lower && lowest > best) return res;  // empty objective interval
  res.feasible = true;
  if (!has_upper) {
    res.bounded = false;
    return res;
  }
  res.value = best;
  // Back-substitute, taking the lowest feasible value at each stage.
  std::vector<Rat> x(nvars, Rat(0));
  std::vector<bool> fixed(nvars, false);
  x[objective] = best;
  fixed[objective] = true;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    int v = it->first;
    bool has_lo = false, has_up = false;
    Rat lo, up;
    for (const auto& c : it->second) {
      if (c.coeffs[v] == 0) continue;
      Rat rest = c.rhs;
      for (int w = 0; w < nvars; ++w)
        if (w != v && c.coeffs[w] != 0) rest -= c.coeffs[w] * x[w];
      Rat bound = rest / c.coeffs[v];
      if (c.coeffs[v] > 0) {
        if (!has_up || bound < up) {
          up = bound;
          has_up = true;
        }
      } else {
        if (!has_lo || bound > lo) {
          lo = bound;
          has_lo = true;
        }
      }
    }
    if (has_lo)
      x[v] = lo;
    else if (has_up)
      x[v] = up < 0 ? up : Rat(0);
    else
      x[v] = 0;
    fixed[v] = true;
  }
  res.point = std::move(x);
  return res;
}

}  // namespace coamap
