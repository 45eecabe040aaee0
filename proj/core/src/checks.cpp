#include "coamap/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coamap/errors.hpp"

namespace coamap {

namespace {

Angle random_exact_angle(Rng& rng, int max_den) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(-den + 1, den);
  return Angle::pi_units(num_dist(rng), den);
}

std::vector<Int> random_exponent(Rng& rng, int n, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<Int> e(n);
  for (int i = 0; i < n; ++i) e[i] = d(rng);
  return e;
}

}  // namespace

LaurentPolynomial random_exact_polynomial(Rng& rng, int n, int num_terms, int span, int max_den) {
  LaurentPolynomial f;
  f.n = n;
  std::set<std::vector<Int>> seen;
  while (static_cast<int>(f.terms.size()) < num_terms) {
    std::vector<Int> e = random_exponent(rng, n, span);
    if (!seen.insert(e).second) continue;
    Term t;
    t.exponent = std::move(e);
    t.coeff.modulus = 1.0;
    t.coeff.angle = random_exact_angle(rng, max_den);
    f.terms.push_back(std::move(t));
  }
  return f;
}

TorusPoint random_exact_theta(Rng& rng, int n, int max_den) {
  std::vector<Angle> coords(n);
  for (int i = 0; i < n; ++i) coords[i] = random_exact_angle(rng, max_den);
  return TorusPoint(std::move(coords));
}

RandomCircuit random_circuit(Rng& rng, int n, int span, int max_den, bool balanced_dual) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> exps;
    while (static_cast<int>(exps.size()) < n + 2) {
      std::vector<Int> e = random_exponent(rng, n, span);
      if (seen.insert(e).second) exps.push_back(std::move(e));
    }
    PointConfiguration a = point_configuration(exps);
    if (!a.full_dimensional || !is_circuit(a)) continue;
    if (maximal_minor_gcd(a.matrix, a.n + 1) != 1) continue;
    if (balanced_dual) {
      IntMat cd = circuit_dual(a).b;
      int pos = 0, neg = 0;
      for (int j = 0; j < cd.rows(); ++j) (cd(j, 0) > 0 ? pos : neg)++;
      if (pos != 2 && neg != 2) continue;
    }
    RandomCircuit out;
    out.a = a;
    out.b = gale_dual(a);
    out.f.n = n;
    for (const auto& e : exps) {
      Term t;
      t.exponent = e;
      t.coeff.modulus = 1.0;
      out.f.terms.push_back(std::move(t));
    }
    // Resample angles until the translate misses the zonotope boundary.
    for (int tries = 0; tries < 64; ++tries) {
      for (auto& t : out.f.terms) t.coeff.angle = random_exact_angle(rng, max_den);
      if (coefficients_generic(out.f, out.b.b)) return out;
    }
  }
  throw InputError("random_circuit: could not generate a generic circuit");
}

IntMat random_unimodular(Rng& rng, int n, int ops) {
  IntMat t = IntMat::identity(n);
  if (n == 1) {
    std::uniform_int_distribution<int> sign(0, 1);
    if (sign(rng)) t(0, 0) = -1;
    return t;
  }
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < ops; ++k) {
    int i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        Int c(coef(rng));
        for (int col = 0; col < n; ++col) t(i, col) += c * t(j, col);
        break;
      }
      case 1:
        if (i != j)
          for (int col = 0; col < n; ++col) std::swap(t(i, col), t(j, col));
        break;
      default:
        for (int col = 0; col < n; ++col) t(i, col) = -t(i, col);
    }
  }
  return t;
}

namespace {

struct TrialShape {
  int n;
  int num_terms;
};

TrialShape random_shape(Rng& rng, int min_terms) {
  std::uniform_int_distribution<int> nd(1, 3);
  int n = nd(rng);
  std::uniform_int_distribution<int> td(min_terms, 7);
  return {n, td(rng)};
}

}  // namespace

SuiteResult check_trinomial_union(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"trinomial-union", trials, 0, ""};
  for (long t = 0; t < trials; ++t) {
    TrialShape shape = random_shape(rng, 3);
    LaurentPolynomial f = random_exact_polynomial(rng, shape.n, shape.num_terms);
    TorusPoint theta = random_exact_theta(rng, shape.n);
    if (trinomial_union_check(f, theta) != in_closed_lopsided(f, theta)) {
      ++res.failures;
      if (res.note.empty()) res.note = "mismatch at trial " + std::to_string(t);
    }
  }
  return res;
}

SuiteResult check_p_integrality(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"p-integrality", trials, 0, ""};
  for (long t = 0; t < trials; ++t) {
    TrialShape shape = random_shape(rng, 2);
    LaurentPolynomial f = random_exact_polynomial(rng, shape.n, shape.num_terms);
    TorusPoint theta = random_exact_theta(rng, shape.n);
    std::uniform_int_distribution<int> ad(0, f.term_count() - 1);
    int alpha = ad(rng);
    try {
      // p_vector asserts integrality internally; cross-check that the
      // windings reproduce arg_pi of each ratio.
      std::vector<Int> l = p_vector(f, theta.coords, alpha);
      const Term& base = f.terms[alpha];
      for (int k = 0; k < f.term_count(); ++k) {
        std::vector<Int> diff(f.n);
        for (int i = 0; i < f.n; ++i) diff[i] = f.terms[k].exponent[i] - base.exponent[i];
        Rat lift = (f.terms[k].coeff.angle - base.coeff.angle + dot(diff, theta.coords)).pi_value();
        Rat reduced = lift + 2 * Rat(l[k]);
        if (!(reduced > -1 && reduced <= 1)) throw InputError("winding does not renormalize");
      }
    } catch (const std::exception& e) {
      ++res.failures;
      if (res.note.empty()) res.note = e.what();
    }
  }
  return res;
}

SuiteResult check_monomial_invariance(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"monomial-invariance", trials, 0, ""};
  for (long t = 0; t < trials; ++t) {
    TrialShape shape = random_shape(rng, 2);
    LaurentPolynomial f = random_exact_polynomial(rng, shape.n, shape.num_terms);
    TorusPoint theta = random_exact_theta(rng, shape.n);
    std::vector<Int> shift = random_exponent(rng, shape.n, 3);
    Coefficient scale{1.5, random_exact_angle(rng, 16)};
    LaurentPolynomial g = multiply_monomial(f, shift, scale);
    bool ok = in_lopsided_coamoeba(f, theta) == in_lopsided_coamoeba(g, theta) &&
              in_closed_complement(f, theta) == in_closed_complement(g, theta) &&
              in_closed_lopsided(f, theta) == in_closed_lopsided(g, theta);
    if (!ok) {
      ++res.failures;
      if (res.note.empty()) res.note = "invariance broken at trial " + std::to_string(t);
    }
  }
  return res;
}

SuiteResult check_transform_equivariance(std::uint64_t seed, long transforms,
                                         long thetas_per_transform) {
  Rng rng(seed);
  SuiteResult res{"transform-equivariance", transforms * thetas_per_transform, 0, ""};
  for (long t = 0; t < transforms; ++t) {
    std::uniform_int_distribution<int> nd(1, 3);
    int n = nd(rng);
    std::uniform_int_distribution<int> td(2, 6);
    LaurentPolynomial f = random_exact_polynomial(rng, n, td(rng));
    IntMat u = random_unimodular(rng, n);
    TransformMatrix tm{to_rational(u)};
    LaurentPolynomial g = apply_transform(f, tm);
    // theta' = (T^{-1})^t theta, exact rational image.
    RatMat u_inv_t(n, n);
    {
      RatMat ur = to_rational(u);
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        std::vector<Rat> x = solve_rational_row_system(ur, e);  // x * U = e_i, row i of U^{-1}
        for (int j = 0; j < n; ++j) u_inv_t(j, i) = x[j];
      }
    }
    for (long s = 0; s < thetas_per_transform; ++s) {
      TorusPoint theta = random_exact_theta(rng, n);
      std::vector<Rat> tv(n);
      for (int i = 0; i < n; ++i) tv[i] = theta.coords[i].pi_value();
      std::vector<Rat> mapped = mat_vec(u_inv_t, tv);
      std::vector<Angle> coords(n);
      for (int i = 0; i < n; ++i) coords[i] = Angle::pi_units(mapped[i]);
      TorusPoint theta_g(std::move(coords));
      bool ok = in_lopsided_coamoeba(f, theta) == in_lopsided_coamoeba(g, theta_g) &&
                in_closed_complement(f, theta) == in_closed_complement(g, theta_g);
      if (!ok) {
        ++res.failures;
        if (res.note.empty()) res.note = "equivariance broken at transform " + std::to_string(t);
      }
    }
  }
  return res;
}

SuiteResult check_circuit_consistency(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"circuit-consistency", trials, 0, ""};
  std::uniform_int_distribution<int> nd(1, 3);
  for (long t = 0; t < trials; ++t) {
    RandomCircuit c = random_circuit(rng, nd(rng));
    CircuitCount cc = circuit_count(c.a);
    auto orders = enumerate_orders(c.f, c.b.b);
    if (Int(static_cast<long>(orders.size())) != cc.count) {
      ++res.failures;
      if (res.note.empty())
        res.note = "count mismatch at trial " + std::to_string(t) + ": " +
                   std::to_string(orders.size()) + " vs " + to_string(cc.count);
    }
  }
  return res;
}

SuiteResult check_witness_roundtrip(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"witness-roundtrip", 0, 0, ""};
  std::uniform_int_distribution<int> nd(1, 3);
  for (long t = 0; t < trials; ++t) {
    RandomCircuit c = random_circuit(rng, nd(rng));
    auto orders = enumerate_orders(c.f, c.b.b);
    std::vector<TorusPoint> witnesses;
    for (const auto& p : orders) {
      ++res.trials;
      try {
        TorusPoint theta = witness_theta(c.f, c.b.b, p);
        if (!in_closed_complement(c.f, theta)) throw InputError("witness not in complement");
        OrderPoint back = cord(c.f, c.b.b, theta);
        if (!(back == p)) throw InputError("roundtrip order mismatch");
        witnesses.push_back(theta);
      } catch (const std::exception& e) {
        ++res.failures;
        if (res.note.empty()) res.note = e.what();
      }
    }
    // Distinct orders must give torus-distinct, shell-separated points.
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
        bool distinct = !(witnesses[i] == witnesses[j]);
        bool separated = false;
        for (const auto& fam : shell(c.f)) {
          Angle vi = dot(fam.normal, witnesses[i].coords);
          Angle vj = dot(fam.normal, witnesses[j].coords);
          if (normalize_pi_units(vi.pi_value() - vj.pi_value()) != 0) {
            separated = true;
            break;
          }
        }
        if (!distinct || !separated) {
          ++res.failures;
          if (res.note.empty())
            res.note = std::string(!distinct ? "witnesses collide" : "witnesses not separated") +
                       " at trial " + std::to_string(t);
        }
      }
  }
  return res;
}

SuiteResult check_base_points(std::uint64_t seed, long trials) {
  Rng rng(seed);
  SuiteResult res{"base-points", trials, 0, ""};
  for (long t = 0; t < trials; ++t) {
    try {
      RandomCircuit c = random_circuit(rng, 2, 4, 64, /*balanced_dual=*/true);
      std::vector<TorusPoint> points = base_points(c.f);
      CircuitCount cc = circuit_count(c.a);
      if (Int(static_cast<long>(points.size())) != cc.count)
        throw InputError("base point count != n!Vol");
      std::set<std::vector<Rat>> order_values;
      for (const auto& theta : points) {
        if (!in_closed_complement(c.f, theta)) throw InputError("base point not in complement");
        order_values.insert(cord(c.f, c.b.b, theta).value_pi);
      }
      auto orders = enumerate_orders(c.f, c.b.b);
      if (order_values.size() != points.size()) throw InputError("cord not injective on S");
      std::set<std::vector<Rat>> expected;
      for (const auto& p : orders) expected.insert(p.value_pi);
      if (order_values != expected) throw InputError("cord image differs from enumerate_orders");
    } catch (const std::exception& e) {
      ++res.failures;
      if (res.note.empty()) res.note = e.what();
    }
  }
  return res;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  out.push_back(check_trinomial_union(seed, 2000));
  out.push_back(check_p_integrality(seed + 1, 2000));
  out.push_back(check_monomial_invariance(seed + 2, 2000));
  out.push_back(check_transform_equivariance(seed + 3, 50, 40));
  out.push_back(check_circuit_consistency(seed + 4, 50));
  out.push_back(check_witness_roundtrip(seed + 5, 25));
  out.push_back(check_base_points(seed + 6, 25));
  return out;
}

}  // namespace coamap
