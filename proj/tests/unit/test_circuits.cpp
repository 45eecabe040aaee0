#include <doctest.h>

#include <random>
#include <set>

#include "coamap/checks.hpp"
#include "coamap/errors.hpp"

using namespace coamap;

TEST_SUITE("circuits") {

TEST_CASE("circuit counts of the worked examples") {
  // Both volume routes give 3 here; these particular coefficients
  // are non-generic and leave only 2 components.
  auto f47 = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  PointConfiguration a47 = support_matrix(f47);
  CircuitCount c47 = circuit_count(a47);
  CHECK(c47.count == 3);
  CHECK(c47.g_a == 1);
  CHECK_FALSE(c47.multiplicity_warning);
  CHECK(Rat(c47.count) == normalized_volume(a47));
  CHECK(enumerate_orders(f47, gale_dual(a47).b).size() == 2);

  auto f48 = parse_polynomial("1 + z1^3 + i*z1^5", 1);
  CHECK(circuit_count(support_matrix(f48)).count == 5);
}

TEST_CASE("circuit count agrees with the shoelace volume on simplex-plus-point supports") {
  Rng rng(61);
  std::uniform_int_distribution<int> ed(-4, 4);
  int done = 0;
  while (done < 500) {
    std::vector<std::vector<Int>> pts{{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}};
    pts.push_back({Int(ed(rng)), Int(ed(rng))});
    PointConfiguration a = point_configuration(pts);
    if (!a.full_dimensional || !is_circuit(a)) continue;
    ++done;
    CircuitCount cc = circuit_count(a);
    CHECK(Rat(cc.count) == normalized_volume(a));
  }
}

TEST_CASE("multiplicity warning when g_A exceeds one") {
  // support {0, 2, 5} has gcd of maximal minors 1; {0, 2, 6} has 2.
  PointConfiguration a = point_configuration({{Int(0)}, {Int(2)}, {Int(6)}});
  REQUIRE(is_circuit(a));
  CircuitCount cc = circuit_count(a);
  CHECK(cc.g_a == 2);
  CHECK(cc.multiplicity_warning);
  CHECK(cc.count == 6);
}

TEST_CASE("maximal sparseness") {
  CHECK(is_maximally_sparse(parse_polynomial("1 + z1 + z2", 2)));
  CHECK_FALSE(is_maximally_sparse(parse_polynomial("1 + z1 + z1^2", 1)));
  CHECK_FALSE(is_maximally_sparse(parse_polynomial("1 + z1 + z2 + z1^2*z2 - z1^3", 2)));
}

TEST_CASE("maximally sparse n + 2 point configurations are circuits in the plane") {
  // Three vertices of a convex polygon are never collinear, so every
  // maximal minor survives when n = 2.  (Not so for n >= 3: see below.)
  Rng rng(62);
  std::uniform_int_distribution<int> ed(-4, 4);
  int done = 0;
  while (done < 100) {
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> pts;
    while (static_cast<int>(pts.size()) < 4) {
      std::vector<Int> p{Int(ed(rng)), Int(ed(rng))};
      if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    PointConfiguration a = point_configuration(pts);
    if (!a.full_dimensional) continue;
    if (static_cast<int>(newton_vertices(pts).size()) != 4) continue;
    ++done;
    CHECK(is_circuit(a));
  }
}

TEST_CASE("a square pyramid is maximally sparse but not a circuit") {
  // Five vertices of a 3-polytope with a coplanar four-subset: the
  // corresponding maximal minor vanishes.
  std::vector<std::vector<Int>> pts{{Int(0), Int(0), Int(0)},
                                    {Int(1), Int(0), Int(0)},
                                    {Int(0), Int(1), Int(0)},
                                    {Int(1), Int(1), Int(0)},
                                    {Int(0), Int(0), Int(1)}};
  PointConfiguration a = point_configuration(pts);
  REQUIRE(a.full_dimensional);
  REQUIRE(a.codim == 1);
  CHECK(newton_vertices(pts).size() == 5);
  CHECK_FALSE(is_circuit(a));
}

TEST_CASE("binomial system of the bivariate worked example") {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  BinomialSystem sys = binomial_system(f);
  CHECK(sys.exponent_matrix == IntMat{{0, -1}, {-2, 1}});
  CHECK(sys.rhs_angles[0].pi_value() == 0);
  CHECK(sys.rhs_angles[1].pi_value() == 1);
  CHECK(abs(det_exact(sys.exponent_matrix)) == 2);
}

TEST_CASE("base points of the bivariate worked example") {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  auto points = base_points(f);
  REQUIRE(points.size() == 2);
  std::set<std::vector<Rat>> values;
  DualMatrix b = gale_dual(support_matrix(f));
  for (const auto& theta : points) {
    CHECK(in_closed_complement(f, theta));
    values.insert(cord(f, b.b, theta).value_pi);
  }
  std::set<std::vector<Rat>> expect{{Rat(-1)}, {Rat(1)}};
  CHECK(values == expect);
}

TEST_CASE("base points of the square support with an eighth-turn corner") {
  auto f = parse_polynomial("1 + z1 + z2 + e^(1/4*pi*i)*z1*z2", 2);
  auto points = base_points(f);
  REQUIRE(points.size() == 2);
  DualMatrix b = gale_dual(support_matrix(f));
  std::set<std::vector<Rat>> values;
  for (const auto& theta : points) values.insert(cord(f, b.b, theta).value_pi);
  CHECK(values.size() == 2);
  auto expect = enumerate_orders(f, b.b);
  REQUIRE(expect.size() == 2);
  for (const auto& p : expect) CHECK(values.count(p.value_pi) == 1);
}

TEST_CASE("base point count matches enumeration on random balanced circuits") {
  Rng rng(63);
  std::uniform_int_distribution<int> nd(2, 3);
  for (int t = 0; t < 200; ++t) {
    RandomCircuit c = random_circuit(rng, nd(rng), 4, 64, /*balanced_dual=*/true);
    auto points = base_points(c.f);
    auto orders = enumerate_orders(c.f, c.b.b);
    CHECK(points.size() == orders.size());
  }
}

TEST_CASE("phi angles are pairwise distinct over the base points") {
  // phi is the common ratio phase of a middle-role term against the
  // constant-role term; the roles pair up a two-element sign class of
  // the circuit dual, so recover them the same way.
  Rng rng(64);
  for (int t = 0; t < 50; ++t) {
    RandomCircuit c = random_circuit(rng, 2, 4, 64, /*balanced_dual=*/true);
    auto points = base_points(c.f);
    IntMat cd = circuit_dual(c.a).b;
    std::vector<int> pos, neg;
    for (int j = 0; j < cd.rows(); ++j) (cd(j, 0) > 0 ? pos : neg).push_back(j);
    std::vector<int> cls = pos.size() == 2 ? pos : neg;
    int const_role = cls[0];
    int middle = 0;
    while (middle == cls[0] || middle == cls[1]) ++middle;
    std::set<Rat> phis;
    for (const auto& theta : points) {
      std::vector<Int> diff(c.f.n);
      for (int i = 0; i < c.f.n; ++i)
        diff[i] = c.f.terms[middle].exponent[i] - c.f.terms[const_role].exponent[i];
      Angle phi = c.f.terms[middle].coeff.angle - c.f.terms[const_role].coeff.angle +
                  dot(diff, theta.coords);
      phis.insert(normalize_pi_units(phi.pi_value()));
    }
    CHECK(phis.size() == points.size());
  }
}

TEST_CASE("univariate circuits fall back to root arguments") {
  auto f = parse_polynomial("1 + z1^3 + i*z1^5", 1);
  auto points = base_points(f);
  CHECK(points.size() == 5);
  for (const auto& theta : points) {
    REQUIRE(theta.dim() == 1);
    CHECK_FALSE(theta.coords[0].exact());
  }
}

TEST_CASE("base points reject non-circuits") {
  CHECK_THROWS_AS(base_points(parse_polynomial("1 + z1^2 + z2^3 + z1*z2^3 + z1^2*z2^2", 2)),
                  InputError);
}

}  // TEST_SUITE
