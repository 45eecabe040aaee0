#include <doctest.h>

#include <random>
#include <set>

#include "coamap/errors.hpp"
#include "coamap/lpoly.hpp"

using namespace coamap;

namespace {

Rat angle_q(const LaurentPolynomial& f, int k) { return f.terms[k].coeff.angle.pi_value(); }

std::vector<Int> exps(const LaurentPolynomial& f, int k) { return f.terms[k].exponent; }

// 2-D membership oracle: a point is inside the hull of the others iff
// it lies in some triangle of them (exact barycentric test).
bool in_hull_of_others_2d(const std::vector<std::vector<Int>>& pts, int k) {
  int n_pts = static_cast<int>(pts.size());
  auto cross = [](const std::vector<Int>& o, const std::vector<Int>& a,
                  const std::vector<Int>& b) -> Int {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  for (int i = 0; i < n_pts; ++i) {
    if (i == k) continue;
    for (int j = i + 1; j < n_pts; ++j) {
      if (j == k) continue;
      // Degenerate "triangle" = segment: point on segment counts too.
      for (int l = j + 1; l <= n_pts; ++l) {
        std::vector<Int> c;
        if (l == n_pts) {
          // segment case handled via l == n_pts sentinel
          Int d = cross(pts[i], pts[j], pts[k]);
          if (d == 0) {
            // collinear: check betweenness coordinatewise
            bool between = true;
            for (int t = 0; t < 2; ++t) {
              Int lo = std::min(pts[i][t], pts[j][t]);
              Int hi = std::max(pts[i][t], pts[j][t]);
              if (pts[k][t] < lo || pts[k][t] > hi) between = false;
            }
            if (between) return true;
          }
          continue;
        }
        if (l == k) continue;
        Int d1 = cross(pts[i], pts[j], pts[k]);
        Int d2 = cross(pts[j], pts[l], pts[k]);
        Int d3 = cross(pts[l], pts[i], pts[k]);
        Int area = cross(pts[i], pts[j], pts[l]);
        if (area == 0) continue;
        if (area < 0) {
          d1 = -d1;
          d2 = -d2;
          d3 = -d3;
        }
        if (d1 >= 0 && d2 >= 0 && d3 >= 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("lpoly") {

TEST_CASE("parse the bivariate worked example") {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  REQUIRE(f.term_count() == 4);
  CHECK(exps(f, 0) == std::vector<Int>{3, 0});
  CHECK(exps(f, 1) == std::vector<Int>{0, 1});
  CHECK(exps(f, 2) == std::vector<Int>{0, 2});
  CHECK(exps(f, 3) == std::vector<Int>{1, 1});
  CHECK(angle_q(f, 0) == 0);
  CHECK(angle_q(f, 1) == 0);
  CHECK(angle_q(f, 2) == 0);
  CHECK(angle_q(f, 3) == 1);  // the minus sign
  for (const auto& t : f.terms) CHECK(t.coeff.modulus == doctest::Approx(1.0));
}

TEST_CASE("parse the univariate worked example") {
  auto f = parse_polynomial("1 + z1^3 + i*z1^5", 1);
  REQUIRE(f.term_count() == 3);
  CHECK(angle_q(f, 0) == 0);
  CHECK(angle_q(f, 1) == 0);
  CHECK(angle_q(f, 2) == make_rat(Int(1), Int(2)));
}

TEST_CASE("zero coefficient is an error") {
  CHECK_THROWS_AS(parse_polynomial("1 + 0*z1", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1 + (0+0*i)*z1", 1), ParseError);
}

TEST_CASE("duplicate exponents are an error, not merged") {
  CHECK_THROWS_AS(parse_polynomial("z1 + z1", 1), InputError);
  CHECK_THROWS_AS(parse_polynomial("1 + z1*z2 + z2*z1", 2), InputError);
}

TEST_CASE("variable index beyond n") {
  CHECK_THROWS_AS(parse_polynomial("1 + z3", 2), InputError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_polynomial("1 + + z1", 1);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("z is an alias for z1 only when n = 1") {
  auto f = parse_polynomial("1 + z^3", 1);
  CHECK(exps(f, 1) == std::vector<Int>{3});
  CHECK_THROWS(parse_polynomial("1 + z", 2));
}

TEST_CASE("coefficient grammar forms") {
  auto f = parse_polynomial("2/3*z1 + 1.5*z1^2 + 2*e^(1/3*pi*i)*z1^3 + (1+i)*z1^4 + (2-1/2*i)*z1^5",
                            1);
  CHECK(f.terms[0].coeff.modulus == doctest::Approx(2.0 / 3));
  CHECK(angle_q(f, 0) == 0);
  CHECK(f.terms[1].coeff.modulus == doctest::Approx(1.5));
  CHECK(angle_q(f, 2) == make_rat(Int(1), Int(3)));
  CHECK(f.terms[2].coeff.modulus == doctest::Approx(2.0));
  CHECK(angle_q(f, 3) == make_rat(Int(1), Int(4)));  // 45 degrees is exact
  CHECK_FALSE(f.terms[4].coeff.angle.exact());       // generic cartesian is float
  CHECK(f.terms[4].coeff.modulus == doctest::Approx(std::sqrt(4.25)));
}

TEST_CASE("polar float angles and negative exponents") {
  auto f = parse_polynomial("e^(0.75*i)*z1^-2 + 3", 1);
  CHECK_FALSE(f.terms[0].coeff.angle.exact());
  CHECK(f.terms[0].coeff.angle.rad() == doctest::Approx(0.75));
  CHECK(exps(f, 0) == std::vector<Int>{-2});
}

TEST_CASE("single-term input violates the type invariant") {
  CHECK_THROWS_AS(parse_polynomial("z1", 1), InputError);
}

TEST_CASE("print/parse round trip is the identity on term lists") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> nd(1, 3), td(2, 6), ed(-4, 4), den(1, 16), mode(0, 2);
  std::uniform_real_distribution<double> md(0.25, 4.0), ad(-3.14, 3.14);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPolynomial f;
    f.n = nd(rng);
    std::set<std::vector<Int>> seen;
    int want = td(rng);
    while (f.term_count() < want) {
      Term t;
      t.exponent.resize(f.n);
      for (int i = 0; i < f.n; ++i) t.exponent[i] = ed(rng);
      if (!seen.insert(t.exponent).second) continue;
      t.coeff.modulus = md(rng);
      switch (mode(rng)) {
        case 0: t.coeff.angle = Angle::zero(); break;
        case 1: {
          int q = den(rng);
          std::uniform_int_distribution<int> num(-q + 1, q);
          t.coeff.angle = Angle::pi_units(num(rng), q);
          break;
        }
        default: t.coeff.angle = Angle::radians(ad(rng));
      }
      f.terms.push_back(std::move(t));
    }
    LaurentPolynomial g = parse_polynomial(to_string(f), f.n);
    REQUIRE(g.term_count() == f.term_count());
    for (int k = 0; k < f.term_count(); ++k) {
      CHECK(g.terms[k].exponent == f.terms[k].exponent);
      CHECK(g.terms[k].coeff.modulus == f.terms[k].coeff.modulus);
      CHECK(g.terms[k].coeff.angle == f.terms[k].coeff.angle);
    }
  }
}

TEST_CASE("support matrix of the worked examples") {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  PointConfiguration a = support_matrix(f);
  CHECK(a.matrix == IntMat{{1, 1, 1, 1}, {3, 0, 0, 1}, {0, 1, 2, 1}});
  CHECK(a.full_dimensional);
  CHECK(a.codim == 1);

  auto g = parse_polynomial("1 + z1", 1);
  CHECK(support_matrix(g).matrix == IntMat{{1, 1}, {0, 1}});

  auto h = parse_polynomial("1 + z1^2 + z2^3 + z1*z2^3 + z1^2*z2^2", 2);
  CHECK(support_matrix(h).matrix ==
        IntMat{{1, 1, 1, 1, 1}, {0, 2, 0, 1, 2}, {0, 0, 3, 3, 2}});
}

TEST_CASE("support matrix first row is all ones for random input") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> ed(-5, 5);
  for (int t = 0; t < 100; ++t) {
    LaurentPolynomial f;
    f.n = 2;
    std::set<std::vector<Int>> seen;
    while (f.term_count() < 5) {
      Term term;
      term.exponent = {Int(ed(rng)), Int(ed(rng))};
      if (!seen.insert(term.exponent).second) continue;
      term.coeff = Coefficient::one();
      f.terms.push_back(std::move(term));
    }
    PointConfiguration a = support_matrix(f);
    for (int j = 0; j < a.num_points; ++j) CHECK(a.matrix(0, j) == 1);
  }
}

TEST_CASE("multiply_monomial shifts and rotates") {
  auto f = parse_polynomial("z1^3 + z2", 2);
  auto g = multiply_monomial(f, {Int(-3), Int(0)}, Coefficient::one());
  CHECK(exps(g, 0) == std::vector<Int>{0, 0});
  CHECK(exps(g, 1) == std::vector<Int>{-3, 1});

  auto h = parse_polynomial("1 + z1", 1);
  auto rot = multiply_monomial(h, {Int(0)}, Coefficient::polar(1.0, Angle::pi_units(1, 2)));
  CHECK(angle_q(rot, 0) == make_rat(Int(1), Int(2)));
  CHECK(angle_q(rot, 1) == make_rat(Int(1), Int(2)));

  // shift by s then -s is the identity
  auto back = multiply_monomial(g, {Int(3), Int(0)}, Coefficient::one());
  CHECK(back.terms[0].exponent == f.terms[0].exponent);
  CHECK(back.terms[1].exponent == f.terms[1].exponent);
}

TEST_CASE("multiply_monomial preserves N and exponent differences") {
  auto f = parse_polynomial("1 + z1 + z1^3", 1);
  auto g = multiply_monomial(f, {Int(7)}, Coefficient::polar(2.5, Angle::pi_units(3, 7)));
  REQUIRE(g.term_count() == f.term_count());
  for (int a = 0; a < f.term_count(); ++a)
    for (int b = 0; b < f.term_count(); ++b)
      CHECK(g.terms[a].exponent[0] - g.terms[b].exponent[0] ==
            f.terms[a].exponent[0] - f.terms[b].exponent[0]);
}

TEST_CASE("trinomials and binomials") {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  CHECK(trinomials(f).size() == 4);
  CHECK(binomials(f).size() == 6);

  auto g = parse_polynomial("1 + z1 + z2", 2);
  auto tri = trinomials(g);
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].terms.size() == 3);

  // exponent differences of the univariate example's binomials
  auto h = parse_polynomial("1 + z1^3 + i*z1^5", 1);
  auto bins = binomials(h);
  std::multiset<long> diffs;
  for (const auto& b : bins)
    diffs.insert(std::labs(Int(b.terms[1].exponent[0] - b.terms[0].exponent[0]).get_si()));
  CHECK(diffs == std::multiset<long>{2, 3, 5});

  CHECK_THROWS(trinomials(parse_polynomial("1 + z1", 1)));
}

TEST_CASE("apply_transform") {
  auto f = parse_polynomial("1 + z1 + z2", 2);
  TransformMatrix id{to_rational(IntMat::identity(2))};
  auto same = apply_transform(f, id);
  for (int k = 0; k < 3; ++k) CHECK(same.terms[k].exponent == f.terms[k].exponent);

  TransformMatrix shear{to_rational(IntMat{{1, 1}, {0, 1}})};
  auto g = apply_transform(f, shear);
  CHECK(exps(g, 0) == std::vector<Int>{0, 0});
  CHECK(exps(g, 1) == std::vector<Int>{1, 0});
  CHECK(exps(g, 2) == std::vector<Int>{1, 1});

  // integrality violation
  RatMat half(2, 2);
  half(0, 0) = make_rat(Int(1), Int(2));
  half(1, 1) = 1;
  CHECK_THROWS_AS(apply_transform(f, TransformMatrix{half}), InputError);
}

TEST_CASE("transform commutes with the support matrix") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> ed(-3, 3), coef(-2, 2);
  for (int t = 0; t < 100; ++t) {
    LaurentPolynomial f;
    f.n = 2;
    std::set<std::vector<Int>> seen;
    while (f.term_count() < 4) {
      Term term;
      term.exponent = {Int(ed(rng)), Int(ed(rng))};
      if (!seen.insert(term.exponent).second) continue;
      term.coeff = Coefficient::one();
      f.terms.push_back(std::move(term));
    }
    // random unimodular integer T
    IntMat u = IntMat::identity(2);
    for (int s = 0; s < 6; ++s) {
      int c = coef(rng);
      if (s % 2 == 0) {
        u(0, 0) += c * u(1, 0);
        u(0, 1) += c * u(1, 1);
      } else {
        u(1, 0) += c * u(0, 0);
        u(1, 1) += c * u(0, 1);
      }
    }
    TransformMatrix tm{to_rational(u)};
    auto g = apply_transform(f, tm);
    IntMat diag = IntMat::identity(3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) diag(i + 1, j + 1) = u(i, j);
    CHECK(support_matrix(g).matrix == diag * support_matrix(f).matrix);
  }
}

TEST_CASE("newton vertices of simple shapes") {
  auto simplex = parse_polynomial("1 + z1 + z2", 2);
  CHECK(newton_vertices(simplex) == std::vector<int>{0, 1, 2});

  auto collinear = parse_polynomial("1 + z1 + z1^2", 1);
  CHECK(newton_vertices(collinear) == std::vector<int>{0, 2});
}

TEST_CASE("newton vertices match the brute-force 2-D oracle") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> ed(-4, 4), count(3, 7);
  for (int t = 0; t < 120; ++t) {
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> pts;
    int want = count(rng);
    while (static_cast<int>(pts.size()) < want) {
      std::vector<Int> p{Int(ed(rng)), Int(ed(rng))};
      if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    std::vector<int> got = newton_vertices(pts);
    std::vector<int> expect;
    for (int k = 0; k < want; ++k)
      if (!in_hull_of_others_2d(pts, k)) expect.push_back(k);
    CHECK(got == expect);
  }
}

TEST_CASE("newton vertices of the open-variant example support") {
  std::vector<std::vector<Int>> pts{
      {Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(2), Int(1)}, {Int(3), Int(0)}};
  // (1,0) lies on the bottom edge; (2,1) is a genuine vertex.
  CHECK(newton_vertices(pts) == std::vector<int>{0, 2, 3, 4});
}

}  // TEST_SUITE
