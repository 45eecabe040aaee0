// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.  The first
// argument is the path to the coamap CLI binary (criteria 1-4 exercise
// the real command line).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coamap/checks.hpp"
#include "coamap/render.hpp"

using json = nlohmann::json;
using namespace coamap;

namespace {

std::string g_cli;

struct CliResult {
  int exit_code = -1;
  json doc;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  CliResult res;
  res.exit_code = WEXITSTATUS(status);
  if (!out.empty()) res.doc = json::parse(out, nullptr, false);
  return res;
}

std::string pi_of(const json& j) { return j.at("pi_rational").get<std::string>(); }

std::vector<std::string> order_values(const json& doc) {
  std::vector<std::string> out;
  for (const auto& o : doc.at("orders")) {
    std::string v;
    for (const auto& c : o.at("value")) v += (v.empty() ? "" : ",") + pi_of(c);
    out.push_back(v);
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

TorusPoint theta_pi(std::vector<std::pair<long, long>> frac) {
  std::vector<Angle> coords;
  for (auto [p, q] : frac) coords.push_back(Angle::pi_units(p, q));
  return TorusPoint(std::move(coords));
}

constexpr std::uint64_t kSeed = 20240817;

// 1. First worked reproduction: zonotope [-3pi, 3pi], translation 3pi,
//    orders exactly {-pi, pi}, the two printed order evaluations, < 1s.
bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  CliResult r = run_cli("orders \"z1^3 + z2 + z2^2 - z1*z2\"");
  double elapsed = seconds_since(start);
  if (r.exit_code != 0) {
    detail = "cli exit " + std::to_string(r.exit_code);
    return false;
  }
  const json& z = r.doc.at("zonotope");
  bool ok = pi_of(z.at("interval")[0]) == "-3" && pi_of(z.at("interval")[1]) == "3";
  ok = ok && pi_of(r.doc.at("translation")[0]) == "3";
  ok = ok && order_values(r.doc) == std::vector<std::string>{"-1", "1"};

  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  IntMat b(4, 1);
  b(0, 0) = -1;
  b(1, 0) = -1;
  b(2, 0) = -1;
  b(3, 0) = 3;
  OrderPoint v1 = order_value(f, b, theta_pi({{-2, 3}, {0, 1}}).coords, 0);
  OrderPoint v2 = order_value(f, b, theta_pi({{2, 3}, {0, 1}}).coords, 0);
  ok = ok && v1.value_pi == std::vector<Rat>{Rat(1)} && v2.value_pi == std::vector<Rat>{Rat(-1)};
  ok = ok && elapsed < 1.0;
  detail = "orders {-pi,pi}, v = (pi, -pi), " + std::to_string(elapsed) + "s";
  return ok;
}

// 2. Univariate reproduction: zonotope [-5pi, 5pi], translation 3pi/2,
//    the five orders, and the five printed order evaluations, exact.
bool criterion2(std::string& detail) {
  CliResult r = run_cli("orders \"1 + z1^3 + i*z1^5\"");
  if (r.exit_code != 0) {
    detail = "cli exit " + std::to_string(r.exit_code);
    return false;
  }
  const json& z = r.doc.at("zonotope");
  bool ok = pi_of(z.at("interval")[0]) == "-5" && pi_of(z.at("interval")[1]) == "5";
  ok = ok && pi_of(r.doc.at("translation")[0]) == "3/2";
  ok = ok && order_values(r.doc) ==
                 std::vector<std::string>{"-9/2", "-5/2", "-1/2", "3/2", "7/2"};

  auto f = parse_polynomial("1 + z1^3 + i*z1^5", 1);
  IntMat b(3, 1);
  b(0, 0) = 2;
  b(1, 0) = -5;
  b(2, 0) = 3;
  std::vector<std::pair<std::pair<long, long>, Rat>> table{
      {{-7, 8}, make_rat(Int(7), Int(2))},
      {{-1, 2}, make_rat(Int(-5), Int(2))},
      {{0, 1}, make_rat(Int(3), Int(2))},
      {{5, 16}, make_rat(Int(-9), Int(2))},
      {{3, 4}, make_rat(Int(-1), Int(2))}};
  for (const auto& [th, expect] : table) {
    OrderPoint v = order_value(f, b, theta_pi({th}).coords, 0);
    ok = ok && v.value_pi == std::vector<Rat>{expect};
  }
  detail = "five orders and five order evaluations exact";
  return ok;
}

// 3. Open-variant reproduction: orders-open count 6, volume 5, exact.
bool criterion3(std::string& detail) {
  CliResult r = run_cli("orders-open \"1 + z1 + z2 + z1^2*z2 - z1^3\"");
  bool ok = r.exit_code == 0 && r.doc.at("count").get<int>() == 6;
  CliResult g = run_cli("gale \"1 + z1 + z2 + z1^2*z2 - z1^3\"");
  ok = ok && g.exit_code == 0 && g.doc.at("volume").get<std::string>() == "5";
  detail = "open count 6, volume 5";
  return ok;
}

// 4. Codimension-two reproduction: Gale-dual column lattice matches the
//    printed dual, volume 11, sampled discriminant coamoeba covers
//    >= 99.9% of a 300^2 grid, < 60 s.
bool criterion4(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  CliResult g = run_cli("gale \"1 + z1^2 + z2^3 + z1*z2^3 + z1^2*z2^2\"");
  if (g.exit_code != 0) {
    detail = "gale exit " + std::to_string(g.exit_code);
    return false;
  }
  bool ok = g.doc.at("volume").get<std::string>() == "11";
  IntMat b(5, 2);
  {
    const json& bj = g.doc.at("B");
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = Int(bj[i][j].get<std::string>(), 10);
  }
  IntMat printed{{1, 2}, {-1, -3}, {-2, -2}, {2, 0}, {0, 3}};
  ok = ok && hnf(b.transposed()).h == hnf(printed.transposed()).h;

  std::string db =
      "729*z1^2 + 2187*z1^3 + 2187*z1^4 + 729*z1^5 + 1728*z2 + 4752*z1*z2 + 5400*z1^2*z2 "
      "- 1404*z1^3*z2 - 864*z1^4*z2 + 3456*z2^2 - 5616*z1*z2^2 + 576*z1^2*z2^2 "
      "+ 256*z1^3*z2^2 + 1728*z2^3";
  auto f = parse_polynomial(db, 2);
  SampleStats stats;
  RasterImage img = raster_coamoeba_sampled(f, 300, 0, 14.0, &stats);
  double coverage = coverage_fraction(img);
  double elapsed = seconds_since(start);
  ok = ok && coverage >= 0.999 && elapsed < 60.0;
  std::ostringstream os;
  os << "volume 11, lattice match, coverage " << coverage << ", " << elapsed << "s";
  detail = os.str();
  return ok;
}

// 5. Circuit count identity: 200 seeded random circuits, n in {1,2,3},
//    |enumerate_orders| = circuit_count exactly, < 30 s.
bool criterion5(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult res = check_circuit_consistency(kSeed, 200);
  double elapsed = seconds_since(start);
  std::ostringstream os;
  os << res.trials << " circuits, " << res.failures << " failures, " << elapsed << "s";
  detail = os.str();
  return res.failures == 0 && elapsed < 30.0;
}

// 6. Surjectivity/injectivity roundtrip on the same trials.
bool criterion6(std::string& detail) {
  SuiteResult res = check_witness_roundtrip(kSeed, 200);
  detail = std::to_string(res.trials) + " orders round-tripped, " +
           std::to_string(res.failures) + " failures";
  return res.failures == 0 && res.trials > 0;
}

// 7. Property suites at 10^4 seeded trials each; 100 random unimodular
//    transforms.
bool criterion7(std::string& detail) {
  SuiteResult tri = check_trinomial_union(kSeed, 10000);
  SuiteResult pint = check_p_integrality(kSeed + 1, 10000);
  SuiteResult mono = check_monomial_invariance(kSeed + 2, 10000);
  SuiteResult equi = check_transform_equivariance(kSeed + 3, 100, 100);
  std::ostringstream os;
  os << "failures: trinomial " << tri.failures << ", integrality " << pint.failures
     << ", monomial " << mono.failures << ", transform " << equi.failures;
  detail = os.str();
  return tri.failures + pint.failures + mono.failures + equi.failures == 0;
}

// 8. Base points on 100 seeded generic n = 2 circuits.
bool criterion8(std::string& detail) {
  SuiteResult res = check_base_points(kSeed + 4, 100);
  detail = std::to_string(res.trials) + " circuits, " + std::to_string(res.failures) +
           " failures" + (res.note.empty() ? "" : " (" + res.note + ")");
  return res.failures == 0;
}

// 9. Raster topology at 400^2: flood-fill complement counts match the
//    enumerated order counts.
bool criterion9(std::string& detail) {
  struct Case {
    const char* text;
    int n;
    int expect;
  };
  std::array<Case, 4> cases{{{"z1^3 + z2 + z2^2 - z1*z2", 2, 2},
                             {"1 + z1^3 + i*z1^5", 1, 5},
                             {"1 + z1 + z2", 2, 1},
                             {"1 + z1 + z2 + i*z1*z2", 2, 2}}};
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : cases) {
    auto f = parse_polynomial(c.text, c.n);
    RasterImage img = raster_lopsided(f, 400);
    int got = flood_fill_components(img, img.complement, &f);
    os << got << " ";
    ok = ok && got == c.expect;
  }
  detail = "components " + os.str() + "(expect 2 5 1 2)";
  return ok;
}

// 10. m = 0 edge case: a simple polynomial counts one component with an
//     empty zonotope.
bool criterion10(std::string& detail) {
  bool ok = true;
  for (const char* text : {"1 + z1 + z2", "1 + z1"}) {
    auto f = parse_polynomial(text, infer_variable_count(text));
    IntMat b(f.term_count(), 0);
    auto orders = enumerate_orders(f, b);
    ok = ok && orders.size() == 1 && orders[0].value_pi.empty();
    Zonotope z = zonotope(b);
    ok = ok && z.dim == 0 && z.facet_normals.empty();
  }
  CliResult r = run_cli("count \"1 + z1 + z2\"");
  ok = ok && r.exit_code == 0 && r.doc.at("count").get<int>() == 1 &&
       r.doc.at("zonotope_empty").get<bool>();
  detail = "single empty order point, empty zonotope";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-coamap-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "bivariate circuit reproduction (orders, zonotope, translation)", criterion1},
      {2, "univariate circuit reproduction (five orders, five evaluations)", criterion2},
      {3, "open-variant reproduction (count 6, volume 5)", criterion3},
      {4, "codimension-two reproduction (dual lattice, volume 11, coverage)", criterion4},
      {5, "circuit count identity on 200 seeded circuits", criterion5},
      {6, "witness roundtrip for every enumerated order", criterion6},
      {7, "property suites (union, integrality, invariance, equivariance)", criterion7},
      {8, "base points on 100 seeded circuits", criterion8},
      {9, "raster flood-fill component counts", criterion9},
      {10, "simplex edge case (m = 0)", criterion10},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label
              << " -- " << detail << "\n";
  }
  if (failures) std::cout << failures << " criteria failed\n";
  else std::cout << "all criteria passed\n";
  return failures;
}
