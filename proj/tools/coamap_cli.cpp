// coamap command line tool: Gale duals, order maps, base points and
// figure rendering for Laurent polynomials on machine-readable JSON.
//
// Exit codes: 0 success, 1 input error, 2 unsupported mode or feature,
// 3 property-suite failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "coamap/checks.hpp"
#include "coamap/errors.hpp"
#include "coamap/render.hpp"

using json = nlohmann::ordered_json;
using namespace coamap;

namespace {

constexpr int kSchemaVersion = 1;

json angle_json(const Angle& a) {
  json out;
  if (a.exact()) out["pi_rational"] = to_string(a.normalized().pi_value());
  out["radians"] = a.normalized().rad();
  return out;
}

json rat_pi_json(const Rat& q) {
  return json{{"pi_rational", to_string(q)}, {"radians", to_double(q) * kPi}};
}

json int_matrix_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json int_vector_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json order_point_json(const OrderPoint& p) {
  json value = json::array();
  for (const auto& q : p.value_pi) value.push_back(rat_pi_json(q));
  return json{{"lattice_tag", int_vector_json(p.lattice_tag)}, {"value", value}};
}

json torus_point_json(const TorusPoint& theta) {
  json out = json::array();
  for (const auto& a : theta.coords) out.push_back(angle_json(a));
  return out;
}

json zonotope_json(const Zonotope& z) {
  json gens = json::array();
  for (int j = 0; j < z.generators.rows(); ++j) {
    json row = json::array();
    for (int i = 0; i < z.dim; ++i) row.push_back(rat_pi_json(z.generators(j, i)));
    gens.push_back(row);
  }
  json normals = json::array();
  for (const auto& u : z.facet_normals) normals.push_back(int_vector_json(u));
  json out{{"m", z.dim}, {"generators", gens}, {"facet_normals", normals}};
  if (z.dim == 1) {
    out["interval"] = json{rat_pi_json(-z.support[0]), rat_pi_json(z.support[0])};
  }
  if (z.dim <= 2 && z.dim > 0) {
    json verts = json::array();
    for (const auto& v : z.vertices) {
      json pt = json::array();
      for (const auto& q : v) pt.push_back(rat_pi_json(q));
      verts.push_back(pt);
    }
    out["vertices"] = verts;
  }
  return out;
}

struct PolyInput {
  std::string text;
  int n = 0;  // 0 = infer
};

LaurentPolynomial load_poly(const PolyInput& in) {
  int n = in.n > 0 ? in.n : infer_variable_count(in.text);
  return parse_polynomial(in.text, n);
}

// "p/q,0,-1/3" in units of pi; a trailing 'r' marks float radians.
TorusPoint parse_theta(const std::string& text) {
  std::vector<Angle> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw InputError("empty coordinate in angle vector");
    if (tok.back() == 'r') {
      coords.push_back(Angle::radians(std::stod(tok.substr(0, tok.size() - 1))));
    } else {
      Rat q(tok);
      q.canonicalize();
      coords.push_back(Angle::pi_units(q));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return TorusPoint(std::move(coords));
}

std::vector<Rat> parse_rat_vector(const std::string& text) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw InputError("empty coordinate in rational vector");
    Rat q(tok);
    q.canonicalize();
    out.push_back(q);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json orders_payload(const LaurentPolynomial& f, bool open_variant, bool with_witness) {
  PointConfiguration a = support_matrix(f);
  if (!f.exact()) {
    // Nearest-lattice diagnostics for the unsupported float mode.
    std::string diag = "enumerate_orders: float-mode coefficients (terms";
    for (int k = 0; k < f.term_count(); ++k)
      if (!f.terms[k].coeff.angle.exact()) diag += " " + std::to_string(k);
    diag += "); float translation t/pi = [";
    if (a.codim >= 1 && a.full_dimensional) {
      DualMatrix bf = gale_dual(a);
      for (int i = 0; i < bf.b.cols(); ++i) {
        double ti = 0.0;
        for (int k = 0; k < f.term_count(); ++k)
          ti += f.terms[k].coeff.angle.rad() / kPi * to_double(bf.b(k, i));
        diag += (i ? ", " : "") + double_str(ti);
      }
    }
    diag += "]; exact rational angles are required for enumeration";
    throw UnsupportedError(diag);
  }
  if (a.codim == 0) {
    if (!a.full_dimensional) throw InputError("orders: support is not full dimensional");
    DualMatrix b;
    b.b = IntMat(a.num_points, 0);
    b.is_gale = true;
    std::vector<OrderPoint> orders = enumerate_orders(f, b.b);
    ComponentCount cc = count_components(f, b);
    return json{{"schema_version", kSchemaVersion},
                {"B", int_matrix_json(b.b)},
                {"is_gale", true},
                {"zonotope", zonotope_json(zonotope(b.b))},
                {"translation", json::array()},
                {"orders", json::array({order_point_json(orders.front())})},
                {"count", orders.size()},
                {"g_A", to_string(cc.g_a)},
                {"g_B", to_string(cc.g_b)},
                {"bijective", cc.bijective}};
  }
  DualMatrix b = gale_dual(a);
  Zonotope z = zonotope(b.b);
  std::vector<OrderPoint> orders =
      open_variant ? enumerate_orders_open(f, b.b) : enumerate_orders(f, b.b);
  ComponentCount cc = count_components(f, b);
  json order_list = json::array();
  for (const auto& p : orders) {
    json item = order_point_json(p);
    if (with_witness) {
      TorusPoint theta = witness_theta(f, b.b, p);
      item["witness_theta"] = torus_point_json(theta);
      item["witness_roundtrip"] = cord(f, b.b, theta) == p;
    }
    order_list.push_back(item);
  }
  json t = json::array();
  for (const auto& q : translation(f, b.b)) t.push_back(rat_pi_json(q));
  return json{{"schema_version", kSchemaVersion},
              {"B", int_matrix_json(b.b)},
              {"is_gale", b.is_gale},
              {"zonotope", zonotope_json(z)},
              {"translation", t},
              {"orders", order_list},
              {"count", orders.size()},
              {"g_A", to_string(cc.g_a)},
              {"g_B", to_string(cc.g_b)},
              {"bijective", cc.bijective}};
}

const char* kSchemaText = R"schema({
  "schema_version": 1,
  "angle": {"pi_rational": "string p/q, present in exact mode", "radians": "number"},
  "commands": {
    "gale": {"A": "[[int]]", "B": "[[int]]", "g_A": "int", "g_B": "int",
             "is_circuit": "bool", "is_gale": "bool", "m": "int", "n": "int", "N": "int",
             "volume": "rational string (circuits and n <= 2 only)"},
    "orders | orders-open": {"B": "[[int]]", "zonotope": {"generators": "[[angle]]",
             "facet_normals": "[[int]]", "interval": "[angle, angle] (m = 1)",
             "vertices": "[[angle]] (m <= 2)"},
             "translation": "[angle]", "orders": "[{lattice_tag, value, witness_theta?}]",
             "count": "int", "g_A": "int", "g_B": "int", "bijective": "bool"},
    "cord": {"theta": "[angle]", "in_closed_complement": "bool", "order": "{lattice_tag, value}"},
    "witness": {"order": "[angle]", "theta": "[angle]", "roundtrip_ok": "bool"},
    "basepoints": {"points": "[[angle]]", "orders": "[{lattice_tag, value}]", "count": "int"},
    "count": {"count": "int", "bijective": "bool", "g_A": "int", "g_B": "int"},
    "shell": {"families": "[{normal: [int], offset: angle}]"},
    "render": {"outputs": "[path]", "coverage": "number (sampled)",
               "complement_components": "int (lopsided)", "degenerate_fibers": "int"},
    "check": {"suites": "[{name, trials, failures, note, ms}]", "passed": "bool"}
  },
  "exit_codes": {"0": "success", "1": "input error", "2": "unsupported mode or feature",
                 "3": "property suite failure"}
})schema";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lopsided coamoeba order maps for Laurent polynomials"};
  app.require_subcommand(0, 1);
  bool print_schema = false;
  app.add_flag("--schema", print_schema, "Print the JSON output schema and exit");

  PolyInput in;
  auto add_poly_options = [&](CLI::App* cmd) {
    cmd->add_option("poly", in.text, "Laurent polynomial text, e.g. \"1 + z1^3 + i*z1^5\"")
        ->required();
    cmd->add_option("--n", in.n, "Number of variables (default: inferred)");
  };

  auto* cmd_gale = app.add_subcommand("gale", "Support matrix, Gale dual and volume");
  add_poly_options(cmd_gale);

  auto* cmd_orders = app.add_subcommand("orders", "Order set of the closed lopsided coamoeba");
  bool with_witness = false;
  add_poly_options(cmd_orders);
  cmd_orders->add_flag("--witness", with_witness, "Attach a witness theta per order");

  auto* cmd_orders_open = app.add_subcommand("orders-open", "Order set of the open variant");
  add_poly_options(cmd_orders_open);

  auto* cmd_cord = app.add_subcommand("cord", "Order value at a torus point");
  std::string theta_text;
  add_poly_options(cmd_cord);
  cmd_cord->add_option("--theta", theta_text, "Torus point, e.g. \"-2/3,0\" (units of pi)")
      ->required();

  auto* cmd_witness = app.add_subcommand("witness", "Witness theta for an order value");
  std::string order_text;
  add_poly_options(cmd_witness);
  cmd_witness->add_option("--order", order_text, "Order point, e.g. \"3/2\" (units of pi)")
      ->required();

  auto* cmd_basepoints = app.add_subcommand("basepoints", "Base points of a circuit");
  add_poly_options(cmd_basepoints);

  auto* cmd_count = app.add_subcommand("count", "Complement component count data");
  add_poly_options(cmd_count);

  auto* cmd_shell = app.add_subcommand("shell", "Shell hyperplane families");
  add_poly_options(cmd_shell);

  auto* cmd_render = app.add_subcommand("render", "Raster and vector figures");
  std::string kind = "lopsided";
  int resolution = 400;
  int fibers = 0;
  double xmax = 14.0;
  std::string out_path = "coamoeba.ppm";
  std::string svg_path;
  bool no_overlay = false;
  add_poly_options(cmd_render);
  cmd_render->add_option("--kind", kind, "lopsided | closed | sampled")->capture_default_str();
  cmd_render->add_option("--resolution", resolution, "Pixels per torus side")
      ->capture_default_str();
  cmd_render->add_option("--fibers", fibers, "Fiber count for sampled renders (default: resolution)");
  cmd_render->add_option("--xmax", xmax, "Modulus range [-xmax, xmax] for sampled renders")
      ->capture_default_str();
  cmd_render->add_option("-o,--out", out_path, "Output PPM path")->capture_default_str();
  cmd_render->add_option("--svg", svg_path, "Also write the zonotope/lattice SVG here");
  cmd_render->add_flag("--no-overlay", no_overlay, "Skip the shell overlay");

  auto* cmd_check = app.add_subcommand("check", "Run seeded property suites");
  std::string suite = "all";
  std::uint64_t seed = 0;
  long trials = 0;
  add_poly_options(cmd_check);
  cmd_check->add_option("--suite", suite,
                        "all | trinomial-union | p-integrality | monomial-invariance | "
                        "transform-equivariance | circuit-consistency | witness-roundtrip | "
                        "base-points")
      ->capture_default_str();
  cmd_check->add_option("--seed", seed, "Random seed")->capture_default_str();
  cmd_check->add_option("--trials", trials, "Trial count override");

  CLI11_PARSE(app, argc, argv);

  if (print_schema) {
    std::cout << kSchemaText << "\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  try {
    if (cmd_gale->parsed()) {
      LaurentPolynomial f = load_poly(in);
      PointConfiguration a = support_matrix(f);
      json doc{{"schema_version", kSchemaVersion},
               {"A", int_matrix_json(a.matrix)},
               {"n", a.n},
               {"N", a.num_points},
               {"m", a.codim},
               {"full_dimensional", a.full_dimensional},
               {"is_circuit", is_circuit(a)}};
      doc["g_A"] = to_string(maximal_minor_gcd(a.matrix, a.n + 1));
      if (a.codim >= 1 && a.full_dimensional) {
        DualMatrix b = gale_dual(a);
        doc["B"] = int_matrix_json(b.b);
        doc["is_gale"] = b.is_gale;
        doc["g_B"] = to_string(maximal_minor_gcd(b.b, b.b.cols()));
        doc["row_lattice_full"] = b.row_lattice.is_full_integer_lattice;
      }
      try {
        doc["volume"] = to_string(normalized_volume(a));
      } catch (const std::exception&) {
        // volume unsupported for this shape; omit
      }
      emit(doc);
    } else if (cmd_orders->parsed() || cmd_orders_open->parsed()) {
      LaurentPolynomial f = load_poly(in);
      emit(orders_payload(f, cmd_orders_open->parsed(), with_witness));
    } else if (cmd_cord->parsed()) {
      LaurentPolynomial f = load_poly(in);
      TorusPoint theta = parse_theta(theta_text);
      DualMatrix b = gale_dual(support_matrix(f));
      json doc{{"schema_version", kSchemaVersion},
               {"B", int_matrix_json(b.b)},
               {"theta", torus_point_json(theta)},
               {"in_closed_complement", in_closed_complement(f, theta)}};
      if (f.exact() && theta.exact()) {
        doc["order"] = order_point_json(cord(f, b.b, theta));
      } else {
        CircularGap gap = max_circular_gap(phase_list(f, theta));
        doc["boundary_indeterminate"] = gap.boundary_indeterminate;
        std::vector<double> v = order_value_float(f, b.b, theta);
        json value = json::array();
        for (double x : v) value.push_back(x * kPi);
        doc["order_float"] = value;
        doc["mode"] = "float";
      }
      emit(doc);
    } else if (cmd_witness->parsed()) {
      LaurentPolynomial f = load_poly(in);
      DualMatrix b = gale_dual(support_matrix(f));
      std::vector<Rat> value = parse_rat_vector(order_text);
      std::vector<Rat> t = translation(f, b.b);
      if (value.size() != t.size()) throw InputError("order dimension mismatch");
      OrderPoint p;
      p.value_pi = value;
      p.lattice_tag.resize(value.size());
      for (std::size_t i = 0; i < value.size(); ++i) {
        Rat w = (value[i] - t[i]) / 2;
        if (!is_integer(w)) throw InputError("order value is not on the translated lattice");
        p.lattice_tag[i] = w.get_num();
      }
      TorusPoint theta = witness_theta(f, b.b, p);
      json doc{{"schema_version", kSchemaVersion},
               {"order", order_point_json(p)},
               {"theta", torus_point_json(theta)},
               {"roundtrip_ok", cord(f, b.b, theta) == p}};
      emit(doc);
    } else if (cmd_basepoints->parsed()) {
      LaurentPolynomial f = load_poly(in);
      std::vector<TorusPoint> points = base_points(f);
      json pts = json::array();
      json orders = json::array();
      bool exact = f.exact() && f.n >= 2;
      DualMatrix b = exact ? gale_dual(support_matrix(f)) : DualMatrix{};
      for (const auto& theta : points) {
        pts.push_back(torus_point_json(theta));
        if (exact) orders.push_back(order_point_json(cord(f, b.b, theta)));
      }
      json doc{{"schema_version", kSchemaVersion}, {"points", pts}, {"count", points.size()}};
      if (exact) doc["orders"] = orders;
      emit(doc);
    } else if (cmd_count->parsed()) {
      LaurentPolynomial f = load_poly(in);
      PointConfiguration a = support_matrix(f);
      json doc{{"schema_version", kSchemaVersion}};
      if (a.codim == 0) {
        doc["count"] = 1;
        doc["zonotope_empty"] = true;
        doc["g_A"] = to_string(maximal_minor_gcd(a.matrix, a.n + 1));
      } else {
        DualMatrix b = gale_dual(a);
        ComponentCount cc = count_components(f, b);
        doc["count"] = to_string(cc.count);
        doc["bijective"] = cc.bijective;
        doc["g_A"] = to_string(cc.g_a);
        doc["g_B"] = to_string(cc.g_b);
        if (is_circuit(a)) {
          CircuitCount crc = circuit_count(a);
          doc["generic_count"] = to_string(crc.count);
          doc["multiplicity_warning"] = crc.multiplicity_warning;
        }
      }
      emit(doc);
    } else if (cmd_shell->parsed()) {
      LaurentPolynomial f = load_poly(in);
      json fams = json::array();
      for (const auto& fam : shell(f))
        fams.push_back(
            json{{"normal", int_vector_json(fam.normal)}, {"offset", angle_json(fam.offset)}});
      emit(json{{"schema_version", kSchemaVersion}, {"families", fams}});
    } else if (cmd_render->parsed()) {
      LaurentPolynomial f = load_poly(in);
      json doc{{"schema_version", kSchemaVersion}};
      json outputs = json::array();
      RasterImage img;
      if (kind == "lopsided" || kind == "closed") {
        img = raster_lopsided(f, resolution, kind == "closed");
        if (!no_overlay) draw_shell_overlay(img, f);
        doc["complement_components"] = flood_fill_components(img, img.complement, &f);
      } else if (kind == "sampled") {
        SampleStats stats;
        img = raster_coamoeba_sampled(f, resolution, fibers, xmax, &stats);
        doc["coverage"] = coverage_fraction(img);
        doc["degenerate_fibers"] = stats.degenerate_fibers;
        doc["fiber_solves"] = stats.samples;
      } else {
        throw InputError("render: unknown kind '" + kind + "'");
      }
      write_ppm(img, out_path);
      outputs.push_back(out_path);
      if (!svg_path.empty()) {
        DualMatrix b = gale_dual(support_matrix(f));
        Zonotope z = zonotope(b.b);
        std::vector<OrderPoint> orders = enumerate_orders(f, b.b);
        std::ofstream svg(svg_path);
        if (!svg) throw InputError("cannot open " + svg_path);
        svg << zonotope_svg(z, translation(f, b.b), orders);
        outputs.push_back(svg_path);
      }
      doc["outputs"] = outputs;
      emit(doc);
    } else if (cmd_check->parsed()) {
      LaurentPolynomial f = load_poly(in);  // validates the input polynomial
      (void)f;
      std::vector<SuiteResult> results;
      auto run_one = [&](const std::string& name) {
        long t = trials;
        if (name == "trinomial-union") results.push_back(check_trinomial_union(seed, t ? t : 2000));
        else if (name == "p-integrality") results.push_back(check_p_integrality(seed, t ? t : 2000));
        else if (name == "monomial-invariance")
          results.push_back(check_monomial_invariance(seed, t ? t : 2000));
        else if (name == "transform-equivariance")
          results.push_back(check_transform_equivariance(seed, t ? t : 50, 40));
        else if (name == "circuit-consistency")
          results.push_back(check_circuit_consistency(seed, t ? t : 50));
        else if (name == "witness-roundtrip")
          results.push_back(check_witness_roundtrip(seed, t ? t : 25));
        else if (name == "base-points") results.push_back(check_base_points(seed, t ? t : 25));
        else throw InputError("unknown suite '" + name + "'");
      };
      if (suite == "all") {
        if (trials) {
          for (const char* s : {"trinomial-union", "p-integrality", "monomial-invariance",
                                "transform-equivariance", "circuit-consistency",
                                "witness-roundtrip", "base-points"})
            run_one(s);
        } else {
          results = run_all_suites(seed);
        }
      } else {
        run_one(suite);
      }
      json suites = json::array();
      bool passed = true;
      for (const auto& r : results) {
        suites.push_back(json{{"name", r.name},
                              {"trials", r.trials},
                              {"failures", r.failures},
                              {"note", r.note}});
        passed = passed && r.passed();
      }
      emit(json{{"schema_version", kSchemaVersion}, {"suites", suites}, {"passed", passed}});
      if (!passed) return 3;
    }
  } catch (const UnsupportedError& e) {
    emit(json{{"schema_version", kSchemaVersion}, {"error", e.what()}, {"unsupported", true}});
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"schema_version", kSchemaVersion}, {"error", e.what()}});
    return 1;
  }
  return 0;
}
