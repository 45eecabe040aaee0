// End-to-end checks of the command line surface: JSON payloads, file
// outputs and exit codes.

#include <cstdio>
#include <fstream>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  json doc;
  std::string raw;
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
  res.raw = out;
  if (!out.empty()) res.doc = json::parse(out, nullptr, false);
  return res;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cout << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok]   " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-coamap-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  {
    CliResult r = run_cli("gale \"z1^3 + z2 + z2^2 - z1*z2\"");
    expect(r.exit_code == 0, "gale exits 0");
    expect(r.doc.at("is_circuit").get<bool>(), "gale reports a circuit");
    expect(r.doc.at("g_A").get<std::string>() == "1", "gale g_A");
    expect(r.doc.at("volume").get<std::string>() == "3", "gale volume");
    expect(r.doc.at("B")[3][0].get<std::string>() == "3", "gale pinned dual sign");
    expect(r.doc.at("schema_version").get<int>() == 1, "schema version present");
  }
  {
    CliResult r = run_cli("orders \"1 + z1^3 + i*z1^5\" --witness");
    expect(r.exit_code == 0, "orders --witness exits 0");
    expect(r.doc.at("count").get<int>() == 5, "orders count 5");
    bool all = true;
    for (const auto& o : r.doc.at("orders")) all = all && o.at("witness_roundtrip").get<bool>();
    expect(all, "every witness round-trips");
  }
  {
    CliResult r = run_cli("orders \"1 + e^(0.4*i)*z1^3 + z1^5\"");
    expect(r.exit_code == 2, "float-mode orders exits 2");
    expect(r.doc.contains("error"), "float-mode orders reports diagnostics");
  }
  {
    CliResult r = run_cli("cord \"z1^3 + z2 + z2^2 - z1*z2\" --theta \"-2/3,0\"");
    expect(r.exit_code == 0, "cord exits 0");
    expect(r.doc.at("in_closed_complement").get<bool>(), "cord precondition reported");
    expect(r.doc.at("order").at("value")[0].at("pi_rational").get<std::string>() == "1",
           "cord value pi");
  }
  {
    CliResult r = run_cli("cord \"z1^3 + z2 + z2^2 - z1*z2\" --theta \"0,0\"");
    expect(r.exit_code == 1, "cord outside the complement exits 1");
  }
  {
    CliResult r = run_cli("cord \"z1^3 + z2 + z2^2 - z1*z2\" --theta \"-2.0944r,0r\"");
    expect(r.exit_code == 0, "float-mode cord exits 0");
    expect(r.doc.at("mode").get<std::string>() == "float", "float-mode cord reports mode");
    expect(r.doc.contains("boundary_indeterminate"), "float-mode cord carries the boundary flag");
    double v = r.doc.at("order_float")[0].get<double>();
    expect(std::abs(v - 3.14159265) < 1e-3, "float-mode cord value near pi");
  }
  {
    CliResult r = run_cli("orders \"1 + z1 + z2\"");
    expect(r.exit_code == 0 && r.doc.at("count").get<int>() == 1, "simplex orders count 1");
    expect(r.doc.at("zonotope").at("m").get<int>() == 0, "simplex zonotope is empty");
  }
  {
    CliResult r = run_cli("witness \"1 + z1^3 + i*z1^5\" --order \"3/2\"");
    expect(r.exit_code == 0, "witness exits 0");
    expect(r.doc.at("roundtrip_ok").get<bool>(), "witness roundtrip flag");
  }
  {
    CliResult r = run_cli("basepoints \"z1^3 + z2 + z2^2 - z1*z2\"");
    expect(r.exit_code == 0, "basepoints exits 0");
    expect(r.doc.at("count").get<int>() == 2, "basepoints count 2");
  }
  {
    CliResult r = run_cli("count \"1 + z1^3 + i*z1^5\"");
    expect(r.exit_code == 0 && r.doc.at("count").get<std::string>() == "5", "count command");
    expect(r.doc.at("bijective").get<bool>(), "count bijectivity flag");
  }
  {
    CliResult r = run_cli("shell \"1 + z1^3 + i*z1^5\"");
    expect(r.exit_code == 0 && r.doc.at("families").size() == 3, "shell families");
  }
  {
    std::string out = "/tmp/coamap_cli_render.ppm", svg = "/tmp/coamap_cli_zono.svg";
    CliResult r = run_cli("render \"1 + z1 + z2\" --resolution 120 -o " + out);
    expect(r.exit_code == 0, "render exits 0");
    expect(r.doc.at("complement_components").get<int>() == 1, "render component count");
    std::ifstream ppm(out, std::ios::binary);
    expect(ppm.good(), "render wrote the ppm");
    std::remove(out.c_str());
    CliResult r2 = run_cli("render \"1 + z1^3 + i*z1^5\" --resolution 64 -o " + out +
                           " --svg " + svg);
    expect(r2.exit_code == 0, "render with svg exits 0");
    std::ifstream sv(svg);
    std::string content((std::istreambuf_iterator<char>(sv)), std::istreambuf_iterator<char>());
    expect(content.find("<svg") != std::string::npos, "svg written");
    std::remove(out.c_str());
    std::remove(svg.c_str());
  }
  {
    CliResult r = run_cli("check \"z1^3 + z2 + z2^2 - z1*z2\" --suite trinomial-union --trials 200");
    expect(r.exit_code == 0 && r.doc.at("passed").get<bool>(), "check suite passes");
  }
  {
    CliResult r = run_cli("check \"z1^3 + z2 + z2^2 - z1*z2\" --suite all --trials 60 --seed 5");
    expect(r.exit_code == 0 && r.doc.at("passed").get<bool>(), "check --suite all passes");
    expect(r.doc.at("suites").size() == 7, "all seven suites ran");
  }
  {
    CliResult r = run_cli("--schema");
    expect(r.exit_code == 0 && r.doc.contains("commands"), "--schema prints the schema");
  }
  {
    CliResult r = run_cli("frobnicate \"1+z1\"");
    expect(r.exit_code != 0, "unknown command is a usage error");
  }
  {
    CliResult r = run_cli("orders \"1 + 0*z1\"");
    expect(r.exit_code == 1, "zero coefficient exits 1");
    CliResult r2 = run_cli("orders \"1 + z1 + z1^2\" --n 2");
    expect(r2.exit_code == 1, "rank-deficient support exits 1");
  }

  if (g_failures) std::cout << g_failures << " cli checks failed\n";
  else std::cout << "all cli checks passed\n";
  return g_failures;
}
