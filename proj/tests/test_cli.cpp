#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthobound/cli.hpp"
#include "orthobound/error.hpp"
#include "orthobound/json_io.hpp"

using namespace orthobound;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "orthobound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "orthobound_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

const std::string kCor23 = std::string(ORTHOBOUND_DATA_DIR) + "/cor23_instance.json";

// Admissible pair: x, y at their corridor centers, plus Schwarz data for x = y.
const char* kPair = R"({
  "family": [[1, 0, 0], [0, 1, 0]],
  "x": [2, 0.5, 0.1],
  "phi": [1, 0], "Phi": [3, 1],
  "y": [0.5, 2, -0.1],
  "gamma": [0.2, 1], "Gamma": [1, 3],
  "delta": 0.5, "Delta": 2
})";

}  // namespace

TEST_CASE("shipped R^2 instance: cor2.3 ratio 0.75") {
  const Run r = run({"check", "--instance", kCor23, "--bound", "cor2.3"});
  CHECK(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["ratio"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(j["chains"]["eq2.12"]["all_hold"].get<bool>());
  CHECK(j["hypothesis"]["x"]["holds"].get<bool>());
}

TEST_CASE("centered instance: chain near zero") {
  const std::string p = write("centered.json", R"({"family": [[1, 0], [0, 1]], "x": [[1, 1], 2],
    "phi": [[1, 1], 2], "Phi": [[1, 1], 2]})");
  const Run r = run({"check", "--instance", p, "--bound", "cor2.3"});
  CHECK(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["field"] == "complex");
  for (double v : j["chains"]["eq2.12"]["values"].get<std::vector<double>>()) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("inadmissible instance: exit 2 with residual above radius") {
  const std::string p = write("far.json", R"({"family": [[1, 0]], "x": [5, 0], "phi": [0.5], "Phi": [1]})");
  const Run r = run({"check", "--instance", p, "--bound", "thm2.1"});
  CHECK(r.code == kExitHypothesisFailed);
  const Json j = r.json();
  CHECK(j["hypothesis"]["x"]["cond_ii_residual"].get<double>() > j["hypothesis"]["x"]["radius"].get<double>());
  CHECK(j.contains("error"));
  CHECK_FALSE(j.contains("chains"));

  const Run forced = run({"check", "--instance", p, "--bound", "thm2.1", "--force"});
  CHECK(forced.code == kExitHypothesisFailed);
  CHECK_FALSE(forced.json()["chains"]["eq2.1"]["verified"].get<bool>());
}

TEST_CASE("validation errors carry field paths") {
  const Run missing = run({"check", "--instance", scratch("nope.json").string(), "--bound", "thm2.1"});
  CHECK(missing.code == kExitInputError);

  const std::string bad = write("bad.json", "{\"family\": [[1, 0]], \"x\": [1, 0], ");
  const Run malformed = run({"check", "--instance", bad, "--bound", "thm2.1"});
  CHECK(malformed.code == kExitInputError);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);

  const std::string dim = write("dim.json", R"({"family": [[1, 0]], "x": [1, 0, 0], "phi": [0], "Phi": [1]})");
  const Run d = run({"check", "--instance", dim, "--bound", "thm2.1"});
  CHECK(d.code == kExitInputError);
  CHECK(d.err.find("/x") != std::string::npos);

  const std::string elem = write("elem.json", R"({"family": [[1, 0], [0, "a"]], "x": [1, 0], "phi": [0, 0], "Phi": [1, 1]})");
  const Run e = run({"check", "--instance", elem, "--bound", "thm2.1"});
  CHECK(e.code == kExitInputError);
  CHECK(e.err.find("/family/members/1/1") != std::string::npos);

  const std::string len = write("len.json", R"({"family": [[1, 0]], "x": [1, 0], "phi": [0, 1], "Phi": [1]})");
  CHECK(run({"check", "--instance", len, "--bound", "thm2.1"}).err.find("/phi") != std::string::npos);

  const std::string nonorth = write("nonorth.json", R"({"family": [[1, 0], [1, 0]], "x": [1, 0], "phi": [0, 0], "Phi": [1, 1]})");
  const Run g = run({"check", "--instance", nonorth, "--bound", "thm2.1"});
  CHECK(g.code == kExitInputError);
  CHECK(g.err.find("GramResidualExceeded") != std::string::npos);

  CHECK(run({"check", "--instance", kCor23, "--bound", "thm9.9"}).code == kExitInputError);
  CHECK(run({"check", "--instance", kCor23, "--bound", "thm1.1"}).err.find("/y") != std::string::npos);
  CHECK(run({"check", "--instance", kCor23}).code == kExitInputError);
}

TEST_CASE("every selector on an admissible pair") {
  const std::string p = write("pair.json", kPair);
  for (std::string sel : {"thm1.1", "thm2", "thm2.1", "eq2.6", "eq2.11:max", "eq2.11:holder:3", "eq2.11:sum",
                          "cor2.3", "thm3.1", "thm4.1:0.5"}) {
    INFO(sel);
    const Run r = run({"check", "--instance", p, "--bound", sel});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["all_hold"].get<bool>());
  }
  // x = y with delta = 1, Delta = 1 for the Schwarz counterparts.
  const std::string s = write("schwarz.json", R"({"family": [[1, 0]], "x": [1, 2], "phi": [0], "Phi": [1],
    "y": [0, 1], "delta": 1, "Delta": 3})");
  const Run sc = run({"check", "--instance", s, "--bound", "cor2.5"});
  CHECK(sc.code == kExitOk);
  CHECK(sc.json()["chains"].size() == 4);

  const std::string one = write("one.json", R"({"family": [[1, 0]], "x": [2, 0.3], "phi": [1], "Phi": [3],
    "y": [3, -0.2], "gamma": [2], "Gamma": [5]})");
  const Run c33 = run({"check", "--instance", one, "--bound", "cor3.3"});
  CHECK(c33.code == kExitOk);
  CHECK(c33.json()["chains"].contains("eq3.13"));
  CHECK(run({"check", "--instance", p, "--bound", "cor3.3"}).code == kExitInputError);
  CHECK(run({"check", "--instance", p, "--bound", "eq2.11:holder:1"}).code == kExitInputError);
  CHECK(run({"check", "--instance", p, "--bound", "thm4.1:1.5"}).code == kExitInputError);
}

TEST_CASE("tolerance overrides") {
  const Run r = run({"check", "--instance", kCor23, "--bound", "cor2.3", "--tol", "1e-6"});
  CHECK(r.json()["chain_tolerance"].get<double>() == 1e-6);
  setenv("ORTHOBOUND_TOL", "1e-7", 1);
  CHECK(run({"check", "--instance", kCor23, "--bound", "cor2.3"}).json()["chain_tolerance"].get<double>() == 1e-7);
  CHECK(run({"check", "--instance", kCor23, "--bound", "cor2.3", "--tol", "1e-6"}).json()["chain_tolerance"] == 1e-6);
  setenv("ORTHOBOUND_TOL", "abc", 1);
  CHECK(run({"check", "--instance", kCor23, "--bound", "cor2.3"}).code == kExitInputError);
  unsetenv("ORTHOBOUND_TOL");
  CHECK(parse_tolerance("1e-9") == 1e-9);
  CHECK_FALSE(parse_tolerance("2").has_value());
  CHECK_FALSE(parse_tolerance("").has_value());
}

TEST_CASE("fuzz command") {
  const Run a = run({"fuzz", "--seed", "42", "--count", "1000"});
  CHECK(a.code == kExitOk);
  CHECK(a.json()["violations"] == 0);
  CHECK(a.json()["bounds"]["eq2.12"].contains("min_slack"));
  const Run b = run({"fuzz", "--seed", "42", "--count", "1000", "--serial"});
  CHECK(a.out == b.out);

  const Run zero = run({"fuzz", "--count", "0"});
  CHECK(zero.code == kExitOk);
  CHECK(zero.json()["violations"] == 0);

  const Run real = run({"fuzz", "--count", "200", "--mode", "real"});
  CHECK(real.code == kExitOk);
  CHECK(real.json()["rejected"].get<int>() > 0);

  CHECK(run({"fuzz", "--mode", "quaternion"}).code == kExitInputError);
  CHECK(run({"fuzz", "--dim", "2", "--family", "3"}).code == kExitInputError);
}

TEST_CASE("sweep command") {
  const std::string out = scratch("cor23.csv").string();
  fs::remove(out);
  const Run r = run({"sweep", "--target", "cor23", "--eps", "0.5,0.1,0.01", "--out", out});
  CHECK(r.code == kExitOk);
  std::ifstream in(out);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "epsilon,ratio,bound,defect");
  std::vector<double> ratios;
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    ratios.push_back(std::stod(line.substr(a + 1, line.find(',', a + 1) - a - 1)));
  }
  REQUIRE(ratios.size() == 3);
  CHECK(ratios[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(ratios[1] == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(ratios[2] == doctest::Approx(0.9999).epsilon(1e-12));

  const std::string sq = scratch("cor32.csv").string();
  const Run r32 = run({"sweep", "--target", "cor32", "--eps", "0.5,0.1", "--out", sq});
  CHECK(r32.code == kExitOk);
  CHECK(r32.json()["rows"][0]["ratio"].get<double>() == doctest::Approx(0.5625).epsilon(1e-12));

  const std::string empty = scratch("empty.csv").string();
  fs::remove(empty);
  CHECK(run({"sweep", "--target", "cor23", "--eps", "", "--out", empty}).code == kExitInputError);
  CHECK_FALSE(fs::exists(empty));
  CHECK(run({"sweep", "--target", "cor23", "--eps", "0.5,1.5", "--out", empty}).code == kExitInputError);
  CHECK_FALSE(fs::exists(empty));

  // Determinism: byte-identical output.
  const std::string again = scratch("cor23b.csv").string();
  run({"sweep", "--target", "cor23", "--eps", "0.5,0.1,0.01", "--out", again});
  std::ifstream a(out), b(again);
  CHECK(std::string(std::istreambuf_iterator<char>(a), {}) == std::string(std::istreambuf_iterator<char>(b), {}));
}

TEST_CASE("integral-demo command") {
  const Run t = run({"integral-demo", "--family", "trig", "--nodes", "64"});
  CHECK(t.code == kExitOk);
  CHECK(t.json()["gram_residual"].get<double>() <= 1e-8);
  CHECK(t.json()["hypothesis"]["f"]["holds"].get<bool>());
  const Run l = run({"integral-demo", "--family", "legendre", "--nodes", "32", "--count", "4"});
  CHECK(l.code == kExitOk);
  CHECK(l.json()["gram_residual"].get<double>() <= 1e-10);
  CHECK(run({"integral-demo", "--family", "trig", "--nodes", "3", "--count", "9"}).code == kExitInputError);
  CHECK(run({"integral-demo", "--family", "bessel"}).code == kExitInputError);
}

TEST_CASE("instance JSON round trip") {
  const Instance a = instance_from_json(Json::parse(kPair));
  CHECK(a.field == Field::Real);
  const Instance b = instance_from_json(to_json(a));
  CHECK(b.field == a.field);
  CHECK(b.x.coords().size() == a.x.coords().size());
  for (std::size_t k = 0; k < a.x.dim(); ++k) CHECK(b.x[k] == a.x[k]);
  CHECK(b.cy.has_value());
  CHECK(*b.Delta == Scalar(2.0));
  CHECK(to_json(b).dump() == to_json(a).dump());

  const Json chain = to_json(make_chain({"a", "b"}, {1.0, 2.0}));
  CHECK(chain["labels"] == Json::array({"a", "b"}));
  CHECK(chain["slacks"][0] == 1.0);
  CHECK(chain["all_hold"] == true);
  CHECK(to_json(Scalar(1.0, -2.0)) == Json::array({1.0, -2.0}));

  const QuadratureGrid g({0.0, 1.0}, {0.5, 0.5}, {1.0, 2.0});
  const QuadratureGrid h = grid_from_json(to_json(g), "");
  CHECK(h.mass(1) == 1.0);
  try {
    grid_from_json(Json::parse(R"({"nodes": [0], "weights": [1]})"), "/grid");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/grid/rho") != std::string::npos);
  }
  const Json complex_field = Json::parse(R"({"field": "real", "family": [[1, 0]], "x": [[1, 1], 0], "phi": [0], "Phi": [1]})");
  try {
    instance_from_json(complex_field);
    FAIL("expected RealModeViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RealModeViolation);
    CHECK(std::string(e.what()).find("/x") != std::string::npos);
  }
}
