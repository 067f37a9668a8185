#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "stationary/flow.hpp"
#include "stationary/io.hpp"
#include "stationary_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace stationary;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    static std::atomic<int> counter{0};
    dir_ = fs::temp_directory_path() /
           ("stationary_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::vector<std::string> listing() const {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir_)) names.push_back(e.path().filename().string());
    return names;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  static long lines(const std::string& p) {
    const std::string text = slurp(p);
    return std::count(text.begin(), text.end(), '\n');
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VerifyCenteredSphere) {
  const Outcome r = run_cli({"verify", "--family", "sphere", "--center", "0,0,0", "--radius", "1",
                             "--alpha", "-2", "--grid", "64x64", "--out", path("rep.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("sup|residual| = "), std::string::npos);
  EXPECT_NE(r.out.find("4096 samples"), std::string::npos);
  const Json rep = Json::parse(slurp(path("rep.json")));
  EXPECT_LE(rep.at("sup_abs").get<double>(), 1e-8);
  EXPECT_EQ(rep.at("sample_count").get<int>(), 4096);
}

TEST_F(Cli, VerifyCsvOutput) {
  const Outcome r = run_cli({"verify", "--family", "torus", "--alpha", "1", "--grid", "4x5",
                             "--out", path("rep.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(path("rep.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "u,v,x,y,z,H,rhs,residual");
  EXPECT_EQ(lines(path("rep.csv")), 21);
}

TEST_F(Cli, VerifyShiftBothDirections) {
  const Outcome fwd =
      run_cli({"verify-shift", "--family", "catenoid", "--alpha", "0", "--grid", "64x64"});
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  EXPECT_NE(fwd.out.find("alpha = -4"), std::string::npos);
  const Outcome inv = run_cli({"verify-shift", "--family", "catenoid", "--alpha", "0", "--grid",
                               "64x64", "--direction", "inverse", "--out", path("shift.json")});
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_NE(inv.out.find("alpha = -4"), std::string::npos);
  const std::string text = slurp(path("shift.json"));
  EXPECT_FALSE(text.empty());
}

TEST_F(Cli, GenerateThenVerifyTabulatedSpec) {
  const Outcome g = run_cli({"generate", "--family", "neg2-ode", "--kappa", "1/u", "--u", "1:2.718",
                             "--r0", "1", "--dr0", "1", "--export", path("family.obj"), "--out",
                             path("generated.json"), "--csv", path("sol.csv")});
  ASSERT_EQ(g.code, 0) << g.err;
  std::ifstream obj(path("family.obj"));
  const TriMesh mesh = read_obj(obj);
  EXPECT_GT(mesh.triangles.size(), 100u);
  EXPECT_EQ(slurp(path("sol.csv")).substr(0, 12), "u,a,r,kappa\n");

  const Outcome v = run_cli({"verify", "--spec", path("generated.json"), "--alpha", "-2", "--out",
                             path("rep.json")});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_LE(Json::parse(slurp(path("rep.json"))).at("sup_abs").get<double>(), 1e-6);
}

TEST_F(Cli, EnergyFourierCoeffsInvertExport) {
  Outcome r = run_cli({"energy", "--family", "sphere", "--alpha", "0", "--out", path("e.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(slurp(path("e.json"))).at("energy").get<double>(), 4 * 3.141592653589793,
              1e-10);

  r = run_cli({"fourier", "--family", "catenoid", "--alpha", "0", "--at", "0.3", "--nmax", "2",
               "--out", path("f.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (double a : Json::parse(slurp(path("f.json"))).at("A")) EXPECT_NEAR(a, 0, 1e-12);

  const std::string spec = path("cyl.json");
  std::ofstream(spec) << R"({"kind":"cylinder_over_curve","curve":{"type":"circle","radius":2}})";
  r = run_cli({"coeffs", "--spec", spec, "--alpha", "1", "--samples", "5", "--out", path("c.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(path("c.csv")), 6);

  r = run_cli({"invert", "--family", "sphere", "--center", "2,0,0", "--alpha", "-2", "--grid",
               "8x8", "--export", path("inv.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("inv.obj")));

  r = run_cli({"export", "--family", "torus", "--grid", "6x8", "--export", path("t.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("t.obj"));
  const TriMesh t = read_obj(in);
  EXPECT_TRUE(topology(t).closed);
  EXPECT_EQ(topology(t).euler_characteristic(), 0);
}

TEST_F(Cli, FlowIsDeterministicUnderSeed) {
  auto once = [&](const std::string& tag) {
    const Outcome r = run_cli({"flow", "--family", "sphere", "--alpha", "-2", "--grid", "8x16",
                               "--steps", "15", "--noise", "0.02", "--seed", "7", "--out",
                               path(tag + ".csv"), "--export", path(tag + ".obj")});
    EXPECT_EQ(r.code, 0) << r.err;
    return slurp(path(tag + ".csv")) + slurp(path(tag + ".obj"));
  };
  const std::string a = once("a"), b = once("b");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  const Outcome other = run_cli({"flow", "--family", "sphere", "--alpha", "-2", "--grid", "8x16",
                                 "--steps", "15", "--noise", "0.02", "--seed", "8", "--out",
                                 path("c.csv")});
  ASSERT_EQ(other.code, 0);
  EXPECT_NE(slurp(path("c.csv")), slurp(path("a.csv")));
}

TEST_F(Cli, FlowOnMeshFile) {
  ASSERT_EQ(run_cli({"export", "--family", "sphere", "--grid", "6x10", "--export", path("s.obj")}).code,
            0);
  const Outcome r = run_cli(
      {"flow", "--mesh", path("s.obj"), "--alpha", "0", "--steps", "5", "--out", path("t.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(path("t.csv")), 7);
}

TEST_F(Cli, ValidationErrorsExitTwoAndWriteNothing) {
  const std::vector<std::vector<std::string>> cases = {
      {"verify", "--family", "sphere", "--alpha", "0", "--bogus", "1", "--out", path("a.json")},
      {"verify", "--family", "torus", "--radius", "2", "--alpha", "0", "--out", path("a.json")},
      {"verify", "--family", "sphere", "--out", path("a.json")},
      {"verify", "--family", "sphere", "--spec", path("x.json"), "--alpha", "0"},
      {"verify", "--family", "sphere", "--alpha", "0", "--grid", "0x4", "--out", path("a.json")},
      {"verify", "--family", "sphere", "--radius", "-1", "--alpha", "0", "--out", path("a.json")},
      {"verify", "--family", "sphere", "--alpha", "0", "--out", "/nonexistent/dir/a.json"},
      {"flow", "--family", "catenoid", "--alpha", "0", "--out", path("a.csv")},
      {},
  };
  for (const auto& args : cases) {
    const Outcome r = run_cli(args);
    EXPECT_EQ(r.code, cli::kExitValidation) << (args.empty() ? "" : args[0]) << " " << r.err;
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
    EXPECT_TRUE(listing().empty());
  }
}

TEST_F(Cli, MalformedSpecNamesTheField) {
  std::ofstream(path("bad.json")) << R"({"kind":"sphere","radius":"x"})";
  Outcome r = run_cli({"verify", "--spec", path("bad.json"), "--alpha", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'radius'"), std::string::npos);
  std::ofstream(path("junk.json")) << "{ not json";
  r = run_cli({"verify", "--spec", path("junk.json"), "--alpha", "0"});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"verify", "--family", "sphere", "--radius", "x", "--alpha", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--radius"), std::string::npos);
}

TEST_F(Cli, NumericalFailuresExitThreeAndWriteNothing) {
  Outcome r = run_cli({"fourier", "--family", "torus", "--center", "0.5,0,0", "--nmax", "0", "--at",
                       "0.5", "--alpha", "0", "--out", path("f.json")});
  EXPECT_EQ(r.code, cli::kExitNumerical) << r.err;
  EXPECT_NE(r.err.find("band-limit-violation"), std::string::npos);
  r = run_cli({"energy", "--family", "helicoid", "--u", "-1:1", "--v", "-1:1", "--grid", "5x5",
               "--alpha", "-3", "--out", path("e.json")});
  EXPECT_EQ(r.code, cli::kExitNumerical) << r.err;
  EXPECT_TRUE(listing().empty());

  // one fixed step of |x|/|g| collapses a regular tetrahedron onto its center
  TriMesh tet;
  tet.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  tet.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  std::ofstream(path("tet.obj")) << [&] {
    std::ostringstream os;
    write_obj(os, tet);
    return os.str();
  }();
  const double dt = tet.vertices[0].norm() / discrete_gradient(tet, 0)[0].norm();
  r = run_cli({"flow", "--mesh", path("tet.obj"), "--alpha", "0", "--rule", "fixed", "--dt",
               format_number(dt), "--steps", "5", "--out", path("t.csv"), "--export", path("m.obj")});
  EXPECT_EQ(r.code, cli::kExitNumerical) << r.err;
  EXPECT_FALSE(fs::exists(path("t.csv")));
  EXPECT_FALSE(fs::exists(path("m.obj")));
}

TEST_F(Cli, Help) {
  const Outcome r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"verify", "energy", "coeffs", "fourier", "generate", "invert",
                           "verify-shift", "flow", "export"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  const Outcome sub = run_cli({"flow", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--seed"), std::string::npos);
}
