#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "m0n/cli/run.hpp"

using namespace m0n;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "m0n");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int st = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {st, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("m0n-cli-" + std::to_string(::getpid()) + "-" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string divisor_file(const std::string& name, const DivisorClass& d) { return file(name, format_divisor(d)); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::map<std::string, std::string> keyvals(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return m;
}

DivisorClass random_divisor(std::mt19937& gen, int n) {
  DivisorClass d(n);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int i = 1; i <= n; ++i)
    if (gen() % 3 == 0) d.add_psi(i, rat(num(gen), den(gen)));
  for (const auto& b : boundary_classes(n))
    if (gen() % 4 == 0) d.add_delta(b, rat(num(gen), den(gen)));
  return d;
}

}  // namespace

TEST_F(CliTest, DimSix) {
  const auto r = invoke({"dim", "--n", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "16\n");
  const auto m = keyvals(invoke({"dim", "--n", "9", "--format", "machine"}).out);
  EXPECT_EQ(m.at("dim"), "219");
  EXPECT_EQ(m.at("formula"), "219");
  EXPECT_EQ(keyvals(invoke({"dim", "--n", "6", "--format", "machine"}).out).at("boundary_classes"), "25");
}

TEST_F(CliTest, FnefZeroDivisorIsVacuouslyYes) {
  const auto r = invoke({"fnef", "--n", "6", "--in", file("zero.divisor", R"({"n": 6})")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, 4), "yes\n");
}

TEST_F(CliTest, FnefNegativeResultCarriesWitness) {
  const auto r = invoke({"fnef", "--in", divisor_file("neg", -1 * kappa1(6)), "--format", "machine"});
  EXPECT_EQ(r.status, 1);
  const auto m = keyvals(r.out);
  EXPECT_EQ(m.at("fnef"), "no");
  const auto f = invoke({"intersect", "--in", path("neg"), "--curve", "[1]|[2]|[3]|[4,5,6]"});
  EXPECT_EQ(f.status, 0);
  EXPECT_EQ(m.count("witness"), 1u);
  EXPECT_LT(parse_rational(m.at("pairing")), 0);
}

TEST_F(CliTest, ConvertRoundTrip) {
  std::mt19937 gen(99);
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + static_cast<int>(gen() % 6);
    const DivisorClass d = random_divisor(gen, n);
    for (const char* fmt : {"human", "machine"}) {
      const auto once = invoke({"convert", "--in", divisor_file("d", d), "--format", fmt});
      ASSERT_EQ(once.status, 0) << once.err;
      EXPECT_TRUE(parse_divisor(once.out) == d);
      const auto twice = invoke({"convert", "--in", file("d1", once.out), "--format", fmt});
      EXPECT_EQ(twice.out, once.out);
    }
  }
}

TEST_F(CliTest, ConvertCanonicalizesSubsets) {
  const auto r = invoke({"convert", "--in", file("d", R"({"n":5,"boundary":{"[3,4,5]":"1/2","[2,1]":"1/2"}})"), "--format", "machine"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(parse_divisor(r.out) == delta_class(5, mask_of({1, 2})));
}

TEST_F(CliTest, UsageErrorsNameTheField) {
  auto r = invoke({"fnef", "--in", file("bad", R"({"n":6,"psi":{"1":"0.5"}})")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("psi.1"), std::string::npos);
  r = invoke({"fnef", "--in", file("bad2", R"({"psi":{}})")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("'n'"), std::string::npos);
  r = invoke({"fnef"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("'in'"), std::string::npos);
  r = invoke({"fnef", "--in", path("missing")});
  EXPECT_EQ(r.status, 2);
  r = invoke({"fnef", "--in", divisor_file("k", kappa1(6)), "--group", "sym:x"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("group"), std::string::npos);
  r = invoke({"fnef", "--in", divisor_file("p", psi_class(6, 1)), "--group", "full"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("group"), std::string::npos);
  EXPECT_EQ(invoke({"dim", "--n", "6", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"dim"}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST_F(CliTest, SymScanThirteen) {
  const auto r = invoke({"sym-scan", "--n", "13", "--format", "machine"});
  ASSERT_EQ(r.status, 0);
  const auto m = keyvals(r.out);
  EXPECT_EQ(m.at("inequalities"), "18");
  EXPECT_EQ(m.at("overall_max"), "1");
  EXPECT_EQ(m.at("exceptional"), "2");
  EXPECT_EQ(m.at("violations"), "0");
  EXPECT_EQ(m.at("empty_slices"), "2");
  std::set<std::string> ex{m.at("exceptional.1"), m.at("exceptional.2")};
  EXPECT_EQ(ex, (std::set<std::string>{SymClass(13, {rat(1, 3), 0, 0, rat(1, 3), 1}, true).str(),
                                       SymClass(13, {1, rat(1, 3), rat(1, 3), 0, 0}, true).str()}));
  const auto q = keyvals(invoke({"sym-ineqs", "--n", "13", "--format", "machine"}).out);
  EXPECT_EQ(q.at("count"), "18");
  EXPECT_EQ(q.at("ineq(10,1,1,1)"), "3r_2 >= 1 + r_3");
}

TEST_F(CliTest, MachineOutputIsStable) {
  const std::vector<std::string> args{"m62", "--samples", "3", "--seed", "11", "--format", "machine"};
  const auto a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto m = keyvals(a.out);
  EXPECT_EQ(m.at("orbits"), "29");
  EXPECT_EQ(m.at("facets"), "28");
  EXPECT_EQ(m.at("rays"), "43");
  EXPECT_EQ(m.at("samples_effective"), "3");
  EXPECT_EQ(m.at("redundant(3,2_xy,2,1)"), "1/2 (2_xy,2,2,2) + 1/2 (4,2_xy,1,1)");
}

TEST_F(CliTest, DecomposeRoutes) {
  auto m = keyvals(invoke({"decompose", "--in", divisor_file("k8", kappa1(8)), "--group", "sym:6", "--format", "machine"}).out);
  EXPECT_EQ(m.at("method"), "m62");
  EXPECT_EQ(m.at("effective"), "yes");
  m = keyvals(invoke({"m62", "--in", path("k8"), "--format", "machine"}).out);
  EXPECT_EQ(m.at("branch"), "1");
  m = keyvals(invoke({"decompose", "--in", divisor_file("k6", kappa1(6)), "--format", "machine"}).out);
  EXPECT_EQ(m.at("method"), "six-point");
  m = keyvals(invoke({"decompose", "--in", divisor_file("p7", psi_class(7, 7)), "--group", "sym:6", "--format", "machine"}).out);
  EXPECT_EQ(m.at("method"), "onepoint");
  EXPECT_EQ(m.at("effective"), "yes");

  const auto neg = invoke({"decompose", "--in", divisor_file("n7", -1 * kappa1(7)), "--group", "full", "--format", "machine"});
  EXPECT_EQ(neg.status, 1);
  EXPECT_EQ(keyvals(neg.out).at("effective"), "no");
  EXPECT_EQ(keyvals(neg.out).count("separator.y"), 1u);
  const auto forced = invoke({"decompose", "--in", path("k8"), "--group", "sym:6", "--branch", "2"});
  EXPECT_EQ(forced.status, 1);
}

TEST_F(CliTest, CertifyAndVerify) {
  const auto cert = path("cert.json");
  const auto r = invoke({"certify", "--in", divisor_file("d9", kappa1(9) + psi_class(9, 9)), "--group", "sym:8", "--out", cert,
                      "--format", "machine"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto m = keyvals(r.out);
  EXPECT_EQ(m.at("certified"), "yes");
  EXPECT_EQ(m.at("children"), "2");
  EXPECT_EQ(invoke({"certify", "--verify", "--in", cert}).status, 0);

  std::ifstream in(cert);
  auto doc = nlohmann::json::parse(in);
  doc["children"].erase(0);
  const auto bad = invoke({"certify", "--verify", "--in", file("bad.json", doc.dump())});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("problem"), std::string::npos);
}

TEST_F(CliTest, SixPointVerbs) {
  const auto k = divisor_file("k", kappa1(6));
  auto m = keyvals(invoke({"chamber", "--in", k, "--format", "machine"}).out);
  EXPECT_EQ(m.at("chamber"), "central");
  m = keyvals(invoke({"classify-fib", "--in", k, "--format", "machine"}).out);
  EXPECT_EQ(m.at("tag"), "big");
  EXPECT_EQ(m.count("witness"), 1u);
  m = keyvals(invoke({"classify-fib", "--in", divisor_file("p", forget_pullback(b_class(5, 2), 6)), "--format", "machine"}).out);
  EXPECT_EQ(m.at("tag"), "forget_one");
  EXPECT_EQ(m.at("points"), "6");
  EXPECT_EQ(invoke({"chamber", "--in", divisor_file("k7", kappa1(7))}).status, 2);
}

TEST_F(CliTest, RaysOfSymmetricCone) {
  const auto r = invoke({"rays", "--n", "6", "--group", "full", "--format", "machine"});
  ASSERT_EQ(r.status, 0);
  const auto m = keyvals(r.out);
  EXPECT_EQ(m.at("rays"), "2");
  for (const char* key : {"ray.1", "ray.2"}) {
    const auto d = parse_divisor(m.at(key));
    EXPECT_TRUE(fnef(d).nef);
  }
  EXPECT_EQ(invoke({"rays", "--n", "7"}).status, 2);
}

TEST_F(CliTest, OutputToFile) {
  const auto out = path("dim.txt");
  EXPECT_EQ(invoke({"dim", "--n", "5", "--out", out}).status, 0);
  std::ifstream in(out);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "5");
}
