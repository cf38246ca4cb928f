#include "cli_app.hpp"
#include "seshadri/serialize.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace seshadri;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "seshadri");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = seshadri::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::string kData = SESHADRI_DATA_DIR;

}  // namespace

TEST(Json, IntegersAndRationals) {
  EXPECT_EQ(io::integer_json(Integer(42)), json(42));
  Integer big("123456789012345678901234567890");
  EXPECT_EQ(io::integer_json(big), json("123456789012345678901234567890"));
  EXPECT_EQ(io::integer_from_json(io::integer_json(big)), big);
  EXPECT_EQ(io::rational_from_json(json("31/10")), Rational(Integer(31), Integer(10)));
  EXPECT_EQ(io::rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(io::integer_from_json(json("1/2")), DomainError);
  json j;
  io::put_rational(j, "v", Rational(Integer(4), Integer(23)));
  EXPECT_EQ(j["v"], "4/23");
  EXPECT_EQ(j["v_decimal"], "0.173913");
}

TEST(Json, CertificateRoundTrip) {
  std::vector<nef::NefCertificate> certs = {
      nef::build_nefcor(33, 1, 23, 4, nef::UniformCase::A),
      nef::build_nefcorB(15, 1, 11, 3, Integer(7), Rational(Integer(31), Integer(10))),
      nef::build_nefcorRef(7, 1, 7, 3, 2),
      nef::build_plusonecor(10, 4, 13),
      nef::build_adhoc(10, 3, 1, 2, 19),
      nef::build_nefcor(5, 1, 3, 1, nef::UniformCase::B, std::nullopt, false),
  };
  for (const auto& c : certs) {
    json j = io::to_json(c);
    auto back = io::certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.checks, c.checks) << c.provenance;
    EXPECT_EQ(back.valid, c.valid);
    EXPECT_EQ(back.divisor.c0, c.divisor.c0);
    EXPECT_EQ(back.divisor.e, c.divisor.e);
    EXPECT_EQ(back.validity_flags, c.validity_flags);
    EXPECT_EQ(io::to_json(back), j);
  }
}

TEST(Json, StoredVerdictsAreIgnored) {
  json j = io::to_json(nef::build_nefcor(5, 1, 3, 1, nef::UniformCase::B, std::nullopt, false));
  j["valid"] = true;
  for (auto& [k, v] : j["checks"].items()) v = true;
  EXPECT_FALSE(io::certificate_from_json(j).valid);
  j.erase("curve");
  EXPECT_THROW(io::certificate_from_json(j), DomainError);
}

TEST(Cli, Epsilon) {
  auto r = run({"epsilon", "33", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "4/23 (witness r=23 d=4 S2)")) << r.out;
  r = run({"epsilon", "7", "1", "--refined"});
  EXPECT_TRUE(contains(r.out, "3/8 (witness r=7 d=3 m=2 S2′)")) << r.out;
  r = run({"epsilon", "4", "1"});
  EXPECT_TRUE(contains(r.out, "1/2 [square case: supremum]")) << r.out;
  r = run({"epsilon", "19", "1", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["value"], "13/57");
  r = run({"epsilon", "10", "1", "--format", "csv"});
  EXPECT_TRUE(contains(r.out, "10,1,3,10,0.300000,false,false,3,1,1,S1")) << r.out;
  EXPECT_EQ(run({"epsilon", "0", "1"}).code, 2);
  EXPECT_EQ(run({"epsilon", "-3", "1"}).code, 2);
  EXPECT_EQ(run({"epsilon", "3"}).code, 2);
  EXPECT_EQ(run({"epsilon", "3", "1", "--format", "xml"}).code, 2);
}

TEST(Cli, Scan) {
  auto r = run({"scan", "--n", "19", "--stat", "star"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "63.2% (12/19)")) << r.out;
  r = run({"scan", "--n", "97", "--summary-only"});
  EXPECT_TRUE(contains(r.out, "87.6%")) << r.out;
  r = run({"scan", "--n", "10", "--stat", "star"});
  EXPECT_TRUE(contains(r.out, "\n10\t1*\t1.000000\ttrue")) << r.out;
  r = run({"scan", "--n", "10", "--format", "csv"});
  EXPECT_TRUE(contains(r.out, "n,l,epsilon_num,epsilon_den,star,in_I,in_J\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "10,10,1,1,true,")) << r.out;
  EXPECT_FALSE(r.err.empty());
  r = run({"scan", "--n", "20", "--l-range", "5:9", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["rows"].size(), 5u);
  EXPECT_EQ(run({"scan", "--n", "20", "--l-range", "9:5"}).code, 2);
  EXPECT_EQ(run({"scan", "--n", "20", "--stat", "K"}).code, 2);
}

TEST(Cli, NefBuildAndCheck) {
  auto r = run({"nef", "build", "nefcor", "--n", "33", "--l", "1", "--r", "23", "--d", "4", "--case", "a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["valid"].get<bool>());
  r = run({"nef", "build", "nefcorref", "--n", "10", "--d", "2", "--m", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.err, "m exceeds f(d)")) << r.err;
  r = run({"nef", "build", "nefcor", "--n", "5", "--r", "3", "--d", "1", "--case", "b", "--no-case-check"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["checks"]["self_intersection"].get<bool>());
  r = run({"nef", "build", "adhoc", "--n", "10", "--a", "3", "--b", "1", "--c", "2", "--rprime", "19", "--format",
           "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "characteristic does not divide c")) << r.out;
  EXPECT_EQ(run({"nef", "build", "plusonecor", "--n", "8", "--d", "4", "--rprime", "11"}).code, 0);
  EXPECT_EQ(run({"nef", "build", "mystery", "--n", "8"}).code, 2);
  EXPECT_EQ(run({"nef", "build", "nefcor", "--n", "8", "--d", "1"}).code, 2);

  r = run({"nef", "check", kData + "/nonuniform_15.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["c0"], "31/10");
  EXPECT_EQ(run({"nef", "check", kData + "/does_not_exist.json"}).code, 2);
}

TEST(Cli, NefCheckRejectsMalformed) {
  std::string path = testing::TempDir() + "/broken_cert.json";
  {
    std::ofstream f(path);
    f << "{\"n\": 2, \"l\": 1";
  }
  EXPECT_EQ(run({"nef", "check", path}).code, 2);
  {
    std::ofstream f(path);
    f << R"({"n": 2, "l": 1, "c0": "3", "e": ["1"], "curve": {"d": 1, "mults": [1]}})";
  }
  EXPECT_EQ(run({"nef", "check", path}).code, 2);
}

TEST(Cli, Lp) {
  const std::string b = "2,2,2,2,2,2,2,1,1,1,1,1,1,1,1";
  auto r = run({"lp", "--t", "5", "--mults", b});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_TRUE(j["empty_certified"].get<bool>());
  EXPECT_EQ(j["threshold"], "6");
  EXPECT_EQ(run({"lp", "--t", "6", "--mults", b}).code, 1);
  EXPECT_EQ(run({"lp", "--t", "2", "--mults", "1,1,1,1,1,1,1", "--n", "7"}).code, 0);
  EXPECT_EQ(run({"lp", "--t", "2", "--mults", "1,2"}).code, 2);
  EXPECT_EQ(run({"lp", "--t", "2", "--mults", "1,x"}).code, 2);
  EXPECT_EQ(run({"lp", "--t", "2"}).code, 2);
  EXPECT_EQ(run({"lp", "--t", "2", "--mults-file", kData + "/missing.txt"}).code, 2);

  std::string path = testing::TempDir() + "/mults.txt";
  {
    std::ofstream f(path);
    f << "2\n2\n2\n2\n2\n2\n2\n1\n1\n1\n1\n1\n1\n1\n1\n";
  }
  r = run({"lp", "--t", "59/10", "--mults-file", path, "--format", "table", "--solver", "simplex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "threshold: 6")) << r.out;
  {
    std::ofstream f(path);
    f << "2\n2\nthree\n";
  }
  EXPECT_EQ(run({"lp", "--t", "1", "--mults-file", path}).code, 2);
}

TEST(Cli, Apps) {
  auto r = run({"apps", "--n", "16", "--m", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["regularity_a"], 13);
  EXPECT_TRUE(j["regularity_sharp"].get<bool>());
  EXPECT_EQ(j["freeness_lb"], 13);
  EXPECT_EQ(j["very_ample_lb"], 14);
  r = run({"apps", "--n", "10", "--m", "1"});
  EXPECT_TRUE(contains(r.out, "effectivity: t >= 3 ")) << r.out;
  EXPECT_TRUE(contains(r.out, "ampleness: t > 10/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "regularity: 4")) << r.out;
  r = run({"apps", "--n", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "effectivity: t >= 5/2")) << r.out;
  EXPECT_TRUE(contains(r.out, "regularity: rejected")) << r.out;
}

TEST(Cli, CompareAndPell) {
  auto r = run({"compare", "19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "13/57")) << r.out;
  EXPECT_TRUE(contains(r.out, "39/170")) << r.out;
  r = run({"compare", "10", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["eps_vs_inv_sqrt_n_plus_1"], -1);
  r = run({"pell", "19"});
  EXPECT_TRUE(contains(r.out, "170^2 - 19*39^2 = 1")) << r.out;
  r = run({"pell", "2", "--positive", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["r"], 3);
  EXPECT_EQ(run({"pell", "16"}).code, 3);
  EXPECT_EQ(run({"pell", "abc"}).code, 2);
}

TEST(Cli, HelpAndUsage) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "epsilon"));
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}
