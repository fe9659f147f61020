#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "lsing/cli.hpp"
#include "test_util.hpp"

using namespace lsing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Parser, RoundTripThroughRender) {
  const std::vector<std::string> vars{"x", "y", "z"};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 4), count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p(3);
    for (int t = count(rng); t > 0; --t) {
      std::ostringstream s;
      s << coeff(rng) << "/" << (1 + expo(rng)) << "*x^" << 1 + expo(rng) << "*y^" << 1 + expo(rng) << "*z^"
        << 1 + expo(rng);
      p += parse_polynomial(s.str(), vars);
    }
    auto text = render(p, vars);
    EXPECT_EQ(parse_polynomial(text.empty() ? "0" : text, vars), p) << text;
  }
}

TEST(ReportDocumentJson, RoundTripsLosslessly) {
  const std::vector<std::string> vars{"x", "y"};
  for (const auto& [phi, f] : std::vector<std::pair<std::string, std::string>>{
           {"x^3+y^2", "y"}, {"x*y", "x"}, {"x^5+y^5+x^2*y^2", "x-y"}}) {
    auto p = parse_polynomial(phi, vars), g = parse_polynomial(f, vars);
    auto r = full_report(GermPair(vars, p, g));
    auto doc = ReportDocument::from_report("t", vars, p, g, r, 99);
    doc.timings_ms = std::map<std::string, double>{{"mu_X", 0.125}, {"tau_X", 1.5}};
    doc.oracle_agreement = std::map<std::string, bool>{{"mu_X", true}, {"br_direct", false}};
    auto text = doc.to_json().dump(2);
    auto back = ReportDocument::from_json(Json::parse(text));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(back.to_json().dump(2), text);
  }
}

TEST(ReportDocumentJson, HasFixedSchemaKeys) {
  const std::vector<std::string> vars{"x", "y"};
  auto p = parse_polynomial("x^3+y^2", vars), g = parse_polynomial("y", vars);
  auto j = ReportDocument::from_report("cusp", vars, p, g, full_report(GermPair(vars, p, g)), kDefaultSeed).to_json();
  for (const char* key : {"name", "vars", "phi", "f", "mu_f", "mu_X", "tau_X", "mu_icis", "br_direct", "br_trivial",
                          "br_formula", "br_section", "theta_quotient", "polar_mult", "euler_obstruction", "N",
                          "finitely_determined", "routes_agree", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(ReportDocumentJson, NonFiniteValuesAreStrings) {
  EXPECT_EQ(to_json(ReportValue::infinite()), "INFINITE");
  EXPECT_EQ(to_json(ReportValue::undefined()), "UNDEFINED");
  EXPECT_EQ(report_value_from_json(Json(-3)), ReportValue::finite(-3));
  EXPECT_THROW(report_value_from_json(Json("many")), std::invalid_argument);
}

TEST(Corpus, BuiltinEntriesValidateAndRoundTrip) {
  auto corpus = builtin_corpus();
  EXPECT_GE(corpus.size(), 18u);
  Json arr = Json::array();
  for (const auto& g : corpus) {
    EXPECT_NO_THROW(g.validate()) << g.name;
    arr.push_back(to_json(g));
  }
  auto back = corpus_from_json(Json::parse(arr.dump()));
  ASSERT_EQ(back.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(back[i].name, corpus[i].name);
    EXPECT_EQ(back[i].f_list, corpus[i].f_list);
    EXPECT_EQ(back[i].expected, corpus[i].expected);
    EXPECT_EQ(back[i].tags, corpus[i].tags);
  }
}

TEST(Corpus, RejectsMalformedRecords) {
  auto bad = [](const std::string& text) { return corpus_from_json(Json::parse(text)); };
  EXPECT_THROW(bad(R"({"name":"a"})"), std::invalid_argument);
  EXPECT_THROW(bad(R"([{"name":"a","vars":[],"phi":"x","f_list":[]}])"), std::invalid_argument);
  EXPECT_THROW(bad(R"([{"name":"a","vars":["x","x"],"phi":"x","f_list":[]}])"), std::invalid_argument);
  EXPECT_THROW(bad(R"([{"name":"a","vars":["1x"],"phi":"x","f_list":[]}])"), std::invalid_argument);
  EXPECT_THROW(bad(R"([{"name":"a","vars":["x"],"phi":"q^2","f_list":[]}])"), ParseError);
  EXPECT_THROW(bad(R"([{"name":"a","vars":["x"],"phi":"x^2","f_list":[],"expected":{"nu":1}}])"),
               std::invalid_argument);
  EXPECT_THROW(bad(R"([{"name":"a","vars":"x","phi":"x^2","f_list":[]}])"), std::invalid_argument);
}

TEST(ParallelMap, KeepsInputOrderAndRethrows) {
  auto v = cli::parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  EXPECT_THROW(cli::parallel_map<int>(10, 3,
                                      [](std::size_t i) {
                                        if (i == 6) throw std::runtime_error("boom");
                                        return 0;
                                      }),
               std::runtime_error);
}

TEST(Cli, ReportCusp) {
  auto r = run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["br_direct"], 2);
  EXPECT_EQ(j["routes_agree"], true);
  EXPECT_EQ(j["seed"], kDefaultSeed);
  for (const auto& [label, ok] : j["oracle_agreement"].items()) EXPECT_TRUE(ok.get<bool>()) << label;
}

TEST(Cli, ReportNotFinitelyDeterminedIsNotAnError) {
  auto r = run_cli({"report", "--vars", "x,y", "--phi", "x*y", "--f", "x"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["finitely_determined"], false);
}

TEST(Cli, ReportsAreByteIdenticalAcrossRuns) {
  std::vector<std::string> args{"report", "--vars", "x,y", "--phi", "x^5+y^5+x^2*y^2", "--f", "x-y", "--seed", "5"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  auto a = run_cli({"corpus", "--jobs", "1"}), b = run_cli({"corpus", "--jobs", "4"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SeedChangesOnlyThePolarDraw) {
  auto a = Json::parse(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y", "--seed", "1"}).out);
  auto b = Json::parse(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y", "--seed", "2"}).out);
  EXPECT_EQ(a["seed"], 1);
  EXPECT_EQ(a["polar_mult"], b["polar_mult"]);
  EXPECT_EQ(a["br_direct"], b["br_direct"]);
}

TEST(Cli, TimingsOnlyWhenRequested) {
  auto plain = Json::parse(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y"}).out);
  auto timed = Json::parse(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y", "--timings"}).out);
  EXPECT_FALSE(plain.contains("timings_ms"));
  ASSERT_TRUE(timed.contains("timings_ms"));
  EXPECT_TRUE(timed["timings_ms"].contains("br_direct"));
}

TEST(Cli, TextFormat) {
  auto r = run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("br_direct"), std::string::npos);
  EXPECT_NE(r.out.find("routes_agree              true"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"report", "--vars", "x,y", "--phi", "x^3+", "--f", "y"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--vars", "x,y", "--phi", "x^3+w", "--f", "y"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y+1"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--vars", "x,y", "--phi", "x^3+y^2"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--vars", "x,x", "--phi", "x^3", "--f", "x"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--vars", "x,y", "--phi", "x^3", "--f", "y", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--corpus", "/nonexistent/corpus.json"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--corpus", temp_file("broken.json", "[{")}).code, 2);
  EXPECT_EQ(run_cli({"tau-routes", "--vars", "x,y", "--phi", "x^3+y^2", "--p", "x^2"}).code, 2);
  EXPECT_EQ(run_cli({"tau-routes", "--vars", "x,y", "--phi", "x^2"}).code, 2);
}

TEST(Cli, VerifyOnPassingCorpusFile) {
  auto path = temp_file("good.json", R"([
    {"name":"cusp","vars":["x","y"],"phi":"x^3+y^2","f_list":["y","3*x+5*y"],
     "expected":{"mu_X":2,"tau_X":2,"polar_mult":3},"tags":["ADE","weighted-homogeneous","curve"]},
    {"name":"T","vars":["x","y"],"phi":"x^5+y^5+x^2*y^2","f_list":["x+2*y","x-y","y+x^2"],
     "expected":{"mu_X":11,"tau_X":10}}
  ])");
  auto r = run_cli({"verify", "--corpus", path, "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(", 0 failed"), std::string::npos);
}

TEST(Cli, VerifyReportsFailedExpectation) {
  auto path = temp_file("wrong.json", R"([
    {"name":"cusp","vars":["x","y"],"phi":"x^3+y^2","f_list":["y"],"expected":{"tau_X":3}}
  ])");
  auto r = run_cli({"verify", "--corpus", path});
  EXPECT_EQ(r.code, 1);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 1);
  EXPECT_EQ(run_cli({"corpus", "--corpus", path}).code, 1);
}

TEST(Cli, VerifyBuiltinFailsOnlyOnLinearTjurinaRoutes) {
  auto r = run_cli({"verify", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = Json::parse(r.out);
  EXPECT_GT(j["total"].get<int>(), 500);
  for (const auto& c : j["checks"])
    if (!c["passed"].get<bool>()) {
      EXPECT_EQ(c["property"], "tjurina-linear") << c.dump();
    }
}

TEST(Cli, TauRoutes) {
  auto r = run_cli({"tau-routes", "--vars", "x,y", "--phi", "x^5+y^5+x^2*y^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["tau_X"], 10);
  EXPECT_EQ(j["theta_quotient"], 10);
  EXPECT_EQ(j["linear_routes"].size(), 3u);
  auto xy = run_cli({"tau-routes", "--vars", "x,y", "--phi", "x*y", "--p", "x+y", "--p", "x"});
  EXPECT_EQ(xy.code, 1);
  auto jx = Json::parse(xy.out);
  EXPECT_EQ(jx["linear_routes"][0]["value"], 1);
  EXPECT_EQ(jx["linear_routes"][1]["value"], 0);
}

TEST(Cli, OracleCheck) {
  auto single = run_cli({"oracle-check", "--vars", "x,y", "--phi", "x^3+y^2", "--f", "y"});
  ASSERT_EQ(single.code, 0) << single.out;
  EXPECT_EQ(Json::parse(single.out)["total"], 9);
  auto corpus = run_cli({"oracle-check"});
  EXPECT_EQ(corpus.code, 0);
  EXPECT_EQ(Json::parse(corpus.out)["failed"], 0);
}
