#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "framecurv/cli.hpp"

using namespace framecurv;
using nlohmann::json;

namespace {

const char* const kAds = R"j({
  "vars": ["phi", "theta"],
  "domain": {"phi": [0, 6.2832], "theta": [-1.5, 1.5]},
  "frame": {"X1": ["1/cosh(theta)", "0"], "X2": ["0", "1"]},
  "metric": {"a11": -1, "a12": 0, "a22": 1}
})j";

std::string with(std::string src, const std::string& from, const std::string& to) {
  const auto pos = src.find(from);
  REQUIRE(pos != std::string::npos);
  return src.replace(pos, from.size(), to);
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("framecurv-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_input accepts well-formed manifolds") {
  const cli::ManifoldInput ads = cli::parse_input(kAds);
  CHECK(ads.lorentzian());
  CHECK(ads.frame.chart.vars[1] == "theta");
  CHECK(ads.frame.chart.domain[0].hi == 6.2832);
  CHECK(ads.metric.a11 == -1.0);

  const auto riem = cli::parse_input(with(kAds, R"("a11": -1)", R"("a11": 1)"));
  CHECK_FALSE(riem.lorentzian());

  const auto sym = cli::parse_input(with(kAds, R"("a12": 0)", R"("a12": 0.5, "a21": 0.5)"));
  CHECK(sym.metric.a12 == 0.5);
}

TEST_CASE("parse_input rejects malformed manifolds") {
  CHECK_THROWS_AS(cli::parse_input(with(kAds, R"("a22": 1)", R"("a22": 0)")), InputError);
  CHECK_THROWS_AS(cli::parse_input(with(kAds, R"("a12": 0)", R"("a12": 0, "a21": 1)")), InputError);
  CHECK_THROWS_AS(cli::parse_input(with(kAds, R"("metric")", R"("extra": 1, "metric")")), InputError);
  CHECK_THROWS_AS(cli::parse_input("{\"vars\": ["), InputError);
  CHECK_THROWS_AS(cli::parse_input(with(kAds, R"("theta": [-1.5, 1.5])", R"("theta": [1.5, -1.5])")),
                  InputError);
  CHECK_THROWS_AS(cli::parse_input(with(kAds, R"(["phi", "theta"])", R"(["phi", "phi"])")), InputError);

  try {
    (void)cli::parse_input(with(kAds, "1/cosh(theta)", "1/cosh(theta"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("frame.X1[0]") != std::string::npos);
    CHECK(msg.find("offset") != std::string::npos);
  }
}

TEST_CASE("compute reports every method") {
  TempFile in(kAds);
  const Outcome o = invoke({"compute", "-i", in.path(), "--method", "all", "--grid", "5"});
  REQUIRE(o.code == cli::kOk);
  const json r = o.report();
  CHECK(r["command"] == "compute");
  CHECK(r["points"].size() == 25);
  for (const char* m : {"closed", "pipeline", "oracle", "orthonormal", "orthogonal"}) {
    CAPTURE(m);
    REQUIRE(r["methods"].contains(m));
    for (const auto& v : r["methods"][m]["values"]) CHECK(std::abs(v.get<double>() + 1.0) <= 1e-8);
  }
  CHECK(r["agreement"].get<double>() <= 1e-8);
  CHECK(r["diagnostics"].empty());

  const Outcome a11 = invoke({"compute", "-i", in.path(), "--method", "orthogonal-a11", "--grid", "3"});
  REQUIRE(a11.code == cli::kOk);
  CHECK(a11.report()["diagnostics"].size() == 1);
  CHECK(a11.err.find("warning") != std::string::npos);

  const Outcome single = invoke({"compute", "-i", in.path(), "--at", "phi=1,theta=0.5"});
  REQUIRE(single.code == cli::kOk);
  CHECK(single.report()["points"].size() == 1);
}

TEST_CASE("check, classify and simplify") {
  TempFile ads(kAds);
  const Outcome c = invoke({"check", "-i", ads.path(), "--samples", "30"});
  REQUIRE(c.code == cli::kOk);
  CHECK(c.report()["passed"] == true);

  const Outcome k = invoke({"classify", "-i", ads.path()});
  REQUIRE(k.code == cli::kOk);
  CHECK(k.report()["kind"] == "AntiDeSitter");
  CHECK(k.report()["kValue"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));

  TempFile nc(with(kAds, "1/cosh(theta)", "1/(1 + theta^2)"));
  CHECK(invoke({"classify", "-i", nc.path()}).report()["kind"] == "NonConstant");

  const Outcome s = invoke({"simplify", "-i", ads.path()});
  REQUIRE(s.code == cli::kOk);
  CHECK(s.report()["K"].is_string());
  CHECK(s.report()["nodes"].get<int>() > 0);
}

TEST_CASE("exit codes") {
  TempFile ads(kAds);
  CHECK(invoke({"compute", "-i", "/nonexistent/framecurv.json"}).code == cli::kInputError);
  CHECK(invoke({"compute"}).code == cli::kInputError);
  CHECK(invoke({"compute", "-i", ads.path(), "--method", "bogus"}).code == cli::kInputError);
  CHECK(invoke({"frobnicate"}).code == cli::kInputError);

  TempFile degenerate(with(kAds, R"("a22": 1)", R"("a22": 0)"));
  const Outcome d = invoke({"compute", "-i", degenerate.path()});
  CHECK(d.code == cli::kInputError);
  CHECK(d.report()["error"]["type"] == "input");

  TempFile singular(with(kAds, R"(["0", "1"])", R"j(["2/cosh(theta)", "0"])j"));
  CHECK(invoke({"compute", "-i", singular.path()}).code == cli::kInputError);

  // K involves log(x) on a domain that crosses x = 0.
  TempFile logx(R"j({"vars": ["x", "y"], "domain": {"x": [-1, 1], "y": [-1, 1]},
                   "frame": {"X1": ["1", "y*log(x)"], "X2": ["0", "1"]},
                   "metric": {"a11": -1, "a12": 0, "a22": 1}})j");
  const Outcome e = invoke({"compute", "-i", logx.path()});
  CHECK(e.code == cli::kDomainError);
  const json err = e.report()["error"];
  CHECK(err["type"] == "domain");
  CHECK(err["point"]["x"].get<double>() < 0.0);

  // Rounding differences between methods exceed an absurdly small tolerance.
  TempFile messy(R"j({"vars": ["x", "y"], "domain": {"x": [-0.5, 0.5], "y": [-0.5, 0.5]},
                    "frame": {"X1": ["1.3 + 0.7*x*y", "sin(0.4*x + 0.3*y)"], "X2": ["0.2*y^2", "cosh(0.6*x)"]},
                    "metric": {"a11": -1.7, "a12": 0.3, "a22": 0.9}})j");
  const Outcome f = invoke({"check", "-i", messy.path(), "--tol", "1e-300"});
  CHECK(f.code == cli::kCheckFailure);
  CHECK(f.report()["passed"] == false);
  CHECK(invoke({"check", "-i", messy.path()}).code == cli::kOk);
}

TEST_CASE("reports are deterministic") {
  TempFile ads(kAds);
  const std::vector<std::string> args{"check", "-i", ads.path(), "--seed", "7", "--samples", "10"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> grid{"compute", "-i", ads.path(), "--method", "all", "--grid", "4"};
  CHECK(invoke(grid).out == invoke(grid).out);
}
