#include "compcov/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace compcov;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir() {
  std::random_device rd;
  const fs::path p = fs::temp_directory_path() / ("compcov-cli-" + std::to_string(rd()));
  fs::remove_all(p);
  return p;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ranges") {
  CHECK(cli::parse_range("100:1400:100").size() == 14);
  CHECK(cli::parse_range("3:5") == std::vector<int>{3, 4, 5});
  CHECK(cli::parse_range("5,11,21,51") == std::vector<int>{5, 11, 21, 51});
  CHECK(cli::parse_range("7") == std::vector<int>{7});
  CHECK_THROWS_AS(cli::parse_range(""), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("5:3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("1:5:0"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("3,3"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("4,2"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("0,2"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("1,x"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("1:2:3:4"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_range("2", 3), cli::UsageError);
}

TEST_CASE("rho rows") {
  const auto r = run({"rho", "--ensembles", "pinned,solus", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,pinned,solus\n100,-0.445112,-0.525562\n");
  const auto all = run({"rho", "--n", "100"});
  CHECK(all.out == "n,unconstrained,pinned-solus,pinned,solus\n100,-0.441772,-0.530911,-0.445112,-0.525562\n");
}

TEST_CASE("rho failures") {
  const auto degenerate = run({"rho", "--n", "2"});
  CHECK(degenerate.code == cli::kComputation);
  CHECK(degenerate.err.find("zero variance") != std::string::npos);
  CHECK(run({"rho", "--n", "5:3"}).code == cli::kUsage);
  CHECK(run({"rho"}).code == cli::kUsage);
  CHECK(run({"rho", "--n", "4", "--ensembles", "bogus"}).code == cli::kUsage);
  CHECK(run({"rho", "--n", "4", "--ensembles", "solus,solus"}).code == cli::kUsage);
  CHECK(run({"rho", "--n", "4", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"rho", "--n", "4", "--digits", "0"}).code == cli::kUsage);
  CHECK(run({"rho", "--n", "700", "--method", "recursion"}).code == cli::kComputation);
  CHECK(run({"rho", "--n", "30", "--method", "recursion", "--recursion-cap", "20"}).code == cli::kComputation);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("help and version") {
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("rho") != std::string::npos);
  const auto version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find(COMPCOV_VERSION) != std::string::npos);
}

TEST_CASE("sequences") {
  CHECK(run({"sequence", "exy-bitstring", "--ensemble", "unconstrained", "--count", "10"}).out ==
        "0,2,11,40,122,338,881,2202,5337,12634\n");
  CHECK(run({"sequence", "exy-composition", "--family", "one-free", "--count", "12"}).out ==
        "0,2,3,8,17,34,70,131,255,466,868,1565\n");
  CHECK(run({"sequence", "exy-bitstring", "--ensemble", "pinned-solus", "--count", "3"}).out == "0,0,1\n");
  CHECK(run({"sequence", "size", "--ensemble", "solus", "--count", "5"}).out == "2,3,5,8,13\n");
  CHECK(run({"sequence", "size", "--family", "one-free", "--count", "8"}).out == "0,1,1,2,3,5,8,13\n");
  CHECK(run({"sequence", "exy-composition", "--ensemble", "solus"}).code == cli::kUsage);
  CHECK(run({"sequence", "nonsense"}).code == cli::kUsage);
  CHECK(run({"sequence", "size", "--count", "0"}).code == cli::kUsage);
  const auto js = nlohmann::json::parse(
      run({"sequence", "exy-composition", "--family", "unrestricted", "--count", "5", "--format", "json"}).out);
  CHECK(js["rows"].size() == 5);
  CHECK(js["rows"][4]["value"] == "115");
  CHECK(js["rows"][4]["N"] == 5);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--max-n", "14"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "OK: 4 ensembles × 14 lengths × {table, moments, bijection}\n");
  const auto capped = run({"verify", "--max-n", "30"});
  CHECK(capped.code == cli::kComputation);
  CHECK(capped.err.find("capped") != std::string::npos);
  const auto vacuous = run({"verify", "--max-n", "0"});
  CHECK(vacuous.code == 0);
  CHECK(vacuous.out.rfind("OK: 4 ensembles × 0 lengths", 0) == 0);
  CHECK(run({"verify", "--max-n", "-1"}).code == cli::kUsage);
}

TEST_CASE("moments") {
  const auto r = run({"moments", "--family", "unrestricted", "--N", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"N,n,size,m,s2,mu,sigma2,exy_numerator,covariance",
                                                 "5,4,16,2,1,27/16,247/256,40,-7/8"});
  const auto js = nlohmann::json::parse(run({"moments", "--family", "one-free", "--N", "7", "--format", "json"}).out);
  CHECK(js["meta"]["command"] == "moments");
  CHECK(js["meta"]["version"] == COMPCOV_VERSION);
  CHECK(js["rows"][0]["m"] == "5/4");
  CHECK(js["rows"][0]["s2"] == "7/16");
  CHECK(js["rows"][0]["mu"] == "13/4");
  CHECK(js["rows"][0]["sigma2"] == "27/16");
  CHECK(js["rows"][0]["covariance"] == "-13/16");
  const auto by_length = run({"moments", "--ensemble", "pinned", "--n", "3"});
  CHECK(by_length.code == 0);
  CHECK(lines(by_length.out)[0] == "n,size,m,s2,mu,sigma2,exy_numerator,covariance");
  CHECK(run({"moments", "--family", "unrestricted", "--n", "4"}).code == cli::kUsage);
  CHECK(run({"moments", "--family", "unrestricted", "--N", "4", "--ensemble", "solus"}).code == cli::kUsage);
  CHECK(run({"moments", "--family", "one-free", "--N", "1"}).code == cli::kComputation);
}

TEST_CASE("asymptotics") {
  const auto r = run({"asymptotics", "--family", "one-free", "--n", "50,60", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto js = nlohmann::json::parse(r.out);
  CHECK(js["meta"]["conjectured"] == true);
  CHECK(js["rows"].size() == 2);
  CHECK(js["rows"][0]["conjectured"] == true);
  const auto u = run({"asymptotics", "--family", "unrestricted", "--n", "4"});
  CHECK(lines(u.out)[1].rfind("4,1.687500,2.687500,", 0) == 0);
  CHECK(lines(u.out)[1].find(",false") != std::string::npos);
  CHECK(run({"asymptotics", "--family", "unrestricted", "--n", "1"}).code == cli::kUsage);
}

TEST_CASE("probe") {
  const auto r = run({"probe", "--ensemble", "unconstrained", "--n", "100:400:100"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 5);
  CHECK(rows[0] == "n,rho,q");
  CHECK(rows[1].rfind("100,-0.441772,-20.21", 0) == 0);
  CHECK(run({"probe", "--ensemble", "solus", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("accelerate") {
  const auto constant = run({"accelerate", "--transform", "levin-u"}, "n,value\n1,3.5\n2,3.5\n3,3.5\n");
  CHECK(constant.code == 0);
  CHECK(constant.out == "method,value,error_estimate\nlevin-u,3.500000,0.000000\n");

  // rho output pipes straight in.
  const auto rho = run({"rho", "--ensembles", "unconstrained", "--n", "100:800:100"});
  const auto piped = run({"accelerate", "--from-rho", "--format", "json"}, rho.out);
  REQUIRE(piped.code == 0);
  const auto js = nlohmann::json::parse(piped.out);
  CHECK(js["meta"]["label"] == "extrapolated, conjecture-conditional");
  CHECK(js["rows"].size() == 4);
  CHECK(js["rows"][3]["method"] == "median");
  const auto direct =
      nlohmann::json::parse(run({"accelerate", "--ensemble", "unconstrained", "--n", "100:800:100", "--format", "json"}).out);
  // Piped correlations carry six decimals only.
  const double from_pipe = std::stod(js["rows"][1]["value"].get<std::string>());
  CHECK(std::stod(direct["rows"][1]["value"].get<std::string>()) == doctest::Approx(from_pipe).epsilon(1e-4));
  CHECK(direct["meta"]["negative"] == true);

  const auto column = run({"accelerate", "--from-rho", "--column", "solus", "--transform", "wynn-epsilon"},
                          "n,pinned,solus\n100,-0.445112,-0.525562\n200,-0.36,-0.44\n");
  CHECK(column.code == 0);
  CHECK(run({"accelerate", "--column", "x"}, "n,v\n1,2\n").code == cli::kUsage);
  CHECK(run({"accelerate"}, "n,v\n1,abc\n").code == cli::kUsage);
  CHECK(run({"accelerate"}, "n,v\n1,2\n2,3\n").code == cli::kComputation);
  CHECK(run({"accelerate", "--transform", "richardson", "--order", "1"}, "2,1\n1,1\n").code == cli::kComputation);
  CHECK(run({"accelerate", "--input", "/nonexistent/file.csv"}).code == cli::kUsage);
}

TEST_CASE("table output") {
  const auto csv = run({"table", "--ensemble", "unconstrained", "--n", "3"});
  CHECK(csv.out == "x,y,count\n0,0,1\n1,1,3\n2,1,1\n2,2,2\n3,3,1\n");
  const auto js = nlohmann::json::parse(run({"table", "--ensemble", "pinned-solus", "--n", "3", "--format", "json"}).out);
  CHECK(js["format"] == "compcov.table");
  CHECK(js["entries"] == nlohmann::json::parse(R"([[2,1,"1"],[3,3,"1"]])"));
  CHECK(run({"table", "--ensemble", "solus", "--n", "8", "--method", "gap"}).out ==
        run({"table", "--ensemble", "solus", "--n", "8", "--method", "recursion"}).out);
}

TEST_CASE("cache keeps output byte-identical and survives corruption") {
  const auto dir = fresh_dir();
  const std::vector<std::string> args = {"rho", "--n", "50,60,70", "--cache-dir", dir.string(), "--format", "json"};
  const auto plain = run({"rho", "--n", "50,60,70", "--format", "json"});
  const auto cold = run(args);
  CHECK(cold.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 12);
  const auto warm = run(args);
  // The cache directory is not echoed, so cached and uncached runs match.
  CHECK(cold.out == plain.out);
  CHECK(warm.out == cold.out);

  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto size = fs::file_size(entry.path());
    fs::resize_file(entry.path(), size / 3);
  }
  const auto repaired = run(args);
  CHECK(repaired.code == 0);
  CHECK(repaired.out == cold.out);
  const auto again = run(args);
  CHECK(again.out == cold.out);

  const auto tdir = fresh_dir();
  const std::vector<std::string> targs = {"table", "--ensemble", "pinned", "--n", "9", "--cache-dir", tdir.string()};
  const auto t1 = run(targs);
  const auto t2 = run(targs);
  CHECK(t1.out == t2.out);
  CHECK(fs::exists(tdir / (std::string("table-pinned-n9-v") + COMPCOV_VERSION + "-recursion.json")));
  fs::remove_all(dir);
  fs::remove_all(tdir);
}

TEST_CASE("cache directory from the environment") {
  const auto dir = fresh_dir();
  ::setenv("COMPCOV_CACHE_DIR", dir.string().c_str(), 1);
  CHECK(run({"moments", "--ensemble", "solus", "--n", "12"}).code == 0);
  ::unsetenv("COMPCOV_CACHE_DIR");
  CHECK(fs::exists(dir / (std::string("sums-solus-n12-v") + COMPCOV_VERSION + "-recursion.json")));
  fs::remove_all(dir);
}

}
