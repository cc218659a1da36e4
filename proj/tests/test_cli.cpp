#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sgasket/cli.hpp"
#include "sgasket/code.hpp"
#include "sgasket/sampling.hpp"

namespace fs = std::filesystem;
using sgasket::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sgasket_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("dist") {
  const Result r = invoke({"dist", "(012)", "(1)"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("5/7 (≈0.714286), k=1, route=P\n", 0) == 0);
  CHECK(r.out.find("sum_p=5/7 sum_edge=19/14") != std::string::npos);

  const Result tie = invoke({"dist", "000(2)", "0122(0)"});
  CHECK(tie.status == 0);
  CHECK(tie.out.rfind("7/16 ", 0) == 0);
  CHECK(tie.out.find("route=TIE") != std::string::npos);

  const Result bad = invoke({"dist", "(0)", "(3)"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("MalformedCode at offset 1") != std::string::npos);
}

TEST_CASE("dist --json envelope") {
  const Result r = invoke({"dist", "012(02)", "(1)", "--json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "exact"});
  CHECK(j["command"] == "dist");
  CHECK(j["inputs"] == nlohmann::json::array({"01(20)", "(1)"}));
  CHECK(j["exact"] == true);
  CHECK(j["result"]["route"].is_string());
  CHECK(j["result"]["distance"].contains("num"));
  // Byte-identical on repeat.
  CHECK(invoke({"dist", "012(02)", "(1)", "--json"}).out == r.out);
}

TEST_CASE("canon, twin, coords") {
  CHECK(invoke({"canon", "012(02)"}).out == "01(20)\n");
  CHECK(invoke({"twin", "01(2)"}).out == "02(1)\n");
  const Result not_junction = invoke({"twin", "(0)"});
  CHECK(not_junction.status == 1);
  CHECK(not_junction.err.find("NotAJunction") != std::string::npos);
  const Result coords = invoke({"coords", "(01)"});
  CHECK(coords.status == 0);
  CHECK(coords.out.find("barycentric: (2/3, 1/3, 0)") != std::string::npos);

  for (std::uint64_t i = 0; i < 200; ++i) {
    sgasket::Rng rng = sgasket::sample_rng(71, i);
    const sgasket::Code c = sgasket::random_code(rng);
    const std::string text =
        sgasket::to_string(c.preperiod()) + "(" + sgasket::to_string(c.period()) + ")";
    std::string printed = invoke({"canon", text}).out;
    printed.pop_back();
    REQUIRE(sgasket::parse_code(printed) == sgasket::canonicalize(c));
    REQUIRE(invoke({"canon", printed}).out == printed + "\n");
  }
}

TEST_CASE("geodesic and oracle commands") {
  const Result g = invoke({"geodesic", "1(0)", "1(2)", "--depth", "5"});
  CHECK(g.status == 0);
  CHECK(g.out ==
        R"j({"route":"P","length":{"num":1,"den":2},"waypoints":["1(0)","1(2)"],"depth":5,"sub_ties":[]})j"
        "\n");
  CHECK(invoke({"geodesic", "(0)", "(0)", "--depth", "4"}).status == 1);
  CHECK(invoke({"geodesic", "000(2)", "0122(0)", "--depth", "1"}).status == 2);

  const Result o = invoke({"oracle", "(012)", "(1)", "--level", "10", "--json"});
  REQUIRE(o.status == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["result"]["within_tolerance"] == true);
  CHECK(invoke({"oracle", "(0)", "(1)", "--level", "15"}).status == 2);
}

TEST_CASE("check") {
  const Result r = invoke({"check", "--samples", "100", "--level", "8", "--seed", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("100/100 passed") != std::string::npos);

  CHECK(invoke({"check", "--samples", "0", "--level", "8", "--seed", "1"}).status == 2);

  const Result single = invoke({"check", "--samples", "60", "--level", "7", "--seed", "9", "--threads", "1"});
  const Result many = invoke({"check", "--samples", "60", "--level", "7", "--seed", "9", "--threads", "8"});
  CHECK(single.out == many.out);
  CHECK(single.out == invoke({"check", "--samples", "60", "--level", "7", "--seed", "9"}).out);
}

TEST_CASE("plot") {
  const fs::path path = scratch("g.svg");
  const Result r = invoke({"plot", "(012)", "(1)", "--depth", "8", "-o", path.string()});
  REQUIRE(r.status == 0);

  boost::property_tree::ptree tree;
  std::ifstream in(path);
  REQUIRE_NOTHROW(boost::property_tree::read_xml(in, tree));
  CHECK(tree.get<std::string>("svg.<xmlattr>.viewBox") == "0 0 1 0.8660254");
  bool found = false;
  for (const auto& [name, node] : tree.get_child("svg")) {
    if (name != "polyline") continue;
    found = true;
    CHECK(node.get<std::string>("<xmlattr>.data-distance") == "5/7");
    const std::string length = node.get<std::string>("<xmlattr>.data-length");
    const auto slash = length.find('/');
    const double value = std::stod(length.substr(0, slash)) / std::stod(length.substr(slash + 1));
    CHECK(std::abs(value - 5.0 / 7.0) <= 1.0 / 128);
  }
  CHECK(found);

  CHECK(invoke({"plot", "(0)", "(0)", "--depth", "4", "-o", scratch("same.svg").string()}).status == 1);
  const fs::path unwritable = scratch("missing_dir") / "nested" / "g.svg";
  CHECK(invoke({"plot", "(0)", "(1)", "--depth", "4", "-o", unwritable.string()}).status == 3);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"dist", "(0)"}).status == 2);
  CHECK(invoke({"--help"}).status == 0);
}
