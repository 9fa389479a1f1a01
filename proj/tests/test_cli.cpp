#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "kunzlab/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kunzlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kunzlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count emits JSON with a stable layout") {
  const Run r = run({"count", "--f", "29", "--m", "10"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["count"] == "2249");
  CHECK(j["query"]["f"] == 29);
  CHECK(j["query"]["m"] == 10);
  CHECK(j.begin().key() == "command");
  CHECK(nlohmann::json::parse(run({"count", "--f", "5"}).out)["count"] == "5");
  CHECK(run({"count", "--f", "5", "--format", "csv"}).out == "query,count\nf=5,5\n");
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::string> q = {"count", "--f", "27"};
  std::string first;
  for (const char* t : {"1", "4", "16"}) {
    auto args = q;
    args.push_back("--threads");
    args.push_back(t);
    const Run r = run(args);
    CHECK(r.code == 0);
    if (first.empty()) first = r.out;
    CHECK(r.out == first);
  }
  const Run meta = run({"count", "--f", "10", "--meta", "--threads", "2"});
  CHECK(nlohmann::json::parse(meta.out)["meta"]["workers"] == 2);
}

TEST_CASE("usage errors exit with 2 and name the flag") {
  Run r = run({"count", "--bogus", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = run({"count"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--f") != std::string::npos);
  r = run({"count", "--f", "5", "--format", "xml"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--format") != std::string::npos);
  r = run({"count", "--m", "4", "--ell", "3", "--depth", "2"});
  CHECK(r.code == 2);
  r = run({"count", "--ell", "3", "--stressed"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--depth") != std::string::npos);
  CHECK(run({"plot", "nothing"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--help"}).code == 0);
}

TEST_CASE("enumerate lists words in order") {
  const Run r = run({"enumerate", "--f", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["words"] == nlohmann::json::array({"1,1,1,1", "2,1"}));
  const Run csv = run({"enumerate", "--f", "4", "--format", "csv", "--limit", "1"});
  CHECK(csv.out == "word,multiplicity,genus,frobenius\n\"1,1,1,1\",5,4,4\n");
}

TEST_CASE("figure data") {
  const Run ratio = run({"plot", "table1-ratio"});
  REQUIRE(ratio.code == 0);
  CHECK(ratio.out.find("\n2,0.333333\n") != std::string::npos);
  const Run scatter = run({"plot", "fm-scatter"});
  CHECK(scatter.out.find("\n29,10,2.900000,2.163") != std::string::npos);
  const Run growth = run({"plot", "growth", "--x-min", "1", "--x-max", "3", "--step", "1"});
  CHECK(growth.out == "x,rate\n1.0000,1.000000\n2.0000,2.000000\n3.0000,2.449490\n");
}

TEST_CASE("constants, distributions, tables") {
  const auto c0 = nlohmann::ordered_json::parse(run({"constants", "--which", "c0"}).out);
  CHECK(c0["decimal_lower"] == "1.2606");
  CHECK(c0["decimal_upper"] == "1.3919");
  std::vector<std::string> keys;
  for (const auto& [k, v] : c0.items()) keys.push_back(k);
  CHECK(std::find(keys.begin(), keys.end(), "lower_num") != keys.end());
  const Run dist = run({"dist", "mult", "--f", "6", "--format", "csv"});
  CHECK(dist.out.rfind("key,count,probability_num,probability_den\n", 0) == 0);
  const Run genus = run({"dist", "genus", "--f", "6"});
  CHECK(nlohmann::json::parse(genus.out)["total"] == "4");
  const Run table = run({"table", "stressed3", "--max", "6"});
  CHECK(table.out.find("6,96,match") != std::string::npos);
  const Run fm = run({"table", "fm", "--max", "9"});
  CHECK(fm.out.find("\n9,8,1,1\n") != std::string::npos);
  CHECK(fm.out.find("\n9,5,8,\n") != std::string::npos);
}

TEST_CASE("hom and bounds") {
  const auto h = nlohmann::json::parse(run({"hom", "--d", "2", "--q", "3"}).out);
  CHECK(h["bound"] == "216");
  const auto b = nlohmann::json::parse(run({"bounds", "--ell", "5"}).out);
  CHECK(b["stressed3"]["count"] == "50");
  CHECK(run({"bounds"}).code == 2);
}

TEST_CASE("verify reports failures through the exit code") {
  const Run r = run({"verify", "--suite", "med"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS criterion 5", 0) == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}
