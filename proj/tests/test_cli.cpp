#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "nilpoisson/cli.hpp"
#include "nilpoisson/json_io.hpp"

using namespace nilpoisson;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("solve") {
  auto j = run_json({"solve", "--n", "5", "--delta", "1", "--identity", "transposed", "--format", "json"});
  CHECK(j.at("free_count") == 4);
  CHECK(j.at("expected_family") == "TP1");
  CHECK(j.at("match").at("outcome") == "match");
  auto space = j.at("space").get<SolutionSpace>();
  CHECK(space.free.size() == 4);

  auto z = run_json({"solve", "--n", "5", "--delta", "1/2", "--identity", "delta_poisson"});
  CHECK(z.at("space").at("free").empty());
  CHECK(z.at("space").at("basis").empty());

  auto human = run({"solve", "--n", "3", "--delta", "0", "--format", "human"});
  CHECK(human.code == 0);
  CHECK(human.out.find("e_1 · e_1 = e_2") != std::string::npos);
  CHECK(human.out.find("[e_1, e_2] = p1 e_1 + p2 e_2 + p3 e_3") != std::string::npos);
}

TEST_CASE("fan-out keeps job order") {
  auto j = run_json({"solve", "--n", "6,5", "--delta", "3,0"});
  REQUIRE(j.size() == 4);
  std::vector<std::pair<int, std::string>> keys;
  for (const auto& x : j) keys.emplace_back(x.at("space").at("n").get<int>(), x.at("space").at("delta").get<std::string>());
  CHECK(keys == std::vector<std::pair<int, std::string>>{{5, "0"}, {5, "3"}, {6, "0"}, {6, "3"}});
  CHECK(j[0].at("free_count") == 5);
  CHECK(j[3].at("free_count") == 3);
}

TEST_CASE("canon and iso") {
  auto c = run_json({"canon", "--family", "TP0", "--n", "5", "--delta", "0", "--alphas", "4,0,0,0,0"});
  CHECK(c.at("canonical").at("spec").at("alphas") == json({"1", "0", "0", "0", "0"}));
  CHECK(c.at("canonical").at("witness").at(0).at(0) == "1/2");
  auto cf = c.at("canonical").get<CanonicalForm>();
  CHECK(cf.witness.total.params()[0] == RadExt(rat(1, 2)));

  auto i = run({"iso", "--family", "TP0", "--n", "5", "--delta", "0", "--a", "4,0,0,0,0", "--b", "9,0,0,0,0"});
  CHECK(i.code == 0);
  CHECK(json::parse(i.out).at("result").at("decision") == "isomorphic");
  auto k = run({"iso", "--family", "TP0", "--n", "5", "--delta", "0", "--a", "0,0,7,0,0", "--b", "0,0,5,0,0"});
  CHECK(k.code == 0);
  CHECK(json::parse(k.out).at("result").at("decision") == "not_isomorphic");
  auto u = run({"iso", "--family", "TPdelta", "--n", "7", "--delta", "5/2", "--a", "1,1,0", "--b", "1,-1,0"});
  CHECK(u.code == 2);
  CHECK(json::parse(u.out).at("result").at("decision") == "inconclusive");
}

TEST_CASE("batch canonicalization is seeded") {
  std::vector<std::string> args = {"canon", "--family", "TP1", "--n", "6", "--delta", "1", "--batch", "12", "--seed", "4"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j.at("results").size() == 12);
  for (const auto& r : j.at("results")) CHECK(r.at("catalog_index").get<int>() >= 0);
  args.back() = "5";
  CHECK(run(args).out != a.out);
}

TEST_CASE("verify, catalog, discriminant") {
  auto v = run_json({"verify", "--family", "TPdelta", "--n", "5", "--delta", "delta"});
  REQUIRE(v.is_array());
  for (const auto& r : v) CHECK(r.at("all_zero") == true);
  auto law = run_json({"verify", "--family", "TPdelta", "--n", "5", "--delta", "delta", "--law"});
  CHECK(law.at("all_zero") == true);
  auto bad = run_json({"verify", "--family", "Dim4", "--n", "4", "--delta", "-4", "--alphas", "0,1,0,1", "--identity", "jacobi"});
  CHECK(bad.at("all_zero") == false);
  CHECK(bad.at("entries").at(0).at("value").at("text") == "-90");

  auto cat = run_json({"catalog", "--n", "2", "--delta", "0"});
  CHECK(cat.at("entries").size() == 3);
  auto d = run_json({"discriminant", "--n", "4"});
  CHECK(d.at("roots") == json({"0", "1", "2"}));
  CHECK(d.at("special_deltas") == json({"-4", "1", "3/2"}));
}

TEST_CASE("validation errors") {
  auto a = run({"solve", "--n", "5", "--delta", "1/0"});
  CHECK(a.code == 1);
  CHECK(a.err.find("malformed rational") != std::string::npos);
  auto b = run({"canon", "--family", "TP0", "--n", "5", "--alphas", "1,2"});
  CHECK(b.code == 1);
  CHECK(b.err.find("takes 5 parameters") != std::string::npos);
  auto c = run({"solve", "--n", "5", "--delta", "delta"});
  CHECK(c.code == 1);
  CHECK(c.err.find("unsupported mode") != std::string::npos);
  CHECK(run({"solve", "--n", "0"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"canon", "--family", "TP9", "--n", "5", "--alphas", "1,2,3,4,5"}).code == 1);
  CHECK(run({"canon", "--family", "Dim2", "--n", "2", "--delta", "1", "--alphas", "1,0"}).code == 1);
  setenv("NILPOISSON_MAX_N", "6", 1);
  auto d = run({"solve", "--n", "7"});
  unsetenv("NILPOISSON_MAX_N");
  CHECK(d.code == 1);
  CHECK(d.err.find("NILPOISSON_MAX_N") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--n", "5,6", "--delta", "0,1,2,3"},
           {"canon", "--family", "TPdelta", "--n", "7", "--delta", "5/2", "--alphas", "2,3,1"},
           {"catalog", "--n", "4,5", "--delta", "1,3/2"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
