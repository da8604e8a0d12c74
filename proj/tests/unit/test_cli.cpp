#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tamari/cli.hpp"
#include "tamari/io.hpp"

using namespace tamari;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  std::vector<Json> lines() const {
    std::vector<Json> docs;
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line)) docs.push_back(Json::parse(line));
    return docs;
  }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run two = run({"enumerate", "--size", "2"});
  CHECK(two.code == kExitOk);
  const auto docs = two.lines();
  REQUIRE(docs.size() == 4);
  CHECK(docs.back() == Json{{"count", 3}, {"family", "all"}, {"size", 2}});
  for (std::size_t i = 0; i + 1 < docs.size(); ++i) {
    CHECK(docs[i].contains("poset"));
    CHECK(docs[i].contains("interval"));
  }

  const auto exceptional = run({"enumerate", "--size", "3", "--family", "exceptional"}).lines();
  CHECK(exceptional.back()["count"] == 12);
  CHECK(exceptional.size() == 13);
  CHECK(run({"enumerate", "--size", "3", "--family", "new"}).lines().back()["count"] == 3);
  CHECK(run({"enumerate", "--size", "4", "--family", "modern"}).lines().back()["count"] == 56);
  CHECK(run({"enumerate", "--size", "4", "--family", "infmodern"}).lines().back()["count"] == 55);
  CHECK(run({"enumerate", "--size", "3", "--family", "nct"}).lines().back()["count"] == 12);
  CHECK(run({"enumerate", "--size", "4", "--family", "ncp"}).lines().back()["count"] == 14);
  CHECK(run({"enumerate", "--size", "1", "--family", "new"}).lines().back()["count"] == 1);
}

TEST_CASE("enumerate rejects sizes past the bound") {
  const Run r = run({"enumerate", "--size", "7"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(run({"enumerate", "--size", "0"}).code == kExitUsage);
  CHECK(run({"enumerate", "--size", "2", "--family", "odd"}).code == kExitUsage);
  CHECK(run({"--bound", "7", "enumerate", "--size", "7", "--family", "nct"}).lines().back()["count"] ==
        7752);
}

TEST_CASE("TAMARI_MAX_SIZE raises the default bound") {
  ::setenv(kMaxSizeEnv, "7", 1);
  const Run r = run({"enumerate", "--size", "7", "--family", "ncp"});
  ::unsetenv(kMaxSizeEnv);
  CHECK(r.code == kExitOk);
  CHECK(r.lines().back()["count"] == 429);

  ::setenv(kMaxSizeEnv, "seven", 1);
  const Run bad = run({"enumerate", "--size", "2"});
  ::unsetenv(kMaxSizeEnv);
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--input", R"({"size":3,"inc":[[2,3]],"dec":[[2,1]]})"});
  CHECK(r.code == kExitOk);
  const auto docs = r.lines();
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["exceptional"] == false);
  CHECK(docs[0]["modern"] == true);
  CHECK(docs[0]["ir"] == 2);
  CHECK(docs[0]["dr"] == 2);

  const Run stream = run({"classify"}, "{\"size\":2,\"inc\":[],\"dec\":[]}\n\n"
                                       "{\"lower\":\"(L (L L))\",\"upper\":\"(L (L L))\"}\n");
  CHECK(stream.lines().size() == 2);
  CHECK(run({"classify", "--size", "3"}).lines().size() == 13);
  CHECK(run({"classify"}, "").code == kExitUsage);
  CHECK(run({"classify"}, "{not json\n").code == kExitUsage);
}

TEST_CASE("convert") {
  const Run up = run({"convert", "--from", "poset", "--to", "interval", "--input",
                      R"({"size":3,"inc":[[2,3]],"dec":[[2,1]]})"});
  CHECK(up.code == kExitOk);
  const Json interval = up.lines().at(0);
  CHECK(tree_from_json(interval["lower"]) == parse_tree("((L (L L)) L)"));
  CHECK(tree_from_json(interval["upper"]) == parse_tree("(L ((L L) L))"));

  const Run back = run({"convert", "--from", "interval", "--to", "poset", "--input", interval.dump()});
  CHECK(back.lines().at(0) == parse_json(R"({"size":3,"inc":[[2,3]],"dec":[[2,1]]})"));

  const Run nct = run({"convert", "--from", "poset", "--to", "nct", "--input",
                       R"({"size":2,"inc":[[1,2]],"dec":[]})"});
  CHECK(nct.code == kExitOk);
  const Run again = run({"convert", "--from", "nct", "--to", "poset", "--input", nct.lines().at(0).dump()});
  CHECK(again.lines().at(0) == parse_json(R"({"size":2,"inc":[[1,2]],"dec":[]})"));

  const Run tree = run({"convert", "--from", "ncp", "--to", "tree", "--input",
                        R"({"n":8,"blocks":[[1,2,7],[3,4],[5,6],[8]]})"});
  CHECK(tree_from_json(tree.lines().at(0)["tree"]) == parse_tree("((L (L (((L (L L)) (L L)) L))) L)"));
}

TEST_CASE("convert errors") {
  const Run not_exceptional = run({"convert", "--from", "poset", "--to", "nct", "--input",
                                   R"({"size":3,"inc":[[2,3]],"dec":[[2,1]]})"});
  CHECK(not_exceptional.code == kExitUsage);
  CHECK(not_exceptional.err.find("NotExceptional") != std::string::npos);

  const Run not_interval = run({"convert", "--from", "interval", "--to", "poset", "--input",
                                R"j({"lower":"(L (L L))","upper":"((L L) L)"})j"});
  CHECK(not_interval.code == kExitUsage);
  CHECK(not_interval.err.find("NotAnInterval") != std::string::npos);

  CHECK(run({"convert", "--from", "poset", "--to", "tree", "--input", "{}"}).code == kExitUsage);
  CHECK(run({"convert", "--from", "poset", "--to", "banana"}).code == kExitUsage);
  CHECK(run({"convert", "--from", "poset", "--to", "interval", "--input", "[1,"}).code == kExitUsage);
}

TEST_CASE("census") {
  const Run r = run({"census", "--max-size", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("size,family,count,formula,match\n", 0) == 0);
  CHECK(r.out.find("3,intervals,13,13,true") != std::string::npos);
  const Run j = run({"census", "--max-size", "2", "--format", "json"});
  CHECK(Json::parse(j.out).is_array());
  CHECK(run({"census", "--max-size", "9"}).code == kExitUsage);
}

TEST_CASE("verify and fault injection") {
  const Run ok = run({"verify", "--max-size", "3"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("checks passed up to size 3") != std::string::npos);

  const Run bad = run({"verify", "--max-size", "3", "--override-golden", "intervals:3=14"});
  CHECK(bad.code == kExitVerificationFailed);
  CHECK(bad.out.find("FAIL census n=3") != std::string::npos);
  CHECK(bad.out.find("14") != std::string::npos);

  CHECK(run({"verify", "--override-golden", "intervals=3"}).code == kExitUsage);
  CHECK(run({"verify", "--override-golden", "widgets:3=1"}).code == kExitUsage);
}

TEST_CASE("export") {
  const std::string fig = R"j({"lower":"((L ((L L) (L L))) ((L (L L)) L))",)j"
                          R"j("upper":"((L ((L L) (L L))) ((L (L L)) L))"})j";
  const Run dot = run({"export", "--format", "dot", "--input", fig});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out == arc_diagram_dot(from_interval(interval_from_json(parse_json(fig)))));

  const Run hasse = run({"export", "--format", "dot", "--diagram", "hasse", "--input", fig});
  CHECK(hasse.out.rfind("digraph hasse", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "tamari_cli_export_test.csv";
  const Run file = run({"export", "--format", "csv", "--census", "2", "-o", path.string()});
  CHECK(file.code == kExitOk);
  CHECK(file.out.empty());
  std::ifstream is(path);
  std::stringstream body;
  body << is.rdbuf();
  CHECK(body.str().rfind("size,family,count,formula,match\n", 0) == 0);
  std::filesystem::remove(path);

  const Run unwritable = run({"export", "--format", "csv", "--census", "2", "-o",
                              "/nonexistent-dir/x/out.csv"});
  CHECK(unwritable.code == kExitUsage);
  CHECK(unwritable.err.find("cannot write") != std::string::npos);

  CHECK(run({"export", "--format", "csv", "--input", fig}).code == kExitUsage);
  CHECK(run({"export", "--format", "dot", "--census", "2"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
