#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "posetkit/constructors.hpp"
#include "posetkit/expr.hpp"
#include "posetkit/json_io.hpp"

using namespace posetkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + POSETKIT_CLI + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "posetkit-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

ErrorKind eval_kind(const std::string& text) {
  try {
    eval(parse(text));
  } catch (const PosetError& e) {
    return e.kind();
  }
  FAIL("no PosetError thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
  const auto e = parse("ksum(3, boolean(5))");
  CHECK(e.op == PosetExpr::Op::KSum);
  CHECK(e.ints == std::vector<int>{3});
  REQUIRE(e.args.size() == 1);
  CHECK(e.args[0].op == PosetExpr::Op::Boolean);
  CHECK(e.args[0].ints == std::vector<int>{5});
  CHECK(e.span.begin == 0);
  CHECK(e.span.end == 19);
  CHECK(e.args[0].span.begin == 8);

  const auto nested = parse("sigma_star(ksum(2, butterfly(5)))");
  CHECK(nested.op == PosetExpr::Op::SigmaStar);
  CHECK(nested.args[0].op == PosetExpr::Op::KSum);
  CHECK(nested.args[0].args[0].op == PosetExpr::Op::Butterfly);

  CHECK(parse("  boxsum ( polygon(3) ,polygon(4) )  ") == parse("boxsum(polygon(3), polygon(4))"));
  CHECK(parse("load(\"a b.json\")").path == "a b.json");
  CHECK(parse("load(data/x.json)").path == "data/x.json");
}

TEST_CASE("parse errors carry an offset and the expected tokens") {
  try {
    parse("boolean(5");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 9);
    CHECK(e.expected() == std::vector<std::string>{")"});
  }
  for (const char* bad : {"", "boxsum(polygon(2))", "boolean(x)", "segre(boolean(2))", "frob(3)",
                          "boolean(5))", "ksum(2 boolean(3))", "boolean(99999999999)", "load(\"x)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), ParseError);
  }
  try {
    parse("boxsum(polygon(2))");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 17);
  }
}

TEST_CASE("print and parse round trip for every production") {
  const std::vector<std::string> texts{
      "boolean(3)",
      "butterfly(4)",
      "chain(2)",
      "polygon(5)",
      "cubical(3)",
      "subspace(2, 3)",
      "sigma_star(boolean(3))",
      "sigma(polygon(4))",
      "dual(cubical(2))",
      "ksum(3, boolean(5))",
      "boxsum(polygon(3), polygon(4), polygon(2))",
      "segre(boolean(2), butterfly(2))",
      "load(\"data/icosahedron.json\")",
      "dual(sigma_star(ksum(2, boxsum(sigma(boolean(2)), dual(butterfly(3))))))"};
  for (const auto& text : texts) {
    CAPTURE(text);
    const auto e = parse(text);
    CHECK(print(e) == text);
    CHECK(parse(print(e)) == e);
  }
  const auto quoted = parse(R"(load("a\"b\\c"))");
  CHECK(quoted.path == "a\"b\\c");
  CHECK(parse(print(quoted)) == quoted);
  CHECK(print(parse("load(x.json)")) == "load(\"x.json\")");
}

TEST_CASE("eval") {
  CHECK(eval(parse("polygon(5)")).size() == 12);
  CHECK(eval(parse("segre(boolean(2), boolean(2))")).size() == 6);
  CHECK(is_isomorphic(eval(parse("sigma_star(ksum(2, butterfly(5)))")),
                      dual_suspension(k_summation(butterfly(5), 2))));
  CHECK(is_isomorphic(eval(parse("load(\"" POSETKIT_DATA_DIR "/icosahedron.json\")")),
                      dual(eval(parse("load(\"" POSETKIT_DATA_DIR "/dodecahedron.json\")")))));

  CHECK(eval_kind("polygon(1)") == ErrorKind::DegenerateGon);
  CHECK(eval_kind("boxsum(boolean(3), boolean(4))") == ErrorKind::RankMismatch);
  CHECK(eval_kind("load(\"/nonexistent.json\")") == ErrorKind::Io);
  try {
    eval(parse("dual(polygon(1))"));
  } catch (const PosetError& e) {
    const std::string what = e.what();
    CHECK(what.find("polygon(1)") != std::string::npos);
    CHECK(what.find("5..15") != std::string::npos);
  }

  // Deterministic element ids and covers.
  const auto a = eval(parse("boxsum(sigma(polygon(3)), sigma_star(boolean(3)))"));
  const auto b = eval(parse("boxsum(sigma(polygon(3)), sigma_star(boolean(3)))"));
  CHECK(a.covers() == b.covers());
  CHECK(poset_to_json(a).dump() == poset_to_json(b).dump());
}

TEST_CASE("JSON round trip keeps structure and labels") {
  for (const auto& p : {boolean(3), cubical(2), subspace_lattice(2, 2), dual_suspension(polygon(3))}) {
    const auto path = scratch("round.json");
    std::ofstream(path) << poset_to_json(p).dump(2);
    const auto q = load_poset(path);
    CHECK(is_isomorphic(p, q));
    CHECK(q.covers() == p.covers());
    CHECK(q.has_labels() == p.has_labels());
    for (Element e = 0; e < p.size() && p.has_labels(); ++e) CHECK(q.label_of(e) == p.label_of(e));
  }
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": [{"id": 0}]})")), std::exception);
}

TEST_CASE("classification and profile JSON") {
  CHECK(classification_to_json(form::KSumButterfly{2, 5}).dump() ==
        R"({"form":"ksum_butterfly","alpha":2,"n":5})");
  const auto c4 = *sheffer_profile(cubical(4));
  CHECK(profile_to_json(c4)["D"].dump() == R"(["1","2","8","48","384"])");
  CHECK(classification_to_json(form::PolygonSum{{4, 3}}).dump() ==
        R"({"form":"polygon_sum","parts":[4,3]})");
}

TEST_CASE("DOT export") {
  const auto dot = to_dot(boolean(2));
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  std::size_t levels = 0, edges = 0;
  for (std::size_t at = 0; (at = dot.find("rank=same", at)) != std::string::npos; ++at) ++levels;
  for (std::size_t at = 0; (at = dot.find("->", at)) != std::string::npos; ++at) ++edges;
  CHECK(levels == 3);
  CHECK(edges == 4);
  CHECK(dot.find("{1,2}") != std::string::npos);
}

TEST_CASE("command line exit codes and output") {
  const auto ok = run("classify --expr \"ksum(2, butterfly(5))\"");
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out).dump() == R"({"form":"ksum_butterfly","alpha":2,"n":5})");

  const auto analyze = run("analyze --expr \"cubical(4)\"");
  CHECK(analyze.code == 0);
  const auto a = Json::parse(analyze.out);
  CHECK(a["eulerian"] == true);
  CHECK(a["sheffer"]["D"].dump() == R"(["1","2","8","48","384"])");

  const auto census = run("verify --suite rank3 --max-middle 6");
  CHECK(census.code == 0);
  CHECK(Json::parse(census.out)["counts"].dump() == R"({"2":1,"3":1,"4":2,"5":2,"6":4})");
  CHECK(run("enumerate rank4 --max-r 30").code == 0);

  CHECK(run("classify --expr \"boolean(5\"").code == 1);
  CHECK(run("construct --expr \"polygon(1)\"").code == 1);
  CHECK(run("classify --expr \"chain(3)\"").code == 2);
  CHECK(run("classify --expr \"sigma_star(boolean(3))\" --as binomial").code == 2);
  CHECK(run("verify --suite rank4 --max-r 10").code == 2);
  const auto open = run("classify --expr \"cubical(6)\"");
  CHECK(open.code == 3);
  CHECK(Json::parse(open.out)["form"] == "open_case");
  const auto empty = scratch("no-fixtures");
  fs::create_directories(empty);
  CHECK(run("verify --suite rank4 --max-r 30", "POSETKIT_DATA_DIR=" + empty.string()).code == 4);
}

TEST_CASE("construct and export write files") {
  const auto out = scratch("b3.json");
  fs::remove(out);
  CHECK(run("construct --expr \"boolean(3)\" --out " + out.string()).code == 0);
  CHECK(is_isomorphic(load_poset(out), boolean(3)));
  const auto reload = run("classify --expr \"load(\\\"" + out.string() + "\\\")\"");
  CHECK(reload.code == 0);
  CHECK(Json::parse(reload.out)["form"] == "polygon_sum");

  const auto dot = scratch("b3.dot");
  CHECK(run("export --expr \"boolean(3)\" --format dot --out " + dot.string()).code == 0);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == to_dot(boolean(3)));
  CHECK(run("export --expr \"boolean(3)\" --format svg").code != 0);
}
