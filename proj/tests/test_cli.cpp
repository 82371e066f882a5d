#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metrize/cli.hpp"
#include "metrize/io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = metrize::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(METRIZE_FIXTURES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("metrize_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("quad reports the closed forms") {
  auto r = run({"quad", "1", "2", "3", "4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["metrizable"] == true);
  CHECK(j["intervals"]["v1v3"] == json::array({1.0, 3.0}));
  CHECK(j["intervals"]["v2v4"] == json::array({3.0, 5.0}));
  CHECK(run({"quad", "1", "1", "1", "4"}).code == 1);
  CHECK(run({"quad", "1", "1", "1"}).code == 2);
  CHECK(run({"quad", "-1", "1", "1", "1"}).code == 2);
}

TEST_CASE("check emits the witness") {
  auto r = run({"check", "--input", fixture("triangle_113.txt")});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["metrizable"] == false);
  CHECK(j["witness"]["cycle"] == json::array({"a", "b", "c", "a"}));
  CHECK(j["witness"]["max_edge"] == json::array({"a", "c"}));
  CHECK(j["witness"]["lhs"] == 6.0);
  CHECK(j["witness"]["rhs"] == 5.0);
  CHECK(j["worst_slack"] == 1.0);

  auto ok = run({"check"}, "edge a b 1\n");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["witness"].is_null());
}

TEST_CASE("matrix writes inf for disconnected pairs") {
  auto r = run({"matrix", "--tsv", "--input", fixture("isolated.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "a\tb\tc\n0\t2\tinf\n2\t0\tinf\ninf\tinf\t0\n");
  auto j = json::parse(run({"matrix", "--input", fixture("isolated.txt")}).out);
  CHECK(j["matrix"][0][2] == "inf");
  auto dense = run({"matrix", "--dense", "--tsv", "--input", fixture("isolated.txt")});
  CHECK(dense.out == r.out);
}

TEST_CASE("matrix output validates against its own graph") {
  auto m = run({"matrix", "--tsv", "--input", fixture("quad_1234.txt")});
  auto path = write_temp("quad.tsv", m.out);
  auto v = run({"validate", path, "--input", fixture("quad_1234.txt")});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["ok"] == true);

  auto mj = run({"matrix", "--input", fixture("quad_1234.txt")});
  auto jpath = write_temp("quad.json", mj.out);
  CHECK(run({"validate", jpath, "--input", fixture("quad_1234.txt")}).code == 0);

  auto bad = write_temp("bad.tsv", "v1\tv2\tv3\tv4\n0\t1\t9\t4\n1\t0\t2\t5\n9\t2\t0\t3\n4\t5\t3\t0\n");
  auto r = run({"validate", bad, "--input", fixture("quad_1234.txt")});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["violation"].get<std::string>().find("triangle") != std::string::npos);

  auto small = write_temp("small.tsv", "a\tb\n0\t1\n1\t0\n");
  CHECK(run({"validate", small, "--input", fixture("quad_1234.txt")}).code == 2);
}

TEST_CASE("least, interval and partition") {
  auto l = run({"least", "--tsv", "--input", fixture("quad_1234.txt")});
  CHECK(l.code == 0);
  auto m = metrize::parse_tsv(l.out);
  CHECK(m.at(0, 2) == 1.0);
  CHECK(m.at(1, 3) == 3.0);

  auto path = run({"least", "--input", fixture("path4.txt")});
  CHECK(path.code == 1);
  CHECK(json::parse(path.out)["reason"].get<std::string>().find("least element does not exist") !=
        std::string::npos);
  CHECK(run({"least", "--input", fixture("triangle_113.txt")}).code == 1);

  auto iv = run({"interval", "v1", "v3", "--input", fixture("quad_1234.txt")});
  CHECK(iv.code == 0);
  CHECK(json::parse(iv.out)["lower"] == 1.0);
  CHECK(json::parse(iv.out)["upper"] == 3.0);
  CHECK(run({"interval", "v1", "v2", "--input", fixture("quad_1234.txt")}).code == 2);
  CHECK(run({"interval", "v1", "nope", "--input", fixture("quad_1234.txt")}).code == 2);

  auto p = run({"partition", "--input", fixture("quad_1234.txt")});
  CHECK(p.code == 0);
  CHECK(json::parse(p.out) == json::parse(R"({"k": 2, "parts": [["v1", "v3"], ["v2", "v4"]]})"));
  auto none = run({"partition", "--input", fixture("path4.txt")});
  CHECK(none.code == 1);
  CHECK(json::parse(none.out).is_null());
}

TEST_CASE("structural verdicts") {
  CHECK(run({"forest", "--input", fixture("path4.txt")}).code == 0);
  CHECK(run({"forest", "--input", fixture("quad_1234.txt")}).code == 1);
  CHECK(run({"star", "--format", "json", "--input", fixture("k3_parts3.json")}).code == 0);
  CHECK(run({"star", "--input", fixture("quad_1234.txt")}).code == 1);
  auto b = run({"bridges", "--input", fixture("path4.txt")});
  CHECK(json::parse(b.out)["bridges"].size() == 3);
  CHECK(run({"metric-exists", "--input", fixture("two_edges.txt")}).code == 0);
  CHECK(run({"metric-exists"}, "edge a b 0").code == 1);
}

TEST_CASE("sandwich commands") {
  auto s = run({"sandwich-sample", "--seed", "4", "--tsv", "--input", fixture("quad_1234.txt")});
  CHECK(s.code == 0);
  CHECK(run({"sandwich-sample", "--seed", "4", "--tsv", "--input", fixture("quad_1234.txt")}).out == s.out);
  auto path = write_temp("sample.tsv", s.out);
  CHECK(run({"sandwich-validate", path, "--input", fixture("quad_1234.txt")}).code == 0);
  CHECK(run({"validate", path, "--input", fixture("quad_1234.txt")}).code == 0);

  auto outside = write_temp("outside.tsv", "v1\tv2\tv3\tv4\n0\t1\t0.5\t4\n1\t0\t2\t5\n0.5\t2\t0\t3\n4\t5\t3\t0\n");
  auto r = run({"sandwich-validate", outside, "--input", fixture("quad_1234.txt")});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["status"] == "outside_sandwich");

  CHECK(run({"sandwich-sample", "--format", "json", "--input", fixture("k3_parts3.json")}).code == 1);
}

TEST_CASE("complete") {
  auto r = run({"complete", "--tsv", "--input", fixture("two_edges.txt")});
  CHECK(r.code == 0);
  auto m = metrize::parse_tsv(r.out);
  CHECK(m.at(0, 2) == 1.0);  // a-c: default constant 1
  CHECK(m.at(1, 3) == 3.0);
  auto spec = write_temp("spec.json", R"({"constants": {"c": 4}})");
  auto custom = metrize::parse_tsv(run({"complete", "--tsv", "--spec", spec, "--input", fixture("two_edges.txt")}).out);
  CHECK(custom.at(0, 2) == 4.0);
  CHECK(run({"complete", "--input", fixture("triangle_113.txt")}).code == 1);
  auto badspec = write_temp("badspec.json", R"({"anchors": {"a": "c"}})");
  CHECK(run({"complete", "--spec", badspec, "--input", fixture("two_edges.txt")}).code == 2);
}

TEST_CASE("oracle subcommands") {
  auto c = run({"oracle", "cycles", "--input", fixture("quad_1234.txt")});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["cycles"].size() == 1);
  CHECK(run({"oracle", "check", "--input", fixture("triangle_113.txt")}).code == 1);
  auto rho = run({"oracle", "rho0", "v2", "v4", "--input", fixture("quad_1234.txt")});
  CHECK(json::parse(rho.out)["rho0"] == 3.0);
  auto om = run({"oracle", "matrix", "--tsv", "--input", fixture("quad_1234.txt")});
  CHECK(om.out == run({"matrix", "--tsv", "--input", fixture("quad_1234.txt")}).out);

  std::string big;
  for (int i = 0; i < 11; ++i) big += "node n" + std::to_string(i) + "\n";
  CHECK(run({"oracle", "cycles"}, big).code == 2);
  CHECK(run({"oracle", "cycles", "--force"}, big).code == 0);
}

TEST_CASE("generate is deterministic per seed") {
  auto a = run({"generate", "multipartite", "--parts", "2,2", "--seed", "9", "--metrizable"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"generate", "multipartite", "--parts", "2,2", "--seed", "9", "--metrizable"}).out);
  auto g = metrize::parse_edge_list(a.out);
  CHECK(g.edge_count() == 4);
  CHECK(run({"check"}, a.out).code == 0);
  auto j = run({"generate", "forest", "--vertices", "5", "--format", "json"});
  CHECK(j.code == 0);
  CHECK_NOTHROW(metrize::parse_graph_json(j.out));
  CHECK(run({"generate", "blob"}).code == 2);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto r = run({"check"}, "edge a a 1");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"check", "--input", "/nonexistent/file"}).code == 2);
  CHECK(run({"check", "--eps", "-1"}, "edge a b 1").code == 2);
  CHECK(run({"check", "--format", "yaml"}, "edge a b 1").code == 2);
  CHECK(run({"check", "--stdin", "--input", fixture("quad_1234.txt")}).code == 2);
}

TEST_CASE("eps flag and environment fallback") {
  std::string g = "edge a b 1\nedge b c 1\nedge a c 2.0000001\n";
  CHECK(run({"check"}, g).code == 1);
  CHECK(run({"check", "--eps", "1e-6"}, g).code == 0);
  setenv("METRIZE_EPS", "1e-6", 1);
  CHECK(run({"check"}, g).code == 0);
  CHECK(run({"check", "--eps", "1e-9"}, g).code == 1);
  unsetenv("METRIZE_EPS");
}
