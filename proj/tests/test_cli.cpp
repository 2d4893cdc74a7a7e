#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "geodkit/cli.hpp"
#include "geodkit/io.hpp"
#include "geodkit/recognition.hpp"
#include "json.hpp"

using namespace geodkit;

namespace {

CommandResult run_with(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  return run(args, in);
}

const char* kC5 = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const char* kC4 = "4\n0 1\n1 2\n2 3\n3 0\n";

}  // namespace

TEST_CASE("check C5") {
  const auto r = run_with({"check", "-", "--json"}, kC5);
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["geodetic"] == true);
  CHECK(doc["antipodal"] == false);
  CHECK(doc["n"] == 5);
  CHECK(doc["m"] == 5);
  CHECK(doc["diameter"] == 2);
  CHECK(doc["witness_antipodal"]["vertex"] == 0);
  CHECK(run_with({"check", "-", "--antipodal"}, kC5).exit_code == 1);
}

TEST_CASE("check C4 fails with a witness") {
  const auto r = run_with({"check", "-", "--json"}, kC4);
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["geodetic"] == false);
  CHECK(doc["witness_geodetic"]["source"] == 0);
  CHECK(doc["witness_geodetic"]["target"] == 2);
  CHECK(doc["witness_geodetic"]["predecessors"] == nlohmann::json::array({1, 3}));
}

TEST_CASE("human output is a table of the same data") {
  const auto r = run_with({"check", "-"}, kC5);
  // keys are padded to the longest key plus two spaces
  CHECK(r.output.find("\ngeodetic           true\n") != std::string::npos);
  CHECK(r.output.find("\nantipodal          false\n") != std::string::npos);
  CHECK(r.output.find("witness_antipodal  {") != std::string::npos);
}

TEST_CASE("gen diam2 piped into check") {
  const auto gen = run_with({"gen", "diam2", "--q", "2"});
  REQUIRE(gen.exit_code == 0);
  const auto r = run_with({"check", "-", "--json"}, gen.output);
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["n"] == 13);
  CHECK(doc["geodetic"] == true);
  CHECK(doc["diameter"] == 2);
}

TEST_CASE("every gen output parses back") {
  const std::vector<std::vector<std::string>> cmds = {
      {"gen", "levi", "--q", "2", "--cycle"},
      {"gen", "diam4", "--q", "2", "--cycle"},
      {"gen", "diam2", "--q", "3", "--cycle"},
      {"gen", "subdivide", "--k", "2", "-"},
      {"gen", "extend-antipodal", "-"},
      {"weights", "assign", "-"},
  };
  for (const auto& c : cmds) {
    const auto r = run_with(c, kC5);
    REQUIRE(r.exit_code == 0);
    CHECK_NOTHROW(parse_graph(r.output));
  }
  const auto levi = run_with({"gen", "levi", "--q", "2", "--cycle"});
  CHECK(levi.output.find("# cycle: 0 ") != std::string::npos);
}

TEST_CASE("weighted pipelines") {
  const auto w = run_with({"weights", "assign", "-"}, kC4);
  REQUIRE(w.exit_code == 0);
  const auto r = run_with({"check", "-", "--weighted", "--antipodal"}, w.output);
  CHECK(r.exit_code == 0);
  const auto e = run_with({"embed", "-"}, "4\n0 1 3\n1 2 4\n2 3 3\n");
  REQUIRE(e.exit_code == 0);
  CHECK(run_with({"check", "-"}, e.output).exit_code == 0);
  CHECK(run_with({"embed", "-"}, kC4).exit_code == 2);
}

TEST_CASE("oracle agrees with check") {
  for (const char* g : {kC4, kC5, "1\n", "3\n0 1\n1 2\n0 2\n", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"}) {
    const auto a = run_with({"check", "-", "--json", "--antipodal"}, g);
    const auto b = run_with({"oracle", "-", "--json", "--antipodal"}, g);
    const auto c = run_with({"check", "-", "--json", "--antipodal", "--oracle"}, g);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.exit_code == c.exit_code);
    const auto ja = nlohmann::json::parse(a.output);
    const auto jb = nlohmann::json::parse(b.output);
    CHECK(ja["geodetic"] == jb["geodetic"]);
    CHECK(ja["antipodal"] == jb["antipodal"]);
  }
}

TEST_CASE("analyze") {
  const auto r = run_with({"analyze", "-", "--json", "--root", "0"}, "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["blocks"].size() == 1);
  CHECK(doc["transversality"]["blocks"][0]["role"] == "transversal");
  CHECK(doc["transversality"]["blocks"][0]["n"] == 2);
  CHECK(doc["floor_geodetic"]["member"] == true);
  CHECK(run_with({"analyze", "-", "--root", "9"}, kC5).exit_code == 2);
}

TEST_CASE("selftest") {
  const auto r = run_with({"selftest", "--max-n", "4", "--json"});
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["exhaustive_graphs"] == 1 + 1 + 4 + 38);
  CHECK(doc["exhaustive_disagreements"] == 0);
  CHECK(run_with({"selftest", "--max-n", "9"}).exit_code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run_with({}).exit_code == 2);
  CHECK(run_with({"frobnicate"}).exit_code == 2);
  CHECK(run_with({"check", "-", "--bogus"}, kC5).exit_code == 2);
  CHECK(run_with({"check", "/nonexistent/file"}).exit_code == 2);
  CHECK(run_with({"check", "-"}, "3\n0 1\n0 1\n").exit_code == 2);
  CHECK(run_with({"check", "-"}, "3\n0 1\n").exit_code == 2);
  CHECK(run_with({"gen", "diam4", "--q", "6"}).exit_code == 2);
  CHECK(run_with({"gen", "subdivide", "--k", "3", "-"}, kC5).exit_code == 2);
  const auto e = run_with({"check", "-"}, "3\n0 1\n0 x\n");
  CHECK(e.diagnostics.find("line 3") != std::string::npos);
  CHECK(run_with({"--help"}).exit_code == 0);
}

TEST_CASE("outputs are deterministic") {
  CHECK(run_with({"gen", "diam4", "--q", "3", "--cycle"}).output ==
        run_with({"gen", "diam4", "--q", "3", "--cycle"}).output);
  CHECK(run_with({"analyze", "-", "--json"}, kC5).output == run_with({"analyze", "-", "--json"}, kC5).output);
}

TEST_CASE("large weights are emitted as strings") {
  const auto r = run_with({"check", "-", "--json"}, "2\n0 1 123456789012345678901234567890\n");
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["diameter"] == "123456789012345678901234567890");
}
