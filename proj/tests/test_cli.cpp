#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "knotinv/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "knotinv");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = knotinv::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KNOTINV_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("compare reports Distinct for the torus pair") {
  const Run r = run({"compare", data("torus.surf"), "1.12", "1.13bar"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Distinct") != std::string::npos);

  const Run expect = run({"compare", data("torus.surf"), "1.12", "1.13bar", "--expect-equivalent"});
  CHECK(expect.code == 2);

  const Run same = run({"compare", data("torus.surf"), "1.12", "1.12", "--expect-equivalent"});
  CHECK(same.code == 0);
  CHECK(same.out.find("EquivalentUpToUnits") != std::string::npos);
}

TEST_CASE("invariant prints one canonical value per diagram") {
  const Run s = run({"invariant", "--type", "s", data("torus.surf")});
  CHECK(s.code == 0);
  CHECK(s.out.find("1.12: x1^-1 + t*x1^-2 - 2") != std::string::npos);

  const Run n = run({"invariant", data("virtual.gauss")});
  CHECK(n.code == 0);
  CHECK(n.out == "vtrefoil: 1\ntrefoil: 0\nfigure8: 0\nunknot: 1\n");
}

TEST_CASE("JSON output") {
  const Run r = run({"--json", "invariant", "--type", "s", data("torus.surf")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["name"] == "1.12");
  CHECK(j[0]["ring"] == "G(g=1)");
  CHECK(j[0]["resolved"] == true);

  const Run c = run({"--json", "compare", data("virtual.gauss"), "vtrefoil", "unknot"});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["verdict"] == "EquivalentUpToUnits");

  const Run p = run({"--json", "parity", data("torus.surf")});
  REQUIRE(p.code == 0);
  for (const auto& d : nlohmann::json::parse(p.out)) {
    for (const auto& [id, parity] : d["parity"].items()) CHECK(parity == "even");
  }
}

TEST_CASE("dump-matrix") {
  const Run r = run({"dump-matrix", "--type", "n", data("virtual.gauss")});
  CHECK(r.code == 0);
  CHECK(r.out.find("vtrefoil") != std::string::npos);
  const Run t = run({"dump-matrix", "--triples", data("torus.surf")});
  CHECK(t.code == 0);
  CHECK_FALSE(t.out.empty());
}

TEST_CASE("verify is deterministic and exits 0 without counterexamples") {
  const std::string report = (std::filesystem::temp_directory_path() / "knotinv_verify.json").string();
  const Run a = run({"verify", "--trials", "20", "--max-crossings", "5", "--seed", "7", "--report", report});
  const Run b = run({"verify", "--trials", "20", "--max-crossings", "5", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("counterexamples 0") != std::string::npos);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["counterexamples"].empty());
  CHECK(j["seed"] == 7);
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"invariant", "--type", "x", data("virtual.gauss")}).code == 1);
  CHECK(run({"invariant", data("no-such-file.gauss")}).code == 1);
  CHECK(run({"compare", data("virtual.gauss"), "vtrefoil", "missing"}).code == 1);

  const std::string bad = temp_file("knotinv_bad.gauss", "good: O1+ U1+\nbad: O1+ O1+\n");
  const Run strict = run({"invariant", bad});
  CHECK(strict.code == 1);
  CHECK(strict.err.find("CrossingSeenTwiceSameStrand") != std::string::npos);
  const Run lenient = run({"--lenient", "invariant", bad});
  CHECK(lenient.code == 0);
  CHECK(lenient.out.find("good: 0") != std::string::npos);
  CHECK(lenient.err.find("line 2") != std::string::npos);
}
