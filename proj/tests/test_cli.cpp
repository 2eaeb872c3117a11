#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "g12/cherednik.hpp"
#include "g12/cli.hpp"
#include "g12/report.hpp"

using namespace g12;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return std::string(G12_GOLDEN_DIR) + "/" + name;
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  CliResult r;
  r.code = run_cli(args, &r.out, &r.err);
  return r;
}

}  // namespace

TEST_CASE("golden reports for the four base parameters") {
  for (const auto& [tag, frac] :
       std::vector<std::pair<std::string, std::string>>{
           {"1_12", "1/12"}, {"1_4", "1/4"}, {"1_3", "1/3"}, {"1_2", "1/2"}}) {
    CliResult r = run({"category", "--c", frac, "--depth", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(golden("category_c_" + tag + ".json")));
  }
}

TEST_CASE("golden reports for quick verbs") {
  CliResult a = run({"amatrix", "--c", "1/12"});
  CHECK(a.code == 0);
  CHECK(a.out == read_file(golden("amatrix_c_1_12.json")));
  CliResult s = run({"semisimple", "--c", "1/6"});
  CHECK(s.code == 0);
  CHECK(s.out == read_file(golden("semisimple_c_1_6.json")));
  CliResult b = run({"brank", "--c", "1/4", "--tau", "4", "--degree", "3"});
  CHECK(b.code == 0);
  CHECK(b.out == read_file(golden("brank_c_1_4_tau4_deg3.json")));
}

TEST_CASE("identical invocations produce byte-identical output") {
  CliResult r1 = run({"weights", "--c", "7/12"});
  CliResult r2 = run({"weights", "--c", "7/12"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("category report at a semisimple parameter") {
  CliResult r = run({"category", "--c", "1/5", "--depth", "4"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["semisimple"] == true);
  CHECK(j["aspherical"] == false);
  CHECK(j["finite_dimensional"].empty());
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) CHECK(j["n"][i][k] == (i == k ? 1 : 0));
}

TEST_CASE("domain errors exit with code 1") {
  CHECK(run({"semisimple", "--c", "1/0"}).code == 1);
  CHECK(run({"semisimple", "--c", "0.5"}).code == 1);
  CHECK(run({"brank", "--c", "1/4", "--tau", "9+", "--degree", "1"}).code == 1);
  CHECK(run({"brank", "--c", "1/4", "--tau", "4", "--degree", "-2"}).code == 1);
  CHECK(run({"singular", "--c", "1/4", "--tau", "4", "--degree", "0"}).code == 1);
  CHECK(run({"transport", "--d", "5", "--r", "1"}).code == 1);
  CliResult r = run({"semisimple", "--c", "bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("malformed fraction") != std::string::npos);
}

TEST_CASE("missing flags are parse errors") {
  CHECK(run({"semisimple"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"no-such-verb"}).code == 1);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "/tmp/g12_cli_out_test.json";
  std::filesystem::remove(path);
  CliResult r = run({"weights", "--c", "1/3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CliResult direct = run({"weights", "--c", "1/3"});
  CHECK(read_file(path) == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("text format renders and differs from json") {
  CliResult t = run({"blocks", "--c", "1/4", "--format", "text"});
  CliResult j = run({"blocks", "--c", "1/4", "--format", "json"});
  CHECK(t.code == 0);
  CHECK(t.out != j.out);
  CHECK(t.out.find("blocks") != std::string::npos);
  CHECK(run({"blocks", "--c", "1/4", "--format", "yaml"}).code == 1);
}

TEST_CASE("group and character table export as JSON") {
  Json j = group_table_report();
  CHECK(j["order"] == 48);
  CHECK(j["reflections"] == 12);
  REQUIRE(j["classes"].size() == 8);
  CHECK(j["classes"][0]["size"] == 1);
  CHECK(j["classes"][2]["label"] == "e");
  CHECK(j["classes"][2]["size"] == 12);
  // character values are serialized cyclotomic numbers
  const Json& chi2p = j["character_table"]["2+"];
  REQUIRE(chi2p.size() == 8);
  CHECK(chi2p[0]["conductor"] == 1);
  CHECK(chi2p[0]["coeffs"][0] == "2");
  CHECK(chi2p[6]["conductor"] == 8);  // sqrt(-2) lives in Q(zeta_8)
}

TEST_CASE("brank --dump-form includes the form grid") {
  CliResult r = run({"brank", "--c", "1/4", "--tau", "1+", "--degree", "2",
                     "--dump-form"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["rank"] == 0);
  REQUIRE(j.contains("form"));
  CHECK(j["form"].size() == 3);
  CHECK(j["form"][0].size() == 3);
  // rank 0: the whole grid is zero
  for (const auto& row : j["form"])
    for (const auto& cell : row)
      for (const auto& coeff : cell["coeffs"]) CHECK(coeff == "0");
}

TEST_CASE("the B-matrix disk cache round-trips") {
  std::string dir = "/tmp/g12_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  setenv("G12_CACHE_DIR", dir.c_str(), 1);
  // fresh module instances so the disk path is actually exercised
  {
    StandardModule warm(rat(3, 7), kTwoPlus);
    ExactMatrix b2 = warm.b_matrix(2);
    StandardModule cold(rat(3, 7), kTwoPlus);
    CHECK(cold.b_matrix(2) == b2);
    CHECK(cold.b_rank(2) == warm.b_rank(2));
  }
  bool wrote_files = !std::filesystem::is_empty(dir);
  CHECK(wrote_files);
  // corrupt a cache entry: the module must fall back to recomputing
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream f(entry.path(), std::ios::binary);
    f << "{not json";
  }
  StandardModule again(rat(3, 7), kTwoPlus);
  CHECK(again.b_rank(2) == again.dim_at(2));
  unsetenv("G12_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
