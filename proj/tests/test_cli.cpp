#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + HODGEINT_CLI_PATH " " + args +
                    " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const RunResult& r) {
  REQUIRE(!r.out.empty());
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("character values") {
  RunResult r = run("char --nu '[2,1]' --mu '[3]'");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["command"] == "char");
  CHECK(j["status"] == "ok");
  CHECK(j["inputs"]["nu"] == nlohmann::json::array({2, 1}));
  CHECK(j["output"]["chi"] == "-1");
}

TEST_CASE("partition listing") {
  RunResult r = run("partitions --d 5");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["output"]["count"] == 7);
  CHECK(j["output"]["partitions"][0] == nlohmann::json::array({5}));
  CHECK(j["output"]["partitions"][6] == nlohmann::json::array({1, 1, 1, 1, 1}));
}

TEST_CASE("hopf link values and series") {
  RunResult r = run("w --mu '[1]' --nu '[1]'");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["output"]["value"]["num"] ==
        nlohmann::json({{"0", "1"}, {"2", "-1"}, {"4", "1"}}));
  CHECK(j["output"]["value"]["den"] ==
        nlohmann::json({{"0", "1"}, {"2", "-2"}, {"4", "1"}}));

  RunResult s = run("w --mu '[1]' --nu '[]' --series 3");
  CHECK(s.exit_code == 0);
  auto js = parse(s);
  CHECK(js["output"]["series"]["valuation"] == -1);
  CHECK(js["output"]["series"]["order"] == 3);
  CHECK(js["output"]["series"]["coeffs"][0] ==
        nlohmann::json({{"re", "0"}, {"im", "-1"}}));
}

TEST_CASE("hurwitz numbers") {
  RunResult r = run("hurwitz --g 0 --mu-plus '[2]' --mu-minus '[2]'");
  CHECK(r.exit_code == 0);
  CHECK(parse(r)["output"]["value"] == "1/2");

  // mismatched sizes surface as an error envelope with exit code 2
  RunResult e = run("hurwitz --g 0 --mu-plus '[2]' --mu-minus '[1]'");
  CHECK(e.exit_code == 2);
  auto je = parse(e);
  CHECK(je["status"] == "error");
  CHECK(je["output"].contains("error"));
}

TEST_CASE("cut-and-join matrix") {
  RunResult r = run("cjmatrix --d 2");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["output"]["basis"] ==
        nlohmann::json::array({nlohmann::json::array({2}), nlohmann::json::array({1, 1})}));
  CHECK(j["output"]["entries"] ==
        nlohmann::json::array({nlohmann::json::array({"0", "1"}),
                               nlohmann::json::array({"1", "0"})}));
}

TEST_CASE("family series and extraction") {
  RunResult r = run("r-series --mu-plus '[1]' --mu-minus '[]' --order 1");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["output"]["series"]["valuation"] == -1);
  CHECK(j["output"]["series"]["coeffs"][0] ==
        nlohmann::json({{"0", {{"re", "0"}, {"im", "-1"}}}}));

  RunResult h = run("hodge --g 0 --mu-plus '[1]' --mu-minus '[1]'");
  CHECK(h.exit_code == 0);
  auto jh = parse(h);
  CHECK(jh["output"]["coefficient"] ==
        nlohmann::json({{"0", {{"re", "1"}, {"im", "0"}}}}));

  RunResult n = run("hodge --g 1 --mu-plus '[1]' --mu-minus '[]' --normalized");
  CHECK(n.exit_code == 0);
  auto jn = parse(n);
  CHECK(jn["output"]["value"]["num"] ==
        nlohmann::json({{"0", {{"re", "1/24"}, {"im", "0"}}}}));
  CHECK(jn["output"]["value"]["den"] ==
        nlohmann::json({{"0", {{"re", "1"}, {"im", "0"}}}}));
}

TEST_CASE("phi with a scaled argument") {
  RunResult r = run("phi --d 2 --series 2 --scale '-i*tau'");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  // Phi_{(2),(2)}(-i tau lambda) = 1/2 - tau^2 lambda^2 / 4 + ...
  auto& entry = j["output"]["entries"][0][0];
  CHECK(entry["coeffs"][0] == nlohmann::json({{"0", {{"re", "1/2"}, {"im", "0"}}}}));
  CHECK(entry["coeffs"][2] == nlohmann::json({{"2", {{"re", "-1/4"}, {"im", "0"}}}}));
}

TEST_CASE("verify subcommands") {
  RunResult r = run("verify sum --caps 3 0");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["status"] == "ok");
  CHECK(j.contains("residuals"));
  CHECK(j["residuals"].empty());
  CHECK(j["output"]["failures"] == 0);

  RunResult k = run("verify key --caps 2 2");
  CHECK(k.exit_code == 0);
  CHECK(parse(k)["status"] == "ok");

  RunResult c = run("verify rcj --caps 1 1 --order 3");
  CHECK(c.exit_code == 0);
  CHECK(parse(c)["status"] == "ok");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("char --nu '[2,1]'").exit_code == 2);          // missing --mu
  CHECK(run("partitions").exit_code == 2);                 // missing --d
  CHECK(run("nonsense").exit_code == 2);                   // unknown subcommand
  CHECK(run("verify rcj --caps 1 1").exit_code == 2);      // missing required order
}

TEST_CASE("output is deterministic") {
  RunResult a = run("phi --d 3");
  RunResult b = run("phi --d 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("character cache is reused across runs") {
  std::string tmpl = (std::filesystem::temp_directory_path() / "clicacheXXXXXX").string();
  char* dir = mkdtemp(tmpl.data());
  REQUIRE(dir != nullptr);
  std::string env = std::string("HODGE_CACHE_DIR='") + dir + "'";

  RunResult a = run("char --nu '[3,1]' --mu '[2,2]'", env);
  CHECK(a.exit_code == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "chars-d4.jsonl"));

  RunResult b = run("char --nu '[3,1]' --mu '[2,2]'", env);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(parse(b)["output"]["chi"] == "-1");
}
