#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "maxab/json_io.hpp"

using maxab::Json;

namespace {

struct Run {
  int code = -1;
  std::vector<std::string> lines;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MAXAB_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 1 << 16> buf{};
  std::string out;
  while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) r.lines.push_back(line);
  return r;
}

std::string data(const std::string& name) { return std::string(MAXAB_TEST_DATA) + "/" + name; }

void all_json(const Run& r) {
  for (const auto& l : r.lines) CHECK(Json::accept(l));
}

}  // namespace

TEST_CASE("enumerate") {
  const Run r = run("enumerate --family pu --n 6");
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 4);
  all_json(r);
  CHECK(r.lines[1] == R"({"family":"pu","n":6,"seq":[2]})");
  const Run r8 = run("enumerate --family pu --n 8");
  CHECK(r8.lines.size() == 7);
  CHECK(run("enumerate --family po --n 8").code == 0);
  CHECK(run("enumerate --family psp --n 1").lines.size() == 2);
}

TEST_CASE("msms count") {
  const Run r = run("msms count --k 2 --s 3");
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 5);
  CHECK(r.lines[0] == "4");
  all_json(r);
  CHECK(run("msms count --k 1 --s 2").lines[0] == "2");
  CHECK(run("msms count --k 2 --s 2").lines[0] == "2");
}

TEST_CASE("classify and verify-star") {
  const Run r = run("classify --in " + data("pauli.json"));
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.lines[0] == R"({"family":"pu","n":2,"seq":[2]})");
  CHECK(Json::parse(r.lines[1]).at("star") == true);

  const Run fl = run("classify --float --in " + data("pauli.json"));
  CHECK(Json::parse(fl.lines[1]).at("method") == "floating");

  const Run po = run("classify --in " + data("po_h2.json"));
  CHECK(po.code == 0);
  CHECK(Json::parse(po.lines[0]).at("k") == 1);

  const Run v = run("verify-star --in " + data("clock_only.json"));
  CHECK(v.code == 0);
  CHECK(Json::parse(v.lines[0]).at("star") == false);
  CHECK(Json::parse(v.lines[0]).at("dim_fixed") == 1);

  const Run t = run("verify-star --in " + data("pu3_torus.json"));
  CHECK(Json::parse(t.lines[0]).at("dim_fixed") == 2);

  const Run all = run("verify-star --family po --n 4");
  CHECK(all.code == 0);
  for (const auto& l : all.lines) CHECK(Json::parse(l).at("star") == true);
}

TEST_CASE("weyl and lift") {
  const Run w = run("weyl --in " + data("invariants.jsonl"));
  CHECK(w.code == 0);
  REQUIRE(w.lines.size() == 2);
  CHECK(Json::parse(w.lines[0]).at("total_order") == "6");
  CHECK(Json::parse(w.lines[1]).at("total_order") == "24");

  const Run pu = run("weyl --family pu --n 4");
  CHECK(pu.lines.size() == 4);
  all_json(pu);

  const Run l = run("lift --family twisted --in " + data("tau2.json"));
  CHECK(l.code == 0);
  REQUIRE(l.lines.size() == 1);
  const Json j = Json::parse(l.lines[0]);
  CHECK(j.at("center") == "sign_with_i");
  CHECK(j.at("generators").size() == 2);
}

TEST_CASE("schema and output file") {
  const Run s = run("--schema");
  CHECK(s.code == 0);
  CHECK(s.lines.size() == maxab::schemas().size());
  all_json(s);

  const std::string path = "test_cli_out.jsonl";
  CHECK(run("enumerate --family pu --n 4 --out " + path).lines.empty());
  std::ifstream in(path);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == 4);
  std::remove(path.c_str());
}

TEST_CASE("errors and exit codes") {
  CHECK(run("enumerate --family xx --n 4").code == 2);
  CHECK(run("enumerate --family pu --n 4 --bogus").code == 2);
  CHECK(run("enumerate --n 4").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("classify --in /nonexistent.json").code == 2);
  CHECK(run("classify --in " + data("not_abelian.json")).code == 2);
  CHECK(run("lift --in " + data("pauli.json")).code == 2);
  const Run capped = run("classify --cap 2 --in " + data("pauli.json"));
  CHECK(capped.code == 3);
  CHECK(capped.lines.empty());
  CHECK(run("classify --in " + data("pauli.json"), "MAXAB_CAP=2").code == 3);
  CHECK(run("classify --cap 100 --in " + data("pauli.json"), "MAXAB_CAP=2").code == 0);
  CHECK(run("msms count --k 2").code == 2);
  CHECK(run("--help").lines.empty());
}
