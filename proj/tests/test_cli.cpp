#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + NEGACAP_CLI_PATH + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/negacap_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("channel-analyze") {
  const Result r = run("channel-analyze --family cnot");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["bounds"]["lower_L"].get<double>() == doctest::Approx(1.0));
  CHECK(j["bounds"]["upper_L"].get<double>() == doctest::Approx(1.0));
  CHECK(j["perfect_entangler"] == true);
  CHECK(j["ppt"] == false);

  const Result prod = run("channel-analyze --family rot22 --alpha 0.4 --beta 0.4");
  const json pj = json::parse(prod.out);
  CHECK(pj["ppt"] == true);
  CHECK(pj["bounds"]["upper_L"].get<double>() < 1e-12);

  const Result big = run("channel-analyze --family rot33 --alpha pi/3 --beta pi/5");
  const double u = json::parse(big.out)["bounds"]["upper_L"].get<double>();
  CHECK(u > 0.0);
  CHECK(std::isfinite(u));

  // File input in the Kraus format.
  const std::string f = temp_file(
      "cnot.json",
      R"({"in_dims":[2,2],"kraus":[{"c":1,"V":{"rows":4,"cols":4,"re":[1,0,0,0, 0,1,0,0, 0,0,0,1, 0,0,1,0]}}]})");
  const json fj = json::parse(run("channel-analyze " + f).out);
  CHECK(fj["bounds"]["lower_L"].get<double>() == doctest::Approx(1.0));

  // Non-CPTP input is reported, not fatal.
  const std::string t = temp_file(
      "transpose.json",
      R"({"in_dims":[2,1],"choi":{"rows":4,"cols":4,"re":[1,0,0,0, 0,0,1,0, 0,1,0,0, 0,0,0,1]}})");
  const Result tr = run("channel-analyze " + t);
  CHECK(tr.code == 0);
  CHECK(json::parse(tr.out).contains("bounds_error"));
}

TEST_CASE("channel-sweep") {
  const Result r = run("channel-sweep --family rot22 --alpha 0 --beta 0:pi:5");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][0] == "alpha");
  CHECK(rows[0][2] == "lower_N");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double beta = std::stod(rows[i][1]);
    CHECK(std::stod(rows[i][2]) == doctest::Approx(std::abs(std::sin(beta)) / 2).epsilon(1e-9));
  }
  CHECK(r.out.find('\r') == std::string::npos);

  const auto pt = parse_csv(run("channel-sweep --family rot23 --alpha 2pi/3 --beta 0").out);
  CHECK(std::stod(pt[1][7]) == doctest::Approx(0.5));
  CHECK(std::stod(pt[1][8]) == doctest::Approx(0.5));

  CHECK(parse_csv(run("channel-sweep --family gencnot --alpha 0:1:2 --beta 0").out).size() == 3);

  const auto mixed = parse_csv(run("channel-sweep --family mix --pair rot23 --p 0.05:0.95:19").out);
  REQUIRE(mixed.size() == 20);
  CHECK(mixed[0][3] == "upper_L");
  CHECK(mixed[0][4] == "upper_L_convex");
  bool joint_larger = false;
  for (std::size_t i = 1; i < mixed.size(); ++i) joint_larger |= std::stod(mixed[i][3]) > std::stod(mixed[i][4]);
  CHECK(joint_larger);

  // Bit-identical regardless of thread count.
  const std::string args = "channel-sweep --family rot23 --alpha 0:pi:7 --beta 0:pi:7";
  CHECK(run(args, "NEGACAP_THREADS=1").out == run(args, "NEGACAP_THREADS=4").out);

  CHECK(run("channel-sweep --family rot22 --alpha 0:1:1").code == 2);
  CHECK(run("channel-sweep --family rot22 --alpha 1:0:3").code == 2);
  CHECK(run("channel-sweep --family nope").code == 2);
  CHECK(run("channel-sweep --family rot22 --alpha x:1:3").code == 3);
}

TEST_CASE("gaussian commands") {
  const json s = json::parse(run("gaussian-sup --N 3 --n1 1 --n2 1").out);
  CHECK(s["sup"].get<double>() == doctest::Approx(0.5 * std::log2(3.0)));
  const json u = json::parse(run("gaussian-sup --N 4 --n1 2 --n2 2").out);
  CHECK(u["sup"] == "unbounded");
  CHECK(u["unbounded"] == true);
  CHECK(run("gaussian-sup --N 3 --n1 2 --n2 2").code == 2);
  CHECK(run("gaussian-sup --N 3").code == 3);

  const Result sw = run("gaussian-sweep --N 4 --n1 1 --n2 1 --nu-D 0.5 --r 1e-8:1e8:9");
  REQUIRE(sw.code == 0);
  const auto rows = parse_csv(sw.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0][4] == "E_L");
  CHECK(std::stod(rows[1][4]) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::stod(rows[9][4]) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::stod(rows[5][4]) == 0.0);
  // Non-increasing toward the centre of the log grid.
  for (int i = 2; i <= 5; ++i) CHECK(std::stod(rows[i][4]) <= std::stod(rows[i - 1][4]));
  CHECK(run("gaussian-sweep --N 4 --n1 1 --n2 1 --nu-D 0.5 --gamma 0.5").code == 2);
}

TEST_CASE("saturate") {
  const std::string good =
      temp_file("plus_up.json", R"({"psi":{"rows":4,"cols":1,"re":[0.7071067811865476,0,0.7071067811865476,0]}})");
  const json g = json::parse(run("saturate --family cnot --state " + good).out);
  CHECK(g["achieves_upper"] == true);
  CHECK(g["E_N_out"].get<double>() == doctest::Approx(0.5));
  const std::string bad = temp_file("up_up.json", R"({"psi":{"rows":4,"cols":1,"re":[1,0,0,0]}})");
  CHECK(json::parse(run("saturate --family cnot --state " + bad).out)["achieves_upper"] == false);
  const json r22 = json::parse(run("saturate --family rot22 --alpha 0.3 --beta 1.2").out);
  CHECK(r22["prop_identity"] == true);
  CHECK(r22.contains("known_solutions"));
  const json ppt = json::parse(run("saturate --family rot22 --alpha 0.3 --beta 0.3").out);
  CHECK(ppt["minus_part_zero"] == true);
  const std::string broken = temp_file("broken.json", "{\"psi\": [1, 2");
  CHECK(run("saturate --family cnot --state " + broken).code == 3);
}

TEST_CASE("soundness and global flags") {
  const Result a = run("soundness --trials 50 --seed 7");
  const Result b = run("soundness --trials 50 --seed 7", "NEGACAP_THREADS=1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["violations"] == 0);
  CHECK(json::parse(run("soundness --trials 5").out)["seed"] == 0);

  const json e = json::parse(run("channel-analyze --family cnot --base e").out);
  CHECK(e["bounds"]["upper_L"].get<double>() == doctest::Approx(std::log(2.0)));
  CHECK(run("channel-analyze --family cnot --base 3").code == 2);
  CHECK(run("channel-analyze --family cnot --format xml").code == 2);
  CHECK(run("channel-sweep --family rot22 --alpha 0 --beta 0:1:2", "NEGACAP_THREADS=zero").code == 2);

  const std::string out = temp_file("out.csv", "");
  CHECK(run("channel-sweep --family rot22 --alpha 0 --beta 0:1:2 --out " + out).out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("alpha,beta", 0) == 0);
  CHECK(run("").code == 3);
  CHECK(run("--help").code == 0);
}
