#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tetra/cli.hpp"

using tetra::cli::Report;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tetra::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden reports") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"speed_501", {"--json", "speed", "501"}},
      {"speed_0", {"--json", "speed", "0"}},
      {"speed_30", {"--json", "speed", "30"}},
      {"sequence_163574218751", {"--json", "sequence", "163574218751", "--max-b", "8"}},
      {"sequence_2", {"--json", "sequence", "2", "--max-b", "5"}},
      {"sequence_1", {"--json", "sequence", "1", "--max-b", "3"}},
      {"alpha_99", {"--json", "alpha", "99", "4"}},
      {"stable_5_3", {"--json", "stable", "5", "3"}},
      {"classify_807", {"--json", "classify", "807"}},
      {"ratio_2_4", {"--json", "ratio", "2", "4"}},
      {"min_height_4_7", {"--json", "min-height", "4", "7"}},
      {"tower_2_5_8", {"--json", "tower", "2", "5", "8"}},
      {"key_digit_57", {"--json", "key-digit", "57", "57"}},
      {"bbar_5", {"--json", "bbar", "5"}},
      {"shape_6907922943", {"--json", "shape", "6907922943"}},
      {"verify_2_60", {"--json", "verify", "--range", "2..60", "--workers", "3"}},
  };
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(TETRA_GOLDEN_DIR) + "/" + name + ".json"));
    CHECK(Report::parse(r.out).dump() == r.out);
    CHECK(Report::parse(r.out) == Report::parse(Report::parse(r.out).dump()));
  }
}

TEST_CASE("human output") {
  const Run r = run({"speed", "501"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V(501) = 2") != std::string::npos);
  CHECK(r.out.find("a=1 (mod 20), s_l=5 -> v2(a-1)") != std::string::npos);
  CHECK(run({"alpha", "99", "4"}).out == "9999\n");
  CHECK(run({"stable", "5", "3"}).out.find("= 8") != std::string::npos);
  CHECK(run({"classify", "807"}).out == "807: V>=3\n");
  CHECK(run({"speed", "30"}).out.find("undefined") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"speed", "12x"}).code == 2);
  CHECK(run({"speed"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"alpha", "52", "4"}).code == 2);
  CHECK(run({"verify", "--range", "9..3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run budget = run({"--json", "--budget", "16", "sequence", "163574218751", "--max-b", "4"});
  CHECK(budget.code == 3);
  const Report rep = Report::parse(budget.out);
  CHECK(rep.status == "error");
  CHECK(rep.message.find("needs-larger-budget") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--range", "2..2"}).code == 0);
  const Run wide = run({"--json", "verify", "--range", "160000000000..160000000100", "--max-b", "6"});
  CHECK(wide.code == 0);
  CHECK(Report::parse(wide.out).result["failures"].empty());
}

TEST_CASE("verify is independent of worker count") {
  const std::string one = run({"--json", "verify", "--range", "2..400", "--workers", "1"}).out;
  for (const char* w : {"2", "3", "7"}) {
    CHECK(run({"--json", "verify", "--range", "2..400", "--workers", w}).out == one);
  }
}

TEST_CASE("report file") {
  const std::string path = "test_cli_report.json";
  const Run r = run({"--out", path, "speed", "7"});
  CHECK(r.code == 0);
  CHECK(Report::parse(slurp(path)).result["V"] == 2);
  std::remove(path.c_str());
}
