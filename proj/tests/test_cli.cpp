#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "doctest.h"
#include "subprocess.hpp"

using testutil::RunResult;
using testutil::run_cli;
using testutil::run_cli_env;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::string temp_path(const std::string& tag) {
  return (std::filesystem::temp_directory_path() /
          ("scoreseq_test_" + tag + "_" + std::to_string(getpid()) + ".txt"))
      .string();
}

struct TempFile {
  std::string path;
  TempFile(const std::string& tag, const std::string& content)
      : path(temp_path(tag)) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("count") {
  RunResult r = run_cli("count --kind strong --n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "7\n");

  r = run_cli("count --kind sc --n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");

  r = run_cli("count --kind ssc --n 50 --method both");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "15231830864258\n");

  r = run_cli("count --kind all --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4\n");
}

TEST_CASE("usage and dispatch errors exit 2") {
  CHECK(run_cli("count --kind bogus --n 5").exit_code == 2);
  CHECK(run_cli("count --n 5").exit_code == 2);
  CHECK(run_cli("count --kind all --n -3").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  const RunResult r =
      run_cli("count --kind all --n 4 --method recurrence", true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("help and version exit 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("count --help").exit_code == 0);
  const RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1.0.0\n");
}

TEST_CASE("table formats") {
  RunResult r = run_cli("table --kind strong --from 0 --to 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n,count\n0,1\n1,1\n2,0\n3,1\n4,1\n5,3\n");

  r = run_cli("table --kind all --from 0 --to 10 --format bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "0 1\n1 1\n2 1\n3 2\n4 4\n5 9\n6 22\n7 59\n8 167\n9 490\n10 1486\n");

  r = run_cli("table --kind sc --from 3 --to 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3  2\n");

  CHECK(run_cli("table --kind all --from 7 --to 3").exit_code == 2);
}

TEST_CASE("check classifies one sequence") {
  RunResult r = run_cli("check 1,1,2,3,4,4");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "score-sequence: yes\nstrong: yes\nself-complementary: yes\n"
        "strong-self-complementary: yes\n");

  r = run_cli("check 0,1,2,3,4,5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "score-sequence: yes\nstrong: no\nself-complementary: yes\n"
        "strong-self-complementary: no\n");

  r = run_cli("check 0,0,1");
  CHECK(r.exit_code == 1);
  CHECK(r.output ==
        "score-sequence: no\nstrong: no\nself-complementary: no\n"
        "strong-self-complementary: no\n");

  r = run_cli("check 5,1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("score-sequence: no\n") == 0);

  CHECK(run_cli("check 1,-2").exit_code == 2);
  CHECK(run_cli("check 1,x").exit_code == 2);
}

TEST_CASE("verify round-trips every kind") {
  for (const std::string kind : {"all", "sc", "strong", "ssc"}) {
    const RunResult table =
        run_cli("table --kind " + kind + " --from 0 --to 30 --format bfile");
    REQUIRE(table.exit_code == 0);
    TempFile file("roundtrip_" + kind, table.output);
    const RunResult verify = run_cli("verify --kind " + kind + " " + file.path);
    CAPTURE(kind);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.empty());
  }
}

TEST_CASE("verify flags mismatches and malformed files") {
  TempFile bad("mismatch", "0 1\n1 1\n2 2\n");
  RunResult r = run_cli("verify --kind all " + bad.path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("mismatch at n=2: computed 1, file has 2") !=
        std::string::npos);

  TempFile garbage("garbage", "0 1\nnot-a-row\n");
  CHECK(run_cli("verify --kind all " + garbage.path).exit_code == 2);

  TempFile extra("extra", "0 1 9\n");
  CHECK(run_cli("verify --kind all " + extra.path).exit_code == 2);

  TempFile decreasing("decreasing", "2 1\n1 1\n");
  CHECK(run_cli("verify --kind all " + decreasing.path).exit_code == 2);

  TempFile empty("empty", "");
  r = run_cli("verify --kind all " + empty.path, true);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("no data rows") != std::string::npos);

  TempFile commented("commented", "# header\n\n0 1\n1 1\r\n# tail\n");
  CHECK(run_cli("verify --kind all " + commented.path).exit_code == 0);

  CHECK(run_cli("verify --kind all /nonexistent/path.txt").exit_code == 2);
}

TEST_CASE("enumerate") {
  RunResult r = run_cli("enumerate --n 5 --kind all");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> lines = lines_of(r.output);
  REQUIRE(lines.size() == 10);
  CHECK(lines.front() == "0,1,2,3,4");
  CHECK(lines[8] == "2,2,2,2,2");
  CHECK(lines.back() == "count: 9");

  r = run_cli("enumerate --n 2 --kind strong");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "count: 0\n");

  r = run_cli("enumerate --n 20 --kind all", true);
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("ratios") {
  RunResult r = run_cli("ratios --kind all --to 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n,numerator,denominator,ratio\n") == 0);
  CHECK(r.output.find("10,1486,490,3.03265\n") != std::string::npos);

  r = run_cli("ratios --kind sc --to 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,numerator,denominator,ratio\n"
        "2,1,1,1.00000\n"
        "3,2,1,2.00000\n"
        "4,2,1,2.00000\n"
        "5,5,2,2.50000\n"
        "6,6,2,3.00000\n");

  r = run_cli("ratios --kind sc --to 6 --stride 2");
  CHECK(r.output.find("6,6,2,3.00000\n") != std::string::npos);

  CHECK(run_cli("ratios --kind strong --to 10 --strict").exit_code == 0);
  CHECK(run_cli("ratios --kind strong --to 10 --strict --settle 0").exit_code ==
        1);

  r = run_cli("ratios --kind strong --to 10 --fraction");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("6,22,7,3.14286\n") != std::string::npos);
  CHECK(r.output.find("10,1486,573,2.59337\n") != std::string::npos);

  CHECK(run_cli("ratios --kind all --to 10 --fraction").exit_code == 2);
  CHECK(run_cli("ratios --kind all --to 10 --stride 3").exit_code == 2);
  CHECK(run_cli("ratios --kind all --to 10 --settle 4").exit_code == 2);

  r = run_cli("ratios --kind strong --to 10", true);
  CHECK(r.output.find("settled from n=8\n") != std::string::npos);
}

TEST_CASE("cell budget from the environment") {
  CHECK(run_cli_env("SCORESEQ_CELL_BUDGET=10",
                    "count --kind all --n 30").exit_code == 4);
  CHECK(run_cli_env("SCORESEQ_CELL_BUDGET=abc",
                    "count --kind all --n 5").exit_code == 2);
  const RunResult r = run_cli_env("SCORESEQ_CELL_BUDGET=4000000000",
                                  "count --kind all --n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1486\n");
}

TEST_SUITE_END();
