#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "scoreseq.h"
#include "scoreseq/series.hpp"

namespace {

std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  scoreseq_string_free(s);
  return out;
}

std::string count_string(scoreseq_ctx* ctx, scoreseq_kind kind, int n,
                         scoreseq_method method) {
  char* decimal = nullptr;
  REQUIRE(scoreseq_count(ctx, kind, n, method, &decimal) == SCORESEQ_OK);
  return take_string(decimal);
}

struct CallbackState {
  std::vector<std::vector<long long>> rows;
  int stop_after = -1;
};

} // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("version string") {
  CHECK(std::string(scoreseq_version()) == "1.0.0");
}

TEST_CASE("count returns decimal strings") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  CHECK(count_string(ctx, SCORESEQ_KIND_ALL, 10, SCORESEQ_METHOD_DP) ==
        "1486");
  CHECK(count_string(ctx, SCORESEQ_KIND_STRONG_SELF_COMPLEMENTARY, 50,
                     SCORESEQ_METHOD_DEFAULT) == "15231830864258");
  CHECK(count_string(ctx, SCORESEQ_KIND_STRONG, 10,
                     SCORESEQ_METHOD_RECURRENCE) == "573");
  scoreseq_ctx_free(ctx);
}

TEST_CASE("count error paths") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  char* decimal = nullptr;
  CHECK(scoreseq_count(ctx, SCORESEQ_KIND_ALL, -1, SCORESEQ_METHOD_DP,
                       &decimal) == SCORESEQ_ERR_INVALID);
  CHECK(decimal == nullptr);
  CHECK(std::strlen(scoreseq_ctx_last_error(ctx)) > 0);
  CHECK(scoreseq_count(ctx, SCORESEQ_KIND_ALL, 3, SCORESEQ_METHOD_RECURRENCE,
                       &decimal) == SCORESEQ_ERR_INVALID);
  CHECK(scoreseq_count(nullptr, SCORESEQ_KIND_ALL, 3, SCORESEQ_METHOD_DP,
                       &decimal) == SCORESEQ_ERR_INVALID);
  CHECK(scoreseq_count(ctx, SCORESEQ_KIND_ALL, 3, SCORESEQ_METHOD_DP,
                       nullptr) == SCORESEQ_ERR_INVALID);
  scoreseq_ctx_free(ctx);
}

TEST_CASE("classify flags") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  const long long good[] = {1, 1, 2, 3, 4, 4};
  unsigned flags = 0;
  REQUIRE(scoreseq_classify(ctx, good, 6, &flags) == SCORESEQ_OK);
  CHECK(flags == (SCORESEQ_CLASS_VALID | SCORESEQ_CLASS_SELF_COMPLEMENTARY |
                  SCORESEQ_CLASS_STRONG |
                  SCORESEQ_CLASS_STRONG_SELF_COMPLEMENTARY));

  const long long transitive[] = {0, 1, 2, 3, 4, 5};
  REQUIRE(scoreseq_classify(ctx, transitive, 6, &flags) == SCORESEQ_OK);
  CHECK(flags == (SCORESEQ_CLASS_VALID | SCORESEQ_CLASS_SELF_COMPLEMENTARY));

  const long long invalid[] = {0, 0, 1};
  REQUIRE(scoreseq_classify(ctx, invalid, 3, &flags) == SCORESEQ_OK);
  CHECK(flags == 0);

  const long long unsorted[] = {5, 1};
  CHECK(scoreseq_classify(ctx, unsorted, 2, &flags) == SCORESEQ_ERR_INVALID);
  REQUIRE(scoreseq_classify(ctx, nullptr, 0, &flags) == SCORESEQ_OK);
  CHECK(flags == (SCORESEQ_CLASS_VALID | SCORESEQ_CLASS_SELF_COMPLEMENTARY |
                  SCORESEQ_CLASS_STRONG |
                  SCORESEQ_CLASS_STRONG_SELF_COMPLEMENTARY));
  CHECK(scoreseq_classify(ctx, nullptr, 2, &flags) == SCORESEQ_ERR_INVALID);
  scoreseq_ctx_free(ctx);
}

TEST_CASE("cell budget gates table building") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  REQUIRE(scoreseq_ctx_set_cell_budget(ctx, 10) == SCORESEQ_OK);
  char* decimal = nullptr;
  CHECK(scoreseq_count(ctx, SCORESEQ_KIND_ALL, 30, SCORESEQ_METHOD_DP,
                       &decimal) == SCORESEQ_ERR_BUDGET);
  CHECK(std::strlen(scoreseq_ctx_last_error(ctx)) > 0);
  REQUIRE(scoreseq_ctx_set_cell_budget(ctx, 1ull << 31) == SCORESEQ_OK);
  CHECK(count_string(ctx, SCORESEQ_KIND_ALL, 30, SCORESEQ_METHOD_DP) ==
        scoreseq::count_all(30).str());
  scoreseq_ctx_free(ctx);
}

TEST_CASE("enumeration limit") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  REQUIRE(scoreseq_ctx_set_enumeration_limit(ctx, 5) == SCORESEQ_OK);
  const auto ignore = +[](const long long*, size_t, void*) -> int {
    return 1;
  };
  CHECK(scoreseq_enumerate(ctx, 6, SCORESEQ_KIND_ALL, ignore, nullptr) ==
        SCORESEQ_ERR_LIMIT);
  CHECK(scoreseq_enumerate(ctx, 5, SCORESEQ_KIND_ALL, ignore, nullptr) ==
        SCORESEQ_OK);
  CHECK(scoreseq_ctx_set_enumeration_limit(ctx, -1) == SCORESEQ_ERR_INVALID);
  scoreseq_ctx_free(ctx);
}

TEST_CASE("enumerate delivers rows and honors early stop") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  CallbackState state;
  const auto collect = +[](const long long* scores, size_t count,
                           void* user) -> int {
    auto* s = static_cast<CallbackState*>(user);
    s->rows.emplace_back(scores, scores + count);
    return s->stop_after < 0 ||
           static_cast<int>(s->rows.size()) < s->stop_after;
  };
  REQUIRE(scoreseq_enumerate(ctx, 5, SCORESEQ_KIND_ALL, collect, &state) ==
          SCORESEQ_OK);
  REQUIRE(state.rows.size() == 9);
  CHECK(state.rows.front() == std::vector<long long>{0, 1, 2, 3, 4});
  CHECK(state.rows.back() == std::vector<long long>{2, 2, 2, 2, 2});

  CallbackState limited;
  limited.stop_after = 3;
  REQUIRE(scoreseq_enumerate(ctx, 5, SCORESEQ_KIND_ALL, collect, &limited) ==
          SCORESEQ_OK);
  CHECK(limited.rows.size() == 3);
  scoreseq_ctx_free(ctx);
}

TEST_CASE("growth report") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  scoreseq_report* report = nullptr;
  REQUIRE(scoreseq_growth_report_new(ctx, SCORESEQ_KIND_ALL, 10, 1, &report) ==
          SCORESEQ_OK);
  REQUIRE(report != nullptr);
  CHECK(scoreseq_report_row_count(report) == 10);

  char* csv = nullptr;
  REQUIRE(scoreseq_report_csv(ctx, report, 6, &csv) == SCORESEQ_OK);
  const std::string text = take_string(csv);
  CHECK(text.rfind("n,numerator,denominator,ratio\n", 0) == 0);
  CHECK(text.find("10,1486,490,3.03265\n") != std::string::npos);

  int settle = -2;
  REQUIRE(scoreseq_report_settling_index(ctx, report, &settle) == SCORESEQ_OK);
  CHECK(settle == 4);
  int violations = -1;
  REQUIRE(scoreseq_report_violations_after(ctx, report, 4, &violations) ==
          SCORESEQ_OK);
  CHECK(violations == 0);
  REQUIRE(scoreseq_report_violations_after(ctx, report, 0, &violations) ==
          SCORESEQ_OK);
  CHECK(violations == 2);
  scoreseq_report_free(report);

  scoreseq_report* bad = nullptr;
  CHECK(scoreseq_growth_report_new(ctx, SCORESEQ_KIND_ALL, 10, 3, &bad) ==
        SCORESEQ_ERR_INVALID);
  CHECK(bad == nullptr);
  scoreseq_ctx_free(ctx);
}

TEST_CASE("fraction report") {
  scoreseq_ctx* ctx = scoreseq_ctx_new();
  REQUIRE(ctx != nullptr);
  scoreseq_report* report = nullptr;
  REQUIRE(scoreseq_fraction_report_new(ctx, 10, &report) == SCORESEQ_OK);
  REQUIRE(report != nullptr);
  CHECK(scoreseq_report_row_count(report) == 10);

  char* csv = nullptr;
  REQUIRE(scoreseq_report_csv(ctx, report, 6, &csv) == SCORESEQ_OK);
  const std::string text = take_string(csv);
  CHECK(text.find("6,22,7,3.14286\n") != std::string::npos);
  CHECK(text.find("10,1486,573,2.59337\n") != std::string::npos);

  int settle = -2;
  REQUIRE(scoreseq_report_settling_index(ctx, report, &settle) == SCORESEQ_OK);
  CHECK(settle == 6);
  scoreseq_report_free(report);
  scoreseq_ctx_free(ctx);
}

TEST_SUITE_END();
