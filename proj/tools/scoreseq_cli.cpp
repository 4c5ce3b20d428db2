#include <cctype>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scoreseq.h"

namespace {

int status_exit(scoreseq_status status) {
    switch (status) {
        case SCORESEQ_OK: return 0;
        case SCORESEQ_ERR_INVALID: return 2;
        case SCORESEQ_ERR_MISMATCH: return 3;
        case SCORESEQ_ERR_BUDGET: return 4;
        case SCORESEQ_ERR_LIMIT: return 4;
        case SCORESEQ_ERR_NOMEM: return 4;
        case SCORESEQ_ERR_INTERNAL: return 3;
    }
    return 3;
}

int report_failure(scoreseq_ctx* ctx, scoreseq_status status) {
    std::fprintf(stderr, "error: %s\n", scoreseq_ctx_last_error(ctx));
    return status_exit(status);
}

scoreseq_kind parse_kind(const std::string& name) {
    if (name == "all") return SCORESEQ_KIND_ALL;
    if (name == "sc") return SCORESEQ_KIND_SELF_COMPLEMENTARY;
    if (name == "strong") return SCORESEQ_KIND_STRONG;
    return SCORESEQ_KIND_STRONG_SELF_COMPLEMENTARY;
}

scoreseq_method parse_method(const std::string& name) {
    if (name == "dp") return SCORESEQ_METHOD_DP;
    if (name == "recurrence") return SCORESEQ_METHOD_RECURRENCE;
    if (name == "both") return SCORESEQ_METHOD_BOTH;
    return SCORESEQ_METHOD_DEFAULT;
}

std::string trim(const std::string& s) {
    std::size_t lo = 0;
    std::size_t hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    return s.substr(lo, hi - lo);
}

bool is_integer_literal(const std::string& token) {
    if (token.empty()) return false;
    std::size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) return false;
    for (; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    return true;
}

// Decimal integer with optional leading minus; used for b-file indices and
// scores.
bool parse_integer_token(const std::string& token, long long* out) {
    if (!is_integer_literal(token)) return false;
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size()) return false;
    *out = value;
    return true;
}

// Canonical decimal form for comparisons: no leading zeros, no "-0".
std::string canonical_decimal(const std::string& token) {
    std::string digits = token;
    bool negative = false;
    if (!digits.empty() && digits[0] == '-') {
        negative = true;
        digits.erase(0, 1);
    }
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits == "0") negative = false;
    return negative ? "-" + digits : digits;
}

int fetch_count(scoreseq_ctx* ctx, scoreseq_kind kind, int n, scoreseq_method method,
                std::string* out) {
    char* text = nullptr;
    const scoreseq_status status = scoreseq_count(ctx, kind, n, method, &text);
    if (status != SCORESEQ_OK) return report_failure(ctx, status);
    *out = text;
    scoreseq_string_free(text);
    return 0;
}

int run_count(scoreseq_ctx* ctx, const std::string& kind, int n,
              const std::string& method) {
    std::string value;
    const int rc = fetch_count(ctx, parse_kind(kind), n, parse_method(method), &value);
    if (rc != 0) return rc;
    std::printf("%s\n", value.c_str());
    return 0;
}

int run_table(scoreseq_ctx* ctx, const std::string& kind_name, int from, int to,
              const std::string& format) {
    if (from > to) {
        std::fprintf(stderr, "error: --from must not exceed --to\n");
        return 2;
    }
    const scoreseq_kind kind = parse_kind(kind_name);
    std::vector<std::string> values(static_cast<std::size_t>(to - from) + 1);
    // Filling from the top first builds the whole cached table in one pass.
    int rc = fetch_count(ctx, kind, to, SCORESEQ_METHOD_DEFAULT, &values.back());
    if (rc != 0) return rc;
    for (int n = from; n < to; ++n) {
        rc = fetch_count(ctx, kind, n, SCORESEQ_METHOD_DEFAULT,
                         &values[static_cast<std::size_t>(n - from)]);
        if (rc != 0) return rc;
    }
    if (format == "csv") {
        std::printf("n,count\n");
        for (int n = from; n <= to; ++n)
            std::printf("%d,%s\n", n, values[static_cast<std::size_t>(n - from)].c_str());
    } else if (format == "bfile") {
        for (int n = from; n <= to; ++n)
            std::printf("%d %s\n", n, values[static_cast<std::size_t>(n - from)].c_str());
    } else {
        int width_n = 1;
        for (int v = to; v >= 10; v /= 10) ++width_n;
        std::size_t width_value = 1;
        for (const std::string& v : values) width_value = std::max(width_value, v.size());
        for (int n = from; n <= to; ++n)
            std::printf("%*d  %*s\n", width_n, n, static_cast<int>(width_value),
                        values[static_cast<std::size_t>(n - from)].c_str());
    }
    return 0;
}

int run_check(scoreseq_ctx* ctx, const std::string& literal) {
    std::vector<long long> scores;
    std::stringstream stream(literal);
    std::string token;
    bool any = false;
    while (std::getline(stream, token, ',')) {
        any = true;
        token = trim(token);
        long long value = 0;
        if (!parse_integer_token(token, &value)) {
            std::fprintf(stderr, "error: '%s' is not an integer\n", token.c_str());
            return 2;
        }
        if (value < 0) {
            std::fprintf(stderr, "error: scores must be nonnegative\n");
            return 2;
        }
        scores.push_back(value);
    }
    if (!any) {
        std::fprintf(stderr, "error: empty sequence\n");
        return 2;
    }
    bool ordered = true;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] < scores[i - 1]) ordered = false;
    unsigned flags = 0;
    if (ordered) {
        const scoreseq_status status =
            scoreseq_classify(ctx, scores.data(), scores.size(), &flags);
        if (status != SCORESEQ_OK) return report_failure(ctx, status);
    }
    const auto line = [&flags](const char* label, unsigned mask) {
        std::printf("%s: %s\n", label, (flags & mask) != 0 ? "yes" : "no");
    };
    line("score-sequence", SCORESEQ_CLASS_VALID);
    line("strong", SCORESEQ_CLASS_STRONG);
    line("self-complementary", SCORESEQ_CLASS_SELF_COMPLEMENTARY);
    line("strong-self-complementary", SCORESEQ_CLASS_STRONG_SELF_COMPLEMENTARY);
    return (flags & SCORESEQ_CLASS_VALID) != 0 ? 0 : 1;
}

int run_verify(scoreseq_ctx* ctx, const std::string& kind_name, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        return 2;
    }
    struct Row {
        int n;
        std::string value;
    };
    std::vector<Row> rows;
    std::string line;
    int lineno = 0;
    long long prev_n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string n_token, value_token, extra;
        if (!(fields >> n_token >> value_token) || (fields >> extra)) {
            std::fprintf(stderr, "error: %s:%d: expected 'n value'\n", path.c_str(), lineno);
            return 2;
        }
        long long n = 0;
        if (!parse_integer_token(n_token, &n) || n < 0 || n > 1000000) {
            std::fprintf(stderr, "error: %s:%d: bad index '%s'\n", path.c_str(), lineno,
                         n_token.c_str());
            return 2;
        }
        if (!is_integer_literal(value_token)) {
            std::fprintf(stderr, "error: %s:%d: bad value '%s'\n", path.c_str(), lineno,
                         value_token.c_str());
            return 2;
        }
        if (n <= prev_n) {
            std::fprintf(stderr, "error: %s:%d: indices must be strictly increasing\n",
                         path.c_str(), lineno);
            return 2;
        }
        prev_n = n;
        rows.push_back({static_cast<int>(n), canonical_decimal(value_token)});
    }
    if (rows.empty()) {
        std::fprintf(stderr, "warning: %s: no data rows\n", path.c_str());
        return 0;
    }
    const scoreseq_kind kind = parse_kind(kind_name);
    std::string warm;
    int rc = fetch_count(ctx, kind, rows.back().n, SCORESEQ_METHOD_DEFAULT, &warm);
    if (rc != 0) return rc;
    int mismatches = 0;
    for (const Row& row : rows) {
        std::string computed;
        rc = fetch_count(ctx, kind, row.n, SCORESEQ_METHOD_DEFAULT, &computed);
        if (rc != 0) return rc;
        if (computed != row.value) {
            std::printf("mismatch at n=%d: computed %s, file has %s\n", row.n,
                        computed.c_str(), row.value.c_str());
            ++mismatches;
        }
    }
    return mismatches > 0 ? 1 : 0;
}

struct EnumerationTally {
    unsigned long long count = 0;
};

extern "C" int print_sequence_cb(const long long* scores, size_t count, void* user_data) {
    auto* tally = static_cast<EnumerationTally*>(user_data);
    ++tally->count;
    std::string line;
    for (size_t i = 0; i < count; ++i) {
        if (i > 0) line += ',';
        line += std::to_string(scores[i]);
    }
    std::printf("%s\n", line.c_str());
    return 1;
}

int run_enumerate(scoreseq_ctx* ctx, int n, const std::string& kind_name) {
    EnumerationTally tally;
    const scoreseq_status status =
        scoreseq_enumerate(ctx, n, parse_kind(kind_name), print_sequence_cb, &tally);
    if (status != SCORESEQ_OK) return report_failure(ctx, status);
    std::printf("count: %llu\n", tally.count);
    return 0;
}

int run_ratios(scoreseq_ctx* ctx, const std::string& kind_name, int to, int stride,
               int digits, bool fraction, bool strict, int settle) {
    const scoreseq_kind kind = parse_kind(kind_name);
    if (fraction && kind != SCORESEQ_KIND_STRONG) {
        std::fprintf(stderr, "error: --fraction applies only to --kind strong\n");
        return 2;
    }
    if (stride == 0) {
        stride = (kind == SCORESEQ_KIND_SELF_COMPLEMENTARY ||
                  kind == SCORESEQ_KIND_STRONG_SELF_COMPLEMENTARY)
                     ? 2
                     : 1;
    }
    scoreseq_report* report = nullptr;
    const scoreseq_status status =
        fraction ? scoreseq_fraction_report_new(ctx, to, &report)
                 : scoreseq_growth_report_new(ctx, kind, to, stride, &report);
    if (status != SCORESEQ_OK) return report_failure(ctx, status);
    char* csv = nullptr;
    const scoreseq_status csv_status = scoreseq_report_csv(ctx, report, digits, &csv);
    if (csv_status != SCORESEQ_OK) {
        scoreseq_report_free(report);
        return report_failure(ctx, csv_status);
    }
    std::fputs(csv, stdout);
    scoreseq_string_free(csv);
    int settled = -1;
    scoreseq_report_settling_index(ctx, report, &settled);
    if (settled >= 0)
        std::fprintf(stderr, "settled from n=%d\n", settled);
    else
        std::fprintf(stderr, "trend not settled on the computed range\n");
    int rc = 0;
    if (strict) {
        const int from = settle >= 0 ? settle : settled;
        if (from < 0) {
            rc = 1;
        } else {
            int violations = 0;
            scoreseq_report_violations_after(ctx, report, from, &violations);
            if (violations > 0) {
                std::fprintf(stderr, "%d violation(s) at or past n=%d\n", violations, from);
                rc = 1;
            }
        }
    }
    scoreseq_report_free(report);
    return rc;
}

bool parse_budget(const char* text, std::uint64_t* out) {
    if (text == nullptr || *text == '\0') return false;
    for (const char* p = text; *p != '\0'; ++p)
        if (!std::isdigit(static_cast<unsigned char>(*p))) return false;
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (errno != 0 || *end != '\0') return false;
    *out = value;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tournament score-sequence counting, classification, and ratio reports"};
    app.set_version_flag("--version", scoreseq_version());
    app.require_subcommand(1);

    std::string count_kind, count_method = "default";
    int count_n = 0;
    CLI::App* count_cmd =
        app.add_subcommand("count", "Count the length-n score sequences in one class");
    count_cmd->add_option("--kind", count_kind, "Class: all, sc, strong, ssc")
        ->required()
        ->check(CLI::IsMember({"all", "sc", "strong", "ssc"}));
    count_cmd->add_option("--n", count_n, "Sequence length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd
        ->add_option("--method", count_method,
                     "dp, recurrence, or both (default: both where available)")
        ->check(CLI::IsMember({"dp", "recurrence", "both"}));

    std::string table_kind, table_format = "plain";
    int table_from = 0, table_to = 0;
    CLI::App* table_cmd = app.add_subcommand("table", "Print a table of counts");
    table_cmd->add_option("--kind", table_kind, "Class: all, sc, strong, ssc")
        ->required()
        ->check(CLI::IsMember({"all", "sc", "strong", "ssc"}));
    table_cmd->add_option("--from", table_from, "First n (default 0)")
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--to", table_to, "Last n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--format", table_format, "plain, csv, or bfile")
        ->check(CLI::IsMember({"plain", "csv", "bfile"}));

    std::string check_literal;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Classify one comma-separated score sequence");
    check_cmd->add_option("sequence", check_literal, "e.g. 1,1,2,3,4,4")->required();

    std::string verify_kind, verify_path;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Compare computed counts against a b-file");
    verify_cmd->add_option("--kind", verify_kind, "Class: all, sc, strong, ssc")
        ->required()
        ->check(CLI::IsMember({"all", "sc", "strong", "ssc"}));
    verify_cmd->add_option("file", verify_path, "b-file path ('n value' lines)")
        ->required();

    std::string enumerate_kind = "all";
    int enumerate_n = 0;
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "List the score sequences of length n");
    enumerate_cmd->add_option("--n", enumerate_n, "Sequence length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--kind", enumerate_kind, "Class: all, sc, strong, ssc")
        ->check(CLI::IsMember({"all", "sc", "strong", "ssc"}));

    std::string ratios_kind;
    int ratios_to = 0, ratios_stride = 0, ratios_digits = 6, ratios_settle = -1;
    bool ratios_fraction = false, ratios_strict = false;
    CLI::App* ratios_cmd =
        app.add_subcommand("ratios", "CSV growth-ratio or strong-fraction report");
    ratios_cmd->add_option("--kind", ratios_kind, "Class: all, sc, strong, ssc")
        ->required()
        ->check(CLI::IsMember({"all", "sc", "strong", "ssc"}));
    ratios_cmd->add_option("--to", ratios_to, "Last n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    CLI::Option* stride_opt =
        ratios_cmd
            ->add_option("--stride", ratios_stride,
                         "Ratio step, 1 or 2 (default: 2 for sc/ssc, else 1)")
            ->check(CLI::Range(1, 2));
    ratios_cmd->add_option("--digits", ratios_digits, "Significant digits (default 6)")
        ->check(CLI::Range(1, 50));
    CLI::Option* fraction_opt = ratios_cmd->add_flag(
        "--fraction", ratios_fraction, "Report all(n)/strong(n) instead of growth");
    CLI::Option* strict_opt = ratios_cmd->add_flag(
        "--strict", ratios_strict, "Exit 1 on monotonicity violations past the settling index");
    ratios_cmd
        ->add_option("--settle", ratios_settle,
                     "Override the settling index used by --strict")
        ->check(CLI::NonNegativeNumber)
        ->needs(strict_opt);
    fraction_opt->excludes(stride_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    scoreseq_ctx* ctx = scoreseq_ctx_new();
    if (ctx == nullptr) {
        std::fprintf(stderr, "error: out of memory\n");
        return 4;
    }
    int rc = 0;
    if (const char* env = std::getenv("SCORESEQ_CELL_BUDGET")) {
        std::uint64_t budget = 0;
        if (!parse_budget(env, &budget)) {
            std::fprintf(stderr, "error: SCORESEQ_CELL_BUDGET must be a nonnegative integer\n");
            rc = 2;
        } else {
            scoreseq_ctx_set_cell_budget(ctx, budget);
        }
    }
    if (rc == 0) {
        if (app.got_subcommand(count_cmd)) {
            rc = run_count(ctx, count_kind, count_n, count_method);
        } else if (app.got_subcommand(table_cmd)) {
            rc = run_table(ctx, table_kind, table_from, table_to, table_format);
        } else if (app.got_subcommand(check_cmd)) {
            rc = run_check(ctx, check_literal);
        } else if (app.got_subcommand(verify_cmd)) {
            rc = run_verify(ctx, verify_kind, verify_path);
        } else if (app.got_subcommand(enumerate_cmd)) {
            rc = run_enumerate(ctx, enumerate_n, enumerate_kind);
        } else if (app.got_subcommand(ratios_cmd)) {
            rc = run_ratios(ctx, ratios_kind, ratios_to, ratios_stride, ratios_digits,
                            ratios_fraction, ratios_strict, ratios_settle);
        }
    }
    scoreseq_ctx_free(ctx);
    return rc;
}
