#include "scoreseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "scoreseq/enumerate.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/ratios.hpp"
#include "scoreseq/series.hpp"

struct scoreseq_ctx {
    scoreseq::DpConfig config;
    scoreseq::OracleConfig oracle;
    scoreseq::SeriesCache cache;
    std::string last_error;

    scoreseq_ctx() : cache(config) {}
};

struct scoreseq_report {
    scoreseq::RatioReport data;
};

namespace {

scoreseq_status fail(scoreseq_ctx* ctx, scoreseq_status status, const char* message) {
    if (ctx != nullptr) ctx->last_error = message;
    return status;
}

// Maps the in-flight exception onto a status code; call from a catch block.
scoreseq_status translate(scoreseq_ctx* ctx) {
    try {
        throw;
    } catch (const scoreseq::MethodMismatch& e) {
        return fail(ctx, SCORESEQ_ERR_MISMATCH, e.what());
    } catch (const scoreseq::CellBudgetExceeded& e) {
        return fail(ctx, SCORESEQ_ERR_BUDGET, e.what());
    } catch (const scoreseq::EnumerationLimitExceeded& e) {
        return fail(ctx, SCORESEQ_ERR_LIMIT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ctx, SCORESEQ_ERR_NOMEM, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(ctx, SCORESEQ_ERR_INVALID, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ctx, SCORESEQ_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, SCORESEQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ctx, SCORESEQ_ERR_INTERNAL, "unknown error");
    }
}

bool to_kind(scoreseq_kind kind, scoreseq::ClassKind* out) {
    switch (kind) {
        case SCORESEQ_KIND_ALL: *out = scoreseq::ClassKind::All; return true;
        case SCORESEQ_KIND_SELF_COMPLEMENTARY:
            *out = scoreseq::ClassKind::SelfComplementary;
            return true;
        case SCORESEQ_KIND_STRONG: *out = scoreseq::ClassKind::Strong; return true;
        case SCORESEQ_KIND_STRONG_SELF_COMPLEMENTARY:
            *out = scoreseq::ClassKind::StrongSelfComplementary;
            return true;
    }
    return false;
}

bool to_method(scoreseq_method method, scoreseq::ClassKind kind, scoreseq::Method* out) {
    switch (method) {
        case SCORESEQ_METHOD_DEFAULT: *out = scoreseq::default_method(kind); return true;
        case SCORESEQ_METHOD_DP: *out = scoreseq::Method::DirectDp; return true;
        case SCORESEQ_METHOD_RECURRENCE: *out = scoreseq::Method::Recurrence; return true;
        case SCORESEQ_METHOD_BOTH: *out = scoreseq::Method::Both; return true;
    }
    return false;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Series values 0..n_max through the cache; Method::Both cross-checks every
// row and throws on the first disagreement.
scoreseq::SeriesTable cached_table(scoreseq_ctx* ctx, scoreseq::ClassKind kind,
                                   scoreseq::Method method, int n_max) {
    ctx->cache.ensure(kind, method, n_max);
    scoreseq::SeriesTable table;
    table.kind = kind;
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        table.values.push_back(ctx->cache.value(kind, n, method));
    return table;
}

} // namespace

const char* scoreseq_version(void) { return "1.0.0"; }

scoreseq_ctx* scoreseq_ctx_new(void) {
    try {
        return new scoreseq_ctx();
    } catch (...) {
        return nullptr;
    }
}

void scoreseq_ctx_free(scoreseq_ctx* ctx) { delete ctx; }

const char* scoreseq_ctx_last_error(const scoreseq_ctx* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

scoreseq_status scoreseq_ctx_set_cell_budget(scoreseq_ctx* ctx, uint64_t cells) {
    if (ctx == nullptr) return SCORESEQ_ERR_INVALID;
    try {
        ctx->config.cell_budget = cells;
        ctx->cache = scoreseq::SeriesCache(ctx->config);
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_ctx_set_enumeration_limit(scoreseq_ctx* ctx, int limit) {
    if (ctx == nullptr) return SCORESEQ_ERR_INVALID;
    if (limit < 0) return fail(ctx, SCORESEQ_ERR_INVALID, "enumeration limit must be nonnegative");
    ctx->oracle.limit = limit;
    return SCORESEQ_OK;
}

scoreseq_status scoreseq_count(scoreseq_ctx* ctx, scoreseq_kind kind, int n,
                               scoreseq_method method, char** out_decimal) {
    if (ctx == nullptr || out_decimal == nullptr) return SCORESEQ_ERR_INVALID;
    *out_decimal = nullptr;
    scoreseq::ClassKind kind_value;
    if (!to_kind(kind, &kind_value)) return fail(ctx, SCORESEQ_ERR_INVALID, "unknown kind");
    scoreseq::Method method_value;
    if (!to_method(method, kind_value, &method_value))
        return fail(ctx, SCORESEQ_ERR_INVALID, "unknown method");
    try {
        const scoreseq::Count value = ctx->cache.checked(kind_value, n, method_value);
        *out_decimal = dup_string(value.str());
        if (*out_decimal == nullptr) return fail(ctx, SCORESEQ_ERR_NOMEM, "out of memory");
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

void scoreseq_string_free(char* s) { std::free(s); }

scoreseq_status scoreseq_classify(scoreseq_ctx* ctx, const long long* scores,
                                  size_t count, unsigned* out_flags) {
    if (ctx == nullptr || out_flags == nullptr) return SCORESEQ_ERR_INVALID;
    if (scores == nullptr && count > 0)
        return fail(ctx, SCORESEQ_ERR_INVALID, "null scores");
    *out_flags = 0;
    try {
        const scoreseq::ClassSet set =
            scoreseq::classify(std::span<const long long>(scores, count));
        unsigned flags = 0;
        if (set.all) flags |= SCORESEQ_CLASS_VALID;
        if (set.self_complementary) flags |= SCORESEQ_CLASS_SELF_COMPLEMENTARY;
        if (set.strong) flags |= SCORESEQ_CLASS_STRONG;
        if (set.strong_self_complementary)
            flags |= SCORESEQ_CLASS_STRONG_SELF_COMPLEMENTARY;
        *out_flags = flags;
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_enumerate(scoreseq_ctx* ctx, int n, scoreseq_kind kind,
                                   scoreseq_sequence_cb callback, void* user_data) {
    if (ctx == nullptr || callback == nullptr) return SCORESEQ_ERR_INVALID;
    scoreseq::ClassKind kind_value;
    if (!to_kind(kind, &kind_value)) return fail(ctx, SCORESEQ_ERR_INVALID, "unknown kind");
    try {
        scoreseq::enumerate_sequences(
            n, kind_value,
            [callback, user_data](const scoreseq::ScoreSequence& seq) {
                return callback(seq.scores().data(), seq.size(), user_data) != 0;
            },
            ctx->oracle);
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_growth_report_new(scoreseq_ctx* ctx, scoreseq_kind kind,
                                           int n_max, int stride,
                                           scoreseq_report** out_report) {
    if (ctx == nullptr || out_report == nullptr) return SCORESEQ_ERR_INVALID;
    *out_report = nullptr;
    scoreseq::ClassKind kind_value;
    if (!to_kind(kind, &kind_value)) return fail(ctx, SCORESEQ_ERR_INVALID, "unknown kind");
    try {
        const scoreseq::SeriesTable table =
            cached_table(ctx, kind_value, scoreseq::default_method(kind_value), n_max);
        *out_report = new scoreseq_report{scoreseq::growth_ratios(table, stride)};
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_fraction_report_new(scoreseq_ctx* ctx, int n_max,
                                             scoreseq_report** out_report) {
    if (ctx == nullptr || out_report == nullptr) return SCORESEQ_ERR_INVALID;
    *out_report = nullptr;
    try {
        const scoreseq::SeriesTable all =
            cached_table(ctx, scoreseq::ClassKind::All, scoreseq::Method::DirectDp, n_max);
        const scoreseq::SeriesTable strong =
            cached_table(ctx, scoreseq::ClassKind::Strong, scoreseq::Method::Both, n_max);
        *out_report = new scoreseq_report{scoreseq::strong_fraction(all, strong)};
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

void scoreseq_report_free(scoreseq_report* report) { delete report; }

int scoreseq_report_row_count(const scoreseq_report* report) {
    return report == nullptr ? 0 : static_cast<int>(report->data.rows.size());
}

scoreseq_status scoreseq_report_csv(scoreseq_ctx* ctx, const scoreseq_report* report,
                                    int digits, char** out_csv) {
    if (ctx == nullptr || report == nullptr || out_csv == nullptr)
        return SCORESEQ_ERR_INVALID;
    *out_csv = nullptr;
    try {
        *out_csv = dup_string(scoreseq::to_csv(report->data, digits));
        if (*out_csv == nullptr) return fail(ctx, SCORESEQ_ERR_NOMEM, "out of memory");
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_report_settling_index(scoreseq_ctx* ctx,
                                               const scoreseq_report* report,
                                               int* out_index) {
    if (ctx == nullptr || report == nullptr || out_index == nullptr)
        return SCORESEQ_ERR_INVALID;
    try {
        *out_index = scoreseq::settling_index(
            report->data, scoreseq::conjectured_direction(report->data));
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}

scoreseq_status scoreseq_report_violations_after(scoreseq_ctx* ctx,
                                                 const scoreseq_report* report,
                                                 int from_n, int* out_count) {
    if (ctx == nullptr || report == nullptr || out_count == nullptr)
        return SCORESEQ_ERR_INVALID;
    try {
        const std::vector<scoreseq::RatioViolation> violations =
            scoreseq::monotonicity_check(report->data,
                                         scoreseq::conjectured_direction(report->data));
        int count = 0;
        for (const scoreseq::RatioViolation& v : violations)
            if (v.prev_n >= from_n) ++count;
        *out_count = count;
        return SCORESEQ_OK;
    } catch (...) {
        return translate(ctx);
    }
}
