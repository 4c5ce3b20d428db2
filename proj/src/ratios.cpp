#include "scoreseq/ratios.hpp"

#include <algorithm>
#include <stdexcept>

namespace scoreseq {

namespace {

void require_stride(int stride) {
    if (stride != 1 && stride != 2)
        throw std::invalid_argument("ratio stride must be 1 or 2");
}

Count pow10(int k) {
    Count p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

} // namespace

RatioReport growth_ratios(const SeriesTable& table, int stride) {
    require_stride(stride);
    RatioReport report;
    report.kind = table.kind;
    report.stride = stride;
    for (int n = stride; n <= table.n_max(); ++n) {
        const Count& den = table.values[static_cast<std::size_t>(n - stride)];
        if (den == 0) continue;
        report.rows.push_back({n, table.values[static_cast<std::size_t>(n)], den});
    }
    return report;
}

RatioReport growth_ratios(ClassKind kind, int n_max, int stride, const DpConfig& config) {
    require_stride(stride);
    return growth_ratios(direct_table(kind, n_max, config), stride);
}

RatioReport strong_fraction(const SeriesTable& all_table,
                            const SeriesTable& strong_table) {
    RatioReport report;
    report.kind = ClassKind::Strong;
    report.fraction = true;
    const int n_max = std::min(all_table.n_max(), strong_table.n_max());
    for (int n = 0; n <= n_max; ++n) {
        const Count& den = strong_table.values[static_cast<std::size_t>(n)];
        if (den == 0) continue;
        report.rows.push_back({n, all_table.values[static_cast<std::size_t>(n)], den});
    }
    return report;
}

RatioReport strong_fraction(int n_max, const DpConfig& config) {
    return strong_fraction(direct_table(ClassKind::All, n_max, config),
                           direct_table(ClassKind::Strong, n_max, config));
}

int compare_ratios(const RatioRow& a, const RatioRow& b) {
    const Count lhs = a.numerator * b.denominator;
    const Count rhs = b.numerator * a.denominator;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::vector<RatioViolation> monotonicity_check(const RatioReport& report,
                                               Direction direction) {
    std::vector<RatioViolation> violations;
    // Chains: consecutive rows whose n differ by the stride's parity class.
    // stride 1 is one chain; stride 2 keeps even and odd rows separate.
    int prev_index[2] = {-1, -1};
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const int chain = report.stride == 2 ? report.rows[i].n % 2 : 0;
        const int p = prev_index[chain];
        if (p >= 0) {
            const int cmp = compare_ratios(report.rows[static_cast<std::size_t>(p)],
                                           report.rows[i]);
            const bool ok = direction == Direction::Increasing ? cmp < 0 : cmp > 0;
            if (!ok)
                violations.push_back({report.rows[static_cast<std::size_t>(p)].n,
                                      report.rows[i].n});
        }
        prev_index[chain] = static_cast<int>(i);
    }
    return violations;
}

int settling_index(const RatioReport& report, Direction direction) {
    if (report.rows.empty()) return -1;
    const std::vector<RatioViolation> violations = monotonicity_check(report, direction);
    if (violations.empty()) return report.rows.front().n;
    int last_bad = -1;
    for (const RatioViolation& v : violations) last_bad = std::max(last_bad, v.prev_n);
    // First row past the last offending pair; only meaningful if some
    // comparison actually starts at or after it.
    int n0 = -1;
    for (const RatioRow& row : report.rows) {
        if (row.n > last_bad) {
            n0 = row.n;
            break;
        }
    }
    if (n0 < 0) return -1;
    int prev_index[2] = {-1, -1};
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const int chain = report.stride == 2 ? report.rows[i].n % 2 : 0;
        const int p = prev_index[chain];
        if (p >= 0 && report.rows[static_cast<std::size_t>(p)].n >= n0) return n0;
        prev_index[chain] = static_cast<int>(i);
    }
    return -1;
}

Direction conjectured_direction(const RatioReport& report) {
    return report.fraction ? Direction::Decreasing : Direction::Increasing;
}

std::string decimal_string(const Count& numerator, const Count& denominator,
                           int digits) {
    if (denominator == 0)
        throw std::invalid_argument("decimal_string: zero denominator");
    if (digits < 1)
        throw std::invalid_argument("decimal_string: digits must be positive");
    const bool negative = (numerator < 0) != (denominator < 0) && numerator != 0;
    Count a = numerator < 0 ? Count(-numerator) : numerator;
    const Count b = denominator < 0 ? Count(-denominator) : denominator;
    if (a == 0) return "0";

    // e = floor(log10(a/b)), found by exact scaling.
    int e = 0;
    if (a >= b) {
        Count t = b;
        while (t * 10 <= a) {
            t *= 10;
            ++e;
        }
    } else {
        Count t = a * 10;
        e = -1;
        while (t < b) {
            t *= 10;
            --e;
        }
    }

    // Scale so the rounded quotient carries exactly `digits` digits.
    const int shift = digits - 1 - e;
    const Count num = shift >= 0 ? Count(a * pow10(shift)) : a;
    const Count den = shift >= 0 ? b : Count(b * pow10(-shift));
    Count q = num / den;
    const Count r = num % den;
    const Count twice = r * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;
    if (q == pow10(digits)) {
        q /= 10;
        ++e;
    }

    std::string s = q.str();
    std::string out;
    if (e >= digits - 1) {
        out = s + std::string(static_cast<std::size_t>(e - digits + 1), '0');
    } else if (e >= 0) {
        out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              s.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    }
    return negative ? "-" + out : out;
}

std::string to_csv(const RatioReport& report, int digits) {
    std::string out = "n,numerator,denominator,ratio\n";
    for (const RatioRow& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += row.numerator.str();
        out += ',';
        out += row.denominator.str();
        out += ',';
        out += decimal_string(row.numerator, row.denominator, digits);
        out += '\n';
    }
    return out;
}

} // namespace scoreseq
