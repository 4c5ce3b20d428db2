#ifndef SCORESEQ_RATIOS_HPP
#define SCORESEQ_RATIOS_HPP

#include <string>
#include <vector>

#include "scoreseq/count.hpp"
#include "scoreseq/series.hpp"

namespace scoreseq {

struct RatioRow {
    int n = 0;
    Count numerator;
    Count denominator;      // nonzero by construction
};

struct RatioReport {
    ClassKind kind = ClassKind::All;
    bool fraction = false;  // true: rows are all/strong quotients at the same n
    int stride = 1;         // growth rows divide by the value stride earlier
    std::vector<RatioRow> rows;
};

enum class Direction { Increasing, Decreasing };

struct RatioViolation {
    int prev_n = 0;
    int n = 0;
};

// value(n) / value(n - stride), ascending n, skipping zero denominators.
RatioReport growth_ratios(const SeriesTable& table, int stride = 1);
RatioReport growth_ratios(ClassKind kind, int n_max, int stride = 1,
                          const DpConfig& config = {});

// all(n) / strong(n) for every n with strong(n) > 0.
RatioReport strong_fraction(const SeriesTable& all_table,
                            const SeriesTable& strong_table);
RatioReport strong_fraction(int n_max, const DpConfig& config = {});

// Sign of a - b as exact rationals (cross-multiplied; denominators > 0).
int compare_ratios(const RatioRow& a, const RatioRow& b);

// Strict monotonicity over consecutive rows, compared within the report's
// stride chains (stride 2 never compares an even-n row with an odd-n row).
// Ties count as violations.
std::vector<RatioViolation> monotonicity_check(const RatioReport& report,
                                               Direction direction);

// Smallest row n0 such that every chain comparison whose earlier row is at
// least n0 satisfies the direction; -1 when the trend has not settled by
// the last row (or the report is empty).
int settling_index(const RatioReport& report, Direction direction);

// The direction each report is expected to approach its limit from.
Direction conjectured_direction(const RatioReport& report);

// Fixed-significant-digit decimal (round half to even), plain notation.
// denominator must be nonzero; digits >= 1.
std::string decimal_string(const Count& numerator, const Count& denominator,
                           int digits = 6);

// Header n,numerator,denominator,ratio; LF line endings; byte-stable.
std::string to_csv(const RatioReport& report, int digits = 6);

} // namespace scoreseq

#endif
