#ifndef SCORESEQ_SERIES_HPP
#define SCORESEQ_SERIES_HPP

#include <vector>

#include "scoreseq/count.hpp"
#include "scoreseq/dp.hpp"
#include "scoreseq/score_sequence.hpp"

namespace scoreseq {

enum class Method {
    DirectDp,       // evaluate the counting table directly
    Recurrence,     // bootstrap from previously counted series
    Both,           // run both and require agreement
};

struct SeriesTable {
    ClassKind kind = ClassKind::All;
    Method method = Method::DirectDp;
    std::vector<Count> values;          // values[n] for n = 0..n_max

    int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// Single-value counts. Each builds exactly the table slice its summation
// needs; n = 0 (and n = 1 for the self-complementary kinds) are convention
// constants and involve no table work.
Count count_all(int n, const DpConfig& config = {});
Count count_self_complementary(int n, const DpConfig& config = {});
Count count_strong_direct(int n, const DpConfig& config = {});
Count count_ssc_direct(int n, const DpConfig& config = {});

// Whole-series sweep for one kind by the direct method. A single rolling
// pass over the layers serves every n, so this is the cheap way to fill a
// table of values 0..n_max.
SeriesTable direct_table(ClassKind kind, int n_max, const DpConfig& config = {});

// Strong counts without strict tables: peel the strong prefix of each
// reducible sequence, giving SS(n) = S(n) - sum_{i=1}^{n-1} SS(i) S(n-i).
SeriesTable count_strong_recurrence(int n_max, const DpConfig& config = {});

// Strong self-complementary counts from the strong and self-complementary
// series: SSCS(n) = SCS(n) - sum_{i=1}^{floor(n/2)} SS(i) SCS(n-2i). Uses
// recurrence-derived SS, so this route never touches a strict table.
SeriesTable count_ssc_recurrence(int n_max, const DpConfig& config = {});

// Dispatch over kind and method. Method::Both computes both routes and
// throws MethodMismatch on any disagreement; Recurrence/Both are only valid
// for the strong kinds (std::invalid_argument otherwise).
Count count(ClassKind kind, int n, Method method, const DpConfig& config = {});

Method default_method(ClassKind kind);

// Memoized series tables, grown on demand (amortized doubling). Build is
// single-writer; a fully built cache is safe for concurrent reads.
class SeriesCache {
public:
    explicit SeriesCache(DpConfig config = {});

    const Count& value(ClassKind kind, int n, Method method);
    Count checked(ClassKind kind, int n, Method method);    // Both-aware copy

    // Ensure tables cover 0..n_max for the kind/method pair.
    void ensure(ClassKind kind, Method method, int n_max);

    const DpConfig& config() const { return config_; }

private:
    SeriesTable& slot(ClassKind kind, Method method);
    void grow(SeriesTable& table, ClassKind kind, Method method, int n_max);

    DpConfig config_;
    SeriesTable all_;
    SeriesTable self_complementary_;
    SeriesTable strong_direct_;
    SeriesTable strong_recurrence_;
    SeriesTable ssc_direct_;
    SeriesTable ssc_recurrence_;
};

} // namespace scoreseq

#endif
