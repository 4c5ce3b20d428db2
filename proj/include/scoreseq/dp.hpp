#ifndef SCORESEQ_DP_HPP
#define SCORESEQ_DP_HPP

#include <cstdint>
#include <vector>

#include "scoreseq/count.hpp"

namespace scoreseq {

// Which prefix-sum condition a table enforces. Weak requires every proper
// prefix sum to reach C(r,2); Strict requires it to exceed C(r,2). Weak
// tables count arbitrary score-sequence prefixes, Strict tables count
// prefixes of strong ones.
enum class DpVariant {
    Weak,
    Strict,
};

struct DpStats {
    int layers_built = 0;
    int max_length = 0;                 // largest sequence length materialized
    std::uint64_t cells_touched = 0;
};

struct DpConfig {
    // A single layer may not exceed this many cells. Large enough for the
    // full n = 100 sweep about eight hundred times over; a guardrail, not a
    // tuning knob.
    std::uint64_t cell_budget = std::uint64_t{1} << 31;
    DpStats* stats = nullptr;           // optional instrumentation sink
};

// One layer of a counting table: for a fixed sequence length n, cell(T, E)
// is the number of nondecreasing nonnegative sequences of that length with
// total T, last term E, and every proper prefix sum within the variant's
// bound. Immutable once built; safe for concurrent reads.
class DpLayer {
public:
    DpVariant variant() const { return variant_; }
    int length() const { return length_; }
    long long max_last() const { return max_last_; }
    long long max_total() const { return max_total_; }

    // Bounds-checked cell access; throws std::out_of_range.
    const Count& cell(long long total, long long last) const;

private:
    DpLayer(DpVariant variant, int length, long long max_last, long long max_total);

    Count& at(long long total, long long last);
    const Count& at(long long total, long long last) const;

    DpVariant variant_ = DpVariant::Weak;
    int length_ = 0;
    long long max_last_ = 0;
    long long max_total_ = 0;
    std::vector<Count> cells_;          // dense, row per total

    friend DpLayer base_layer(DpVariant, long long, long long, const DpConfig&);
    friend DpLayer next_layer(const DpLayer&, const DpConfig&);
};

struct DpRequest {
    DpVariant variant = DpVariant::Weak;
    int target_length = 1;              // >= 1
    long long max_last = 0;             // >= 0
    long long max_total = 0;            // >= 0
};

// The length-1 layer: cell(T, E) = 1 iff T == E.
DpLayer base_layer(DpVariant variant, long long max_last, long long max_total,
                   const DpConfig& config = {});

// Extends a layer by one term. A cell (T, E) of the new layer sums the
// previous layer's cells (T-E, k) for k <= E, and is zero unless T-E meets
// the variant's bound C(n-1,2) (>= for Weak, > for Strict). The prefix over
// k is carried along diagonals of constant T-E, so each cell costs O(1)
// big-integer work.
DpLayer next_layer(const DpLayer& prev, const DpConfig& config = {});

// Iterates base_layer/next_layer up to the requested length. Deterministic:
// equal requests yield cell-identical layers. Throws CellBudgetExceeded if
// the layer size exceeds config.cell_budget, std::invalid_argument on a
// malformed request.
DpLayer build(const DpRequest& request, const DpConfig& config = {});

// Sum of cell(total, E) over last_lo <= E <= last_hi; zero when the range
// is empty. Throws std::out_of_range when total or a nonempty range falls
// outside the layer.
Count cell_sum(const DpLayer& layer, long long total, long long last_lo, long long last_hi);

} // namespace scoreseq

#endif
