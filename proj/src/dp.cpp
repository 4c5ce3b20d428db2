#include "scoreseq/dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "scoreseq/errors.hpp"
#include "scoreseq/score_sequence.hpp"

namespace scoreseq {

namespace {

std::uint64_t layer_cells(long long max_last, long long max_total) {
    return (static_cast<std::uint64_t>(max_total) + 1) *
           (static_cast<std::uint64_t>(max_last) + 1);
}

// Budget gate and instrumentation, run before a layer is allocated.
void charge_layer(const DpConfig& config, long long max_last, long long max_total,
                  int length) {
    const std::uint64_t cells = layer_cells(max_last, max_total);
    if (cells > config.cell_budget) {
        throw CellBudgetExceeded(
            "dp layer of " + std::to_string(cells) + " cells exceeds budget of " +
            std::to_string(config.cell_budget));
    }
    if (config.stats != nullptr) {
        config.stats->layers_built += 1;
        config.stats->max_length = std::max(config.stats->max_length, length);
        config.stats->cells_touched += cells;
    }
}

void require_bounds(long long max_last, long long max_total) {
    if (max_last < 0 || max_total < 0)
        throw std::invalid_argument("dp layer bounds must be nonnegative");
}

} // namespace

DpLayer::DpLayer(DpVariant variant, int length, long long max_last, long long max_total)
    : variant_(variant),
      length_(length),
      max_last_(max_last),
      max_total_(max_total),
      cells_(layer_cells(max_last, max_total)) {}

Count& DpLayer::at(long long total, long long last) {
    return cells_[static_cast<std::size_t>(total * (max_last_ + 1) + last)];
}

const Count& DpLayer::at(long long total, long long last) const {
    return cells_[static_cast<std::size_t>(total * (max_last_ + 1) + last)];
}

const Count& DpLayer::cell(long long total, long long last) const {
    if (total < 0 || total > max_total_ || last < 0 || last > max_last_) {
        throw std::out_of_range(
            "dp cell (" + std::to_string(total) + ", " + std::to_string(last) +
            ") outside layer bounds (" + std::to_string(max_total_) + ", " +
            std::to_string(max_last_) + ")");
    }
    return at(total, last);
}

DpLayer base_layer(DpVariant variant, long long max_last, long long max_total,
                   const DpConfig& config) {
    require_bounds(max_last, max_total);
    charge_layer(config, max_last, max_total, 1);
    DpLayer layer(variant, 1, max_last, max_total);
    const long long top = std::min(max_last, max_total);
    for (long long t = 0; t <= top; ++t) layer.at(t, t) = 1;
    return layer;
}

DpLayer next_layer(const DpLayer& prev, const DpConfig& config) {
    const int n = prev.length() + 1;
    charge_layer(config, prev.max_last(), prev.max_total(), n);
    DpLayer layer(prev.variant(), n, prev.max_last(), prev.max_total());

    // cell(T, E) = sum over k <= E of prev(T-E, k), nonzero only when the
    // leading total d = T-E meets the variant's bound. Walking each diagonal
    // of constant d in ascending E turns the sum into a running prefix.
    const long long bound = binom2(n - 1);
    const long long d_lo = prev.variant() == DpVariant::Strict ? bound + 1 : bound;
    for (long long d = d_lo; d <= prev.max_total(); ++d) {
        const long long e_hi = std::min(prev.max_last(), prev.max_total() - d);
        Count running = 0;
        for (long long e = 0; e <= e_hi; ++e) {
            running += prev.at(d, e);
            layer.at(d + e, e) = running;
        }
    }
    return layer;
}

DpLayer build(const DpRequest& request, const DpConfig& config) {
    if (request.target_length < 1)
        throw std::invalid_argument("dp build: target length must be at least 1");
    require_bounds(request.max_last, request.max_total);
    DpLayer layer = base_layer(request.variant, request.max_last, request.max_total, config);
    for (int n = 2; n <= request.target_length; ++n) layer = next_layer(layer, config);
    return layer;
}

Count cell_sum(const DpLayer& layer, long long total, long long last_lo, long long last_hi) {
    if (last_lo > last_hi) return 0;
    if (total < 0 || total > layer.max_total() || last_lo < 0 ||
        last_hi > layer.max_last()) {
        throw std::out_of_range("dp cell_sum range outside layer bounds");
    }
    Count sum = 0;
    for (long long e = last_lo; e <= last_hi; ++e) sum += layer.cell(total, e);
    return sum;
}

} // namespace scoreseq
