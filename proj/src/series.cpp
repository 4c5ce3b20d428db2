#include "scoreseq/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

bool has_two_methods(ClassKind kind) {
    return kind == ClassKind::Strong || kind == ClassKind::StrongSelfComplementary;
}

void require_n(int n) {
    if (n < 0) throw std::invalid_argument("count: n must be nonnegative");
}

// Tail sum of one full-length layer: end values from the average ceil((n-1)/2)
// up to n-1, at the exact total C(n,2).
Count full_length_sum(const DpLayer& layer, int n) {
    return cell_sum(layer, binom2(n), n / 2, n - 1);
}

// Double sum over the half-length layer m that folds mirror-symmetric
// sequences onto their first half: totals from C(m,2) (shifted by one in the
// strict variant) up to m(m-1) for even length 2m or m*m for odd 2m+1, end
// values from the average ceil(T/m) up to m-1 (even) or m (odd).
Count half_fold_sum(const DpLayer& layer, long long m, bool odd, bool strict) {
    const long long t_lo = binom2(m) + (strict ? 1 : 0);
    const long long t_hi = odd ? m * m : m * (m - 1);
    const long long e_hi = odd ? m : m - 1;
    Count total = 0;
    for (long long t = t_lo; t <= t_hi; ++t)
        total += cell_sum(layer, t, ceil_div(t, m), e_hi);
    return total;
}

Count half_fold_count(int n, DpVariant variant, const DpConfig& config) {
    const long long m = n / 2;
    const bool odd = n % 2 != 0;
    DpRequest request;
    request.variant = variant;
    request.target_length = static_cast<int>(m);
    request.max_last = odd ? m : m - 1;
    request.max_total = odd ? m * m : m * (m - 1);
    const DpLayer layer = build(request, config);
    return half_fold_sum(layer, m, odd, variant == DpVariant::Strict);
}

Count full_length_count(int n, DpVariant variant, const DpConfig& config) {
    DpRequest request;
    request.variant = variant;
    request.target_length = n;
    request.max_last = n - 1;
    request.max_total = binom2(n);
    const DpLayer layer = build(request, config);
    return full_length_sum(layer, n);
}

} // namespace

Count count_all(int n, const DpConfig& config) {
    require_n(n);
    if (n == 0) return 1;
    return full_length_count(n, DpVariant::Weak, config);
}

Count count_self_complementary(int n, const DpConfig& config) {
    require_n(n);
    if (n <= 1) return 1;
    return half_fold_count(n, DpVariant::Weak, config);
}

Count count_strong_direct(int n, const DpConfig& config) {
    require_n(n);
    if (n == 0) return 1;
    return full_length_count(n, DpVariant::Strict, config);
}

Count count_ssc_direct(int n, const DpConfig& config) {
    require_n(n);
    if (n <= 1) return 1;
    return half_fold_count(n, DpVariant::Strict, config);
}

SeriesTable direct_table(ClassKind kind, int n_max, const DpConfig& config) {
    require_n(n_max);
    SeriesTable table;
    table.kind = kind;
    table.method = Method::DirectDp;
    table.values.assign(static_cast<std::size_t>(n_max) + 1, Count(0));
    table.values[0] = 1;

    switch (kind) {
        case ClassKind::All:
        case ClassKind::Strong: {
            if (n_max < 1) break;
            const DpVariant variant =
                kind == ClassKind::Strong ? DpVariant::Strict : DpVariant::Weak;
            // One rolling pass: a layer built under the widest bounds holds
            // the same cell values as any narrower build, so layer n serves
            // the length-n sum directly.
            DpLayer layer = base_layer(variant, n_max - 1, binom2(n_max), config);
            table.values[1] = layer.cell(0, 0);
            for (int n = 2; n <= n_max; ++n) {
                layer = next_layer(layer, config);
                table.values[n] = full_length_sum(layer, n);
            }
            break;
        }
        case ClassKind::SelfComplementary:
        case ClassKind::StrongSelfComplementary: {
            if (n_max >= 1) table.values[1] = 1;
            const long long m_top = n_max / 2;
            if (m_top < 1) break;
            const bool strict = kind == ClassKind::StrongSelfComplementary;
            DpLayer layer = base_layer(strict ? DpVariant::Strict : DpVariant::Weak,
                                       m_top, m_top * m_top, config);
            for (long long m = 1; m <= m_top; ++m) {
                if (m > 1) layer = next_layer(layer, config);
                if (2 * m <= n_max)
                    table.values[static_cast<std::size_t>(2 * m)] =
                        half_fold_sum(layer, m, false, strict);
                if (2 * m + 1 <= n_max)
                    table.values[static_cast<std::size_t>(2 * m + 1)] =
                        half_fold_sum(layer, m, true, strict);
            }
            break;
        }
    }
    return table;
}

SeriesTable count_strong_recurrence(int n_max, const DpConfig& config) {
    require_n(n_max);
    const SeriesTable all = direct_table(ClassKind::All, n_max, config);
    SeriesTable table;
    table.kind = ClassKind::Strong;
    table.method = Method::Recurrence;
    table.values.assign(static_cast<std::size_t>(n_max) + 1, Count(0));
    table.values[0] = 1;
    // Peeling the strong prefix of every reducible sequence gives
    // value(n) = all(n) - sum over i of value(i) * all(n - i).
    for (int n = 1; n <= n_max; ++n) {
        Count v = all.values[static_cast<std::size_t>(n)];
        for (int i = 1; i < n; ++i)
            v -= table.values[static_cast<std::size_t>(i)] *
                 all.values[static_cast<std::size_t>(n - i)];
        table.values[static_cast<std::size_t>(n)] = std::move(v);
    }
    return table;
}

SeriesTable count_ssc_recurrence(int n_max, const DpConfig& config) {
    require_n(n_max);
    const SeriesTable sc = direct_table(ClassKind::SelfComplementary, n_max, config);
    const SeriesTable strong = count_strong_recurrence(n_max, config);
    SeriesTable table;
    table.kind = ClassKind::StrongSelfComplementary;
    table.method = Method::Recurrence;
    table.values.assign(static_cast<std::size_t>(n_max) + 1, Count(0));
    table.values[0] = 1;
    // Mirror-symmetric sequences decompose with a strong block of length i
    // at each end, so the subtrahend pairs strong(i) with sc(n - 2i).
    for (int n = 1; n <= n_max; ++n) {
        Count v = sc.values[static_cast<std::size_t>(n)];
        for (int i = 1; 2 * i <= n; ++i)
            v -= strong.values[static_cast<std::size_t>(i)] *
                 sc.values[static_cast<std::size_t>(n - 2 * i)];
        table.values[static_cast<std::size_t>(n)] = std::move(v);
    }
    return table;
}

namespace {

Count direct_count(ClassKind kind, int n, const DpConfig& config) {
    switch (kind) {
        case ClassKind::All: return count_all(n, config);
        case ClassKind::SelfComplementary: return count_self_complementary(n, config);
        case ClassKind::Strong: return count_strong_direct(n, config);
        case ClassKind::StrongSelfComplementary: return count_ssc_direct(n, config);
    }
    throw std::invalid_argument("count: unknown kind");
}

Count recurrence_count(ClassKind kind, int n, const DpConfig& config) {
    if (kind == ClassKind::Strong)
        return count_strong_recurrence(n, config).values[static_cast<std::size_t>(n)];
    return count_ssc_recurrence(n, config).values[static_cast<std::size_t>(n)];
}

} // namespace

Method default_method(ClassKind kind) {
    return has_two_methods(kind) ? Method::Both : Method::DirectDp;
}

Count count(ClassKind kind, int n, Method method, const DpConfig& config) {
    require_n(n);
    if (!has_two_methods(kind) && method != Method::DirectDp)
        throw std::invalid_argument("count: kind has only the direct method");
    switch (method) {
        case Method::DirectDp:
            return direct_count(kind, n, config);
        case Method::Recurrence:
            return recurrence_count(kind, n, config);
        case Method::Both: {
            Count direct = direct_count(kind, n, config);
            Count recur = recurrence_count(kind, n, config);
            if (direct != recur) {
                throw MethodMismatch("count mismatch at n=" + std::to_string(n) +
                                     ": direct " + direct.str() + " vs recurrence " +
                                     recur.str());
            }
            return direct;
        }
    }
    throw std::invalid_argument("count: unknown method");
}

SeriesCache::SeriesCache(DpConfig config) : config_(config) {
    all_.kind = ClassKind::All;
    self_complementary_.kind = ClassKind::SelfComplementary;
    strong_direct_.kind = ClassKind::Strong;
    strong_recurrence_.kind = ClassKind::Strong;
    strong_recurrence_.method = Method::Recurrence;
    ssc_direct_.kind = ClassKind::StrongSelfComplementary;
    ssc_recurrence_.kind = ClassKind::StrongSelfComplementary;
    ssc_recurrence_.method = Method::Recurrence;
}

SeriesTable& SeriesCache::slot(ClassKind kind, Method method) {
    switch (kind) {
        case ClassKind::All: return all_;
        case ClassKind::SelfComplementary: return self_complementary_;
        case ClassKind::Strong:
            return method == Method::Recurrence ? strong_recurrence_ : strong_direct_;
        case ClassKind::StrongSelfComplementary:
            return method == Method::Recurrence ? ssc_recurrence_ : ssc_direct_;
    }
    throw std::invalid_argument("series cache: unknown kind");
}

void SeriesCache::grow(SeriesTable& table, ClassKind kind, Method method, int n_max) {
    if (static_cast<int>(table.values.size()) > n_max) return;
    const int built = static_cast<int>(table.values.size()) - 1;
    const int target = std::max({n_max, 2 * built, 8});
    SeriesTable fresh;
    if (method == Method::Recurrence) {
        fresh = kind == ClassKind::Strong ? count_strong_recurrence(target, config_)
                                          : count_ssc_recurrence(target, config_);
    } else {
        fresh = direct_table(kind, target, config_);
    }
    table.values = std::move(fresh.values);
}

void SeriesCache::ensure(ClassKind kind, Method method, int n_max) {
    require_n(n_max);
    if (!has_two_methods(kind) && method != Method::DirectDp)
        throw std::invalid_argument("count: kind has only the direct method");
    if (method == Method::Both) {
        ensure(kind, Method::DirectDp, n_max);
        ensure(kind, Method::Recurrence, n_max);
        return;
    }
    grow(slot(kind, method), kind, method, n_max);
}

const Count& SeriesCache::value(ClassKind kind, int n, Method method) {
    require_n(n);
    ensure(kind, method, n);
    if (method == Method::Both) {
        const Count& direct = slot(kind, Method::DirectDp).values[static_cast<std::size_t>(n)];
        const Count& recur = slot(kind, Method::Recurrence).values[static_cast<std::size_t>(n)];
        if (direct != recur) {
            throw MethodMismatch("count mismatch at n=" + std::to_string(n) +
                                 ": direct " + direct.str() + " vs recurrence " +
                                 recur.str());
        }
        return direct;
    }
    return slot(kind, method).values[static_cast<std::size_t>(n)];
}

Count SeriesCache::checked(ClassKind kind, int n, Method method) {
    return value(kind, n, method);
}

} // namespace scoreseq
