#include "scoreseq/enumerate.hpp"

#include <stdexcept>
#include <string>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

bool in_class(const ClassSet& set, ClassKind kind) {
    if (!set.all) return false;
    switch (kind) {
        case ClassKind::All: return true;
        case ClassKind::SelfComplementary: return set.self_complementary;
        case ClassKind::Strong: return set.strong;
        case ClassKind::StrongSelfComplementary: return set.strong_self_complementary;
    }
    return false;
}

struct Walker {
    int n;
    ClassKind kind;
    bool strict;                // strong kinds admit strict prefix pruning
    long long games;            // C(n,2), the required total
    const std::function<bool(const ScoreSequence&)>* visit;
    std::vector<long long> prefix;
    bool stopped = false;

    // Extend the prefix with every score from `low` up. Feasibility prunes:
    // the prefix sum must stay achievable up to the full total with the
    // remaining terms capped at n-1, and must satisfy the prefix bound for
    // its own length.
    void descend(long long low, long long sum) {
        const long long r = static_cast<long long>(prefix.size());
        if (r == n) {
            if (sum != games) return;
            const ScoreSequence seq(prefix);
            const ClassSet set = classify(seq);
            if (in_class(set, kind) && !(*visit)(seq)) stopped = true;
            return;
        }
        const long long remaining_after = n - r - 1;
        for (long long v = low; v <= n - 1 && !stopped; ++v) {
            const long long next_sum = sum + v;
            if (next_sum > games) break;
            if (next_sum + remaining_after * (n - 1) < games) continue;
            if (r + 1 < n) {
                const long long bound = binom2(r + 1);
                if (strict ? next_sum <= bound : next_sum < bound) continue;
            }
            prefix.push_back(v);
            descend(v, next_sum);
            prefix.pop_back();
        }
    }
};

} // namespace

void enumerate_sequences(int n, ClassKind kind,
                         const std::function<bool(const ScoreSequence&)>& visit,
                         const OracleConfig& config) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
    if (n > config.limit) {
        throw EnumerationLimitExceeded("enumeration limit is " +
                                       std::to_string(config.limit) + ", got n=" +
                                       std::to_string(n));
    }
    if (n == 0) {
        const ScoreSequence empty;
        if (in_class(classify(empty), kind)) visit(empty);
        return;
    }
    Walker walker;
    walker.n = n;
    walker.kind = kind;
    walker.strict = kind == ClassKind::Strong ||
                    kind == ClassKind::StrongSelfComplementary;
    walker.games = binom2(n);
    walker.visit = &visit;
    walker.prefix.reserve(static_cast<std::size_t>(n));
    walker.descend(0, 0);
}

std::vector<ScoreSequence> enumerate_sequences(int n, ClassKind kind,
                                               const OracleConfig& config) {
    std::vector<ScoreSequence> out;
    enumerate_sequences(
        n, kind,
        [&out](const ScoreSequence& seq) {
            out.push_back(seq);
            return true;
        },
        config);
    return out;
}

Count oracle_count(int n, ClassKind kind, const OracleConfig& config) {
    Count total = 0;
    enumerate_sequences(
        n, kind,
        [&total](const ScoreSequence&) {
            ++total;
            return true;
        },
        config);
    return total;
}

} // namespace scoreseq
