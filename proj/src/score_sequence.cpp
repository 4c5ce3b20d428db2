#include "scoreseq/score_sequence.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace scoreseq {

ScoreSequence::ScoreSequence(std::vector<long long> scores)
    : scores_(std::move(scores)) {
    for (std::size_t i = 0; i < scores_.size(); ++i) {
        if (scores_[i] < 0)
            throw std::invalid_argument("score sequence: negative score");
        if (i > 0 && scores_[i] < scores_[i - 1])
            throw std::invalid_argument("score sequence: scores not nondecreasing");
    }
}

long long ScoreSequence::total() const {
    return std::accumulate(scores_.begin(), scores_.end(), 0LL);
}

long long binom2(long long r) {
    return r * (r - 1) / 2;
}

namespace {

// Landau prefix walk. Proper prefixes must reach C(r,2), or exceed it in
// the strict (strong) variant; the full total must equal C(n,2).
bool landau_holds(const ScoreSequence& seq, bool strict) {
    const long long n = static_cast<long long>(seq.size());
    long long prefix = 0;
    for (long long r = 1; r < n; ++r) {
        prefix += seq[static_cast<std::size_t>(r - 1)];
        const long long bound = binom2(r);
        if (strict ? prefix <= bound : prefix < bound) return false;
    }
    if (n > 0) prefix += seq[static_cast<std::size_t>(n - 1)];
    return prefix == binom2(n);
}

} // namespace

bool is_score_sequence(const ScoreSequence& seq) {
    return landau_holds(seq, false);
}

bool is_strong_sequence(const ScoreSequence& seq) {
    return landau_holds(seq, true);
}

bool is_self_complementary_sequence(const ScoreSequence& seq) {
    const std::size_t n = seq.size();
    const long long top = static_cast<long long>(n) - 1;
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (seq[n - 1 - i] != top - seq[i]) return false;
    }
    return true;
}

ScoreSequence reverse_complement(const ScoreSequence& seq) {
    const std::size_t n = seq.size();
    const long long top = static_cast<long long>(n) - 1;
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = top - seq[n - 1 - i];
    return ScoreSequence(std::move(out));
}

bool ClassSet::contains(ClassKind kind) const {
    switch (kind) {
        case ClassKind::All: return all;
        case ClassKind::SelfComplementary: return self_complementary;
        case ClassKind::Strong: return strong;
        case ClassKind::StrongSelfComplementary: return strong_self_complementary;
    }
    return false;
}

ClassSet classify(const ScoreSequence& seq) {
    ClassSet set;
    set.all = is_score_sequence(seq);
    set.self_complementary = is_self_complementary_sequence(seq);
    set.strong = is_strong_sequence(seq);
    set.strong_self_complementary = set.strong && set.self_complementary;
    return set;
}

ClassSet classify(std::span<const long long> raw_scores) {
    return classify(ScoreSequence(
        std::vector<long long>(raw_scores.begin(), raw_scores.end())));
}

} // namespace scoreseq
