#ifndef SCORESEQ_ENUMERATE_HPP
#define SCORESEQ_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "scoreseq/count.hpp"
#include "scoreseq/score_sequence.hpp"

namespace scoreseq {

struct OracleConfig {
    int limit = 14;     // largest n enumeration will accept
};

// All score sequences of length n in the requested class, in lexicographic
// order. DFS over nondecreasing prefixes, pruned by the prefix-sum bound and
// the residual-capacity bound; class membership is tested on completed
// sequences only, so pruning can never drop a member. Throws
// EnumerationLimitExceeded past config.limit and std::invalid_argument for
// n < 0.
std::vector<ScoreSequence> enumerate_sequences(int n, ClassKind kind,
                                               const OracleConfig& config = {});

// Streaming form; stops early when visit returns false.
void enumerate_sequences(int n, ClassKind kind,
                         const std::function<bool(const ScoreSequence&)>& visit,
                         const OracleConfig& config = {});

// Count by exhaustive enumeration. Independent of the table machinery; its
// only shared code is the predicate layer.
Count oracle_count(int n, ClassKind kind, const OracleConfig& config = {});

} // namespace scoreseq

#endif
