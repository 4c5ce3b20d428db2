#ifndef SCORESEQ_SCORE_SEQUENCE_HPP
#define SCORESEQ_SCORE_SEQUENCE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace scoreseq {

// Vertex scores of a tournament, kept in nondecreasing order. The type
// enforces only the shape (nondecreasing, nonnegative); whether the scores
// are realizable by an actual tournament is what the predicates below test.
class ScoreSequence {
public:
    ScoreSequence() = default;

    // Throws std::invalid_argument if the scores are not nondecreasing or
    // contain a negative value.
    explicit ScoreSequence(std::vector<long long> scores);

    std::size_t size() const { return scores_.size(); }
    bool empty() const { return scores_.empty(); }
    long long operator[](std::size_t i) const { return scores_[i]; }
    const std::vector<long long>& scores() const { return scores_; }
    long long total() const;

    friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;
    friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;

private:
    std::vector<long long> scores_;
};

// C(r,2) = r*(r-1)/2, the number of games among r players.
long long binom2(long long r);

// Landau's realizability test: every prefix sum of the sorted scores is at
// least C(r,2), and the total equals C(n,2). The empty sequence passes.
bool is_score_sequence(const ScoreSequence& seq);

// Realizability by a strongly connected tournament: total C(n,2) and every
// proper prefix sum strictly greater than C(r,2). Lengths 0 and 1 pass
// (a one-vertex tournament counts as strong).
bool is_strong_sequence(const ScoreSequence& seq);

// Mirror symmetry: s[n+1-i] == n-1-s[i] for the first half of the 1-based
// indices. Valid score sequences with this symmetry are exactly the ones
// fixed by reverse_complement.
bool is_self_complementary_sequence(const ScoreSequence& seq);

// Reverses the sequence and replaces each score s by n-1-s. Maps valid
// score sequences to valid score sequences.
ScoreSequence reverse_complement(const ScoreSequence& seq);

// The four counted classes of score sequences.
enum class ClassKind {
    All,
    SelfComplementary,
    Strong,
    StrongSelfComplementary,
};

struct ClassSet {
    bool all = false;
    bool self_complementary = false;
    bool strong = false;
    bool strong_self_complementary = false;

    bool contains(ClassKind kind) const;
    friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

// Evaluates all class predicates. The strong-and-self-complementary flag is
// set exactly when both components hold.
ClassSet classify(const ScoreSequence& seq);

// Same, for raw input: throws std::invalid_argument when the values are
// negative or out of order rather than guessing an ordering.
ClassSet classify(std::span<const long long> raw_scores);

} // namespace scoreseq

#endif
