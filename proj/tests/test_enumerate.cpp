#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "known_sequences.hpp"
#include "scoreseq/enumerate.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/series.hpp"

using namespace scoreseq;

namespace {

const ClassKind kKinds[] = {ClassKind::All, ClassKind::SelfComplementary,
                            ClassKind::Strong,
                            ClassKind::StrongSelfComplementary};

std::vector<std::vector<long long>> scores_of(
    const std::vector<ScoreSequence>& sequences) {
  std::vector<std::vector<long long>> out;
  out.reserve(sequences.size());
  for (const ScoreSequence& seq : sequences) out.push_back(seq.scores());
  return out;
}

bool member_of(const ClassSet& set, ClassKind kind) {
  return set.all && set.contains(kind);
}

} // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("published listings are reproduced verbatim") {
  CHECK(scores_of(enumerate_sequences(5, ClassKind::All)) ==
        golden::kAllLength5);
  CHECK(scores_of(enumerate_sequences(6, ClassKind::SelfComplementary)) ==
        golden::kSelfComplementaryLength6);
  CHECK(scores_of(enumerate_sequences(6, ClassKind::Strong)) ==
        golden::kStrongLength6);
}

TEST_CASE("published counts") {
  CHECK(oracle_count(6, ClassKind::All) == 22);
  CHECK(oracle_count(7, ClassKind::StrongSelfComplementary) == 9);
  CHECK(oracle_count(0, ClassKind::All) == 1);
  const std::vector<ScoreSequence> empty =
      enumerate_sequences(0, ClassKind::All);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
}

TEST_CASE("output is strictly increasing lexicographically") {
  for (const ClassKind kind : kKinds) {
    for (int n = 0; n <= 9; ++n) {
      const auto rows = scores_of(enumerate_sequences(n, kind));
      CAPTURE(static_cast<int>(kind));
      CAPTURE(n);
      CHECK(std::is_sorted(rows.begin(), rows.end()));
      CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
    }
  }
}

TEST_CASE("pruned search agrees with generate-then-filter") {
  for (const ClassKind kind : kKinds) {
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(static_cast<int>(kind));
      CAPTURE(n);
      std::vector<std::vector<long long>> expected;
      std::vector<long long> prefix;
      const std::function<void(long long)> descend = [&](long long low) {
        if (static_cast<int>(prefix.size()) == n) {
          if (member_of(classify(ScoreSequence(prefix)), kind))
            expected.push_back(prefix);
          return;
        }
        for (long long v = low; v <= n - 1; ++v) {
          prefix.push_back(v);
          descend(v);
          prefix.pop_back();
        }
      };
      if (n == 0) {
        if (member_of(classify(ScoreSequence(std::vector<long long>{})), kind))
          expected.push_back({});
      } else {
        descend(0);
      }
      CHECK(scores_of(enumerate_sequences(n, kind)) == expected);
    }
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(enumerate_sequences(15, ClassKind::All),
                  EnumerationLimitExceeded);
  OracleConfig small;
  small.limit = 5;
  CHECK_THROWS_AS(enumerate_sequences(6, ClassKind::All, small),
                  EnumerationLimitExceeded);
  CHECK_NOTHROW(enumerate_sequences(5, ClassKind::All, small));
  CHECK_THROWS_AS(enumerate_sequences(-1, ClassKind::All),
                  std::invalid_argument);
}

TEST_CASE("streaming visitor can stop early") {
  int seen = 0;
  enumerate_sequences(7, ClassKind::All, [&](const ScoreSequence&) {
    ++seen;
    return seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("oracle agrees with the table counters") {
  for (const ClassKind kind : kKinds) {
    for (int n = 0; n <= 10; ++n) {
      CAPTURE(static_cast<int>(kind));
      CAPTURE(n);
      CHECK(oracle_count(n, kind) == count(kind, n, Method::DirectDp));
    }
  }
}

TEST_CASE("predicate properties over every valid sequence") {
  for (int n = 0; n <= 10; ++n) {
    for (const ScoreSequence& seq : enumerate_sequences(n, ClassKind::All)) {
      CAPTURE(n);
      CHECK(is_score_sequence(seq));
      const ScoreSequence image = reverse_complement(seq);
      CHECK(is_score_sequence(image));
      CHECK(reverse_complement(image) == seq);
      if (is_self_complementary_sequence(seq)) {
        CHECK(image == seq);
        if (n % 2 == 1) CHECK(seq[n / 2] == (n - 1) / 2);
      } else {
        CHECK_FALSE(image == seq);
      }
    }
  }
}

TEST_SUITE_END();
