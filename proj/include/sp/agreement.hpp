#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp/core.hpp"

namespace sp {

enum class Mark { None, Best, Mistake };

enum class AgreementLevel { A, B, C, D };

struct StudyMarks {
  std::vector<std::string> claims;
  std::map<std::string, std::vector<std::string>> candidates;  // per claim, ordered
  std::vector<std::string> participants;
  // (claim, candidate, participant) -> mark; absent means None
  std::map<std::tuple<std::string, std::string, std::string>, Mark> marks;
  // (claim, participant) -> stage-1 confidence, stored but unused by analysis
  std::map<std::pair<std::string, std::string>, int> confidence;
  std::string stage;  // "before-discussion" or "after-discussion"

  Mark mark(const std::string& claim, const std::string& cand, const std::string& part) const;
};

// Delimited text, one mark per line (whitespace or comma separated):
//   claim-id candidate-id participant-id mark [confidence]
// mark is one of best/mistake/none; '#' starts a comment line. A pair marked
// both best and mistake is rejected.
StudyMarks parse_marks(const std::string& text, const std::string& stage = "");

AgreementLevel claim_level(const StudyMarks& marks, const std::string& claim);

struct LevelEntry {
  std::int64_t count = 0;
  Rational fraction;
};

std::map<AgreementLevel, LevelEntry> level_distribution(const StudyMarks& marks);

// participant pair (lexicographic) -> mean per-(claim, candidate) score:
// 1 identical marks, 0 best-vs-mistake conflict, 0.5 otherwise
std::map<std::pair<std::string, std::string>, Rational> pairwise_agreement(
    const StudyMarks& marks);

struct MistakeStatistics {
  Rational with_mistake;        // fraction of candidate formalizations with >= 1 mistake mark
  Rational with_best_and_mistake;  // fraction with both a best and a mistake mark
};

MistakeStatistics mistake_statistics(const StudyMarks& marks);

std::string level_name(AgreementLevel l);

std::string render_agreement_report(const StudyMarks& marks);

}  // namespace sp
