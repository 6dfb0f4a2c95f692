#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sp/core.hpp"

namespace sp {

enum class VerdictKind { Entails, Contradicts, Independent };

enum class Assumption { NonEmptyCondition, ReflexiveAccessibility };

struct ReasoningVerdict {
  VerdictKind kind = VerdictKind::Independent;
  std::set<Assumption> assumptions;
  std::vector<std::string> rule_trace;
};

// true iff every ratio satisfying a's (threshold, comparison) satisfies b's.
// Cross-modality directions (plain-positive => can-positive,
// can-negative => plain-negative) are admitted; they are sound only under
// reflexive accessibility, which callers must flag.
bool qualifier_entails(const Qualifier& a, const Qualifier& b);

// Same modality required; true iff no ratio satisfies both.
bool qualifiers_conflict(const Qualifier& a, const Qualifier& b);

ReasoningVerdict check_pair(const SuperPatternInstance& a, const SuperPatternInstance& b);

struct ConsistencyFinding {
  std::string first_id;
  std::string second_id;
  ReasoningVerdict verdict;
};

// All unordered pairs with a non-independent verdict, ordered by id pair.
// Both directions of each pair are checked; entailments report the premise
// first. Throws VocabularyError on duplicate claim ids.
std::vector<ConsistencyFinding> corpus_consistency(
    const std::vector<SuperPatternInstance>& claims);

std::string verdict_kind_name(VerdictKind k);
std::string assumption_name(Assumption a);

}  // namespace sp
