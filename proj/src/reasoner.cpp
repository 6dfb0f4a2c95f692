#include "sp/reasoner.hpp"

#include <algorithm>
#include <map>

namespace sp {

namespace {

// satisfaction interval [lo, hi] of a (threshold, comparison) pair over [0,1]
struct Interval {
  Rational lo, hi;
};

Interval satisfaction(const QualifierParams& p) {
  switch (p.comparison) {
    case Comparison::Equal: return {p.threshold, p.threshold};
    case Comparison::AtLeast: return {p.threshold, Rational(1)};
    case Comparison::AtMost: return {Rational(0), p.threshold};
  }
  return {Rational(0), Rational(1)};
}

bool subset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }
bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool modality_transition_ok(const Qualifier& a, const Qualifier& b) {
  if (a.modal == b.modal) return true;
  // positive conditions are upward-closed in the ratio, negative downward-closed
  if (!a.negated && !b.negated && !a.modal && b.modal) return true;  // plain => can
  if (a.negated && b.negated && a.modal && !b.modal) return true;    // can-not => not
  return false;
}

}  // namespace

bool qualifier_entails(const Qualifier& a, const Qualifier& b) {
  if (!modality_transition_ok(a, b)) return false;
  return subset(satisfaction(qualifier_params(a)), satisfaction(qualifier_params(b)));
}

bool qualifiers_conflict(const Qualifier& a, const Qualifier& b) {
  if (a.modal != b.modal)
    throw std::invalid_argument("qualifiers_conflict requires the same modality");
  return disjoint(satisfaction(qualifier_params(a)), satisfaction(qualifier_params(b)));
}

ReasoningVerdict check_pair(const SuperPatternInstance& a, const SuperPatternInstance& b) {
  ReasoningVerdict v;
  bool same_ctx = a.context.has_value() == b.context.has_value() &&
                  (!a.context || same_class(*a.context, *b.context));
  if (!same_ctx || !same_class(a.subject, b.subject) || !same_class(a.object, b.object))
    return v;

  QualifierParams pa = qualifier_params(a.qualifier);

  if (a.relation == b.relation && qualifier_entails(a.qualifier, b.qualifier)) {
    v.kind = VerdictKind::Entails;
    v.rule_trace.push_back(a.qualifier.modal == b.qualifier.modal ? "qualifier-weakening"
                                                                  : "modality-weakening");
    if (a.qualifier.modal != b.qualifier.modal)
      v.assumptions.insert(Assumption::ReflexiveAccessibility);
    return v;
  }
  if (a.qualifier == b.qualifier) {
    // at-least thresholds survive enlarging the relation extension,
    // at-most thresholds survive shrinking it
    if (pa.comparison == Comparison::AtLeast && relation_subsumes(b.relation, a.relation) &&
        a.relation != b.relation) {
      v.kind = VerdictKind::Entails;
      v.rule_trace.push_back("relation-generalization");
      return v;
    }
    if (pa.comparison == Comparison::AtMost && relation_subsumes(a.relation, b.relation) &&
        a.relation != b.relation) {
      v.kind = VerdictKind::Entails;
      v.rule_trace.push_back("relation-specialization");
      return v;
    }
  }
  if (a.relation == b.relation && a.qualifier.modal == b.qualifier.modal &&
      qualifiers_conflict(a.qualifier, b.qualifier)) {
    v.kind = VerdictKind::Contradicts;
    v.rule_trace.push_back("qualifier-conflict");
    v.assumptions.insert(Assumption::NonEmptyCondition);
    return v;
  }
  return v;
}

std::vector<ConsistencyFinding> corpus_consistency(
    const std::vector<SuperPatternInstance>& claims) {
  std::map<std::string, size_t> by_id;
  for (size_t i = 0; i < claims.size(); ++i) {
    if (!by_id.emplace(claims[i].meta.claim_id, i).second)
      throw VocabularyError("duplicate claim id \"" + claims[i].meta.claim_id + "\"");
  }
  std::vector<ConsistencyFinding> out;
  std::vector<std::string> ids;
  for (const auto& [id, idx] : by_id) ids.push_back(id);
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      const SuperPatternInstance& a = claims[by_id[ids[i]]];
      const SuperPatternInstance& b = claims[by_id[ids[j]]];
      ReasoningVerdict v = check_pair(a, b);
      if (v.kind != VerdictKind::Independent) {
        out.push_back({ids[i], ids[j], std::move(v)});
        continue;
      }
      ReasoningVerdict back = check_pair(b, a);
      if (back.kind != VerdictKind::Independent)
        out.push_back({ids[j], ids[i], std::move(back)});
    }
  }
  return out;
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Entails: return "entails";
    case VerdictKind::Contradicts: return "contradicts";
    case VerdictKind::Independent: return "independent";
  }
  return "";
}

std::string assumption_name(Assumption a) {
  switch (a) {
    case Assumption::NonEmptyCondition: return "non-empty-condition";
    case Assumption::ReflexiveAccessibility: return "reflexive-accessibility";
  }
  return "";
}

}  // namespace sp
