#include "sp/model.hpp"

#include <algorithm>

namespace sp {

namespace {
const std::set<IndividualId> kEmptySet;
const std::set<IndividualPair> kEmptyPairSet;
}  // namespace

bool FiniteModel::has_world(const WorldId& w) const {
  return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

bool FiniteModel::has_individual(const IndividualId& a) const {
  return std::find(domain.begin(), domain.end(), a) != domain.end();
}

const std::set<IndividualId>& FiniteModel::classext(const WorldId& w,
                                                    const std::string& label) const {
  auto it = class_ext.find({w, label});
  return it == class_ext.end() ? kEmptySet : it->second;
}

const std::set<IndividualPair>& FiniteModel::relext(const WorldId& w,
                                                    const std::string& rel) const {
  auto it = rel_ext.find({w, rel});
  return it == rel_ext.end() ? kEmptyPairSet : it->second;
}

const std::set<IndividualPair>& FiniteModel::contextof(const WorldId& w) const {
  auto it = context_of.find(w);
  return it == context_of.end() ? kEmptyPairSet : it->second;
}

std::vector<std::string> validate_model(const FiniteModel& m) {
  std::vector<std::string> out;
  if (!m.has_world(m.actual)) out.push_back("actual world \"" + m.actual + "\" is not a declared world");
  for (const auto& [from, to] : m.accessibility) {
    if (!m.has_world(from)) out.push_back("accessibility references unknown world \"" + from + "\"");
    if (!m.has_world(to)) out.push_back("accessibility references unknown world \"" + to + "\"");
  }
  if (m.reflexive) {
    for (const WorldId& w : m.worlds)
      if (!m.accessibility.count({w, w}))
        out.push_back("reflexivity enabled but (" + w + "," + w + ") is not accessible");
  }
  for (const auto& [key, ext] : m.class_ext) {
    if (!m.has_world(key.first))
      out.push_back("class extension references unknown world \"" + key.first + "\"");
    for (const IndividualId& a : ext)
      if (!m.has_individual(a))
        out.push_back("class \"" + key.second + "\" contains unknown individual \"" + a + "\"");
  }
  for (const auto& [key, ext] : m.rel_ext) {
    if (!m.has_world(key.first))
      out.push_back("relation extension references unknown world \"" + key.first + "\"");
    for (const auto& [a, b] : ext) {
      if (!m.has_individual(a))
        out.push_back("relation \"" + key.second + "\" references unknown individual \"" + a + "\"");
      if (!m.has_individual(b))
        out.push_back("relation \"" + key.second + "\" references unknown individual \"" + b + "\"");
    }
  }
  for (const auto& [w, pairs] : m.context_of) {
    if (!m.has_world(w)) out.push_back("context-of references unknown world \"" + w + "\"");
    for (const auto& [a, b] : pairs) {
      if (!m.has_individual(a))
        out.push_back("context-of references unknown individual \"" + a + "\"");
      if (!m.has_individual(b))
        out.push_back("context-of references unknown individual \"" + b + "\"");
    }
  }
  return out;
}

std::set<IndividualId> class_extension(const FiniteModel& m, const WorldId& w,
                                       const ClassExpr& c) {
  if (!c.is_intersection()) return m.classext(w, c.label);
  std::set<IndividualId> acc = class_extension(m, w, c.parts[0]);
  for (size_t i = 1; i < c.parts.size(); ++i) {
    std::set<IndividualId> part = class_extension(m, w, c.parts[i]);
    std::set<IndividualId> next;
    std::set_intersection(acc.begin(), acc.end(), part.begin(), part.end(),
                          std::inserter(next, next.begin()));
    acc = std::move(next);
  }
  return acc;
}

namespace {

// event at world w for condition pair (x, y); x empty in the no-context form
bool event_holds_at(const FiniteModel& m, const SuperPatternInstance& inst, const WorldId& w,
                    const std::optional<IndividualId>& x, const IndividualId& y) {
  std::set<IndividualId> objects = class_extension(m, w, inst.object);
  const auto& rel = m.relext(w, inst.relation.id);
  const auto& ctx = m.contextof(w);
  for (const IndividualId& z : objects) {
    if (x && !ctx.count({z, *x})) continue;
    if (rel.count({y, z})) return true;
  }
  return false;
}

bool event_holds(const FiniteModel& m, const SuperPatternInstance& inst,
                 const std::optional<IndividualId>& x, const IndividualId& y) {
  if (!inst.qualifier.modal) return event_holds_at(m, inst, m.actual, x, y);
  for (const WorldId& w : m.worlds)
    if (m.accessibility.count({m.actual, w}) && event_holds_at(m, inst, w, x, y)) return true;
  return false;
}

}  // namespace

EvaluationResult evaluate(const FiniteModel& m, const SuperPatternInstance& inst) {
  std::vector<std::string> violations = validate_model(m);
  if (!violations.empty()) throw ModelError("invalid model: " + violations.front());

  // condition tuples at the actual world
  std::vector<std::pair<std::optional<IndividualId>, IndividualId>> condition;
  std::set<IndividualId> subjects = class_extension(m, m.actual, inst.subject);
  if (inst.context) {
    std::set<IndividualId> contexts = class_extension(m, m.actual, *inst.context);
    const auto& ctx = m.contextof(m.actual);
    for (const IndividualId& x : contexts)
      for (const IndividualId& y : subjects)
        if (ctx.count({y, x})) condition.push_back({x, y});
  } else {
    for (const IndividualId& y : subjects) condition.push_back({std::nullopt, y});
  }

  EvaluationResult res;
  res.condition_count = static_cast<std::int64_t>(condition.size());
  if (condition.empty()) {
    res.status = EvalStatus::Indeterminate;
    return res;
  }
  for (const auto& [x, y] : condition)
    if (event_holds(m, inst, x, y)) ++res.event_count;

  Rational ratio(res.event_count, res.condition_count);
  res.ratio = ratio;
  QualifierParams p = qualifier_params(inst.qualifier);
  bool ok = false;
  switch (p.comparison) {
    case Comparison::Equal: ok = ratio == p.threshold; break;
    case Comparison::AtLeast: ok = ratio >= p.threshold; break;
    case Comparison::AtMost: ok = ratio <= p.threshold; break;
  }
  res.status = ok ? EvalStatus::Holds : EvalStatus::Fails;
  return res;
}

std::string eval_status_name(EvalStatus s) {
  switch (s) {
    case EvalStatus::Holds: return "holds";
    case EvalStatus::Fails: return "fails";
    case EvalStatus::Indeterminate: return "indeterminate";
  }
  return "";
}

}  // namespace sp
