#include "sp/stats.hpp"

#include <sstream>

#include "json.hpp"

namespace sp {

UsageReport usage_report(const ClaimDocument& doc) {
  UsageReport r;
  for (const Qualifier& q : all_qualifiers()) r.qualifier_counts[canonical_phrase(q)] = 0;
  for (const RelationType& rel : all_relations()) r.relation_counts[rel.id] = 0;
  for (RelationGroup g : {RelationGroup::Sameness, RelationGroup::NumericalComparison,
                          RelationGroup::Causality, RelationGroup::SpatioTemporality})
    r.group_totals[group_name(g)] = 0;

  for (const SuperPatternInstance& c : doc.claims) {
    ++r.total_claims;
    if (!c.meta.expressible) continue;
    ++r.expressible_count;
    if (c.context) ++r.context_used_count;
    ++r.qualifier_counts[canonical_phrase(c.qualifier)];
    if (c.qualifier.modal)
      ++(c.qualifier.negated ? r.can_negative : r.can_positive);
    else
      ++(c.qualifier.negated ? r.negative : r.positive);
    ++r.relation_counts[c.relation.id];
    ++r.group_totals[group_name(c.relation.group)];
  }
  return r;
}

namespace {

void count_slot(const std::optional<ClassExpr>& c, SlotCoverage& slot) {
  if (!c) return;
  ++slot.total;
  if (c->term && c->term->source != TermSource::Minted && c->term->source != TermSource::Other) {
    ++slot.resolved;
    ++slot.per_source[term_source_name(c->term->source)];
  }
}

void finish(SlotCoverage& s) {
  s.coverage = s.total == 0 ? Rational(0) : Rational(s.resolved, s.total);
}

}  // namespace

CoverageReport coverage_report(const ClaimDocument& doc) {
  CoverageReport r;
  for (const SuperPatternInstance& c : doc.claims) {
    if (!c.meta.expressible) continue;
    count_slot(c.context, r.context);
    count_slot(c.subject, r.subject);
    count_slot(c.object, r.object);
  }
  r.overall.total = r.context.total + r.subject.total + r.object.total;
  r.overall.resolved = r.context.resolved + r.subject.resolved + r.object.resolved;
  for (const SlotCoverage* s : {&r.context, &r.subject, &r.object})
    for (const auto& [src, n] : s->per_source) r.overall.per_source[src] += n;
  finish(r.context);
  finish(r.subject);
  finish(r.object);
  finish(r.overall);
  return r;
}

namespace {

std::string percent(const Rational& frac, int decimals) {
  return (frac * Rational(100)).to_fixed_string(decimals) + "%";
}

}  // namespace

std::string render_usage_report(const UsageReport& r) {
  std::ostringstream out;
  out << "Claims: " << r.total_claims << " total, " << r.expressible_count << " expressible";
  if (r.total_claims > 0)
    out << " (" << percent(Rational(r.expressible_count, r.total_claims), 1) << ")";
  out << ", " << r.context_used_count << " with context";
  if (r.total_claims > 0)
    out << " (" << percent(Rational(r.context_used_count, r.total_claims), 1) << ")";
  out << "\n\nQualifier usage\n";
  const char* base_names[] = {"sometimes", "frequently", "mostly", "generally", "always"};
  const QualifierBase bases[] = {QualifierBase::Sometimes, QualifierBase::Frequently,
                                 QualifierBase::Mostly, QualifierBase::Generally,
                                 QualifierBase::Always};
  auto row = [&](const std::string& name, bool negated, bool modal, std::int64_t total) {
    out << "  " << name;
    for (size_t i = name.size(); i < 14; ++i) out << ' ';
    for (size_t i = 0; i < 5; ++i) {
      Qualifier q{bases[i], negated, modal};
      out << " " << r.qualifier_counts.at(canonical_phrase(q));
    }
    out << "   total " << total << "\n";
  };
  out << "  (columns: ";
  for (size_t i = 0; i < 5; ++i) out << (i ? " " : "") << base_names[i];
  out << ")\n";
  row("positive", false, false, r.positive);
  row("negative", true, false, r.negative);
  row("can positive", false, true, r.can_positive);
  row("can negative", true, true, r.can_negative);

  out << "\nRelation usage\n";
  for (const RelationType& rel : all_relations()) {
    out << "  " << (rel.is_head ? "* " : "  ") << rel.display << ": "
        << r.relation_counts.at(rel.id);
    if (rel.is_head)
      out << "   (group total " << r.group_totals.at(group_name(rel.group)) << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_coverage_report(const CoverageReport& r) {
  std::ostringstream out;
  out << "Vocabulary coverage (top-level classes)\n";
  auto row = [&](const std::string& name, const SlotCoverage& s) {
    out << "  " << name << ": " << s.resolved << "/" << s.total << " resolved ("
        << percent(s.coverage, 2) << ")";
    for (const auto& [src, n] : s.per_source) out << " " << src << "=" << n;
    out << "\n";
  };
  row("context", r.context);
  row("subject", r.subject);
  row("object ", r.object);
  row("overall", r.overall);
  return out.str();
}

namespace {
using nlohmann::json;
}

std::string usage_report_json(const UsageReport& r) {
  json j;
  j["total_claims"] = r.total_claims;
  j["expressible"] = r.expressible_count;
  j["with_context"] = r.context_used_count;
  j["qualifiers"] = r.qualifier_counts;
  j["qualifier_aggregates"] = {{"positive", r.positive},
                               {"negative", r.negative},
                               {"can_positive", r.can_positive},
                               {"can_negative", r.can_negative}};
  j["relations"] = r.relation_counts;
  j["relation_groups"] = r.group_totals;
  return j.dump(2) + "\n";
}

std::string coverage_report_json(const CoverageReport& r) {
  json j;
  auto slot = [](const SlotCoverage& s) {
    json js;
    js["total"] = s.total;
    js["resolved"] = s.resolved;
    js["per_source"] = s.per_source;
    js["coverage_percent"] = (s.coverage * Rational(100)).to_fixed_string(2);
    return js;
  };
  j["context"] = slot(r.context);
  j["subject"] = slot(r.subject);
  j["object"] = slot(r.object);
  j["overall"] = slot(r.overall);
  return j.dump(2) + "\n";
}

}  // namespace sp
