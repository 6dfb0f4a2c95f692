#include "sp/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sp {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string normalize_phrase(const std::string& text) {
  std::string s;
  for (char c : to_lower(text)) {
    if (c == '-' || c == '_') c = ' ';
    s += c;
  }
  // trim + collapse runs of spaces
  std::string out;
  bool in_space = true;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string base_word(QualifierBase b) {
  switch (b) {
    case QualifierBase::Sometimes: return "sometimes";
    case QualifierBase::Frequently: return "frequently";
    case QualifierBase::Mostly: return "mostly";
    case QualifierBase::Generally: return "generally";
    case QualifierBase::Always: return "always";
  }
  return "";
}

}  // namespace

const std::vector<Qualifier>& all_qualifiers() {
  static const std::vector<Qualifier> qs = [] {
    std::vector<Qualifier> v;
    const QualifierBase bases[] = {QualifierBase::Always, QualifierBase::Generally,
                                   QualifierBase::Mostly, QualifierBase::Frequently,
                                   QualifierBase::Sometimes};
    for (bool modal : {false, true})
      for (bool negated : {false, true})
        for (QualifierBase b : bases) v.push_back({b, negated, modal});
    return v;
  }();
  return qs;
}

std::string canonical_phrase(const Qualifier& q) {
  std::string phrase;
  if (q.negated)
    phrase = q.base == QualifierBase::Always ? "never" : base_word(q.base) + " not";
  else
    phrase = base_word(q.base);
  return q.modal ? "can " + phrase : phrase;
}

Qualifier parse_qualifier(const std::string& text) {
  std::string norm = normalize_phrase(text);
  for (const Qualifier& q : all_qualifiers())
    if (normalize_phrase(canonical_phrase(q)) == norm) return q;
  // suggest the nearest canonical phrase
  std::string best;
  size_t best_d = SIZE_MAX;
  for (const Qualifier& q : all_qualifiers()) {
    std::string p = canonical_phrase(q);
    size_t d = edit_distance(norm, p);
    if (d < best_d) { best_d = d; best = p; }
  }
  throw VocabularyError("unknown qualifier \"" + text + "\" (did you mean \"" + best + "\"?)");
}

QualifierParams qualifier_params(const Qualifier& q) {
  QualifierParams p;
  p.modality = q.modal ? Modality::Possible : Modality::Actual;
  if (!q.negated) {
    p.comparison = q.base == QualifierBase::Always ? Comparison::Equal : Comparison::AtLeast;
    switch (q.base) {
      case QualifierBase::Always: p.threshold = Rational(1); break;
      case QualifierBase::Generally: p.threshold = Rational(9, 10); break;
      case QualifierBase::Mostly: p.threshold = Rational(1, 2); break;
      case QualifierBase::Frequently: p.threshold = Rational(1, 10); break;
      case QualifierBase::Sometimes: p.threshold = Rational(1, 1000); break;
    }
  } else {
    p.comparison = q.base == QualifierBase::Always ? Comparison::Equal : Comparison::AtMost;
    switch (q.base) {
      case QualifierBase::Always: p.threshold = Rational(0); break;
      case QualifierBase::Generally: p.threshold = Rational(1, 10); break;
      case QualifierBase::Mostly: p.threshold = Rational(1, 2); break;
      case QualifierBase::Frequently: p.threshold = Rational(9, 10); break;
      case QualifierBase::Sometimes: p.threshold = Rational(999, 1000); break;
    }
  }
  return p;
}

const std::vector<RelationType>& all_relations() {
  static const std::vector<RelationType> rels = [] {
    std::vector<RelationType> v;
    auto add = [&v](const std::string& display, RelationGroup g, bool head) {
      v.push_back({slugify(display), display, g, head});
    };
    add("is same as", RelationGroup::Sameness, true);

    add("compares to", RelationGroup::NumericalComparison, true);
    add("has similar value as", RelationGroup::NumericalComparison, false);
    add("has same value as", RelationGroup::NumericalComparison, false);
    add("has different value from", RelationGroup::NumericalComparison, false);
    add("has smaller value than", RelationGroup::NumericalComparison, false);
    add("has larger value than", RelationGroup::NumericalComparison, false);

    add("has causal relationship with", RelationGroup::Causality, true);
    add("affects", RelationGroup::Causality, false);
    add("contributes to", RelationGroup::Causality, false);
    add("enables", RelationGroup::Causality, false);
    add("inhibits", RelationGroup::Causality, false);
    add("prevents", RelationGroup::Causality, false);
    add("increases", RelationGroup::Causality, false);
    add("decreases", RelationGroup::Causality, false);
    add("requires", RelationGroup::Causality, false);
    add("causes", RelationGroup::Causality, false);
    add("is necessary and sufficient for", RelationGroup::Causality, false);
    add("is caused by", RelationGroup::Causality, false);

    // "includes" here covers spatio-temporal or conceptual inclusion
    add("has spatio-temporal relationship with", RelationGroup::SpatioTemporality, true);
    add("includes", RelationGroup::SpatioTemporality, false);
    add("is included in", RelationGroup::SpatioTemporality, false);
    add("co-occurs with", RelationGroup::SpatioTemporality, false);
    add("is followed by", RelationGroup::SpatioTemporality, false);
    add("follows", RelationGroup::SpatioTemporality, false);
    return v;
  }();
  return rels;
}

const RelationType& relation_by_id(const std::string& id) {
  for (const RelationType& r : all_relations())
    if (r.id == id) return r;
  throw VocabularyError("unknown relation id \"" + id + "\"");
}

RelationType parse_relation(const std::string& text) {
  std::string norm = normalize_phrase(text);
  for (const RelationType& r : all_relations())
    if (normalize_phrase(r.display) == norm) return r;
  std::string heads;
  for (const RelationType& r : all_relations())
    if (r.is_head) heads += (heads.empty() ? "" : ", ") + r.display;
  throw VocabularyError("unknown relation \"" + text + "\"; group heads are: " + heads);
}

const RelationType& group_head(RelationGroup g) {
  for (const RelationType& r : all_relations())
    if (r.group == g && r.is_head) return r;
  throw std::logic_error("group without head");
}

bool relation_subsumes(const RelationType& general, const RelationType& specific) {
  if (general == specific) return true;
  return general.is_head && general.group == specific.group;
}

std::string group_name(RelationGroup g) {
  switch (g) {
    case RelationGroup::Sameness: return "sameness";
    case RelationGroup::NumericalComparison: return "numerical-comparison";
    case RelationGroup::Causality: return "causality";
    case RelationGroup::SpatioTemporality: return "spatio-temporality";
  }
  return "";
}

std::string term_source_name(TermSource s) {
  switch (s) {
    case TermSource::Wikidata: return "wikidata";
    case TermSource::Obo: return "obo";
    case TermSource::Evs: return "evs";
    case TermSource::Lov: return "lov";
    case TermSource::Minted: return "minted";
    case TermSource::Other: return "other";
  }
  return "other";
}

TermSource term_source_from_name(const std::string& name) {
  std::string n = to_lower(name);
  if (n == "wikidata") return TermSource::Wikidata;
  if (n == "obo") return TermSource::Obo;
  if (n == "evs") return TermSource::Evs;
  if (n == "lov") return TermSource::Lov;
  if (n == "minted") return TermSource::Minted;
  if (n == "other") return TermSource::Other;
  throw VocabularyError("unknown term source \"" + name + "\"");
}

TermSource infer_term_source(const std::string& iri, const std::string& minted_ns) {
  if (!minted_ns.empty() && iri.rfind(minted_ns, 0) == 0) return TermSource::Minted;
  if (iri.find("wikidata.org/entity") != std::string::npos) return TermSource::Wikidata;
  if (iri.find("purl.obolibrary.org/obo") != std::string::npos) return TermSource::Obo;
  if (iri.find("ncicb.nci.nih.gov") != std::string::npos) return TermSource::Evs;
  if (iri.find("lov.linkeddata.es") != std::string::npos) return TermSource::Lov;
  return TermSource::Other;
}

ClassExpr ClassExpr::atomic(std::string label, std::optional<TermRef> term) {
  if (label.empty()) throw std::invalid_argument("atomic class label must be non-empty");
  ClassExpr e;
  e.label = std::move(label);
  e.term = std::move(term);
  return e;
}

ClassExpr ClassExpr::intersection(std::vector<ClassExpr> parts, std::optional<TermRef> term) {
  if (parts.size() < 2) throw std::invalid_argument("intersection needs >= 2 parts");
  ClassExpr e;
  e.parts = std::move(parts);
  e.term = std::move(term);
  return e;
}

std::string ClassExpr::display_label() const {
  if (!is_intersection()) return label;
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " together with ";
    out += parts[i].display_label();
  }
  return out;
}

std::string ClassExpr::slug() const {
  if (!is_intersection()) return slugify(label);
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "-and-";
    out += parts[i].slug();
  }
  return out;
}

ClassExpr ClassExpr::canonical() const {
  if (!is_intersection()) return *this;
  ClassExpr e = *this;
  for (ClassExpr& p : e.parts) p = p.canonical();
  std::sort(e.parts.begin(), e.parts.end(),
            [](const ClassExpr& a, const ClassExpr& b) { return a.slug() < b.slug(); });
  return e;
}

bool same_class(const ClassExpr& a, const ClassExpr& b) {
  ClassExpr ca = a.canonical(), cb = b.canonical();
  if (ca.is_intersection() != cb.is_intersection()) return false;
  if (!ca.is_intersection()) return ca.label == cb.label;
  if (ca.parts.size() != cb.parts.size()) return false;
  for (size_t i = 0; i < ca.parts.size(); ++i)
    if (!same_class(ca.parts[i], cb.parts[i])) return false;
  return true;
}

std::string slugify(const std::string& text) {
  std::string out;
  bool pending_dash = false;
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isalnum(c)) {
      if (pending_dash && !out.empty()) out += '-';
      pending_dash = false;
      out += static_cast<char>(std::tolower(c));
    } else {
      pending_dash = true;
    }
  }
  return out;
}

}  // namespace sp
