#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp/rational.hpp"

namespace sp {

// ---------------------------------------------------------------------------
// Qualifiers
// ---------------------------------------------------------------------------

enum class QualifierBase { Sometimes, Frequently, Mostly, Generally, Always };

struct Qualifier {
  QualifierBase base = QualifierBase::Always;
  bool negated = false;
  bool modal = false;  // "can" prefix

  friend auto operator<=>(const Qualifier&, const Qualifier&) = default;
};

enum class Comparison { Equal, AtLeast, AtMost };
enum class Modality { Actual, Possible };

struct QualifierParams {
  Rational threshold;
  Comparison comparison = Comparison::Equal;
  Modality modality = Modality::Actual;
};

// All 20 qualifiers, in a fixed deterministic order.
const std::vector<Qualifier>& all_qualifiers();

// Canonical phrase, e.g. "can generally not", "never".
std::string canonical_phrase(const Qualifier& q);

struct VocabularyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Case-insensitive match of a canonical phrase. Unknown phrases raise
// VocabularyError naming the nearest valid phrase.
Qualifier parse_qualifier(const std::string& text);

QualifierParams qualifier_params(const Qualifier& q);

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

enum class RelationGroup { Sameness, NumericalComparison, Causality, SpatioTemporality };

struct RelationType {
  std::string id;       // kebab-case identifier, e.g. "co-occurs-with"
  std::string display;  // original phrasing, e.g. "co-occurs with"
  RelationGroup group = RelationGroup::Sameness;
  bool is_head = false;

  friend bool operator==(const RelationType& a, const RelationType& b) { return a.id == b.id; }
  friend bool operator!=(const RelationType& a, const RelationType& b) { return !(a == b); }
};

// The closed list of 25 relations, grouped, heads first within each group.
const std::vector<RelationType>& all_relations();

const RelationType& relation_by_id(const std::string& id);

// Case-insensitive, hyphen/space-normalized match against the closed list.
RelationType parse_relation(const std::string& text);

const RelationType& group_head(RelationGroup g);

// true iff general == specific or general heads specific's group
bool relation_subsumes(const RelationType& general, const RelationType& specific);

std::string group_name(RelationGroup g);

// ---------------------------------------------------------------------------
// Classes and claims
// ---------------------------------------------------------------------------

enum class TermSource { Wikidata, Obo, Evs, Lov, Minted, Other };

struct TermRef {
  std::string iri;
  TermSource source = TermSource::Other;
};

std::string term_source_name(TermSource s);
TermSource term_source_from_name(const std::string& name);

// Guess a source from well-known IRI prefixes; minted_ns may be empty.
TermSource infer_term_source(const std::string& iri, const std::string& minted_ns = "");

// Atomic class or intersection of >= 2 class expressions.
// An intersection may carry its own (minted) identifier.
struct ClassExpr {
  std::string label;             // atomic only
  std::vector<ClassExpr> parts;  // non-empty => intersection
  std::optional<TermRef> term;

  bool is_intersection() const { return !parts.empty(); }

  static ClassExpr atomic(std::string label, std::optional<TermRef> term = std::nullopt);
  static ClassExpr intersection(std::vector<ClassExpr> parts,
                                std::optional<TermRef> term = std::nullopt);

  // "obesity together with metabolic abnormality" for intersections
  std::string display_label() const;
  // kebab-case predicate name: "obesity-and-metabolic-abnormality"
  std::string slug() const;

  // Intersection parts recursively sorted; used for syntactic equality.
  ClassExpr canonical() const;
};

// Structural equality on labels, ignoring term bindings.
bool same_class(const ClassExpr& a, const ClassExpr& b);

struct ClaimMeta {
  std::string claim_id;
  std::optional<std::string> aida_sentence;
  std::optional<std::string> source_article;
  bool expressible = true;
};

struct SuperPatternInstance {
  std::optional<ClassExpr> context;
  ClassExpr subject;
  Qualifier qualifier;
  RelationType relation;
  ClassExpr object;
  ClaimMeta meta;
};

// kebab-case slug of arbitrary label text
std::string slugify(const std::string& text);

}  // namespace sp
