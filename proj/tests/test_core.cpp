#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sp/core.hpp"

using namespace sp;

TEST_CASE("exactly 20 distinct qualifiers") {
  std::set<std::string> phrases;
  for (const Qualifier& q : all_qualifiers()) phrases.insert(canonical_phrase(q));
  CHECK(all_qualifiers().size() == 20);
  CHECK(phrases.size() == 20);
}

TEST_CASE("qualifier phrase parsing") {
  Qualifier g = parse_qualifier("generally");
  CHECK(g.base == QualifierBase::Generally);
  CHECK_FALSE(g.negated);
  CHECK_FALSE(g.modal);

  Qualifier never = parse_qualifier("never");
  CHECK(never.base == QualifierBase::Always);
  CHECK(never.negated);
  CHECK_FALSE(never.modal);

  Qualifier cgn = parse_qualifier("can generally not");
  CHECK(cgn.base == QualifierBase::Generally);
  CHECK(cgn.negated);
  CHECK(cgn.modal);

  CHECK(parse_qualifier("Can Mostly") == Qualifier{QualifierBase::Mostly, false, true});
  CHECK_THROWS_AS(parse_qualifier("often"), VocabularyError);
  // parenthesized table forms are not phrases
  CHECK_THROWS_AS(parse_qualifier("(can) generally"), VocabularyError);
}

TEST_CASE("qualifier round trip") {
  for (const Qualifier& q : all_qualifiers()) CHECK(parse_qualifier(canonical_phrase(q)) == q);
}

TEST_CASE("qualifier parameter table") {
  auto check = [](const std::string& phrase, Rational threshold, Comparison cmp, Modality m) {
    QualifierParams p = qualifier_params(parse_qualifier(phrase));
    CHECK(p.threshold == threshold);
    CHECK(p.comparison == cmp);
    CHECK(p.modality == m);
  };
  check("always", Rational(1), Comparison::Equal, Modality::Actual);
  check("generally", Rational(9, 10), Comparison::AtLeast, Modality::Actual);
  check("mostly", Rational(1, 2), Comparison::AtLeast, Modality::Actual);
  check("frequently", Rational(1, 10), Comparison::AtLeast, Modality::Actual);
  check("sometimes", Rational(1, 1000), Comparison::AtLeast, Modality::Actual);
  check("never", Rational(0), Comparison::Equal, Modality::Actual);
  check("generally not", Rational(1, 10), Comparison::AtMost, Modality::Actual);
  check("mostly not", Rational(1, 2), Comparison::AtMost, Modality::Actual);
  check("frequently not", Rational(9, 10), Comparison::AtMost, Modality::Actual);
  check("sometimes not", Rational(999, 1000), Comparison::AtMost, Modality::Actual);
  check("can generally not", Rational(1, 10), Comparison::AtMost, Modality::Possible);
  check("can always", Rational(1), Comparison::Equal, Modality::Possible);
}

TEST_CASE("qualifier params image is 10 pairs x 2 modalities") {
  std::set<std::tuple<std::int64_t, std::int64_t, int, int>> image;
  for (const Qualifier& q : all_qualifiers()) {
    QualifierParams p = qualifier_params(q);
    image.insert({p.threshold.num(), p.threshold.den(), static_cast<int>(p.comparison),
                  static_cast<int>(p.modality)});
    CHECK(p.threshold >= Rational(0));
    CHECK(p.threshold <= Rational(1));
    if (!q.negated) CHECK(p.comparison != Comparison::AtMost);
    if (q.negated) CHECK(p.comparison != Comparison::AtLeast);
  }
  CHECK(image.size() == 20);
}

TEST_CASE("relation closed list") {
  CHECK(all_relations().size() == 25);
  int heads = 0;
  std::map<RelationGroup, int> sizes;
  for (const RelationType& r : all_relations()) {
    if (r.is_head) ++heads;
    ++sizes[r.group];
  }
  CHECK(heads == 4);
  CHECK(sizes[RelationGroup::Sameness] == 1);
  CHECK(sizes[RelationGroup::NumericalComparison] == 6);
  CHECK(sizes[RelationGroup::Causality] == 12);
  CHECK(sizes[RelationGroup::SpatioTemporality] == 6);
}

TEST_CASE("relation parsing") {
  RelationType r = parse_relation("co-occurs with");
  CHECK(r.id == "co-occurs-with");
  CHECK(r.group == RelationGroup::SpatioTemporality);
  CHECK_FALSE(r.is_head);

  RelationType same = parse_relation("is same as");
  CHECK(same.id == "is-same-as");
  CHECK(same.group == RelationGroup::Sameness);
  CHECK(same.is_head);

  CHECK(parse_relation("Co-Occurs-With").id == "co-occurs-with");
  CHECK(parse_relation("has causal relationship with").is_head);
  CHECK_THROWS_AS(parse_relation("correlates with"), VocabularyError);
}

TEST_CASE("relation round trip") {
  for (const RelationType& r : all_relations()) {
    CHECK(parse_relation(r.display) == r);
    CHECK(relation_by_id(r.id) == r);
  }
}

TEST_CASE("relation subsumption") {
  RelationType causal = parse_relation("has causal relationship with");
  RelationType causes = parse_relation("causes");
  RelationType compares = parse_relation("compares to");
  RelationType includes = parse_relation("includes");

  CHECK(relation_subsumes(causal, causes));
  CHECK_FALSE(relation_subsumes(causes, causal));
  CHECK_FALSE(relation_subsumes(compares, includes));

  // reflexive, antisymmetric, exactly one head per relation
  for (const RelationType& a : all_relations()) {
    CHECK(relation_subsumes(a, a));
    int heads_above = 0;
    for (const RelationType& b : all_relations()) {
      if (a != b && relation_subsumes(a, b)) CHECK_FALSE(relation_subsumes(b, a));
      if (b.is_head && relation_subsumes(b, a)) ++heads_above;
    }
    CHECK(heads_above == 1);
  }
}

TEST_CASE("class expressions") {
  ClassExpr obesity = ClassExpr::atomic("obesity");
  ClassExpr metab = ClassExpr::atomic("metabolic abnormality");
  ClassExpr both = ClassExpr::intersection({obesity, metab});
  CHECK(both.display_label() == "obesity together with metabolic abnormality");
  CHECK(both.slug() == "obesity-and-metabolic-abnormality");
  CHECK_THROWS(ClassExpr::atomic(""));
  CHECK_THROWS(ClassExpr::intersection({obesity}));

  ClassExpr swapped = ClassExpr::intersection({metab, obesity});
  CHECK(same_class(both, swapped));
  CHECK_FALSE(same_class(both, obesity));
}

TEST_CASE("term source inference") {
  CHECK(infer_term_source("http://www.wikidata.org/entity/Q58191007") == TermSource::Wikidata);
  CHECK(infer_term_source("http://purl.obolibrary.org/obo/DOID_123") == TermSource::Obo);
  CHECK(infer_term_source("http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#C123") ==
        TermSource::Evs);
  CHECK(infer_term_source("http://example.org/x", "http://example.org/") == TermSource::Minted);
  CHECK(infer_term_source("http://unknown.org/x") == TermSource::Other);
}
