#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "sp/logic.hpp"

using namespace sp;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(SP_FIXTURES_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SuperPatternInstance fig1_instance() {
  SuperPatternInstance inst;
  inst.context = ClassExpr::atomic("person");
  inst.subject = ClassExpr::intersection(
      {ClassExpr::atomic("obesity"), ClassExpr::atomic("metabolic abnormality")});
  inst.qualifier = parse_qualifier("generally");
  inst.relation = parse_relation("co-occurs with");
  inst.object = ClassExpr::atomic("knee osteoarthritis");
  inst.meta.claim_id = "fig1";
  return inst;
}

// atoms of a conjunction (or the single atom) as "pred(args)" strings
std::vector<std::string> atom_list(const Formula& f) {
  std::vector<std::string> out;
  if (f.kind == Formula::Kind::Conj) {
    for (const Formula& c : f.children) out.push_back(render_formula(c, RenderStyle::Ascii));
  } else {
    out.push_back(render_formula(f, RenderStyle::Ascii));
  }
  return out;
}

}  // namespace

TEST_CASE("fig1 formula structure") {
  Formula f = build_formula(fig1_instance());
  REQUIRE(f.kind == Formula::Kind::CondProbCmp);
  CHECK(f.comparison == Comparison::AtLeast);
  CHECK(f.threshold == Rational(9, 10));

  const Formula& event = f.children[0];
  CHECK(event.kind == Formula::Kind::Exists);  // no Possibly for "generally"
  CHECK(event.name == "z");
  CHECK(atom_list(event.children[0]) ==
        std::vector<std::string>{"knee-osteoarthritis(z)", "i(z,x)", "co-occurs-with(y,z)"});

  const Formula& condition = f.children[1];
  CHECK(atom_list(condition) ==
        std::vector<std::string>{"obesity-and-metabolic-abnormality(y)", "person(x)", "i(y,x)"});
}

TEST_CASE("formula structure invariants over all qualifiers") {
  for (const Qualifier& q : all_qualifiers()) {
    for (bool with_context : {false, true}) {
      SuperPatternInstance inst = fig1_instance();
      inst.qualifier = q;
      if (!with_context) inst.context.reset();
      Formula f = build_formula(inst);
      QualifierParams p = qualifier_params(q);
      CHECK(f.comparison == p.comparison);
      CHECK(f.threshold == p.threshold);
      CHECK((f.children[0].kind == Formula::Kind::Possibly) == q.modal);
      const Formula& cond = f.children[1];
      if (with_context)
        CHECK(cond.children.size() == 3);
      else
        CHECK(cond.kind == Formula::Kind::UnaryAtom);
      const Formula& exists = q.modal ? f.children[0].children[0] : f.children[0];
      CHECK(exists.kind == Formula::Kind::Exists);
      CHECK(exists.children[0].children.size() == (with_context ? 3u : 2u));
    }
  }
}

TEST_CASE("golden renderings of the template expansions") {
  CHECK(render_formula(template_formula(parse_qualifier("always"), true),
                       RenderStyle::UnicodeMath) == fixture("formula_always_context.txt"));
  CHECK(render_formula(template_formula(parse_qualifier("can generally not"), true),
                       RenderStyle::UnicodeMath) ==
        fixture("formula_can_generally_not_context.txt"));
  CHECK(render_formula(template_formula(parse_qualifier("can always"), false),
                       RenderStyle::UnicodeMath) == fixture("formula_can_always_nocontext.txt"));
}

TEST_CASE("ascii and latex styles") {
  Formula f = template_formula(parse_qualifier("can generally not"), true);
  CHECK(render_formula(f, RenderStyle::Ascii) ==
        "P( DIAMOND(EXISTS z( o(z) AND i(z,x) AND r(y,z) )) | s(y) AND c(x) AND i(y,x) ) <= 0.1");
  CHECK(render_formula(f, RenderStyle::Latex) ==
        "P( \\Diamond(\\exists z( o(z) \\wedge i(z,x) \\wedge r(y,z) )) \\mid s(y) \\wedge c(x) "
        "\\wedge i(y,x) ) \\leq 0.1");
}

TEST_CASE("rendering is deterministic") {
  Formula f = build_formula(fig1_instance());
  CHECK(render_formula(f, RenderStyle::UnicodeMath) == render_formula(f, RenderStyle::UnicodeMath));
}

TEST_CASE("always implication form") {
  SuperPatternInstance inst = fig1_instance();
  inst.qualifier = parse_qualifier("always");
  CHECK(render_always_implication(inst, RenderStyle::UnicodeMath) ==
        "∀x∀y( obesity-and-metabolic-abnormality(y) ∧ person(x) ∧ i(y,x) → "
        "∃z( knee-osteoarthritis(z) ∧ i(z,x) ∧ co-occurs-with(y,z) ) )");
  inst.context.reset();
  CHECK(render_always_implication(inst, RenderStyle::UnicodeMath) ==
        "∀y( obesity-and-metabolic-abnormality(y) → "
        "∃z( knee-osteoarthritis(z) ∧ co-occurs-with(y,z) ) )");
  inst.qualifier = parse_qualifier("generally");
  CHECK_THROWS(render_always_implication(inst, RenderStyle::UnicodeMath));
}

TEST_CASE("fig1 gloss sentence") {
  CHECK(render_gloss(fig1_instance()) ==
        "In the context of all persons, things of type obesity together with metabolic "
        "abnormality generally have a relation of type co-occurs with to things of type knee "
        "osteoarthritis that are in the same context.");
}

TEST_CASE("gloss without context") {
  SuperPatternInstance inst;
  inst.subject = ClassExpr::atomic("X");
  inst.qualifier = parse_qualifier("always");
  inst.relation = parse_relation("causes");
  inst.object = ClassExpr::atomic("Y");
  CHECK(render_gloss(inst) ==
        "Things of type X always have a relation of type causes to things of type Y.");
}

TEST_CASE("gloss uses the qualifier phrase") {
  SuperPatternInstance inst = fig1_instance();
  inst.qualifier = parse_qualifier("can generally");
  CHECK(render_gloss(inst).find("can generally have a relation") != std::string::npos);
}
