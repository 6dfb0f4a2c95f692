#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "sp/claims_io.hpp"
#include "sp/model.hpp"

using namespace sp;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(SP_FIXTURES_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SuperPatternInstance persons_instance(const std::string& qualifier) {
  SuperPatternInstance inst;
  inst.context = ClassExpr::atomic("person");
  inst.subject = ClassExpr::intersection(
      {ClassExpr::atomic("obesity"), ClassExpr::atomic("metabolic abnormality")});
  inst.qualifier = parse_qualifier(qualifier);
  inst.relation = parse_relation("co-occurs with");
  inst.object = ClassExpr::atomic("knee osteoarthritis");
  inst.meta.claim_id = "persons";
  return inst;
}

FiniteModel tiny_model(const std::set<IndividualId>& subject_ext,
                       const std::set<IndividualPair>& rel) {
  FiniteModel m;
  m.worlds = {"w"};
  m.actual = "w";
  m.accessibility = {{"w", "w"}};
  m.domain = {"a", "b"};
  m.class_ext[{"w", "sub"}] = subject_ext;
  m.class_ext[{"w", "obj"}] = {"b"};
  m.rel_ext[{"w", "causes"}] = rel;
  return m;
}

SuperPatternInstance tiny_instance(const std::string& qualifier) {
  SuperPatternInstance inst;
  inst.subject = ClassExpr::atomic("sub");
  inst.qualifier = parse_qualifier(qualifier);
  inst.relation = parse_relation("causes");
  inst.object = ClassExpr::atomic("obj");
  return inst;
}

}  // namespace

TEST_CASE("validate_model finds violations") {
  FiniteModel m = tiny_model({"a"}, {});
  CHECK(validate_model(m).empty());

  FiniteModel bad_actual = m;
  bad_actual.actual = "nope";
  CHECK_FALSE(validate_model(bad_actual).empty());

  FiniteModel non_reflexive = m;
  non_reflexive.accessibility.clear();
  CHECK_FALSE(validate_model(non_reflexive).empty());
  non_reflexive.reflexive = false;
  CHECK(validate_model(non_reflexive).empty());

  FiniteModel stray = m;
  stray.class_ext[{"w", "sub"}].insert("ghost");
  CHECK_FALSE(validate_model(stray).empty());

  CHECK_THROWS_AS(evaluate(bad_actual, tiny_instance("always")), ModelError);
}

TEST_CASE("class_extension") {
  FiniteModel m;
  m.worlds = {"w"};
  m.actual = "w";
  m.accessibility = {{"w", "w"}};
  m.domain = {"a", "b", "c"};
  m.class_ext[{"w", "obesity"}] = {"a", "b"};
  m.class_ext[{"w", "metabolic abnormality"}] = {"b", "c"};

  CHECK(class_extension(m, "w", ClassExpr::atomic("obesity")) ==
        std::set<IndividualId>{"a", "b"});
  CHECK(class_extension(m, "w",
                        ClassExpr::intersection({ClassExpr::atomic("obesity"),
                                                 ClassExpr::atomic("metabolic abnormality")})) ==
        std::set<IndividualId>{"b"});
  CHECK(class_extension(m, "w", ClassExpr::atomic("unknown")).empty());
}

TEST_CASE("hand-enumerated persons model") {
  FiniteModel m = parse_model(fixture("persons.model"));

  EvaluationResult mostly = evaluate(m, persons_instance("mostly"));
  CHECK(mostly.status == EvalStatus::Holds);
  CHECK(mostly.condition_count == 3);
  CHECK(mostly.event_count == 2);
  CHECK(*mostly.ratio == Rational(2, 3));

  EvaluationResult generally = evaluate(m, persons_instance("generally"));
  CHECK(generally.status == EvalStatus::Fails);
  CHECK(*generally.ratio == Rational(2, 3));
}

TEST_CASE("empty condition set is indeterminate") {
  FiniteModel m = tiny_model({}, {});
  EvaluationResult r = evaluate(m, tiny_instance("always"));
  CHECK(r.status == EvalStatus::Indeterminate);
  CHECK_FALSE(r.ratio.has_value());
  CHECK(r.condition_count == 0);
}

TEST_CASE("possible modality reads accessible worlds") {
  FiniteModel m = parse_model(fixture("modal.model"));
  SuperPatternInstance inst = tiny_instance("can always");
  EvaluationResult can = evaluate(m, inst);
  CHECK(can.status == EvalStatus::Holds);
  CHECK(*can.ratio == Rational(1));

  inst.qualifier = parse_qualifier("always");
  EvaluationResult plain = evaluate(m, inst);
  CHECK(plain.status == EvalStatus::Fails);
  CHECK(*plain.ratio == Rational(0));
}

TEST_CASE("boundary ratios are exact") {
  // ratio exactly 1/1000
  FiniteModel m;
  m.worlds = {"w"};
  m.actual = "w";
  m.accessibility = {{"w", "w"}};
  for (int i = 0; i < 1000; ++i) m.domain.push_back("s" + std::to_string(i));
  m.domain.push_back("t");
  auto& sub = m.class_ext[{"w", "sub"}];
  for (int i = 0; i < 1000; ++i) sub.insert("s" + std::to_string(i));
  m.class_ext[{"w", "obj"}] = {"t"};
  m.rel_ext[{"w", "causes"}] = {{"s0", "t"}};

  EvaluationResult r = evaluate(m, tiny_instance("sometimes"));
  CHECK(*r.ratio == Rational(1, 1000));
  CHECK(r.status == EvalStatus::Holds);

  // ratio exactly 999/1000
  auto& rel = m.rel_ext[{"w", "causes"}];
  for (int i = 1; i < 999; ++i) rel.insert({"s" + std::to_string(i), "t"});
  r = evaluate(m, tiny_instance("sometimes not"));
  CHECK(*r.ratio == Rational(999, 1000));
  CHECK(r.status == EvalStatus::Holds);
}

TEST_CASE("modality and extension monotonicity on random models") {
  std::mt19937 rng(7);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 200; ++trial) {
    FiniteModel m = oracle::random_model(rng, opt);
    SuperPatternInstance inst = oracle::random_instance(rng, opt);

    SuperPatternInstance plain = inst, can = inst;
    plain.qualifier.modal = false;
    can.qualifier.modal = true;
    EvaluationResult rp = evaluate(m, plain);
    EvaluationResult rc = evaluate(m, can);
    CHECK(rc.event_count >= rp.event_count);
    CHECK(rc.condition_count == rp.condition_count);

    // enlarging the relation extension never decreases the event count
    FiniteModel larger = m;
    for (const auto& w : m.worlds)
      larger.rel_ext[{w, inst.relation.id}].insert({m.domain.front(), m.domain.back()});
    EvaluationResult rl = evaluate(larger, inst);
    EvaluationResult r0 = evaluate(m, inst);
    CHECK(rl.event_count >= r0.event_count);
  }
}

TEST_CASE("qualifier lattice on evaluation results") {
  std::mt19937 rng(11);
  const char* positive_chain[] = {"always", "generally", "mostly", "frequently", "sometimes"};
  const char* negative_chain[] = {"never", "generally not", "mostly not", "frequently not",
                                  "sometimes not"};
  for (int trial = 0; trial < 100; ++trial) {
    FiniteModel m = oracle::random_model(rng);
    SuperPatternInstance inst = oracle::random_instance(rng);
    inst.qualifier = parse_qualifier(positive_chain[0]);
    if (evaluate(m, inst).status == EvalStatus::Holds) {
      for (const char* weaker : positive_chain) {
        inst.qualifier = parse_qualifier(weaker);
        CHECK(evaluate(m, inst).status == EvalStatus::Holds);
      }
    }
    inst.qualifier = parse_qualifier(negative_chain[0]);
    if (evaluate(m, inst).status == EvalStatus::Holds) {
      for (const char* weaker : negative_chain) {
        inst.qualifier = parse_qualifier(weaker);
        CHECK(evaluate(m, inst).status == EvalStatus::Holds);
      }
    }
  }
}

TEST_CASE("agreement with the brute-force formula interpreter") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    FiniteModel m = oracle::random_model(rng);
    SuperPatternInstance inst = oracle::random_instance(rng);
    EvaluationResult expected_src = evaluate(m, inst);

    oracle::Interpreter interp(m, oracle::compound_defs(inst));
    oracle::InterpretResult got = interp.interpret(build_formula(inst));
    CHECK(got.status == expected_src.status);
    CHECK(got.condition_count == expected_src.condition_count);
    CHECK(got.event_count == expected_src.event_count);
  }
}
