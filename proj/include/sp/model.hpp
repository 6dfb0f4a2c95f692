#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sp/core.hpp"

namespace sp {

using WorldId = std::string;
using IndividualId = std::string;
using IndividualPair = std::pair<IndividualId, IndividualId>;

// Finite possible-world model with a constant domain and rigid individuals.
// context_of holds pairs (a, b) meaning "a is in the context of b".
struct FiniteModel {
  std::vector<WorldId> worlds;
  std::set<std::pair<WorldId, WorldId>> accessibility;
  WorldId actual;
  std::vector<IndividualId> domain;
  std::map<std::pair<WorldId, std::string>, std::set<IndividualId>> class_ext;
  std::map<std::pair<WorldId, std::string>, std::set<IndividualPair>> rel_ext;
  std::map<WorldId, std::set<IndividualPair>> context_of;
  bool reflexive = true;  // axiom T expected when set

  bool has_world(const WorldId& w) const;
  bool has_individual(const IndividualId& a) const;

  const std::set<IndividualId>& classext(const WorldId& w, const std::string& label) const;
  const std::set<IndividualPair>& relext(const WorldId& w, const std::string& rel) const;
  const std::set<IndividualPair>& contextof(const WorldId& w) const;
};

enum class EvalStatus { Holds, Fails, Indeterminate };

struct EvaluationResult {
  EvalStatus status = EvalStatus::Indeterminate;
  std::optional<Rational> ratio;
  std::int64_t condition_count = 0;
  std::int64_t event_count = 0;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All invariant violations as human-readable strings; empty means valid.
std::vector<std::string> validate_model(const FiniteModel& m);

// Extension of a class expression at a world; intersections intersect,
// unknown labels are empty.
std::set<IndividualId> class_extension(const FiniteModel& m, const WorldId& w,
                                       const ClassExpr& c);

// Exact conditional-ratio evaluation at the actual world. The condition side
// is always read at the actual world; a "can" qualifier reads the event side
// at every accessible world. Relation extensions are looked up under the
// instance's relation name only.
EvaluationResult evaluate(const FiniteModel& m, const SuperPatternInstance& inst);

std::string eval_status_name(EvalStatus s);

}  // namespace sp
