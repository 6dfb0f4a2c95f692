#pragma once

#include <string>
#include <vector>

#include "sp/core.hpp"

namespace sp {

// Formula tree for the higher-order-logic reading of an instantiated
// super-pattern. Only the node kinds the pattern needs.
struct Formula {
  enum class Kind { CondProbCmp, Possibly, Exists, Conj, UnaryAtom, BinaryAtom };

  Kind kind = Kind::Conj;
  std::vector<Formula> children;  // CondProbCmp: [event, condition]; Possibly/Exists: [body]
  std::string name;               // predicate name, or bound variable for Exists
  std::string arg1, arg2;         // atom arguments
  Comparison comparison = Comparison::Equal;  // CondProbCmp only
  Rational threshold;                         // CondProbCmp only

  static Formula unary(std::string pred, std::string arg);
  static Formula binary(std::string pred, std::string a1, std::string a2);
  static Formula conj(std::vector<Formula> parts);
  static Formula exists(std::string var, Formula body);
  static Formula possibly(Formula body);
  static Formula cond_prob(Formula event, Formula condition, Comparison cmp, Rational threshold);
};

enum class RenderStyle { UnicodeMath, Ascii, Latex };

// Conditional-ratio formula of an instance. Class predicates are slugs of
// the class labels; compound classes stay single predicates here (they are
// expanded only during model evaluation). The context relation is "i".
Formula build_formula(const SuperPatternInstance& inst);

// The uninstantiated template with symbolic predicates c, s, o, r, i.
Formula template_formula(const Qualifier& q, bool with_context);

std::string render_formula(const Formula& f, RenderStyle style);

// Implication form of the always case, with universal quantification over
// the condition variables.
std::string render_always_implication(const SuperPatternInstance& inst, RenderStyle style);

// English gloss sentence following the pattern's slot phrases.
std::string render_gloss(const SuperPatternInstance& inst);

}  // namespace sp
