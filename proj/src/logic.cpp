#include "sp/logic.hpp"

#include <stdexcept>

namespace sp {

Formula Formula::unary(std::string pred, std::string arg) {
  Formula f;
  f.kind = Kind::UnaryAtom;
  f.name = std::move(pred);
  f.arg1 = std::move(arg);
  return f;
}

Formula Formula::binary(std::string pred, std::string a1, std::string a2) {
  Formula f;
  f.kind = Kind::BinaryAtom;
  f.name = std::move(pred);
  f.arg1 = std::move(a1);
  f.arg2 = std::move(a2);
  return f;
}

Formula Formula::conj(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::Conj;
  f.children = std::move(parts);
  return f;
}

Formula Formula::exists(std::string var, Formula body) {
  Formula f;
  f.kind = Kind::Exists;
  f.name = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::possibly(Formula body) {
  Formula f;
  f.kind = Kind::Possibly;
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::cond_prob(Formula event, Formula condition, Comparison cmp, Rational threshold) {
  Formula f;
  f.kind = Kind::CondProbCmp;
  f.children.push_back(std::move(event));
  f.children.push_back(std::move(condition));
  f.comparison = cmp;
  f.threshold = threshold;
  return f;
}

namespace {

Formula build_from_predicates(const std::string& context_pred, const std::string& subject_pred,
                              const std::string& object_pred, const std::string& relation_pred,
                              const QualifierParams& p, bool with_context) {
  std::vector<Formula> event_atoms;
  event_atoms.push_back(Formula::unary(object_pred, "z"));
  if (with_context) event_atoms.push_back(Formula::binary("i", "z", "x"));
  event_atoms.push_back(Formula::binary(relation_pred, "y", "z"));
  Formula event = Formula::exists("z", Formula::conj(std::move(event_atoms)));
  if (p.modality == Modality::Possible) event = Formula::possibly(std::move(event));

  Formula condition = Formula::unary(subject_pred, "y");
  if (with_context) {
    condition = Formula::conj({Formula::unary(subject_pred, "y"),
                               Formula::unary(context_pred, "x"),
                               Formula::binary("i", "y", "x")});
  }
  return Formula::cond_prob(std::move(event), std::move(condition), p.comparison, p.threshold);
}

struct StyleSymbols {
  std::string exists, conj, diamond, and_sep, forall, implies;
  std::string cmp_eq, cmp_ge, cmp_le, bar;
};

StyleSymbols symbols(RenderStyle style) {
  switch (style) {
    case RenderStyle::UnicodeMath:
      return {"∃", "∧", "◇", " ∧ ", "∀", " → ",
              "=", "≥", "≤", " | "};
    case RenderStyle::Ascii:
      return {"EXISTS ", "AND", "DIAMOND", " AND ", "FORALL ", " -> ",
              "=", ">=", "<=", " | "};
    case RenderStyle::Latex:
      return {"\\exists ", "\\wedge", "\\Diamond", " \\wedge ", "\\forall ", " \\rightarrow ",
              "=", "\\geq", "\\leq", " \\mid "};
  }
  throw std::logic_error("bad style");
}

std::string cmp_string(Comparison c, const StyleSymbols& sym) {
  switch (c) {
    case Comparison::Equal: return sym.cmp_eq;
    case Comparison::AtLeast: return sym.cmp_ge;
    case Comparison::AtMost: return sym.cmp_le;
  }
  return "";
}

std::string render_node(const Formula& f, const StyleSymbols& sym) {
  switch (f.kind) {
    case Formula::Kind::UnaryAtom:
      return f.name + "(" + f.arg1 + ")";
    case Formula::Kind::BinaryAtom:
      return f.name + "(" + f.arg1 + "," + f.arg2 + ")";
    case Formula::Kind::Conj: {
      std::string out;
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i > 0) out += sym.and_sep;
        out += render_node(f.children[i], sym);
      }
      return out;
    }
    case Formula::Kind::Exists:
      return sym.exists + f.name + "( " + render_node(f.children[0], sym) + " )";
    case Formula::Kind::Possibly:
      return sym.diamond + "(" + render_node(f.children[0], sym) + ")";
    case Formula::Kind::CondProbCmp: {
      const Formula& event = f.children[0];
      const Formula& cond = f.children[1];
      std::string ev = render_node(event, sym);
      if (event.kind != Formula::Kind::Possibly) ev = "(" + ev + ")";
      return "P( " + ev + sym.bar + render_node(cond, sym) + " ) " +
             cmp_string(f.comparison, sym) + " " + f.threshold.to_decimal_string();
    }
  }
  throw std::logic_error("bad formula node");
}

std::string pluralize(const std::string& word) {
  auto ends_with = [&word](const std::string& suf) {
    return word.size() >= suf.size() && word.compare(word.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") || ends_with("sh"))
    return word + "es";
  if (word.size() >= 2 && word.back() == 'y') {
    char before = word[word.size() - 2];
    if (before != 'a' && before != 'e' && before != 'i' && before != 'o' && before != 'u')
      return word.substr(0, word.size() - 1) + "ies";
  }
  return word + "s";
}

}  // namespace

Formula build_formula(const SuperPatternInstance& inst) {
  QualifierParams p = qualifier_params(inst.qualifier);
  return build_from_predicates(inst.context ? inst.context->slug() : "", inst.subject.slug(),
                               inst.object.slug(), inst.relation.id, p,
                               inst.context.has_value());
}

Formula template_formula(const Qualifier& q, bool with_context) {
  return build_from_predicates("c", "s", "o", "r", qualifier_params(q), with_context);
}

std::string render_formula(const Formula& f, RenderStyle style) {
  return render_node(f, symbols(style));
}

std::string render_always_implication(const SuperPatternInstance& inst, RenderStyle style) {
  if (inst.qualifier.base != QualifierBase::Always || inst.qualifier.negated ||
      inst.qualifier.modal)
    throw std::invalid_argument("implication form exists only for the plain always qualifier");
  StyleSymbols sym = symbols(style);
  std::string s = inst.subject.slug(), o = inst.object.slug(), r = inst.relation.id;
  if (inst.context) {
    std::string c = inst.context->slug();
    return sym.forall + "x" + sym.forall + "y( " + s + "(y)" + sym.and_sep + c + "(x)" +
           sym.and_sep + "i(y,x)" + sym.implies + sym.exists + "z( " + o + "(z)" + sym.and_sep +
           "i(z,x)" + sym.and_sep + r + "(y,z) )" + " )";
  }
  return sym.forall + "y( " + s + "(y)" + sym.implies + sym.exists + "z( " + o + "(z)" +
         sym.and_sep + r + "(y,z) )" + " )";
}

std::string render_gloss(const SuperPatternInstance& inst) {
  std::string qualifier = canonical_phrase(inst.qualifier);
  std::string core = "things of type " + inst.subject.display_label() + " " + qualifier +
                     " have a relation of type " + inst.relation.display + " to things of type " +
                     inst.object.display_label();
  if (!inst.context) return "T" + core.substr(1) + ".";
  return "In the context of all " + pluralize(inst.context->display_label()) + ", " + core +
         " that are in the same context.";
}

}  // namespace sp
