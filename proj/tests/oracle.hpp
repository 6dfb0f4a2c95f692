// Test-only helpers: an independent brute-force interpreter for super-pattern
// formulas over finite models, and random model/instance generators. The
// interpreter deliberately shares no evaluation code with sp::evaluate.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sp/core.hpp"
#include "sp/logic.hpp"
#include "sp/model.hpp"

namespace oracle {

struct InterpretResult {
  sp::EvalStatus status = sp::EvalStatus::Indeterminate;
  std::int64_t condition_count = 0;
  std::int64_t event_count = 0;
};

using Env = std::map<std::string, std::string>;

// Unary predicates resolve through compound_defs when present (slug -> atomic
// labels to intersect), otherwise directly as class labels.
class Interpreter {
public:
  Interpreter(const sp::FiniteModel& m,
              std::map<std::string, std::vector<std::string>> compound_defs = {})
      : m_(m), compounds_(std::move(compound_defs)) {}

  InterpretResult interpret(const sp::Formula& f) const {
    if (f.kind != sp::Formula::Kind::CondProbCmp)
      throw std::logic_error("expected CondProbCmp at top level");
    const sp::Formula& event = f.children[0];
    const sp::Formula& condition = f.children[1];

    std::vector<std::string> free_vars;
    collect_free(condition, free_vars);

    InterpretResult r;
    Env env;
    enumerate(free_vars, 0, env, condition, event, r);
    if (r.condition_count == 0) return r;

    sp::Rational ratio(r.event_count, r.condition_count);
    bool ok = false;
    switch (f.comparison) {
      case sp::Comparison::Equal: ok = ratio == f.threshold; break;
      case sp::Comparison::AtLeast: ok = ratio >= f.threshold; break;
      case sp::Comparison::AtMost: ok = ratio <= f.threshold; break;
    }
    r.status = ok ? sp::EvalStatus::Holds : sp::EvalStatus::Fails;
    return r;
  }

private:
  static void collect_free(const sp::Formula& f, std::vector<std::string>& vars) {
    auto add = [&vars](const std::string& v) {
      for (const std::string& existing : vars)
        if (existing == v) return;
      vars.push_back(v);
    };
    switch (f.kind) {
      case sp::Formula::Kind::UnaryAtom: add(f.arg1); break;
      case sp::Formula::Kind::BinaryAtom: add(f.arg1); add(f.arg2); break;
      default:
        for (const sp::Formula& c : f.children) collect_free(c, vars);
    }
  }

  void enumerate(const std::vector<std::string>& vars, size_t i, Env& env,
                 const sp::Formula& condition, const sp::Formula& event,
                 InterpretResult& r) const {
    if (i == vars.size()) {
      if (truth(condition, m_.actual, env)) {
        ++r.condition_count;
        if (truth(event, m_.actual, env)) ++r.event_count;
      }
      return;
    }
    for (const std::string& d : m_.domain) {
      env[vars[i]] = d;
      enumerate(vars, i + 1, env, condition, event, r);
    }
    env.erase(vars[i]);
  }

  bool in_unary(const std::string& pred, const std::string& world,
                const std::string& ind) const {
    auto it = compounds_.find(pred);
    if (it == compounds_.end()) return m_.classext(world, pred).count(ind) > 0;
    for (const std::string& label : it->second)
      if (m_.classext(world, label).count(ind) == 0) return false;
    return true;
  }

  bool truth(const sp::Formula& f, const std::string& world, Env& env) const {
    switch (f.kind) {
      case sp::Formula::Kind::UnaryAtom:
        return in_unary(f.name, world, env.at(f.arg1));
      case sp::Formula::Kind::BinaryAtom: {
        std::pair<std::string, std::string> pair{env.at(f.arg1), env.at(f.arg2)};
        if (f.name == "i") return m_.contextof(world).count(pair) > 0;
        return m_.relext(world, f.name).count(pair) > 0;
      }
      case sp::Formula::Kind::Conj:
        for (const sp::Formula& c : f.children)
          if (!truth(c, world, env)) return false;
        return true;
      case sp::Formula::Kind::Exists: {
        for (const std::string& d : m_.domain) {
          env[f.name] = d;
          bool ok = truth(f.children[0], world, env);
          env.erase(f.name);
          if (ok) return true;
        }
        return false;
      }
      case sp::Formula::Kind::Possibly: {
        for (const std::string& w : m_.worlds)
          if (m_.accessibility.count({world, w}) && truth(f.children[0], w, env)) return true;
        return false;
      }
      case sp::Formula::Kind::CondProbCmp:
        throw std::logic_error("nested CondProbCmp not supported");
    }
    return false;
  }

  const sp::FiniteModel& m_;
  std::map<std::string, std::vector<std::string>> compounds_;
};

// ---------------------------------------------------------------------------
// random generation
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& class_pool() {
  static const std::vector<std::string> pool = {"c1", "c2", "c3", "c4"};
  return pool;
}

struct GenOptions {
  int max_worlds = 4;
  int max_individuals = 6;
  bool taxonomy_closed = false;  // head relation extensions include sub extensions
  std::vector<std::string> relation_ids = {"causes", "co-occurs-with"};
};

inline sp::FiniteModel random_model(std::mt19937& rng, const GenOptions& opt = {}) {
  sp::FiniteModel m;
  std::uniform_int_distribution<int> world_count(1, opt.max_worlds);
  std::uniform_int_distribution<int> ind_count(1, opt.max_individuals);
  int nw = world_count(rng), ni = ind_count(rng);
  for (int i = 1; i <= nw; ++i) m.worlds.push_back("w" + std::to_string(i));
  for (int i = 1; i <= ni; ++i) m.domain.push_back("a" + std::to_string(i));
  m.actual = m.worlds[std::uniform_int_distribution<size_t>(0, m.worlds.size() - 1)(rng)];

  std::bernoulli_distribution edge(0.4), member(0.4), pair_member(0.25);
  for (const auto& w1 : m.worlds) {
    m.accessibility.insert({w1, w1});
    for (const auto& w2 : m.worlds)
      if (w1 != w2 && edge(rng)) m.accessibility.insert({w1, w2});
  }
  for (const auto& w : m.worlds) {
    for (const std::string& label : class_pool()) {
      auto& ext = m.class_ext[{w, label}];
      for (const auto& a : m.domain)
        if (member(rng)) ext.insert(a);
    }
    for (const std::string& rel : opt.relation_ids) {
      auto& ext = m.rel_ext[{w, rel}];
      for (const auto& a : m.domain)
        for (const auto& b : m.domain)
          if (pair_member(rng)) ext.insert({a, b});
    }
    auto& ctx = m.context_of[w];
    for (const auto& a : m.domain)
      for (const auto& b : m.domain)
        if (pair_member(rng)) ctx.insert({a, b});
  }

  if (opt.taxonomy_closed) {
    for (const auto& w : m.worlds) {
      for (const std::string& rel : opt.relation_ids) {
        const sp::RelationType& r = sp::relation_by_id(rel);
        if (r.is_head) continue;
        const sp::RelationType& head = sp::group_head(r.group);
        auto& head_ext = m.rel_ext[{w, head.id}];
        for (const auto& p : m.relext(w, rel)) head_ext.insert(p);
      }
    }
  }
  return m;
}

inline sp::ClassExpr random_class(std::mt19937& rng) {
  const auto& pool = class_pool();
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  if (std::bernoulli_distribution(0.25)(rng)) {
    size_t a = pick(rng), b = pick(rng);
    if (a == b) b = (b + 1) % pool.size();
    return sp::ClassExpr::intersection(
        {sp::ClassExpr::atomic(pool[a]), sp::ClassExpr::atomic(pool[b])});
  }
  return sp::ClassExpr::atomic(pool[pick(rng)]);
}

inline sp::SuperPatternInstance random_instance(std::mt19937& rng, const GenOptions& opt = {}) {
  sp::SuperPatternInstance inst;
  if (std::bernoulli_distribution(0.6)(rng)) inst.context = random_class(rng);
  inst.subject = random_class(rng);
  inst.object = random_class(rng);
  const auto& qs = sp::all_qualifiers();
  inst.qualifier = qs[std::uniform_int_distribution<size_t>(0, qs.size() - 1)(rng)];
  inst.relation = sp::relation_by_id(
      opt.relation_ids[std::uniform_int_distribution<size_t>(0, opt.relation_ids.size() - 1)(rng)]);
  inst.meta.claim_id = "random";
  return inst;
}

// slug -> atomic parts, for every compound the instance mentions
inline std::map<std::string, std::vector<std::string>> compound_defs(
    const sp::SuperPatternInstance& inst) {
  std::map<std::string, std::vector<std::string>> defs;
  auto record = [&defs](const sp::ClassExpr& c) {
    if (!c.is_intersection()) return;
    std::vector<std::string> labels;
    for (const sp::ClassExpr& p : c.parts) labels.push_back(p.label);
    defs[c.slug()] = std::move(labels);
  };
  if (inst.context) record(*inst.context);
  record(inst.subject);
  record(inst.object);
  return defs;
}

}  // namespace oracle
