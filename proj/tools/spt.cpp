// spt: super-pattern toolkit command line
//
// Exit codes: 0 success, 1 findings (validation failures, contradictions,
// failed/indeterminate evaluations), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sp/agreement.hpp"
#include "sp/claims_io.hpp"
#include "sp/logic.hpp"
#include "sp/model.hpp"
#include "sp/reasoner.hpp"
#include "sp/resolver.hpp"
#include "sp/stats.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sp::ClaimDocument load_claims(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return sp::claims_from_json(text, path);
  return sp::parse_claims(text, path);
}

sp::RenderStyle parse_style(const std::string& s) {
  if (s == "unicode") return sp::RenderStyle::UnicodeMath;
  if (s == "ascii") return sp::RenderStyle::Ascii;
  if (s == "latex") return sp::RenderStyle::Latex;
  throw CLI::ValidationError("--style must be unicode, ascii, or latex");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super-pattern toolkit: formalize, check, and analyze scientific claims"};
  app.require_subcommand(1);

  std::string claims_path, model_path, marks_path, out_format = "text";
  std::string style = "unicode";
  std::string base_iri = "http://example.org/np";
  std::string cache_dir = ".sp-cache";
  bool no_reflexive = false, offline = false;

  app.add_option("--format", out_format, "output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* validate = app.add_subcommand("validate", "parse claim files and report errors");
  validate->add_option("claims", claims_path, "claim file (DSL or .json)")->required();

  auto* gloss = app.add_subcommand("gloss", "render English gloss sentences");
  gloss->add_option("claims", claims_path)->required();

  auto* formula = app.add_subcommand("formula", "render higher-order-logic formulas");
  formula->add_option("claims", claims_path)->required();
  formula->add_option("--style", style, "unicode, ascii, or latex");

  auto* eval = app.add_subcommand("eval", "evaluate claims against a finite model");
  eval->add_option("claims", claims_path)->required();
  eval->add_option("--model", model_path, "model file")->required();
  eval->add_flag("--no-reflexive", no_reflexive, "disable reflexive accessibility");

  auto* check = app.add_subcommand("check", "pairwise entailment/contradiction over a corpus");
  check->add_option("claims", claims_path)->required();

  auto* stats = app.add_subcommand("stats", "qualifier/relation usage statistics");
  stats->add_option("claims", claims_path)->required();

  auto* coverage = app.add_subcommand("coverage", "vocabulary coverage of top-level classes");
  coverage->add_option("claims", claims_path)->required();

  auto* agreement = app.add_subcommand("agreement", "formalization-study agreement analysis");
  agreement->add_option("--marks", marks_path, "marks file")->required();

  std::string label;
  std::vector<std::string> source_names = {"wikidata", "bioportal", "lov"};
  int limit = 5;
  auto* resolve = app.add_subcommand("resolve", "search ontology identifiers for a class label");
  resolve->add_option("label", label, "class label to search")->required();
  resolve->add_option("--sources", source_names, "search sources");
  resolve->add_option("--limit", limit, "max candidates per source");
  resolve->add_option("--cache-dir", cache_dir);
  resolve->add_flag("--offline", offline, "serve cached results only");

  auto* export_cmd = app.add_subcommand("export", "emit nanopublication TriG");
  export_cmd->add_option("claims", claims_path)->required();
  export_cmd->add_option("--base-iri", base_iri, "base IRI for nanopublication graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      sp::ClaimDocument doc = load_claims(claims_path);
      std::cout << "ok: " << doc.claims.size() << " claims\n";
      return kOk;
    }
    if (*gloss) {
      sp::ClaimDocument doc = load_claims(claims_path);
      for (const auto& c : doc.claims) {
        if (!c.meta.expressible) continue;
        std::cout << c.meta.claim_id << ": " << sp::render_gloss(c) << "\n";
      }
      return kOk;
    }
    if (*formula) {
      sp::ClaimDocument doc = load_claims(claims_path);
      sp::RenderStyle rs = parse_style(style);
      for (const auto& c : doc.claims) {
        if (!c.meta.expressible) continue;
        std::cout << c.meta.claim_id << ": "
                  << sp::render_formula(sp::build_formula(c), rs) << "\n";
      }
      return kOk;
    }
    if (*eval) {
      sp::ClaimDocument doc = load_claims(claims_path);
      sp::FiniteModel m = sp::parse_model(read_file(model_path), !no_reflexive);
      bool any_negative = false;
      for (const auto& c : doc.claims) {
        if (!c.meta.expressible) continue;
        sp::EvaluationResult r = sp::evaluate(m, c);
        std::cout << c.meta.claim_id << ": " << sp::eval_status_name(r.status);
        if (r.ratio)
          std::cout << ", ratio " << r.event_count << "/" << r.condition_count;
        std::cout << "\n";
        if (r.status != sp::EvalStatus::Holds) any_negative = true;
      }
      return any_negative ? kFindings : kOk;
    }
    if (*check) {
      sp::ClaimDocument doc = load_claims(claims_path);
      std::vector<sp::SuperPatternInstance> expressible;
      for (const auto& c : doc.claims)
        if (c.meta.expressible) expressible.push_back(c);
      auto findings = sp::corpus_consistency(expressible);
      bool contradiction = false;
      for (const auto& f : findings) {
        std::cout << f.first_id << " " << sp::verdict_kind_name(f.verdict.kind) << " "
                  << f.second_id;
        if (!f.verdict.assumptions.empty()) {
          std::cout << " (assuming";
          for (sp::Assumption a : f.verdict.assumptions)
            std::cout << " " << sp::assumption_name(a);
          std::cout << ")";
        }
        std::cout << " [";
        for (size_t i = 0; i < f.verdict.rule_trace.size(); ++i)
          std::cout << (i ? ", " : "") << f.verdict.rule_trace[i];
        std::cout << "]\n";
        if (f.verdict.kind == sp::VerdictKind::Contradicts) contradiction = true;
      }
      return contradiction ? kFindings : kOk;
    }
    if (*stats) {
      sp::UsageReport r = sp::usage_report(load_claims(claims_path));
      std::cout << (out_format == "structured" ? sp::usage_report_json(r)
                                               : sp::render_usage_report(r));
      return kOk;
    }
    if (*coverage) {
      sp::CoverageReport r = sp::coverage_report(load_claims(claims_path));
      std::cout << (out_format == "structured" ? sp::coverage_report_json(r)
                                               : sp::render_coverage_report(r));
      return kOk;
    }
    if (*agreement) {
      sp::StudyMarks marks = sp::parse_marks(read_file(marks_path));
      std::cout << sp::render_agreement_report(marks);
      return kOk;
    }
    if (*resolve) {
      sp::ResolverConfig config;
      config.cache_dir = cache_dir;
      config.offline = offline;
      sp::TermResolver resolver(config);
      std::set<sp::SearchSource> sources;
      for (const std::string& s : source_names) sources.insert(sp::search_source_from_name(s));
      sp::SearchResult result = resolver.search(label, sources, limit);
      for (const auto& c : result.candidates) {
        std::cout << sp::search_source_name(c.source) << " #" << c.rank << " " << c.iri << " \""
                  << c.label << "\"";
        if (c.description) std::cout << " -- " << *c.description;
        std::cout << "\n";
      }
      for (const std::string& e : result.errors) std::cerr << "warning: " << e << "\n";
      if (result.offline_cache_miss)
        std::cerr << "warning: offline mode, no cached results for some sources\n";
      return kOk;
    }
    if (*export_cmd) {
      sp::ClaimDocument doc = load_claims(claims_path);
      for (const auto& c : doc.claims) {
        if (!c.meta.expressible) continue;
        sp::NanopubOptions opts;
        sp::NanopubDocument np =
            sp::to_nanopub(c, base_iri + "/" + sp::slugify(c.meta.claim_id), opts);
        std::cout << sp::emit_trig(np, opts);
      }
      return kOk;
    }
  } catch (const sp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
