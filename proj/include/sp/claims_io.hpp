#pragma once

#include <map>
#include <string>
#include <vector>

#include "sp/core.hpp"
#include "sp/model.hpp"

namespace sp {

struct ClaimDocument {
  std::vector<SuperPatternInstance> claims;
  std::string source_path;
};

struct ParseError : std::runtime_error {
  ParseError(size_t line, size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

// --- claim DSL -------------------------------------------------------------
//
// Blocks separated by blank lines, '#' comments. Lines:
//   ID: <claim id>
//   CONTEXT: <class term>          (optional)
//   SUBJECT: <class term>
//   QUALIFIER: <qualifier phrase>
//   RELATION: <relation phrase>
//   OBJECT: <class term>
//   AIDA: <sentence>               (optional)
//   SOURCE: <article reference>    (optional)
//   INEXPRESSIBLE                  (marks a claim the pattern cannot express)
// A class term is a label optionally followed by <iri>; "+" joins
// intersection parts.
ClaimDocument parse_claims(const std::string& text, const std::string& source_path = "");

// Canonical emission; parse_claims(emit_claims(d)) is structurally equal to d
// up to canonical intersection ordering.
std::string emit_claims(const ClaimDocument& doc);

// --- interchange (JSON) ----------------------------------------------------

std::string claims_to_json(const ClaimDocument& doc);
ClaimDocument claims_from_json(const std::string& json_text, const std::string& source_path = "");

// --- finite-model format ---------------------------------------------------
//
// Sections, one per line, '#' comments:
//   WORLDS: w1 w2
//   ACTUAL: w1
//   ACCESSIBILITY: w1->w2 ...      (optional; identity pairs auto-added when
//                                   reflexivity is enabled)
//   INDIVIDUALS: a b ...
//   CLASS <world> <label>: a b
//   REL <world> <relation-id>: a->b ...
//   CONTEXT <world>: a->b ...      (a is in the context of b)
FiniteModel parse_model(const std::string& text, bool reflexive = true);

std::string emit_model(const FiniteModel& m);

// --- nanopublication output ------------------------------------------------

struct RdfTerm {
  enum class Kind { Iri, Blank, Literal };
  Kind kind = Kind::Iri;
  std::string value;     // IRI, blank label, or lexical form
  std::string datatype;  // literal datatype IRI, optional

  friend bool operator==(const RdfTerm&, const RdfTerm&) = default;
  friend auto operator<=>(const RdfTerm&, const RdfTerm&) = default;

  static RdfTerm iri(std::string v) { return {Kind::Iri, std::move(v), ""}; }
  static RdfTerm blank(std::string v) { return {Kind::Blank, std::move(v), ""}; }
  static RdfTerm literal(std::string v, std::string dt = "") {
    return {Kind::Literal, std::move(v), std::move(dt)};
  }
};

struct RdfTriple {
  RdfTerm subject, predicate, object;
  friend bool operator==(const RdfTriple&, const RdfTriple&) = default;
  friend auto operator<=>(const RdfTriple&, const RdfTriple&) = default;
};

using RdfGraph = std::vector<RdfTriple>;

struct NanopubDocument {
  std::string base_iri;
  RdfGraph assertion;
  RdfGraph provenance;
  RdfGraph pubinfo;

  std::string assertion_graph_iri() const { return base_iri + "#assertion"; }
  std::string provenance_graph_iri() const { return base_iri + "#provenance"; }
  std::string pubinfo_graph_iri() const { return base_iri + "#pubinfo"; }
};

struct NanopubOptions {
  // Namespace for the pattern vocabulary (has-subject-class etc.). The
  // published super-pattern ontology IRIs can be substituted here.
  std::string vocab_ns = "https://w3id.org/superpattern/vocab#";
  std::string creator;                       // pubinfo dct:creator
  std::string created = "1970-01-01T00:00:00Z";  // pubinfo dct:created
};

NanopubDocument to_nanopub(const SuperPatternInstance& inst, const std::string& base_iri,
                           const NanopubOptions& opts = {});

std::string emit_trig(const NanopubDocument& doc, const NanopubOptions& opts = {});

// Minimal TriG reader covering the emitter's output subset (prefixes, named
// graph blocks, one statement per line). Returns graph-iri -> triples.
std::map<std::string, RdfGraph> parse_trig(const std::string& text);

}  // namespace sp
