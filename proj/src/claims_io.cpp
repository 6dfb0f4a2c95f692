#include "sp/claims_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sp {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_comment_or_blank(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "label <iri>" -> atomic; "a + b" -> intersection
ClassExpr parse_class_term(const std::string& text, size_t line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::vector<ClassExpr> exprs;
  for (const std::string& raw : parts) {
    std::string p = trim(raw);
    std::optional<TermRef> term;
    if (!p.empty() && p.back() == '>') {
      size_t open = p.rfind('<');
      if (open == std::string::npos)
        throw ParseError(line, 1, "malformed IRI in class term \"" + p + "\"");
      std::string iri = p.substr(open + 1, p.size() - open - 2);
      term = TermRef{iri, infer_term_source(iri)};
      p = trim(p.substr(0, open));
    }
    if (p.empty()) throw ParseError(line, 1, "empty class label in \"" + trim(text) + "\"");
    exprs.push_back(ClassExpr::atomic(p, term));
  }
  if (exprs.size() == 1) return exprs[0];
  return ClassExpr::intersection(std::move(exprs));
}

std::string emit_class_term(const ClassExpr& c) {
  ClassExpr canon = c.canonical();
  if (!canon.is_intersection()) {
    std::string out = canon.label;
    if (canon.term) out += " <" + canon.term->iri + ">";
    return out;
  }
  std::string out;
  for (size_t i = 0; i < canon.parts.size(); ++i) {
    if (i > 0) out += " + ";
    out += emit_class_term(canon.parts[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// claim DSL
// ---------------------------------------------------------------------------

ClaimDocument parse_claims(const std::string& text, const std::string& source_path) {
  ClaimDocument doc;
  doc.source_path = source_path;

  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  std::set<std::string> seen_ids;
  size_t auto_id = 0;
  size_t i = 0;
  while (i < lines.size()) {
    while (i < lines.size() && is_comment_or_blank(lines[i])) ++i;
    if (i >= lines.size()) break;

    size_t block_start = i + 1;  // 1-based
    std::map<std::string, std::pair<std::string, size_t>> fields;
    bool inexpressible = false;
    for (; i < lines.size() && !trim(lines[i]).empty(); ++i) {
      std::string line = lines[i];
      if (is_comment_or_blank(line)) continue;
      std::string t = trim(line);
      if (t == "INEXPRESSIBLE") {
        inexpressible = true;
        continue;
      }
      size_t colon = t.find(':');
      if (colon == std::string::npos)
        throw ParseError(i + 1, 1, "expected \"KEY: value\" line, got \"" + t + "\"");
      std::string key = trim(t.substr(0, colon));
      std::string value = trim(t.substr(colon + 1));
      static const std::set<std::string> known = {"ID",       "CONTEXT", "SUBJECT", "QUALIFIER",
                                                 "RELATION", "OBJECT",  "AIDA",    "SOURCE"};
      if (!known.count(key)) throw ParseError(i + 1, 1, "unknown line key \"" + key + "\"");
      if (fields.count(key)) throw ParseError(i + 1, 1, "duplicate " + key + " line");
      fields[key] = {value, i + 1};
    }

    SuperPatternInstance inst;
    if (auto it = fields.find("ID"); it != fields.end())
      inst.meta.claim_id = it->second.first;
    else
      inst.meta.claim_id = "claim-" + std::to_string(++auto_id);
    if (!seen_ids.insert(inst.meta.claim_id).second)
      throw ParseError(block_start, 1, "duplicate claim id \"" + inst.meta.claim_id + "\"");
    if (auto it = fields.find("AIDA"); it != fields.end()) inst.meta.aida_sentence = it->second.first;
    if (auto it = fields.find("SOURCE"); it != fields.end())
      inst.meta.source_article = it->second.first;
    inst.meta.expressible = !inexpressible;

    if (inexpressible) {
      for (const char* key : {"CONTEXT", "SUBJECT", "QUALIFIER", "RELATION", "OBJECT"})
        if (fields.count(key))
          throw ParseError(fields[key].second, 1,
                           std::string("inexpressible claim must not carry a ") + key + " line");
      doc.claims.push_back(std::move(inst));
      continue;
    }

    for (const char* key : {"SUBJECT", "QUALIFIER", "RELATION", "OBJECT"})
      if (!fields.count(key))
        throw ParseError(block_start, 1, std::string("claim block is missing a ") + key + " line");

    if (auto it = fields.find("CONTEXT"); it != fields.end())
      inst.context = parse_class_term(it->second.first, it->second.second);
    inst.subject = parse_class_term(fields["SUBJECT"].first, fields["SUBJECT"].second);
    inst.object = parse_class_term(fields["OBJECT"].first, fields["OBJECT"].second);
    try {
      inst.qualifier = parse_qualifier(fields["QUALIFIER"].first);
    } catch (const VocabularyError& e) {
      throw ParseError(fields["QUALIFIER"].second, 1, e.what());
    }
    try {
      inst.relation = parse_relation(fields["RELATION"].first);
    } catch (const VocabularyError& e) {
      throw ParseError(fields["RELATION"].second, 1, e.what());
    }
    doc.claims.push_back(std::move(inst));
  }
  return doc;
}

std::string emit_claims(const ClaimDocument& doc) {
  std::string out;
  for (size_t n = 0; n < doc.claims.size(); ++n) {
    const SuperPatternInstance& c = doc.claims[n];
    if (n > 0) out += "\n";
    out += "ID: " + c.meta.claim_id + "\n";
    if (!c.meta.expressible) {
      out += "INEXPRESSIBLE\n";
    } else {
      if (c.context) out += "CONTEXT: " + emit_class_term(*c.context) + "\n";
      out += "SUBJECT: " + emit_class_term(c.subject) + "\n";
      out += "QUALIFIER: " + canonical_phrase(c.qualifier) + "\n";
      out += "RELATION: " + c.relation.display + "\n";
      out += "OBJECT: " + emit_class_term(c.object) + "\n";
    }
    if (c.meta.aida_sentence) out += "AIDA: " + *c.meta.aida_sentence + "\n";
    if (c.meta.source_article) out += "SOURCE: " + *c.meta.source_article + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// interchange JSON
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json class_to_json(const ClassExpr& c) {
  json j;
  if (c.is_intersection()) {
    j["parts"] = json::array();
    for (const ClassExpr& p : c.parts) j["parts"].push_back(class_to_json(p));
  } else {
    j["label"] = c.label;
  }
  if (c.term) {
    j["iri"] = c.term->iri;
    j["source"] = term_source_name(c.term->source);
  }
  return j;
}

ClassExpr class_from_json(const json& j) {
  std::optional<TermRef> term;
  if (j.contains("iri")) {
    TermRef t;
    t.iri = j.at("iri").get<std::string>();
    t.source = j.contains("source") ? term_source_from_name(j.at("source").get<std::string>())
                                    : infer_term_source(t.iri);
    term = t;
  }
  if (j.contains("parts")) {
    std::vector<ClassExpr> parts;
    for (const json& p : j.at("parts")) parts.push_back(class_from_json(p));
    return ClassExpr::intersection(std::move(parts), std::move(term));
  }
  return ClassExpr::atomic(j.at("label").get<std::string>(), std::move(term));
}

}  // namespace

std::string claims_to_json(const ClaimDocument& doc) {
  json j;
  j["claims"] = json::array();
  for (const SuperPatternInstance& c : doc.claims) {
    json jc;
    jc["id"] = c.meta.claim_id;
    jc["expressible"] = c.meta.expressible;
    if (c.meta.expressible) {
      if (c.context) jc["context"] = class_to_json(*c.context);
      jc["subject"] = class_to_json(c.subject);
      jc["qualifier"] = canonical_phrase(c.qualifier);
      jc["relation"] = c.relation.display;
      jc["object"] = class_to_json(c.object);
    }
    if (c.meta.aida_sentence) jc["aida"] = *c.meta.aida_sentence;
    if (c.meta.source_article) jc["source"] = *c.meta.source_article;
    j["claims"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

ClaimDocument claims_from_json(const std::string& json_text, const std::string& source_path) {
  ClaimDocument doc;
  doc.source_path = source_path;
  json j = json::parse(json_text);
  std::set<std::string> ids;
  for (const json& jc : j.at("claims")) {
    SuperPatternInstance inst;
    inst.meta.claim_id = jc.at("id").get<std::string>();
    if (!ids.insert(inst.meta.claim_id).second)
      throw VocabularyError("duplicate claim id \"" + inst.meta.claim_id + "\"");
    inst.meta.expressible = jc.value("expressible", true);
    if (jc.contains("aida")) inst.meta.aida_sentence = jc.at("aida").get<std::string>();
    if (jc.contains("source")) inst.meta.source_article = jc.at("source").get<std::string>();
    if (inst.meta.expressible) {
      if (jc.contains("context")) inst.context = class_from_json(jc.at("context"));
      inst.subject = class_from_json(jc.at("subject"));
      inst.qualifier = parse_qualifier(jc.at("qualifier").get<std::string>());
      inst.relation = parse_relation(jc.at("relation").get<std::string>());
      inst.object = class_from_json(jc.at("object"));
    }
    doc.claims.push_back(std::move(inst));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// finite-model format
// ---------------------------------------------------------------------------

namespace {

IndividualPair parse_pair(const std::string& tok, size_t line) {
  size_t arrow = tok.find("->");
  if (arrow == std::string::npos)
    throw ParseError(line, 1, "expected \"a->b\" pair, got \"" + tok + "\"");
  std::string a = tok.substr(0, arrow), b = tok.substr(arrow + 2);
  if (a.empty() || b.empty()) throw ParseError(line, 1, "malformed pair \"" + tok + "\"");
  return {a, b};
}

}  // namespace

FiniteModel parse_model(const std::string& text, bool reflexive) {
  FiniteModel m;
  m.reflexive = reflexive;
  bool saw_accessibility = false;

  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::string t = trim(line);
    size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, 1, "expected \"SECTION: ...\" line, got \"" + t + "\"");
    std::string head = trim(t.substr(0, colon));
    std::string rest = trim(t.substr(colon + 1));
    std::vector<std::string> head_toks = split_ws(head);
    const std::string& section = head_toks[0];

    if (section == "WORLDS") {
      for (const std::string& w : split_ws(rest)) m.worlds.push_back(w);
    } else if (section == "ACTUAL") {
      m.actual = rest;
    } else if (section == "ACCESSIBILITY") {
      saw_accessibility = true;
      for (const std::string& tok : split_ws(rest)) m.accessibility.insert(parse_pair(tok, lineno));
    } else if (section == "INDIVIDUALS") {
      for (const std::string& a : split_ws(rest)) m.domain.push_back(a);
    } else if (section == "CLASS") {
      if (head_toks.size() < 3)
        throw ParseError(lineno, 1, "CLASS line needs a world and a label");
      std::string world = head_toks[1];
      std::string label = trim(head.substr(head.find(world) + world.size()));
      auto& ext = m.class_ext[{world, label}];
      for (const std::string& a : split_ws(rest)) ext.insert(a);
    } else if (section == "REL") {
      if (head_toks.size() != 3)
        throw ParseError(lineno, 1, "REL line needs a world and a relation id");
      auto& ext = m.rel_ext[{head_toks[1], head_toks[2]}];
      for (const std::string& tok : split_ws(rest)) ext.insert(parse_pair(tok, lineno));
    } else if (section == "CONTEXT") {
      if (head_toks.size() != 2) throw ParseError(lineno, 1, "CONTEXT line needs a world");
      auto& ext = m.context_of[head_toks[1]];
      for (const std::string& tok : split_ws(rest)) ext.insert(parse_pair(tok, lineno));
    } else {
      throw ParseError(lineno, 1, "unknown section \"" + section + "\"");
    }
  }

  if (reflexive) {
    for (const WorldId& w : m.worlds) m.accessibility.insert({w, w});
  } else if (!saw_accessibility && m.worlds.size() > 1) {
    // nothing to add; an explicitly empty relation is allowed
  }

  std::vector<std::string> violations = validate_model(m);
  if (!violations.empty()) throw ModelError("invalid model: " + violations.front());
  return m;
}

std::string emit_model(const FiniteModel& m) {
  std::string out = "WORLDS:";
  for (const WorldId& w : m.worlds) out += " " + w;
  out += "\nACTUAL: " + m.actual + "\nACCESSIBILITY:";
  for (const auto& [a, b] : m.accessibility) out += " " + a + "->" + b;
  out += "\nINDIVIDUALS:";
  for (const IndividualId& a : m.domain) out += " " + a;
  out += "\n";
  for (const auto& [key, ext] : m.class_ext) {
    out += "CLASS " + key.first + " " + key.second + ":";
    for (const IndividualId& a : ext) out += " " + a;
    out += "\n";
  }
  for (const auto& [key, ext] : m.rel_ext) {
    out += "REL " + key.first + " " + key.second + ":";
    for (const auto& [a, b] : ext) out += " " + a + "->" + b;
    out += "\n";
  }
  for (const auto& [w, pairs] : m.context_of) {
    out += "CONTEXT " + w + ":";
    for (const auto& [a, b] : pairs) out += " " + a + "->" + b;
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// nanopublications
// ---------------------------------------------------------------------------

namespace {

const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";
const std::string kDct = "http://purl.org/dc/terms/";
const std::string kProv = "http://www.w3.org/ns/prov#";

bool is_absolute_iri(const std::string& iri) {
  size_t colon = iri.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  for (size_t i = 0; i < colon; ++i) {
    char c = iri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return !std::isdigit(static_cast<unsigned char>(iri[0]));
}

struct NanopubBuilder {
  const NanopubOptions& opts;
  const std::string& base;
  RdfGraph* graph = nullptr;
  int blank_counter = 0;

  std::string vocab(const std::string& local) const { return opts.vocab_ns + local; }

  void add(RdfTerm s, std::string pred, RdfTerm o) {
    graph->push_back({std::move(s), RdfTerm::iri(std::move(pred)), std::move(o)});
  }

  RdfTerm fresh_blank() { return RdfTerm::blank("b" + std::to_string(blank_counter++)); }

  // returns the node for a class expression, describing it in the graph
  RdfTerm describe_class(const ClassExpr& c) {
    RdfTerm node = c.term ? RdfTerm::iri(c.term->iri)
                          : RdfTerm::iri(base + "#class-" + c.slug());
    add(node, kRdfs + "label", RdfTerm::literal(c.display_label()));
    if (c.is_intersection()) {
      std::vector<RdfTerm> members;
      for (const ClassExpr& p : c.parts) members.push_back(describe_class(p));
      RdfTerm head = fresh_blank();
      add(node, vocab("intersection-of"), head);
      for (size_t i = 0; i < members.size(); ++i) {
        add(head, kRdf + "first", members[i]);
        if (i + 1 < members.size()) {
          RdfTerm next = fresh_blank();
          add(head, kRdf + "rest", next);
          head = next;
        } else {
          add(head, kRdf + "rest", RdfTerm::iri(kRdf + "nil"));
        }
      }
    }
    return node;
  }
};

}  // namespace

NanopubDocument to_nanopub(const SuperPatternInstance& inst, const std::string& base_iri,
                           const NanopubOptions& opts) {
  if (!is_absolute_iri(base_iri))
    throw std::invalid_argument("base IRI must be absolute: \"" + base_iri + "\"");

  NanopubDocument doc;
  doc.base_iri = base_iri;
  NanopubBuilder b{opts, base_iri};

  RdfTerm claim = RdfTerm::iri(base_iri + "#claim");
  b.graph = &doc.assertion;
  b.add(claim, kRdf + "type", RdfTerm::iri(b.vocab("SuperPatternInstance")));
  if (inst.context) b.add(claim, b.vocab("has-context-class"), b.describe_class(*inst.context));
  b.add(claim, b.vocab("has-subject-class"), b.describe_class(inst.subject));
  b.add(claim, b.vocab("has-qualifier"), RdfTerm::literal(canonical_phrase(inst.qualifier)));
  b.add(claim, b.vocab("has-relation"), RdfTerm::iri(b.vocab(inst.relation.id)));
  b.add(claim, b.vocab("has-object-class"), b.describe_class(inst.object));

  RdfTerm assertion = RdfTerm::iri(doc.assertion_graph_iri());
  b.graph = &doc.provenance;
  if (inst.meta.source_article) {
    RdfTerm src = is_absolute_iri(*inst.meta.source_article)
                      ? RdfTerm::iri(*inst.meta.source_article)
                      : RdfTerm::literal(*inst.meta.source_article);
    b.add(assertion, kProv + "wasDerivedFrom", src);
  }
  if (inst.meta.aida_sentence)
    b.add(assertion, b.vocab("has-aida-sentence"), RdfTerm::literal(*inst.meta.aida_sentence));
  b.add(assertion, b.vocab("formalizes-claim"), RdfTerm::literal(inst.meta.claim_id));

  b.graph = &doc.pubinfo;
  RdfTerm np = RdfTerm::iri(base_iri);
  b.add(np, kDct + "created", RdfTerm::literal(opts.created, kXsd + "dateTime"));
  if (!opts.creator.empty()) b.add(np, kDct + "creator", RdfTerm::literal(opts.creator));
  return doc;
}

namespace {

std::string escape_literal(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_literal(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      char n = s[++i];
      switch (n) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        default: out += n;
      }
    } else {
      out += s[i];
    }
  }
  return out;
}

using PrefixMap = std::vector<std::pair<std::string, std::string>>;  // prefix -> namespace

std::string shorten(const std::string& iri, const PrefixMap& prefixes) {
  for (const auto& [pfx, ns] : prefixes) {
    if (iri.rfind(ns, 0) == 0) {
      std::string local = iri.substr(ns.size());
      bool ok = !local.empty();
      for (char c : local)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') ok = false;
      if (ok) return pfx + ":" + local;
    }
  }
  return "<" + iri + ">";
}

std::string term_to_trig(const RdfTerm& t, const PrefixMap& prefixes) {
  switch (t.kind) {
    case RdfTerm::Kind::Iri: return shorten(t.value, prefixes);
    case RdfTerm::Kind::Blank: return "_:" + t.value;
    case RdfTerm::Kind::Literal: {
      std::string out = "\"" + escape_literal(t.value) + "\"";
      if (!t.datatype.empty()) out += "^^" + shorten(t.datatype, prefixes);
      return out;
    }
  }
  return "";
}

}  // namespace

std::string emit_trig(const NanopubDocument& doc, const NanopubOptions& opts) {
  PrefixMap prefixes = {{"rdf", kRdf},   {"rdfs", kRdfs}, {"xsd", kXsd},
                        {"dct", kDct},   {"prov", kProv}, {"sp", opts.vocab_ns},
                        {"this", doc.base_iri + "#"}};
  std::string out;
  for (const auto& [pfx, ns] : prefixes) out += "@prefix " + pfx + ": <" + ns + "> .\n";
  out += "\n";
  auto emit_graph = [&](const std::string& name, const RdfGraph& g) {
    out += shorten(name, prefixes) + " {\n";
    for (const RdfTriple& t : g)
      out += "  " + term_to_trig(t.subject, prefixes) + " " + term_to_trig(t.predicate, prefixes) +
             " " + term_to_trig(t.object, prefixes) + " .\n";
    out += "}\n\n";
  };
  emit_graph(doc.assertion_graph_iri(), doc.assertion);
  emit_graph(doc.provenance_graph_iri(), doc.provenance);
  emit_graph(doc.pubinfo_graph_iri(), doc.pubinfo);
  return out;
}

// ---------------------------------------------------------------------------
// minimal TriG reader
// ---------------------------------------------------------------------------

namespace {

struct TrigTokenizer {
  const std::string& text;
  size_t pos = 0;
  size_t line = 1;

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') { ++line; ++pos; }
      else if (std::isspace(static_cast<unsigned char>(c))) ++pos;
      else if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else break;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  // token kinds: iri(<...>), pname, blank(_:x), literal("..."[^^dt]), punct({ } .)
  struct Token {
    enum class Kind { Iri, PName, Blank, Literal, Punct, Keyword } kind;
    std::string value;
    std::string datatype;  // literal only; may be iri or pname text
    bool datatype_is_iri = false;
  };

  Token next() {
    skip_ws();
    if (pos >= text.size()) throw ParseError(line, 1, "unexpected end of TriG input");
    char c = text[pos];
    if (c == '{' || c == '}' || c == '.') {
      ++pos;
      return {Token::Kind::Punct, std::string(1, c), "", false};
    }
    if (c == '<') {
      size_t end = text.find('>', pos);
      if (end == std::string::npos) throw ParseError(line, 1, "unterminated IRI");
      std::string iri = text.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      return {Token::Kind::Iri, iri, "", false};
    }
    if (c == '"') {
      std::string lex;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) { lex += text[pos]; ++pos; }
        lex += text[pos];
        ++pos;
      }
      if (pos >= text.size()) throw ParseError(line, 1, "unterminated literal");
      ++pos;  // closing quote
      Token t{Token::Kind::Literal, unescape_literal(lex), "", false};
      if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '^') {
        pos += 2;
        Token dt = next();
        if (dt.kind == Token::Kind::Iri) { t.datatype = dt.value; t.datatype_is_iri = true; }
        else if (dt.kind == Token::Kind::PName) { t.datatype = dt.value; }
        else throw ParseError(line, 1, "expected datatype after ^^");
      }
      return t;
    }
    if (c == '@') {
      size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      return {Token::Kind::Keyword, text.substr(start, pos - start), "", false};
    }
    if (c == '_' && pos + 1 < text.size() && text[pos + 1] == ':') {
      size_t start = pos + 2;
      pos = start;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '-' || text[pos] == '_'))
        ++pos;
      return {Token::Kind::Blank, text.substr(start, pos - start), "", false};
    }
    // prefixed name (or "prefix:" in @prefix directives)
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '{' && text[pos] != '}')
      ++pos;
    std::string tok = text.substr(start, pos - start);
    // statement-final "." sticks to the token only when there is no space;
    // the emitter always separates it, so a bare trailing dot means pname end
    return {Token::Kind::PName, tok, "", false};
  }
};

}  // namespace

std::map<std::string, RdfGraph> parse_trig(const std::string& text) {
  std::map<std::string, RdfGraph> graphs;
  std::map<std::string, std::string> prefixes;
  TrigTokenizer tz{text};

  auto expand = [&](const std::string& pname) -> std::string {
    size_t colon = pname.find(':');
    if (colon == std::string::npos)
      throw ParseError(tz.line, 1, "expected prefixed name, got \"" + pname + "\"");
    std::string pfx = pname.substr(0, colon);
    auto it = prefixes.find(pfx);
    if (it == prefixes.end()) throw ParseError(tz.line, 1, "unknown prefix \"" + pfx + "\"");
    return it->second + pname.substr(colon + 1);
  };

  auto to_term = [&](const TrigTokenizer::Token& t) -> RdfTerm {
    switch (t.kind) {
      case TrigTokenizer::Token::Kind::Iri: return RdfTerm::iri(t.value);
      case TrigTokenizer::Token::Kind::PName: return RdfTerm::iri(expand(t.value));
      case TrigTokenizer::Token::Kind::Blank: return RdfTerm::blank(t.value);
      case TrigTokenizer::Token::Kind::Literal: {
        std::string dt = t.datatype;
        if (!dt.empty() && !t.datatype_is_iri) dt = expand(dt);
        return RdfTerm::literal(t.value, dt);
      }
      default: throw ParseError(tz.line, 1, "unexpected token \"" + t.value + "\"");
    }
  };

  while (!tz.eof()) {
    TrigTokenizer::Token t = tz.next();
    if (t.kind == TrigTokenizer::Token::Kind::Keyword && t.value == "@prefix") {
      TrigTokenizer::Token name = tz.next();
      TrigTokenizer::Token iri = tz.next();
      TrigTokenizer::Token dot = tz.next();
      if (name.kind != TrigTokenizer::Token::Kind::PName ||
          iri.kind != TrigTokenizer::Token::Kind::Iri || dot.value != ".")
        throw ParseError(tz.line, 1, "malformed @prefix directive");
      std::string pfx = name.value;
      if (!pfx.empty() && pfx.back() == ':') pfx.pop_back();
      prefixes[pfx] = iri.value;
      continue;
    }
    // graph block
    std::string graph_iri;
    if (t.kind == TrigTokenizer::Token::Kind::Iri) graph_iri = t.value;
    else if (t.kind == TrigTokenizer::Token::Kind::PName) graph_iri = expand(t.value);
    else throw ParseError(tz.line, 1, "expected graph name");
    TrigTokenizer::Token open = tz.next();
    if (open.value != "{") throw ParseError(tz.line, 1, "expected '{' after graph name");
    RdfGraph& g = graphs[graph_iri];
    for (;;) {
      TrigTokenizer::Token s = tz.next();
      if (s.kind == TrigTokenizer::Token::Kind::Punct && s.value == "}") break;
      TrigTokenizer::Token p = tz.next();
      TrigTokenizer::Token o = tz.next();
      TrigTokenizer::Token dot = tz.next();
      if (dot.value != ".") throw ParseError(tz.line, 1, "expected '.' after triple");
      g.push_back({to_term(s), to_term(p), to_term(o)});
    }
  }
  return graphs;
}

}  // namespace sp
