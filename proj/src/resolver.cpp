#include "sp/resolver.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace sp {

namespace fs = std::filesystem;
using nlohmann::json;

std::string search_source_name(SearchSource s) {
  switch (s) {
    case SearchSource::Wikidata: return "wikidata";
    case SearchSource::Bioportal: return "bioportal";
    case SearchSource::Lov: return "lov";
  }
  return "";
}

SearchSource search_source_from_name(const std::string& name) {
  if (name == "wikidata") return SearchSource::Wikidata;
  if (name == "bioportal") return SearchSource::Bioportal;
  if (name == "lov") return SearchSource::Lov;
  throw VocabularyError("unknown search source \"" + name + "\"");
}

ResolverConfig::ResolverConfig() {
  endpoints[SearchSource::Wikidata] = {
      "https://www.wikidata.org",
      "/w/api.php?action=wbsearchentities&language=en&format=json&search={label}&limit={limit}",
      ""};
  endpoints[SearchSource::Bioportal] = {"https://data.bioontology.org",
                                        "/search?q={label}&pagesize={limit}", ""};
  endpoints[SearchSource::Lov] = {
      "https://lov.linkeddata.es",
      "/dataset/lov/api/v2/term/search?q={label}&type=class&page_size={limit}", ""};
}

namespace {

std::string url_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') out += static_cast<char>(c);
    else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

std::string normalize_label(const std::string& label) {
  std::string out;
  bool space = true;
  for (char raw : label) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      if (!space) out += ' ';
      space = true;
    } else {
      out += static_cast<char>(std::tolower(c));
      space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string first_or_self(const json& j) {
  if (j.is_array()) return j.empty() ? "" : j.front().get<std::string>();
  return j.get<std::string>();
}

std::int64_t now_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::vector<TermCandidate> parse_search_payload(SearchSource source, const std::string& body,
                                                int limit) {
  std::vector<TermCandidate> out;
  json j = json::parse(body);
  auto push = [&](std::string iri, std::string label, std::optional<std::string> desc) {
    if (iri.empty() || static_cast<int>(out.size()) >= limit) return;
    TermCandidate c;
    c.iri = std::move(iri);
    c.label = std::move(label);
    c.description = std::move(desc);
    c.source = source;
    c.rank = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(c));
  };
  switch (source) {
    case SearchSource::Wikidata:
      for (const json& item : j.value("search", json::array()))
        push(item.value("concepturi", ""), item.value("label", ""),
             item.contains("description")
                 ? std::optional<std::string>(item["description"].get<std::string>())
                 : std::nullopt);
      break;
    case SearchSource::Bioportal:
      for (const json& item : j.value("collection", json::array())) {
        std::optional<std::string> desc;
        if (item.contains("definition") && item["definition"].is_array() &&
            !item["definition"].empty())
          desc = item["definition"].front().get<std::string>();
        push(item.value("@id", ""), item.value("prefLabel", ""), desc);
      }
      break;
    case SearchSource::Lov:
      for (const json& item : j.value("results", json::array())) {
        std::string iri = item.contains("uri") ? first_or_self(item["uri"]) : "";
        std::string label =
            item.contains("prefixedName") ? first_or_self(item["prefixedName"]) : "";
        push(std::move(iri), std::move(label), std::nullopt);
      }
      break;
  }
  return out;
}

TermResolver::TermResolver(ResolverConfig config) : config_(std::move(config)) {}

std::optional<std::vector<TermCandidate>> TermResolver::load_cache(
    SearchSource source, const std::string& norm_label) {
  fs::path file = fs::path(config_.cache_dir) /
                  (search_source_name(source) + "-" + slugify(norm_label) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  std::int64_t age = now_seconds() - j.value("timestamp", std::int64_t{0});
  // offline mode serves the cache regardless of age
  if (!config_.offline && age > config_.cache_ttl_seconds) return std::nullopt;
  std::vector<TermCandidate> out;
  for (const json& item : j.value("candidates", json::array())) {
    TermCandidate c;
    c.iri = item.at("iri").get<std::string>();
    c.label = item.value("label", "");
    if (item.contains("description")) c.description = item["description"].get<std::string>();
    c.source = source;
    c.rank = item.value("rank", static_cast<int>(out.size()) + 1);
    out.push_back(std::move(c));
  }
  return out;
}

void TermResolver::store_cache(SearchSource source, const std::string& norm_label,
                               const std::vector<TermCandidate>& candidates) {
  fs::create_directories(config_.cache_dir);
  json j;
  j["timestamp"] = now_seconds();
  j["label"] = norm_label;
  j["candidates"] = json::array();
  for (const TermCandidate& c : candidates) {
    json item;
    item["iri"] = c.iri;
    item["label"] = c.label;
    if (c.description) item["description"] = *c.description;
    item["rank"] = c.rank;
    j["candidates"].push_back(std::move(item));
  }
  fs::path file = fs::path(config_.cache_dir) /
                  (search_source_name(source) + "-" + slugify(norm_label) + ".json");
  std::ofstream out(file);
  out << j.dump(2) << "\n";
}

void TermResolver::rate_limit(SearchSource source) {
  double now = static_cast<double>(
                   std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count()) /
               1000.0;
  auto it = last_request_.find(source);
  if (it != last_request_.end()) {
    double wait = config_.min_request_interval_seconds - (now - it->second);
    if (wait > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(static_cast<int>(wait * 1000)));
  }
  last_request_[source] = now;
}

std::vector<TermCandidate> TermResolver::fetch(SearchSource source, const std::string& label,
                                               int limit) {
  const SourceEndpoint& ep = config_.endpoints.at(source);
  std::string path = replace_all(ep.path, "{label}", url_encode(label));
  path = replace_all(path, "{limit}", std::to_string(limit));
  rate_limit(source);
  httplib::Client client(ep.host);
  client.set_follow_location(true);
  httplib::Headers headers = {{"User-Agent", config_.user_agent}};
  if (!ep.api_key.empty()) headers.emplace("Authorization", "apikey token=" + ep.api_key);
  auto res = client.Get(path, headers);
  if (!res || res->status != 200)
    throw std::runtime_error(search_source_name(source) + ": request failed" +
                             (res ? " with status " + std::to_string(res->status) : ""));
  return parse_search_payload(source, res->body, limit);
}

SearchResult TermResolver::search(const std::string& label,
                                  const std::set<SearchSource>& sources, int limit) {
  if (normalize_label(label).empty())
    throw std::invalid_argument("search label must be non-empty");
  if (limit < 1) throw std::invalid_argument("search limit must be >= 1");

  SearchResult result;
  std::string norm = normalize_label(label);
  for (SearchSource source : sources) {
    if (auto cached = load_cache(source, norm)) {
      for (TermCandidate& c : *cached)
        if (c.rank <= limit) result.candidates.push_back(std::move(c));
      continue;
    }
    if (config_.offline) {
      result.offline_cache_miss = true;
      continue;
    }
    try {
      std::vector<TermCandidate> fetched = fetch(source, norm, limit);
      store_cache(source, norm, fetched);
      for (TermCandidate& c : fetched) result.candidates.push_back(std::move(c));
    } catch (const std::exception& e) {
      result.errors.push_back(e.what());
    }
  }
  return result;
}

SuperPatternInstance bind(const SuperPatternInstance& inst, const SlotRef& slot,
                          const TermCandidate& candidate) {
  SuperPatternInstance out = inst;
  ClassExpr* target = nullptr;
  switch (slot.slot) {
    case Slot::Context:
      if (!out.context) throw std::invalid_argument("instance has no context slot to bind");
      target = &*out.context;
      break;
    case Slot::Subject: target = &out.subject; break;
    case Slot::Object: target = &out.object; break;
  }
  if (slot.part) {
    if (!target->is_intersection())
      throw std::invalid_argument("part index given but slot is not an intersection");
    if (*slot.part >= target->parts.size())
      throw std::invalid_argument("intersection part index out of range");
    target = &target->parts[*slot.part];
  }
  if (target->is_intersection())
    throw std::invalid_argument(
        "cannot bind an intersection directly; bind its parts individually");

  TermSource src = infer_term_source(candidate.iri);
  if (src == TermSource::Other) {
    if (candidate.source == SearchSource::Wikidata) src = TermSource::Wikidata;
    else if (candidate.source == SearchSource::Lov) src = TermSource::Lov;
  }
  target->term = TermRef{candidate.iri, src};
  return out;
}

}  // namespace sp
