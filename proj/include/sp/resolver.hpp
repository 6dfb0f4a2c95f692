#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sp/core.hpp"

namespace sp {

enum class SearchSource { Wikidata, Bioportal, Lov };

std::string search_source_name(SearchSource s);
SearchSource search_source_from_name(const std::string& name);

struct TermCandidate {
  std::string iri;
  std::string label;
  std::optional<std::string> description;
  SearchSource source = SearchSource::Wikidata;
  int rank = 1;  // 1-based position in the source's result order
};

struct SearchResult {
  std::vector<TermCandidate> candidates;
  bool offline_cache_miss = false;              // offline mode could not serve some source
  std::vector<std::string> errors;              // per-source network failures, non-fatal
};

struct SourceEndpoint {
  std::string host;            // e.g. "https://www.wikidata.org"
  std::string path;            // query path with {label} and {limit} placeholders
  std::string api_key;         // bioportal only
};

struct ResolverConfig {
  std::string cache_dir = ".sp-cache";
  bool offline = false;
  std::int64_t cache_ttl_seconds = 30LL * 24 * 3600;
  std::string user_agent = "superpattern-toolkit/0.1";
  double min_request_interval_seconds = 1.0;  // per source
  std::map<SearchSource, SourceEndpoint> endpoints;  // defaults filled in ctor

  ResolverConfig();
};

class TermResolver {
public:
  explicit TermResolver(ResolverConfig config);

  // Merged candidates, per-source rank preserved, sources in enum order.
  SearchResult search(const std::string& label, const std::set<SearchSource>& sources,
                      int limit);

private:
  std::optional<std::vector<TermCandidate>> load_cache(SearchSource source,
                                                       const std::string& norm_label);
  void store_cache(SearchSource source, const std::string& norm_label,
                   const std::vector<TermCandidate>& candidates);
  std::vector<TermCandidate> fetch(SearchSource source, const std::string& label, int limit);
  void rate_limit(SearchSource source);

  ResolverConfig config_;
  std::map<SearchSource, double> last_request_;
};

// Parse a source's raw search payload into ranked candidates (exposed for
// fixture-driven tests).
std::vector<TermCandidate> parse_search_payload(SearchSource source, const std::string& body,
                                                int limit);

enum class Slot { Context, Subject, Object };

struct SlotRef {
  Slot slot = Slot::Subject;
  std::optional<size_t> part;  // index into an intersection
};

// New instance with the candidate's IRI bound to an atomic class position.
// Binding an intersection node is an error; bind its parts instead.
SuperPatternInstance bind(const SuperPatternInstance& inst, const SlotRef& slot,
                          const TermCandidate& candidate);

}  // namespace sp
