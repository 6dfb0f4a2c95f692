#pragma once

#include <map>
#include <string>

#include "sp/claims_io.hpp"
#include "sp/core.hpp"

namespace sp {

struct UsageReport {
  std::map<std::string, std::int64_t> qualifier_counts;  // keyed by canonical phrase, all 20
  std::int64_t positive = 0, negative = 0, can_positive = 0, can_negative = 0;
  std::map<std::string, std::int64_t> relation_counts;   // keyed by relation id, all 25
  std::map<std::string, std::int64_t> group_totals;      // keyed by group name
  std::int64_t expressible_count = 0;
  std::int64_t context_used_count = 0;
  std::int64_t total_claims = 0;
};

UsageReport usage_report(const ClaimDocument& doc);

struct SlotCoverage {
  std::int64_t total = 0;                                // top-level classes in this slot
  std::map<std::string, std::int64_t> per_source;        // resolved, keyed by source name
  std::int64_t resolved = 0;
  Rational coverage;                                     // resolved / total (0 when total = 0)
};

struct CoverageReport {
  SlotCoverage context, subject, object;
  SlotCoverage overall;
};

// Counts only top-level slot fillers; an intersection is one top-level class
// and counts as resolved only when it carries its own TermRef from an
// existing vocabulary (minted identifiers do not count as resolved).
CoverageReport coverage_report(const ClaimDocument& doc);

// Plain-text tables in the shape of the usage/coverage summaries.
std::string render_usage_report(const UsageReport& r);
std::string render_coverage_report(const CoverageReport& r);

std::string usage_report_json(const UsageReport& r);
std::string coverage_report_json(const CoverageReport& r);

}  // namespace sp
