#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blogstack/blog_index.hpp"
#include "blogstack/textprep.hpp"

namespace blogstack {

/// One matched query term inside one summary section.
struct QueryHit {
  std::string term;
  std::uint32_t term_frequency = 0;
  Location location = Location::Body;

  bool operator==(const QueryHit&) const = default;
};

/// All query-term evidence found in one summary. Summaries with no matching
/// term never appear.
struct IntermediateResult {
  std::string summary_id;
  std::vector<QueryHit> hits;

  bool operator==(const IntermediateResult&) const = default;
};

struct SearchOutput {
  std::vector<std::string> query_terms;  // preprocessed stems, deduplicated
  std::vector<IntermediateResult> results;  // ordered by summary id
};

/// OR-semantics search: preprocesses the query, gathers postings per term and
/// groups them by summary. query_terms is returned even when nothing matched
/// (the ranker needs the term count). Throws EmptyQueryError when the query
/// preprocesses to nothing.
SearchOutput search(const BlogIndex& index, const std::string& raw_query,
                    const StopwordList& stops);

}  // namespace blogstack
