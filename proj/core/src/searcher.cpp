#include "blogstack/searcher.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "blogstack/errors.hpp"
#include "blogstack/ids.hpp"

namespace blogstack {

SearchOutput search(const BlogIndex& index, const std::string& raw_query,
                    const StopwordList& stops) {
  SearchOutput out;

  // Repeated query words collapse to one term: they would otherwise
  // contribute identical hits and inflate the averaging divisor downstream.
  std::unordered_set<std::string> seen;
  for (auto& stem : preprocess(raw_query, stops)) {
    if (seen.insert(stem).second) out.query_terms.push_back(std::move(stem));
  }
  if (out.query_terms.empty()) throw EmptyQueryError();

  std::map<std::string, std::vector<QueryHit>, IdLess> by_summary;
  for (const auto& term : out.query_terms) {
    for (const auto& posting : index.lookup(term)) {
      by_summary[posting.summary_id].push_back(
          QueryHit{term, posting.term_frequency, posting.location});
    }
  }

  out.results.reserve(by_summary.size());
  for (auto& [summary_id, hits] : by_summary) {
    out.results.push_back(IntermediateResult{summary_id, std::move(hits)});
  }
  return out;
}

}  // namespace blogstack
