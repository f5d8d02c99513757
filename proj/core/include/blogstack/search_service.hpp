#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blogstack/blog_index.hpp"
#include "blogstack/feedback.hpp"
#include "blogstack/ranker.hpp"
#include "blogstack/textprep.hpp"

namespace httplib {
class Server;
}

namespace blogstack {

/// Everything a query needs: the index, the feedback counters and the knobs.
/// One instance serves the CLI `search` command and the HTTP endpoint, so
/// both always agree.
struct SearchService {
  BlogIndex index;
  FeedbackIndex feedback;
  StopwordList stopwords = StopwordList::default_list();
  RankWeights weights;

  /// Full pipeline for one query: preprocess, gather postings, score, sort,
  /// truncate to the top_k best. Throws EmptyQueryError when the query
  /// preprocesses to nothing.
  std::vector<ScoreBreakdown> rank_query(const std::string& raw_query,
                                         std::size_t top_k) const;
};

/// Registers GET /search (params q, optional k) and GET /healthz on the
/// server. /search answers a JSON array of score breakdowns; bad input gets
/// a 400 with a JSON error body. The service must outlive the server.
void attach_search_routes(httplib::Server& server, const SearchService& service);

}  // namespace blogstack
