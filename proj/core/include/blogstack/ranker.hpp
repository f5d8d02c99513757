#pragma once

#include <string>
#include <vector>

#include "blogstack/feedback.hpp"
#include "blogstack/searcher.hpp"

namespace blogstack {

/// Scoring constants. Defaults: query factor weighted 0.6, heading hits
/// worth 2 vs 1 for body hits, engagement counters (F1-F6) weighted 0.3 and
/// meta counters (F7-F8) weighted 0.1.
struct RankWeights {
  double query_weight = 0.6;
  double heading_location_weight = 2.0;
  double body_location_weight = 1.0;
  double engagement_weight = 0.3;
  double meta_weight = 0.1;

  double location_weight(Location loc) const {
    return loc == Location::Heading ? heading_location_weight : body_location_weight;
  }

  /// All weights must be positive and heading must outweigh body.
  /// Throws std::invalid_argument otherwise.
  void validate() const;
};

/// Score components of one summary: the query factor, the feedback factor
/// and their sum.
struct ScoreBreakdown {
  std::string summary_id;
  double query_score = 0.0;
  double feedback_score = 0.0;
  double total = 0.0;

  bool operator==(const ScoreBreakdown&) const = default;
};

/// Query factor: sum (tf + location weight) over all hits, averaged over the
/// number of query terms, times the query weight. Exact arithmetic, no
/// intermediate rounding. Throws ZeroQueryTermsError when
/// query_term_count == 0.
double query_factor_score(const IntermediateResult& result, std::size_t query_term_count,
                          const RankWeights& weights);

/// Feedback factor: mean of F1-F6 times the engagement weight plus mean of
/// F7-F8 times the meta weight.
double feedback_factor_score(const FeedbackRecord& record, const RankWeights& weights);

ScoreBreakdown score_blog(const IntermediateResult& result, const FeedbackRecord& record,
                          std::size_t query_term_count, const RankWeights& weights);

/// Scores every intermediate result and sorts by total descending, ties by
/// summary id ascending.
std::vector<ScoreBreakdown> rank(const std::vector<IntermediateResult>& results,
                                 const FeedbackIndex& feedback, std::size_t query_term_count,
                                 const RankWeights& weights = {});

}  // namespace blogstack
