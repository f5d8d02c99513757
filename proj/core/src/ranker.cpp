#include "blogstack/ranker.hpp"

#include <algorithm>
#include <stdexcept>

#include "blogstack/errors.hpp"
#include "blogstack/ids.hpp"

namespace blogstack {

void RankWeights::validate() const {
  if (query_weight <= 0 || heading_location_weight <= 0 || body_location_weight <= 0 ||
      engagement_weight <= 0 || meta_weight <= 0) {
    throw std::invalid_argument("all rank weights must be > 0");
  }
  if (heading_location_weight <= body_location_weight) {
    throw std::invalid_argument("heading location weight must exceed body location weight");
  }
}

double query_factor_score(const IntermediateResult& result, std::size_t query_term_count,
                          const RankWeights& weights) {
  if (query_term_count == 0) throw ZeroQueryTermsError();
  double raw = 0.0;
  for (const auto& hit : result.hits) {
    raw += static_cast<double>(hit.term_frequency) + weights.location_weight(hit.location);
  }
  return raw / static_cast<double>(query_term_count) * weights.query_weight;
}

double feedback_factor_score(const FeedbackRecord& record, const RankWeights& weights) {
  return record.engagement_sum() / 6.0 * weights.engagement_weight +
         record.meta_sum() / 2.0 * weights.meta_weight;
}

ScoreBreakdown score_blog(const IntermediateResult& result, const FeedbackRecord& record,
                          std::size_t query_term_count, const RankWeights& weights) {
  ScoreBreakdown breakdown;
  breakdown.summary_id = result.summary_id;
  breakdown.query_score = query_factor_score(result, query_term_count, weights);
  breakdown.feedback_score = feedback_factor_score(record, weights);
  breakdown.total = breakdown.query_score + breakdown.feedback_score;
  return breakdown;
}

std::vector<ScoreBreakdown> rank(const std::vector<IntermediateResult>& results,
                                 const FeedbackIndex& feedback, std::size_t query_term_count,
                                 const RankWeights& weights) {
  std::vector<ScoreBreakdown> scored;
  scored.reserve(results.size());
  for (const auto& result : results) {
    scored.push_back(
        score_blog(result, feedback.get(result.summary_id), query_term_count, weights));
  }
  std::sort(scored.begin(), scored.end(), [](const ScoreBreakdown& a, const ScoreBreakdown& b) {
    if (a.total != b.total) return a.total > b.total;
    return id_less(a.summary_id, b.summary_id);
  });
  return scored;
}

}  // namespace blogstack
