#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace blogstack {

/// Counts and metrics of one evaluated run: rb relevant returned, ib
/// irrelevant returned, nb relevant missed. Metrics use the zero-denominator
/// convention (0) so they stay total and bounded in [0,1].
struct MetricsReport {
  std::size_t rb = 0;
  std::size_t ib = 0;
  std::size_t nb = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

double precision(std::size_t rb, std::size_t ib);
double recall(std::size_t rb, std::size_t nb);
double f_measure(double p, double r);

/// Evaluates a ranked id list against the relevant set, optionally truncated
/// to the top `cutoff` entries first. Throws DuplicateInRankingError when the
/// ranked list repeats an id.
MetricsReport evaluate_run(const std::vector<std::string>& ranked,
                           const std::set<std::string>& relevant,
                           std::optional<std::size_t> cutoff = std::nullopt);

/// Expert relevance judgments, per query.
struct Judgments {
  std::map<std::string, std::set<std::string>> relevant;
};

/// CSV rows `query_id,relevant_id`; a literal header row is skipped.
Judgments load_judgments_csv(const std::filesystem::path& path);

/// One ranked result list, as produced for a single query.
struct QueryRun {
  std::string query_id;
  std::vector<std::string> ranked_ids;
};

/// CSV rows `query_id,summary_id` in rank order (a literal header row is
/// skipped). Row order within one query id is the ranking.
std::vector<QueryRun> load_run_csv(const std::filesystem::path& path);

struct BatchReport {
  std::vector<std::pair<std::string, MetricsReport>> per_query;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f_measure = 0.0;
};

/// Evaluates each run against its judgments and macro-averages the metrics.
/// Queries present in the judgments but missing from the runs count as empty
/// runs.
BatchReport evaluate_batch(const std::vector<QueryRun>& runs, const Judgments& judgments,
                           std::optional<std::size_t> cutoff = std::nullopt);

/// Aligned plain-text table, one row per query plus the macro row.
std::string format_batch_table(const BatchReport& report);

/// The same report as JSON (full float precision).
std::string batch_report_to_json(const BatchReport& report);

}  // namespace blogstack
