#include "blogstack/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "blogstack/errors.hpp"

namespace blogstack {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// id-pair CSV shared by judgments and run files
std::vector<std::pair<std::string, std::string>> load_pair_csv(
    const std::filesystem::path& path, const char* header) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path.string());

  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (line_no == 1 && s == header) continue;
    auto comma = s.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= s.size()) {
      throw MalformedRowError(line_no, "expected `" + std::string(header) + "`, got `" + s + "`");
    }
    std::string first = strip(s.substr(0, comma));
    std::string second = strip(s.substr(comma + 1));
    if (first.empty() || second.empty() || second.find(',') != std::string::npos) {
      throw MalformedRowError(line_no, "expected two fields, got `" + s + "`");
    }
    pairs.emplace_back(std::move(first), std::move(second));
  }
  return pairs;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

double precision(std::size_t rb, std::size_t ib) {
  std::size_t denom = rb + ib;
  return denom == 0 ? 0.0 : static_cast<double>(rb) / static_cast<double>(denom);
}

double recall(std::size_t rb, std::size_t nb) {
  std::size_t denom = rb + nb;
  return denom == 0 ? 0.0 : static_cast<double>(rb) / static_cast<double>(denom);
}

double f_measure(double p, double r) {
  double denom = p + r;
  return denom == 0.0 ? 0.0 : 2.0 * p * r / denom;
}

MetricsReport evaluate_run(const std::vector<std::string>& ranked,
                           const std::set<std::string>& relevant,
                           std::optional<std::size_t> cutoff) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ranked) {
    if (!seen.insert(id).second) throw DuplicateInRankingError(id);
  }

  std::size_t take = cutoff ? std::min(*cutoff, ranked.size()) : ranked.size();
  std::set<std::string> returned(ranked.begin(), ranked.begin() + static_cast<long>(take));

  MetricsReport report;
  for (const auto& id : returned) {
    if (relevant.count(id)) {
      ++report.rb;
    } else {
      ++report.ib;
    }
  }
  report.nb = relevant.size() - report.rb;
  report.precision = precision(report.rb, report.ib);
  report.recall = recall(report.rb, report.nb);
  report.f_measure = f_measure(report.precision, report.recall);
  return report;
}

Judgments load_judgments_csv(const std::filesystem::path& path) {
  Judgments judgments;
  for (auto& [query_id, relevant_id] : load_pair_csv(path, "query_id,relevant_id")) {
    judgments.relevant[query_id].insert(relevant_id);
  }
  return judgments;
}

std::vector<QueryRun> load_run_csv(const std::filesystem::path& path) {
  std::vector<QueryRun> runs;
  std::map<std::string, std::size_t> slot;
  for (auto& [query_id, summary_id] : load_pair_csv(path, "query_id,summary_id")) {
    auto [it, inserted] = slot.emplace(query_id, runs.size());
    if (inserted) runs.push_back(QueryRun{query_id, {}});
    runs[it->second].ranked_ids.push_back(summary_id);
  }
  return runs;
}

BatchReport evaluate_batch(const std::vector<QueryRun>& runs, const Judgments& judgments,
                           std::optional<std::size_t> cutoff) {
  BatchReport report;

  std::set<std::string> covered;
  for (const auto& run : runs) {
    covered.insert(run.query_id);
    auto it = judgments.relevant.find(run.query_id);
    const std::set<std::string> empty;
    const auto& relevant = it == judgments.relevant.end() ? empty : it->second;
    report.per_query.emplace_back(run.query_id, evaluate_run(run.ranked_ids, relevant, cutoff));
  }
  // judged queries the runs never answered score as empty runs
  for (const auto& [query_id, relevant] : judgments.relevant) {
    if (!covered.count(query_id)) {
      report.per_query.emplace_back(query_id, evaluate_run({}, relevant, cutoff));
    }
  }
  std::sort(report.per_query.begin(), report.per_query.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (!report.per_query.empty()) {
    for (const auto& [_, m] : report.per_query) {
      report.macro_precision += m.precision;
      report.macro_recall += m.recall;
      report.macro_f_measure += m.f_measure;
    }
    auto n = static_cast<double>(report.per_query.size());
    report.macro_precision /= n;
    report.macro_recall /= n;
    report.macro_f_measure /= n;
  }
  return report;
}

std::string format_batch_table(const BatchReport& report) {
  std::size_t id_width = 5;  // "query" / "macro"
  for (const auto& [query_id, _] : report.per_query) {
    id_width = std::max(id_width, query_id.size());
  }

  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
  };
  auto row = [&](const std::string& id, const std::string& rb, const std::string& ib,
                 const std::string& nb, const std::string& p, const std::string& r,
                 const std::string& f) {
    out << id << std::string(id_width - id.size() + 2, ' ') << pad(rb, 4) << "  " << pad(ib, 4)
        << "  " << pad(nb, 4) << "  " << pad(p, 9) << "  " << pad(r, 9) << "  " << pad(f, 9)
        << '\n';
  };

  row("query", "rb", "ib", "nb", "precision", "recall", "f-measure");
  for (const auto& [query_id, m] : report.per_query) {
    row(query_id, std::to_string(m.rb), std::to_string(m.ib), std::to_string(m.nb),
        fixed4(m.precision), fixed4(m.recall), fixed4(m.f_measure));
  }
  row("macro", "-", "-", "-", fixed4(report.macro_precision), fixed4(report.macro_recall),
      fixed4(report.macro_f_measure));
  return out.str();
}

std::string batch_report_to_json(const BatchReport& report) {
  nlohmann::json queries = nlohmann::json::array();
  for (const auto& [query_id, m] : report.per_query) {
    queries.push_back({{"query_id", query_id},
                       {"rb", m.rb},
                       {"ib", m.ib},
                       {"nb", m.nb},
                       {"precision", m.precision},
                       {"recall", m.recall},
                       {"f_measure", m.f_measure}});
  }
  nlohmann::json doc;
  doc["queries"] = std::move(queries);
  doc["macro"] = {{"precision", report.macro_precision},
                  {"recall", report.macro_recall},
                  {"f_measure", report.macro_f_measure}};
  return doc.dump(2) + "\n";
}

}  // namespace blogstack
