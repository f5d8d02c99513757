#include "blogstack/search_service.hpp"

#include <charconv>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "blogstack/errors.hpp"
#include "blogstack/searcher.hpp"

namespace blogstack {

namespace {

nlohmann::json breakdowns_to_json(const std::vector<ScoreBreakdown>& ranked) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : ranked) {
    arr.push_back({{"summary_id", b.summary_id},
                   {"query_score", b.query_score},
                   {"feedback_score", b.feedback_score},
                   {"total", b.total}});
  }
  return arr;
}

void answer_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", message}}.dump() + "\n", "application/json");
}

}  // namespace

std::vector<ScoreBreakdown> SearchService::rank_query(const std::string& raw_query,
                                                      std::size_t top_k) const {
  SearchOutput found = search(index, raw_query, stopwords);
  std::vector<ScoreBreakdown> ranked =
      rank(found.results, feedback, found.query_terms.size(), weights);
  if (ranked.size() > top_k) ranked.resize(top_k);
  return ranked;
}

void attach_search_routes(httplib::Server& server, const SearchService& service) {
  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok\n", "text/plain");
  });

  server.Get("/search", [&service](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("q")) {
      answer_error(res, 400, "missing query parameter q");
      return;
    }

    std::size_t top_k = 10;
    if (req.has_param("k")) {
      const std::string raw_k = req.get_param_value("k");
      auto [end, ec] = std::from_chars(raw_k.data(), raw_k.data() + raw_k.size(), top_k);
      if (ec != std::errc{} || end != raw_k.data() + raw_k.size() || top_k == 0) {
        answer_error(res, 400, "k must be a positive integer");
        return;
      }
    }

    try {
      nlohmann::json body;
      body["results"] = breakdowns_to_json(service.rank_query(req.get_param_value("q"), top_k));
      res.set_content(body.dump(2) + "\n", "application/json");
    } catch (const EmptyQueryError& e) {
      answer_error(res, 400, e.what());
    }
  });
}

}  // namespace blogstack
