#include <cstddef>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "blogstack/blog_index.hpp"
#include "blogstack/corpus.hpp"
#include "blogstack/errors.hpp"
#include "blogstack/eval.hpp"
#include "blogstack/feedback.hpp"
#include "blogstack/ranker.hpp"
#include "blogstack/search_service.hpp"
#include "blogstack/summarizer.hpp"
#include "blogstack/textprep.hpp"

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

blogstack::StopwordList load_stopwords(const std::string& path) {
  return path.empty() ? blogstack::StopwordList::default_list()
                      : blogstack::StopwordList::from_file(path);
}

void report_ingest_warnings(const std::vector<blogstack::IngestWarning>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: line " << w.line << ": " << w.message << '\n';
  }
}

blogstack::SearchService make_service(const std::string& index_path,
                                      const std::string& feedback_path,
                                      const std::string& stopwords_path,
                                      const blogstack::RankWeights& weights) {
  weights.validate();
  blogstack::SearchService service;
  service.index = blogstack::load_index(index_path);
  if (!feedback_path.empty()) service.feedback = blogstack::load_feedback_csv(feedback_path);
  service.stopwords = load_stopwords(stopwords_path);
  service.weights = weights;
  return service;
}

void print_ranked_table(const std::vector<blogstack::ScoreBreakdown>& ranked) {
  std::size_t id_width = std::string("summary_id").size();
  for (const auto& b : ranked) id_width = std::max(id_width, b.summary_id.size());

  std::printf("%-4s  %-*s  %-8s  %-11s  %s\n", "rank", static_cast<int>(id_width), "summary_id",
              "total", "query_score", "feedback_score");
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& b = ranked[i];
    std::printf("%-4zu  %-*s  %-8s  %-11s  %s\n", i + 1, static_cast<int>(id_width),
                b.summary_id.c_str(), fixed4(b.total).c_str(), fixed4(b.query_score).c_str(),
                fixed4(b.feedback_score).c_str());
  }
}

/// CSV rows `query_id,query text` (a literal header row is skipped).
/// Only the first comma splits, so query text may contain commas.
std::vector<std::pair<std::string, std::string>> load_queries_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw blogstack::FileNotFoundError(path);

  std::vector<std::pair<std::string, std::string>> queries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "query_id,query") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= line.size()) {
      throw blogstack::MalformedRowError(line_no, "expected `query_id,query text`");
    }
    queries.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  return queries;
}

void add_weight_flags(CLI::App* sub, blogstack::RankWeights& weights) {
  sub->add_option("--query-weight", weights.query_weight, "Weight of the query factor")
      ->capture_default_str();
  sub->add_option("--heading-weight", weights.heading_location_weight,
                  "Location weight of a heading hit")
      ->capture_default_str();
  sub->add_option("--body-weight", weights.body_location_weight, "Location weight of a body hit")
      ->capture_default_str();
  sub->add_option("--engagement-weight", weights.engagement_weight,
                  "Weight of the engagement counters F1-F6")
      ->capture_default_str();
  sub->add_option("--meta-weight", weights.meta_weight, "Weight of the meta counters F7-F8")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blog search engine: classify pages, summarize, index, search, evaluate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "blogstack 0.1.0");
  app.set_config("--config", "", "Config file with flag defaults, one [section] per subcommand")
      ->envname("BLOGSTACK_CONFIG");

  // classify
  struct {
    std::string corpus;
    int threshold = blogstack::kDefaultBlogFeatureThreshold;
  } cl;
  auto* classify = app.add_subcommand("classify", "Apply the structural blog checks to each page");
  classify->add_option("--corpus", cl.corpus, "JSON-lines corpus file")->required();
  classify->add_option("--blog-threshold", cl.threshold, "Features required to count as a blog")
      ->capture_default_str();
  classify->callback([&] {
    auto ingest = blogstack::ingest_corpus(cl.corpus);
    report_ingest_warnings(ingest.warnings);
    for (const auto& page : ingest.corpus.pages) {
      auto verdict = blogstack::classify_blog_page(page, cl.threshold);
      nlohmann::json row{{"page_id", page.page_id},
                         {"is_blog", verdict.is_blog},
                         {"feature_score", verdict.feature_score},
                         {"triggered_features", verdict.triggered_features}};
      std::cout << row.dump() << '\n';
    }
  });

  // summarize
  struct {
    std::string corpus;
    std::string out;
    std::string stopwords;
    bool no_filter = false;
    int threshold = blogstack::kDefaultBlogFeatureThreshold;
  } su;
  auto* summarize = app.add_subcommand("summarize", "Write extractive summaries of the blog pages");
  summarize->add_option("--corpus", su.corpus, "JSON-lines corpus file")->required();
  summarize->add_option("--out", su.out, "Output JSON-lines summary file")->required();
  summarize->add_option("--stopwords", su.stopwords, "Stopword file replacing the built-in list");
  summarize->add_flag("--no-filter", su.no_filter, "Summarize every page, even non-blogs");
  summarize->add_option("--blog-threshold", su.threshold, "Features required to count as a blog")
      ->capture_default_str();
  summarize->callback([&] {
    auto ingest = blogstack::ingest_corpus(su.corpus);
    report_ingest_warnings(ingest.warnings);
    auto stops = load_stopwords(su.stopwords);
    blogstack::SummarizeOptions options;
    options.filter_non_blogs = !su.no_filter;
    options.blog_feature_threshold = su.threshold;
    auto result = blogstack::summarize_corpus(ingest.corpus, stops, options);
    for (const auto& issue : result.issues) {
      std::cerr << "warning: " << issue.page_id << ": " << issue.message << '\n';
    }
    blogstack::write_summaries(result.summaries, su.out);
    std::cerr << "wrote " << result.summaries.size() << " summaries to " << su.out << '\n';
  });

  // index
  struct {
    std::string summaries;
    std::string out;
    std::string stopwords;
  } ix;
  auto* index_cmd = app.add_subcommand("index", "Build the inverted index from a summary file");
  index_cmd->add_option("--summaries", ix.summaries, "JSON-lines summary file")->required();
  index_cmd->add_option("--out", ix.out, "Output index file")->required();
  index_cmd->add_option("--stopwords", ix.stopwords, "Stopword file replacing the built-in list");
  index_cmd->callback([&] {
    auto summaries = blogstack::load_summaries(ix.summaries);
    auto index = blogstack::build_index(summaries, load_stopwords(ix.stopwords));
    blogstack::save_index(index, ix.out);
    std::cerr << "indexed " << index.summary_count() << " summaries, " << index.term_count()
              << " terms, to " << ix.out << '\n';
  });

  // search
  struct {
    std::string index;
    std::string feedback;
    std::string stopwords;
    std::string query;
    std::string queries;
    std::string run_out;
    std::size_t top_k = 10;
    blogstack::RankWeights weights;
  } se;
  auto* search_cmd = app.add_subcommand("search", "Rank summaries against a query");
  search_cmd->add_option("--index", se.index, "Index file")->required();
  search_cmd->add_option("--feedback", se.feedback, "Feedback CSV (absent blogs score zero)");
  search_cmd->add_option("--stopwords", se.stopwords, "Stopword file replacing the built-in list");
  auto* query_opt = search_cmd->add_option("--query", se.query, "Query text");
  auto* queries_opt =
      search_cmd->add_option("--queries", se.queries, "Batch mode: CSV of query_id,query rows");
  auto* run_out_opt = search_cmd->add_option(
      "--run-out", se.run_out, "Batch mode: output CSV of query_id,summary_id rows in rank order");
  query_opt->excludes(queries_opt);
  queries_opt->needs(run_out_opt);
  run_out_opt->needs(queries_opt);
  search_cmd->add_option("--top-k", se.top_k, "Results to keep")->capture_default_str();
  add_weight_flags(search_cmd, se.weights);
  search_cmd->callback([&] {
    if (se.query.empty() && se.queries.empty()) {
      throw CLI::RequiredError("--query or --queries");
    }
    auto service = make_service(se.index, se.feedback, se.stopwords, se.weights);
    if (!se.queries.empty()) {
      std::ofstream out(se.run_out);
      if (!out) throw std::runtime_error("cannot write " + se.run_out);
      out << "query_id,summary_id\n";
      for (const auto& [query_id, text] : load_queries_csv(se.queries)) {
        for (const auto& b : service.rank_query(text, se.top_k)) {
          out << query_id << ',' << b.summary_id << '\n';
        }
      }
      std::cerr << "wrote run to " << se.run_out << '\n';
    } else {
      print_ranked_table(service.rank_query(se.query, se.top_k));
    }
  });

  // eval
  struct {
    std::string run;
    std::string judgments;
    std::optional<std::size_t> cutoff;
    bool json = false;
  } ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score a run file against relevance judgments");
  eval_cmd->add_option("--run", ev.run, "Run CSV of query_id,summary_id rows in rank order")
      ->required();
  eval_cmd->add_option("--judgments", ev.judgments, "Judgments CSV of query_id,relevant_id rows")
      ->required();
  eval_cmd->add_option("--k", ev.cutoff, "Evaluate only the top k of each ranking");
  eval_cmd->add_flag("--json", ev.json, "Emit JSON instead of the plain-text table");
  eval_cmd->callback([&] {
    auto report = blogstack::evaluate_batch(blogstack::load_run_csv(ev.run),
                                            blogstack::load_judgments_csv(ev.judgments), ev.cutoff);
    std::cout << (ev.json ? blogstack::batch_report_to_json(report)
                          : blogstack::format_batch_table(report));
  });

  // serve
  struct {
    std::string index;
    std::string feedback;
    std::string stopwords;
    int port = 0;
    blogstack::RankWeights weights;
  } sv;
  auto* serve_cmd = app.add_subcommand("serve", "Answer queries over HTTP");
  serve_cmd->add_option("--index", sv.index, "Index file")->required();
  serve_cmd->add_option("--feedback", sv.feedback, "Feedback CSV (absent blogs score zero)");
  serve_cmd->add_option("--stopwords", sv.stopwords, "Stopword file replacing the built-in list");
  serve_cmd->add_option("--port", sv.port, "Port to listen on (0 picks a free one)")->required();
  add_weight_flags(serve_cmd, sv.weights);
  serve_cmd->callback([&] {
    auto service = make_service(sv.index, sv.feedback, sv.stopwords, sv.weights);
    httplib::Server server;
    blogstack::attach_search_routes(server, service);
    int port = sv.port == 0 ? server.bind_to_any_port("127.0.0.1")
                            : (server.bind_to_port("127.0.0.1", sv.port) ? sv.port : -1);
    if (port <= 0) throw std::runtime_error("cannot bind 127.0.0.1:" + std::to_string(sv.port));
    std::cerr << "listening on http://127.0.0.1:" << port << std::endl;
    server.listen_after_bind();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
