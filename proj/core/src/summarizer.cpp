#include "blogstack/summarizer.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "blogstack/errors.hpp"

namespace blogstack {

namespace {

using nlohmann::json;

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trimmed(std::string_view piece) {
  std::size_t b = 0;
  std::size_t e = piece.size();
  while (b < e && is_space(piece[b])) ++b;
  while (e > b && is_space(piece[e - 1])) --e;
  return std::string(piece.substr(b, e - b));
}

std::unordered_set<std::string> heading_term_set(const std::string& heading,
                                                 const StopwordList& stops) {
  auto stems = preprocess(heading, stops);
  return {stems.begin(), stems.end()};
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view body) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!is_terminator(body[i])) continue;
    bool at_boundary = (i + 1 == body.size()) || is_space(body[i + 1]);
    if (!at_boundary) continue;
    std::string sentence = trimmed(body.substr(start, i - start + 1));
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
    start = i + 1;
  }
  if (start < body.size()) {
    std::string tail = trimmed(body.substr(start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
  }
  return sentences;
}

SentenceScore score_sentence(std::string_view sentence,
                             const std::unordered_set<std::string>& heading_terms,
                             const StopwordList& stops, std::size_t sentence_index) {
  if (heading_terms.empty()) throw EmptyHeadingError();

  SentenceScore s;
  s.sentence_index = sentence_index;

  std::unordered_set<std::string_view> present;
  for (const auto& stem : preprocess(sentence, stops)) {
    auto it = heading_terms.find(stem);
    if (it == heading_terms.end()) continue;
    ++s.heading_term_frequency;
    present.insert(*it);
  }
  s.present_heading_terms = present.size();
  // PF gates eligibility; TF is the magnitude
  s.score = s.eligible() ? static_cast<double>(s.heading_term_frequency) : 0.0;
  return s;
}

Summary summarize(const BlogPage& page, const StopwordList& stops,
                  std::string summary_id) {
  auto heading_terms = heading_term_set(page.heading, stops);
  if (heading_terms.empty()) throw HeadingAllStopwordsError(page.page_id);

  std::vector<std::string> sentences = split_sentences(page.body);
  const std::size_t n = sentences.size();

  std::vector<SentenceScore> eligible;
  for (std::size_t i = 0; i < n; ++i) {
    SentenceScore s = score_sentence(sentences[i], heading_terms, stops, i);
    if (s.eligible()) eligible.push_back(s);
  }

  std::sort(eligible.begin(), eligible.end(), [](const SentenceScore& a, const SentenceScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.sentence_index < b.sentence_index;
  });

  const std::size_t cap = (n + 1) / 2;  // ceil(N/2)
  if (eligible.size() > cap) eligible.resize(cap);

  std::sort(eligible.begin(), eligible.end(), [](const SentenceScore& a, const SentenceScore& b) {
    return a.sentence_index < b.sentence_index;
  });

  Summary summary;
  summary.summary_id = std::move(summary_id);
  summary.page_id = page.page_id;
  summary.heading = page.heading;
  summary.original_sentence_count = n;
  summary.sentences.reserve(eligible.size());
  for (const auto& s : eligible) summary.sentences.push_back(sentences[s.sentence_index]);
  return summary;
}

SummarizeResult summarize_corpus(const Corpus& corpus, const StopwordList& stops,
                                 const SummarizeOptions& options) {
  SummarizeResult result;
  std::size_t ordinal = 0;
  for (const auto& page : corpus.pages) {
    ++ordinal;
    if (options.filter_non_blogs &&
        !classify_blog_page(page, options.blog_feature_threshold).is_blog) {
      continue;
    }
    std::string id = "B" + std::to_string(ordinal);
    try {
      Summary summary = summarize(page, stops, std::move(id));
      if (summary.sentences.empty()) {
        result.issues.push_back({page.page_id, "summary is empty: no sentence shares a heading term"});
      }
      result.summaries.push_back(std::move(summary));
    } catch (const HeadingAllStopwordsError& e) {
      result.issues.push_back({page.page_id, e.what()});
    }
  }
  return result;
}

void write_summaries(const std::vector<Summary>& summaries,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  for (const auto& s : summaries) {
    json j;
    j["summary_id"] = s.summary_id;
    j["page_id"] = s.page_id;
    j["heading"] = s.heading;
    j["sentences"] = s.sentences;
    out << j.dump() << '\n';
  }
}

std::vector<Summary> load_summaries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path.string());
  std::vector<Summary> summaries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
      Summary s;
      s.summary_id = j.at("summary_id").get<std::string>();
      s.page_id = j.at("page_id").get<std::string>();
      s.heading = j.at("heading").get<std::string>();
      s.sentences = j.at("sentences").get<std::vector<std::string>>();
      summaries.push_back(std::move(s));
    } catch (const std::exception& e) {
      throw MalformedRowError(line_no, e.what());
    }
  }
  return summaries;
}

}  // namespace blogstack
