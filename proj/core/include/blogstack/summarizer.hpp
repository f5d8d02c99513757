#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "blogstack/corpus.hpp"
#include "blogstack/textprep.hpp"

namespace blogstack {

/// Per-sentence evidence: how many distinct heading terms appear (the
/// presence factor) and how often heading terms occur in total (the term
/// frequency, which is the score).
struct SentenceScore {
  std::size_t sentence_index = 0;
  std::size_t present_heading_terms = 0;
  std::size_t heading_term_frequency = 0;
  double score = 0.0;

  bool eligible() const { return present_heading_terms > 0; }
};

struct Summary {
  std::string summary_id;
  std::string page_id;
  std::string heading;
  std::vector<std::string> sentences;  // original document order
  // Sentence count of the source body; zero when unknown (summaries loaded
  // back from disk carry only the selected sentences).
  std::size_t original_sentence_count = 0;

  bool operator==(const Summary&) const = default;
};

/// Splits on '.', '!' or '?' followed by whitespace or end of text. Trims and
/// drops empty pieces. Deliberately naive: "Dr. Smith wrote." is two pieces.
std::vector<std::string> split_sentences(std::string_view body);

/// Scores one sentence against the (preprocessed, deduplicated) heading
/// terms. The sentence passes through the same textprep pipeline before
/// matching. Throws EmptyHeadingError when heading_terms is empty.
SentenceScore score_sentence(std::string_view sentence,
                             const std::unordered_set<std::string>& heading_terms,
                             const StopwordList& stops,
                             std::size_t sentence_index = 0);

/// Extractive summary of one page: sentences with no heading term are
/// dropped, survivors are ranked by heading-term frequency (earlier sentence
/// wins ties), at most ceil(N/2) are kept, and the keepers are emitted in
/// original order. Throws HeadingAllStopwordsError when the heading
/// preprocesses to nothing.
Summary summarize(const BlogPage& page, const StopwordList& stops,
                  std::string summary_id);

struct SummarizeOptions {
  bool filter_non_blogs = true;
  int blog_feature_threshold = kDefaultBlogFeatureThreshold;
};

struct PageIssue {
  std::string page_id;
  std::string message;
};

struct SummarizeResult {
  std::vector<Summary> summaries;
  std::vector<PageIssue> issues;
};

/// Summarizes every (blog) page of a corpus. summary_id is "B" + the page's
/// 1-based position in the corpus, so ids are stable whether or not the blog
/// filter drops pages. Pages whose heading preprocesses to nothing are
/// skipped with an issue; pages whose summary comes out empty are kept and
/// flagged with an issue.
SummarizeResult summarize_corpus(const Corpus& corpus, const StopwordList& stops,
                                 const SummarizeOptions& options = {});

/// JSON-lines summary file: {summary_id, page_id, heading, sentences} per
/// line. This file is the indexer's input.
void write_summaries(const std::vector<Summary>& summaries,
                     const std::filesystem::path& path);
std::vector<Summary> load_summaries(const std::filesystem::path& path);

}  // namespace blogstack
