#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace blogstack {

/// One pre-extracted blog page. Pages arrive with structural features already
/// computed; no HTML parsing or fetching happens here.
struct BlogPage {
  std::string page_id;
  std::string url;
  std::string heading;
  std::string body;
  std::optional<std::string> post_date;  // ISO-8601 date (YYYY-MM-DD)
  bool has_rss = false;
  double internal_link_ratio = 0.0;  // in [0,1]
  bool has_author_info = false;
  bool has_comments_section = false;
  bool has_archive = false;

  bool operator==(const BlogPage&) const = default;
};

struct Corpus {
  std::vector<BlogPage> pages;  // file order
  std::string source_path;
};

struct IngestWarning {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestWarning> warnings;
};

/// Reads a JSON-lines corpus file (one BlogPage object per line).
/// Invalid lines are skipped and reported as warnings; a duplicate page_id is
/// fatal (DuplicateIdError), as is a missing file (FileNotFoundError).
IngestResult ingest_corpus(const std::filesystem::path& path);

/// Serializes a corpus back to JSON lines. ingest_corpus(write_corpus(c))
/// yields field-identical pages.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Outcome of the six structural blog checks.
struct BlogVerdict {
  bool is_blog = false;
  int feature_score = 0;  // 0..6
  std::vector<std::string> triggered_features;
};

inline constexpr int kDefaultBlogFeatureThreshold = 3;

/// Counts which of six structural features hold: "blog" in the URL host/path,
/// an RSS tag, self-pointing links (> 0.5), a post date, author info or a
/// comments section, and an archive. is_blog when at least `threshold` hold.
/// Pure function.
BlogVerdict classify_blog_page(const BlogPage& page,
                               int threshold = kDefaultBlogFeatureThreshold);

}  // namespace blogstack
