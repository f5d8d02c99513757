#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blogstack/ids.hpp"
#include "blogstack/summarizer.hpp"
#include "blogstack/textprep.hpp"

namespace blogstack {

/// Where a term occurrence sits inside a summary. Serialized as "H" / "B".
enum class Location { Heading, Body };

std::string_view location_tag(Location loc);
Location location_from_tag(std::string_view tag);

struct Posting {
  std::uint32_t term_frequency = 0;  // >= 1
  Location location = Location::Body;
  std::string summary_id;

  bool operator==(const Posting&) const = default;
};

inline constexpr int kIndexFormatVersion = 1;

/// Inverted index over summaries: term stem -> postings of
/// {tf, location, summary id}. A term present in both the heading and the
/// body of one summary holds two postings, one per location. Immutable once
/// built; posting lists are ordered by summary id (numeric-aware), heading
/// before body.
class BlogIndex {
 public:
  using PostingMap = std::map<std::string, std::vector<Posting>, std::less<>>;

  BlogIndex() = default;
  BlogIndex(PostingMap postings, std::size_t summary_count)
      : postings_(std::move(postings)), summary_count_(summary_count) {}

  /// Posting list for a preprocessed stem; empty for unknown terms.
  const std::vector<Posting>& lookup(std::string_view term) const;

  const PostingMap& postings() const { return postings_; }
  std::size_t summary_count() const { return summary_count_; }
  std::size_t term_count() const { return postings_.size(); }

 private:
  PostingMap postings_;
  std::size_t summary_count_ = 0;
};

/// Builds the index from summaries: heading and body are preprocessed
/// separately and counted per section. Throws DuplicateIdError when two
/// summaries share an id.
BlogIndex build_index(const std::vector<Summary>& summaries, const StopwordList& stops);

/// Versioned JSON document with a checksum over the canonical postings
/// serialization. Rebuilding from the same summaries re-serializes
/// byte-identically.
std::string serialize_index(const BlogIndex& index);
BlogIndex parse_index(const std::string& text);

void save_index(const BlogIndex& index, const std::filesystem::path& path);
BlogIndex load_index(const std::filesystem::path& path);

}  // namespace blogstack
