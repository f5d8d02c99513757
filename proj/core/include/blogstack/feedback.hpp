#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "blogstack/ids.hpp"

namespace blogstack {

/// The eight reader-feedback counters of one blog. F1-F6 measure engagement
/// (subscribers, valid comments, votes, likes, rating, shares); F7-F8 are
/// meta signals (tags, blogger-info presence).
struct FeedbackRecord {
  std::int64_t f1_subscribers = 0;
  std::int64_t f2_valid_comments = 0;
  std::int64_t f3_votes = 0;
  std::int64_t f4_likes = 0;
  double f5_rating = 0.0;  // raw value, no scale normalization
  std::int64_t f6_shares = 0;
  std::int64_t f7_tags = 0;
  int f8_blogger_info = 0;  // 0 or 1

  double engagement_sum() const {
    return static_cast<double>(f1_subscribers + f2_valid_comments + f3_votes + f4_likes +
                               f6_shares) +
           f5_rating;
  }
  double meta_sum() const { return static_cast<double>(f7_tags + f8_blogger_info); }

  bool operator==(const FeedbackRecord&) const = default;
};

/// blog id -> feedback counters. Lookup of an absent id yields the all-zero
/// record, never an error: a page without feedback still ranks on query
/// evidence.
class FeedbackIndex {
 public:
  FeedbackIndex() = default;
  explicit FeedbackIndex(std::map<std::string, FeedbackRecord, IdLess> records)
      : records_(std::move(records)) {}

  FeedbackRecord get(std::string_view blog_id) const;
  bool contains(std::string_view blog_id) const { return records_.count(blog_id) > 0; }
  std::size_t size() const { return records_.size(); }
  const std::map<std::string, FeedbackRecord, IdLess>& records() const { return records_; }

 private:
  std::map<std::string, FeedbackRecord, IdLess> records_;
};

/// CSV with header `blog_id,f1,f2,f3,f4,f5,f6,f7,f8`. Negative values and
/// f8 outside {0,1} are rejected (MalformedRowError with the line number).
FeedbackIndex load_feedback_csv(const std::filesystem::path& path);

}  // namespace blogstack
