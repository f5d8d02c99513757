#pragma once

// Worked-example fixtures shared by the index, searcher and ranker tests:
// a ten-summary index over a handful of Indian news topics and the matching
// reader-feedback counters.

#include <map>
#include <string>
#include <vector>

#include "blogstack/blog_index.hpp"
#include "blogstack/feedback.hpp"

inline blogstack::BlogIndex worked_example_index() {
  using blogstack::Location;
  using blogstack::Posting;
  blogstack::BlogIndex::PostingMap postings;
  postings["educ"] = {{5, Location::Body, "B1"},
                      {3, Location::Heading, "B2"},
                      {1, Location::Body, "B10"}};
  postings["element"] = {{1, Location::Heading, "B7"}};
  postings["faridabad"] = {{4, Location::Body, "B2"}, {2, Location::Body, "B3"}};
  postings["indian"] = {{1, Location::Body, "B1"}, {3, Location::Heading, "B2"}};
  postings["jammu"] = {{3, Location::Body, "B4"}, {3, Location::Heading, "B5"}};
  postings["polit"] = {{7, Location::Body, "B1"}};
  postings["sachin"] = {{2, Location::Heading, "B6"}, {3, Location::Heading, "B8"}};
  return blogstack::BlogIndex(std::move(postings), 10);
}

inline blogstack::FeedbackIndex worked_example_feedback() {
  using blogstack::FeedbackRecord;
  std::map<std::string, FeedbackRecord, blogstack::IdLess> records;
  records["B1"] = FeedbackRecord{2, 0, 4, 0, 0.0, 0, 4, 1};
  records["B2"] = FeedbackRecord{10, 3, 4, 0, 7.0, 56, 3, 0};
  records["B3"] = FeedbackRecord{19, 4, 10, 30, 3.0, 3, 0, 1};
  records["B4"] = FeedbackRecord{14, 10, 20, 3, 3.0, 2, 5, 1};
  records["B5"] = FeedbackRecord{12, 3, 0, 0, 0.0, 0, 4, 0};
  return blogstack::FeedbackIndex(std::move(records));
}
