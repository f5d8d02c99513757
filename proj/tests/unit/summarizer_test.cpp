#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <doctest.h>

#include "blogstack/errors.hpp"
#include "blogstack/summarizer.hpp"

using namespace blogstack;

namespace {

BlogPage page_with(const std::string& heading, const std::string& body) {
  BlogPage page;
  page.page_id = "p1";
  page.url = "http://example.com/";
  page.heading = heading;
  page.body = body;
  return page;
}

}  // namespace

TEST_CASE("split_sentences handles terminators and whitespace") {
  CHECK(split_sentences("One. Two! Three?") ==
        std::vector<std::string>{"One.", "Two!", "Three?"});
  CHECK(split_sentences("Trailing tail without terminator") ==
        std::vector<std::string>{"Trailing tail without terminator"});
  CHECK(split_sentences("Version 3.14 stays whole. Next.") ==
        std::vector<std::string>{"Version 3.14 stays whole.", "Next."});
  CHECK(split_sentences("Spaced.   \n\t Out.") == std::vector<std::string>{"Spaced.", "Out."});
  CHECK(split_sentences("") == std::vector<std::string>{});
  CHECK(split_sentences("   ") == std::vector<std::string>{});
  CHECK(split_sentences("...") == std::vector<std::string>{"..."});
  // deliberately naive: abbreviations split too
  CHECK(split_sentences("Dr. Smith wrote.") == std::vector<std::string>{"Dr.", "Smith wrote."});
}

TEST_CASE("score_sentence counts presence and frequency of heading terms") {
  const auto& stops = StopwordList::default_list();
  std::unordered_set<std::string> heading_terms = {"polit", "jammu"};

  auto s = score_sentence("Politics in Jammu is politics.", heading_terms, stops, 3);
  CHECK(s.sentence_index == 3);
  CHECK(s.present_heading_terms == 2);   // distinct terms
  CHECK(s.heading_term_frequency == 3);  // polit, jammu, polit
  CHECK(s.score == 3.0);
  CHECK(s.eligible());

  auto none = score_sentence("Completely unrelated words here.", heading_terms, stops);
  CHECK(none.present_heading_terms == 0);
  CHECK(none.heading_term_frequency == 0);
  CHECK(none.score == 0.0);
  CHECK_FALSE(none.eligible());
}

TEST_CASE("score_sentence without heading terms is undefined") {
  CHECK_THROWS_AS(score_sentence("Anything.", {}, StopwordList::default_list()),
                  EmptyHeadingError);
}

TEST_CASE("matching is stem-based, not surface-based") {
  const auto& stops = StopwordList::default_list();
  std::unordered_set<std::string> heading_terms = {"educ"};
  auto s = score_sentence("Educated people value education.", heading_terms, stops);
  CHECK(s.heading_term_frequency == 2);  // educated and education both stem to educ
  CHECK(s.present_heading_terms == 1);
}

TEST_CASE("summary keeps at most half the sentences, in document order") {
  // four sentences mention the heading term with varying frequency
  auto page = page_with("Cricket",
                        "Cricket cricket cricket everywhere. "    // tf 3
                        "Nothing relevant here at all. "          // tf 0
                        "Cricket is a sport. "                    // tf 1
                        "People watch cricket for the cricket. "  // tf 2
                        "Something else entirely. "               // tf 0
                        "Last words on cricket.");                // tf 1
  auto summary = summarize(page, StopwordList::default_list(), "B1");
  CHECK(summary.summary_id == "B1");
  CHECK(summary.page_id == "p1");
  CHECK(summary.heading == "Cricket");
  CHECK(summary.original_sentence_count == 6);
  // cap is 3; the three highest-tf sentences in original order
  CHECK(summary.sentences ==
        std::vector<std::string>{"Cricket cricket cricket everywhere.", "Cricket is a sport.",
                                 "People watch cricket for the cricket."});
}

TEST_CASE("ties prefer the earlier sentence") {
  auto page = page_with("Tigers",
                        "Tigers run. Tigers sleep. Tigers eat.");  // all tf 1, cap 2
  auto summary = summarize(page, StopwordList::default_list(), "B1");
  CHECK(summary.sentences == std::vector<std::string>{"Tigers run.", "Tigers sleep."});
}

TEST_CASE("sentences without any heading term never make the summary") {
  auto page = page_with("Gardens", "Unrelated. Also unrelated. Gardens bloom.");
  auto summary = summarize(page, StopwordList::default_list(), "B1");
  CHECK(summary.sentences == std::vector<std::string>{"Gardens bloom."});
}

TEST_CASE("no eligible sentence yields an empty summary") {
  auto page = page_with("Gardens", "Nothing matches. Still nothing.");
  auto summary = summarize(page, StopwordList::default_list(), "B1");
  CHECK(summary.sentences.empty());
  CHECK(summary.original_sentence_count == 2);
}

TEST_CASE("ceil rounding of the cap") {
  auto page = page_with("Ravens", "Ravens one. Ravens two. Ravens three.");
  auto summary = summarize(page, StopwordList::default_list(), "B1");
  CHECK(summary.sentences.size() == 2);  // ceil(3/2)

  auto single = page_with("Ravens", "Ravens only.");
  CHECK(summarize(single, StopwordList::default_list(), "B1").sentences.size() == 1);
}

TEST_CASE("heading of nothing but stopwords cannot be summarized") {
  auto page = page_with("The And Of", "Body text.");
  CHECK_THROWS_AS(summarize(page, StopwordList::default_list(), "B1"),
                  HeadingAllStopwordsError);
}

TEST_CASE("summary ids follow corpus position, with and without filtering") {
  Corpus corpus;
  auto blog = page_with("Cricket", "Cricket news. Other things.");
  blog.page_id = "p1";
  blog.has_rss = true;
  blog.post_date = "2009-07-14";
  blog.has_archive = true;

  auto plain = page_with("Weather", "Weather report. More weather.");
  plain.page_id = "p2";  // zero features, filtered out

  auto blog2 = page_with("Movies", "Movies review. A movies list.");
  blog2.page_id = "p3";
  blog2.has_rss = true;
  blog2.post_date = "2010-01-01";
  blog2.has_archive = true;

  corpus.pages = {blog, plain, blog2};

  auto filtered = summarize_corpus(corpus, StopwordList::default_list());
  REQUIRE(filtered.summaries.size() == 2);
  CHECK(filtered.summaries[0].summary_id == "B1");
  CHECK(filtered.summaries[0].page_id == "p1");
  CHECK(filtered.summaries[1].summary_id == "B3");  // position kept despite the gap
  CHECK(filtered.summaries[1].page_id == "p3");

  SummarizeOptions keep_all;
  keep_all.filter_non_blogs = false;
  auto unfiltered = summarize_corpus(corpus, StopwordList::default_list(), keep_all);
  REQUIRE(unfiltered.summaries.size() == 3);
  CHECK(unfiltered.summaries[0].summary_id == "B1");
  CHECK(unfiltered.summaries[1].summary_id == "B2");
  CHECK(unfiltered.summaries[2].summary_id == "B3");
}

TEST_CASE("summarize_corpus reports problem pages as issues") {
  Corpus corpus;
  auto stopword_heading = page_with("The Of", "Body.");
  stopword_heading.page_id = "p1";
  auto no_overlap = page_with("Cricket", "Nothing about the sport.");
  no_overlap.page_id = "p2";
  corpus.pages = {stopword_heading, no_overlap};

  SummarizeOptions keep_all;
  keep_all.filter_non_blogs = false;
  auto result = summarize_corpus(corpus, StopwordList::default_list(), keep_all);

  REQUIRE(result.summaries.size() == 1);  // p1 skipped, p2 kept but empty
  CHECK(result.summaries[0].page_id == "p2");
  CHECK(result.summaries[0].sentences.empty());
  REQUIRE(result.issues.size() == 2);
  CHECK(result.issues[0].page_id == "p1");
  CHECK(result.issues[1].page_id == "p2");
}

TEST_CASE("summaries round-trip through the JSONL file") {
  Summary s1;
  s1.summary_id = "B1";
  s1.page_id = "p1";
  s1.heading = "Cricket";
  s1.sentences = {"Cricket news.", "More \"cricket\" quotes."};
  s1.original_sentence_count = 4;
  Summary s2;
  s2.summary_id = "B2";
  s2.page_id = "p2";
  s2.heading = "Naïve Unicode";
  s2.sentences = {};

  auto path = std::filesystem::temp_directory_path() / "summaries_roundtrip.jsonl";
  write_summaries({s1, s2}, path);
  auto loaded = load_summaries(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].summary_id == "B1");
  CHECK(loaded[0].heading == "Cricket");
  CHECK(loaded[0].sentences == s1.sentences);
  CHECK(loaded[0].original_sentence_count == 0);  // not persisted, unknown on load
  CHECK(loaded[1].summary_id == "B2");
  CHECK(loaded[1].sentences.empty());
  std::filesystem::remove(path);
}

TEST_CASE("malformed summary rows are fatal with the line number") {
  auto path = std::filesystem::temp_directory_path() / "summaries_bad.jsonl";
  {
    std::ofstream out(path);
    out << R"({"summary_id":"B1","page_id":"p1","heading":"H","sentences":[]})" << '\n'
        << R"({"summary_id":"B2"})" << '\n';
  }
  try {
    load_summaries(path);
    FAIL("expected MalformedRowError");
  } catch (const MalformedRowError& e) {
    CHECK(e.line() == 2);
  }
  std::filesystem::remove(path);
}
