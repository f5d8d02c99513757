#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "blogstack/blog_index.hpp"
#include "blogstack/errors.hpp"
#include "blogstack/summarizer.hpp"
#include "blogstack/textprep.hpp"

#include "fixtures.hpp"

using namespace blogstack;

namespace {

Summary make_summary(std::string id, std::string heading, std::vector<std::string> sentences) {
  Summary s;
  s.summary_id = std::move(id);
  s.page_id = "page-" + s.summary_id;
  s.heading = std::move(heading);
  s.sentences = std::move(sentences);
  return s;
}

}  // namespace

TEST_CASE("location tags round-trip") {
  CHECK(location_tag(Location::Heading) == "H");
  CHECK(location_tag(Location::Body) == "B");
  CHECK(location_from_tag("H") == Location::Heading);
  CHECK(location_from_tag("B") == Location::Body);
  CHECK_THROWS_AS(location_from_tag("X"), CorruptFileError);
  CHECK_THROWS_AS(location_from_tag(""), CorruptFileError);
}

TEST_CASE("terms are counted per section with stemmed keys") {
  auto index = build_index(
      {make_summary("B1", "Computer Education",
                    {"Education matters.", "Computer education is education."})},
      StopwordList::default_list());

  CHECK(index.summary_count() == 1);

  const auto& educ = index.lookup("educ");
  REQUIRE(educ.size() == 2);
  CHECK(educ[0] == Posting{1, Location::Heading, "B1"});
  CHECK(educ[1] == Posting{3, Location::Body, "B1"});  // 1 + 2 across the two sentences

  const auto& comput = index.lookup("comput");
  REQUIRE(comput.size() == 2);
  CHECK(comput[0] == Posting{1, Location::Heading, "B1"});
  CHECK(comput[1] == Posting{1, Location::Body, "B1"});

  CHECK(index.lookup("education").empty());  // only stems are keys
  CHECK(index.lookup("matter").size() == 1);
  CHECK(index.lookup("unknown").empty());
}

TEST_CASE("posting lists order by summary id, heading before body") {
  auto index = build_index(
      {
          make_summary("B10", "Cricket", {"Cricket late."}),
          make_summary("B2", "Cricket stories", {"Cricket early. More cricket."}),
          make_summary("B1", "Other", {"Cricket mention."}),
      },
      StopwordList::default_list());

  const auto& cricket = index.lookup("cricket");
  REQUIRE(cricket.size() == 5);
  CHECK(cricket[0] == Posting{1, Location::Body, "B1"});
  CHECK(cricket[1] == Posting{1, Location::Heading, "B2"});
  CHECK(cricket[2] == Posting{2, Location::Body, "B2"});
  CHECK(cricket[3] == Posting{1, Location::Heading, "B10"});  // numeric id order
  CHECK(cricket[4] == Posting{1, Location::Body, "B10"});
}

TEST_CASE("duplicate summary ids are rejected") {
  CHECK_THROWS_AS(build_index({make_summary("B1", "One", {"One."}),
                               make_summary("B1", "Two", {"Two."})},
                              StopwordList::default_list()),
                  DuplicateIdError);
}

TEST_CASE("stopwords never become index terms") {
  auto index =
      build_index({make_summary("B1", "The Cricket", {"The cricket is in the field."})},
                  StopwordList::default_list());
  CHECK(index.lookup("the").empty());
  CHECK(index.lookup("is").empty());
  CHECK(index.lookup("in").empty());
  CHECK(index.lookup("cricket").size() == 2);
  CHECK(index.lookup("field").size() == 1);
}

TEST_CASE("empty summaries produce an index with no terms") {
  auto index = build_index({}, StopwordList::default_list());
  CHECK(index.summary_count() == 0);
  CHECK(index.term_count() == 0);
  CHECK(index.lookup("anything").empty());
}

TEST_CASE("worked example index holds the documented postings") {
  auto index = worked_example_index();
  CHECK(index.term_count() == 7);
  CHECK(index.summary_count() == 10);

  const auto& educ = index.lookup("educ");
  REQUIRE(educ.size() == 3);
  CHECK(educ[0] == Posting{5, Location::Body, "B1"});
  CHECK(educ[1] == Posting{3, Location::Heading, "B2"});
  CHECK(educ[2] == Posting{1, Location::Body, "B10"});

  const auto& jammu = index.lookup("jammu");
  REQUIRE(jammu.size() == 2);
  CHECK(jammu[0] == Posting{3, Location::Body, "B4"});
  CHECK(jammu[1] == Posting{3, Location::Heading, "B5"});

  const auto& polit = index.lookup("polit");
  REQUIRE(polit.size() == 1);
  CHECK(polit[0] == Posting{7, Location::Body, "B1"});
}

TEST_CASE("serialize then parse preserves structure byte-for-byte") {
  auto index = worked_example_index();
  std::string text = serialize_index(index);
  auto parsed = parse_index(text);

  CHECK(parsed.summary_count() == index.summary_count());
  CHECK(parsed.postings() == index.postings());
  CHECK(serialize_index(parsed) == text);
}

TEST_CASE("save and load round-trip through a file") {
  auto path = std::filesystem::temp_directory_path() / "index_roundtrip.json";
  auto index = worked_example_index();
  save_index(index, path);
  auto loaded = load_index(path);
  CHECK(loaded.postings() == index.postings());
  CHECK(loaded.summary_count() == index.summary_count());
  std::filesystem::remove(path);
}

TEST_CASE("version is checked before anything else") {
  auto text = serialize_index(worked_example_index());
  auto bumped = text;
  auto pos = bumped.find("\"format_version\": 1");
  REQUIRE(pos != std::string::npos);
  bumped.replace(pos, 19, "\"format_version\": 2");
  CHECK_THROWS_AS(parse_index(bumped), VersionMismatchError);
}

TEST_CASE("corruption is caught") {
  auto text = serialize_index(worked_example_index());

  SUBCASE("not json") { CHECK_THROWS_AS(parse_index("junk{"), CorruptFileError); }
  SUBCASE("missing version") { CHECK_THROWS_AS(parse_index("{}"), CorruptFileError); }
  SUBCASE("tampered posting breaks the checksum") {
    auto tampered = text;
    auto pos = tampered.find("\"polit\"");
    REQUIRE(pos != std::string::npos);
    pos = tampered.find('7', pos);
    tampered[pos] = '9';
    CHECK_THROWS_AS(parse_index(tampered), CorruptFileError);
  }
  SUBCASE("zero term frequency") {
    std::string doc = R"({"format_version":1,"summary_count":1,"checksum":"x",)"
                      R"("postings":{"term":[[0,"B","B1"]]}})";
    CHECK_THROWS_AS(parse_index(doc), CorruptFileError);
  }
  SUBCASE("bad location tag") {
    std::string doc = R"({"format_version":1,"summary_count":1,"checksum":"x",)"
                      R"("postings":{"term":[[1,"Q","B1"]]}})";
    CHECK_THROWS_AS(parse_index(doc), CorruptFileError);
  }
}

TEST_CASE("loading a missing index file throws") {
  CHECK_THROWS_AS(load_index("/nonexistent/index.json"), FileNotFoundError);
}

TEST_CASE("rebuilding from the same summaries serializes identically") {
  std::vector<Summary> summaries = {
      make_summary("B1", "Cricket in Faridabad", {"Cricket stories.", "Faridabad cricket."}),
      make_summary("B2", "Education", {"Education for all.", "Education news daily."}),
  };
  const auto& stops = StopwordList::default_list();
  CHECK(serialize_index(build_index(summaries, stops)) ==
        serialize_index(build_index(summaries, stops)));
}
