#include "blogstack/corpus.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "blogstack/errors.hpp"

namespace blogstack {

namespace {

using nlohmann::json;

bool valid_iso_date(const std::string& s) {
  // YYYY-MM-DD with sane ranges; no calendar arithmetic
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  int month = (s[5] - '0') * 10 + (s[6] - '0');
  int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

BlogPage page_from_json(const json& j) {
  if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
  BlogPage page;
  for (const char* key : {"page_id", "url", "heading", "body"}) {
    if (!j.contains(key) || !j.at(key).is_string()) {
      throw std::runtime_error(std::string("missing or non-string field `") + key + "`");
    }
  }
  page.page_id = j.at("page_id").get<std::string>();
  page.url = j.at("url").get<std::string>();
  page.heading = j.at("heading").get<std::string>();
  page.body = j.at("body").get<std::string>();
  if (page.page_id.empty()) throw std::runtime_error("empty page_id");
  if (page.heading.empty()) throw std::runtime_error("empty heading");

  if (j.contains("post_date") && !j.at("post_date").is_null()) {
    if (!j.at("post_date").is_string()) throw std::runtime_error("post_date must be a string");
    auto date = j.at("post_date").get<std::string>();
    if (!valid_iso_date(date)) throw std::runtime_error("post_date is not an ISO-8601 date: " + date);
    page.post_date = std::move(date);
  }
  if (j.contains("has_rss")) page.has_rss = j.at("has_rss").get<bool>();
  if (j.contains("internal_link_ratio")) {
    page.internal_link_ratio = j.at("internal_link_ratio").get<double>();
    if (page.internal_link_ratio < 0.0 || page.internal_link_ratio > 1.0) {
      throw std::runtime_error("internal_link_ratio out of [0,1]");
    }
  }
  if (j.contains("has_author_info")) page.has_author_info = j.at("has_author_info").get<bool>();
  if (j.contains("has_comments_section"))
    page.has_comments_section = j.at("has_comments_section").get<bool>();
  if (j.contains("has_archive")) page.has_archive = j.at("has_archive").get<bool>();
  return page;
}

json page_to_json(const BlogPage& page) {
  json j;
  j["page_id"] = page.page_id;
  j["url"] = page.url;
  j["heading"] = page.heading;
  j["body"] = page.body;
  if (page.post_date) j["post_date"] = *page.post_date;
  j["has_rss"] = page.has_rss;
  j["internal_link_ratio"] = page.internal_link_ratio;
  j["has_author_info"] = page.has_author_info;
  j["has_comments_section"] = page.has_comments_section;
  j["has_archive"] = page.has_archive;
  return j;
}

// host + path, without scheme, query or fragment
std::string url_host_and_path(const std::string& url) {
  std::string s = url;
  if (auto pos = s.find("://"); pos != std::string::npos) s.erase(0, pos + 3);
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  if (auto pos = s.find('?'); pos != std::string::npos) s.erase(pos);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

IngestResult ingest_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path.string());

  IngestResult result;
  result.corpus.source_path = path.string();
  std::unordered_set<std::string> seen_ids;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BlogPage page;
    try {
      page = page_from_json(json::parse(line));
    } catch (const std::exception& e) {
      result.warnings.push_back({line_no, e.what()});
      continue;
    }
    if (!seen_ids.insert(page.page_id).second) {
      throw DuplicateIdError(page.page_id);
    }
    result.corpus.pages.push_back(std::move(page));
  }
  return result;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  for (const auto& page : corpus.pages) {
    out << page_to_json(page).dump() << '\n';
  }
}

BlogVerdict classify_blog_page(const BlogPage& page, int threshold) {
  BlogVerdict verdict;
  auto hit = [&verdict](const char* name) {
    ++verdict.feature_score;
    verdict.triggered_features.emplace_back(name);
  };

  if (url_host_and_path(page.url).find("blog") != std::string::npos) hit("url-blog-word");
  if (page.has_rss) hit("rss");
  if (page.internal_link_ratio > 0.5) hit("self-links");
  if (page.post_date.has_value()) hit("dated-posts");
  if (page.has_author_info || page.has_comments_section) hit("author-or-comments");
  if (page.has_archive) hit("archive");

  verdict.is_blog = verdict.feature_score >= threshold;
  return verdict;
}

}  // namespace blogstack
