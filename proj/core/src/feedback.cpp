#include "blogstack/feedback.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "blogstack/errors.hpp"

namespace blogstack {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(strip(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::int64_t parse_count(const std::string& s, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw MalformedRowError(line_no, std::string(what) + " is not an integer: `" + s + "`");
  }
  if (value < 0) {
    throw MalformedRowError(line_no, std::string(what) + " is negative: " + s);
  }
  return value;
}

double parse_rating(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    double value = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    if (value < 0.0) throw MalformedRowError(line_no, "f5 is negative: " + s);
    return value;
  } catch (const MalformedRowError&) {
    throw;
  } catch (const std::exception&) {
    throw MalformedRowError(line_no, "f5 is not a number: `" + s + "`");
  }
}

}  // namespace

FeedbackRecord FeedbackIndex::get(std::string_view blog_id) const {
  auto it = records_.find(blog_id);
  return it == records_.end() ? FeedbackRecord{} : it->second;
}

FeedbackIndex load_feedback_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path.string());

  std::map<std::string, FeedbackRecord, IdLess> records;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) return FeedbackIndex(std::move(records));
  ++line_no;
  if (split_csv(line) != std::vector<std::string>{"blog_id", "f1", "f2", "f3", "f4", "f5",
                                                  "f6", "f7", "f8"}) {
    throw MalformedRowError(1, "expected header `blog_id,f1,f2,f3,f4,f5,f6,f7,f8`");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 9) {
      throw MalformedRowError(line_no, "expected 9 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw MalformedRowError(line_no, "empty blog_id");

    FeedbackRecord rec;
    rec.f1_subscribers = parse_count(fields[1], line_no, "f1");
    rec.f2_valid_comments = parse_count(fields[2], line_no, "f2");
    rec.f3_votes = parse_count(fields[3], line_no, "f3");
    rec.f4_likes = parse_count(fields[4], line_no, "f4");
    rec.f5_rating = parse_rating(fields[5], line_no);
    rec.f6_shares = parse_count(fields[6], line_no, "f6");
    rec.f7_tags = parse_count(fields[7], line_no, "f7");
    std::int64_t f8 = parse_count(fields[8], line_no, "f8");
    if (f8 != 0 && f8 != 1) {
      throw MalformedRowError(line_no, "f8 must be 0 or 1, got " + fields[8]);
    }
    rec.f8_blogger_info = static_cast<int>(f8);

    if (!records.emplace(fields[0], rec).second) {
      throw MalformedRowError(line_no, "duplicate blog_id: " + fields[0]);
    }
  }
  return FeedbackIndex(std::move(records));
}

}  // namespace blogstack
