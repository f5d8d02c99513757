#include "blogstack/blog_index.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "blogstack/errors.hpp"

namespace blogstack {

namespace {

using nlohmann::json;

// FNV-1a over the canonical postings serialization; enough to catch
// truncation and stray edits, not meant to be cryptographic.
std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

bool posting_order(const Posting& a, const Posting& b) {
  if (a.summary_id != b.summary_id) return id_less(a.summary_id, b.summary_id);
  return a.location < b.location;  // Heading before Body
}

json postings_to_json(const BlogIndex::PostingMap& postings) {
  json out = json::object();
  for (const auto& [term, list] : postings) {
    json rows = json::array();
    for (const auto& p : list) {
      rows.push_back(json::array({p.term_frequency, std::string(location_tag(p.location)),
                                  p.summary_id}));
    }
    out[term] = std::move(rows);
  }
  return out;
}

}  // namespace

std::string_view location_tag(Location loc) {
  return loc == Location::Heading ? "H" : "B";
}

Location location_from_tag(std::string_view tag) {
  if (tag == "H") return Location::Heading;
  if (tag == "B") return Location::Body;
  throw CorruptFileError("unknown location tag: " + std::string(tag));
}

const std::vector<Posting>& BlogIndex::lookup(std::string_view term) const {
  static const std::vector<Posting> kEmpty;
  auto it = postings_.find(term);
  return it == postings_.end() ? kEmpty : it->second;
}

BlogIndex build_index(const std::vector<Summary>& summaries, const StopwordList& stops) {
  std::unordered_set<std::string> seen_ids;
  BlogIndex::PostingMap postings;

  for (const auto& summary : summaries) {
    if (!seen_ids.insert(summary.summary_id).second) {
      throw DuplicateIdError(summary.summary_id);
    }

    auto count_section = [&](const std::vector<std::string>& stems, Location loc) {
      std::unordered_map<std::string, std::uint32_t> counts;
      for (const auto& stem : stems) ++counts[stem];
      for (auto& [stem, tf] : counts) {
        postings[stem].push_back(Posting{tf, loc, summary.summary_id});
      }
    };

    count_section(preprocess(summary.heading, stops), Location::Heading);

    std::vector<std::string> body_stems;
    for (const auto& sentence : summary.sentences) {
      auto stems = preprocess(sentence, stops);
      body_stems.insert(body_stems.end(), std::make_move_iterator(stems.begin()),
                        std::make_move_iterator(stems.end()));
    }
    count_section(body_stems, Location::Body);
  }

  for (auto& [term, list] : postings) {
    std::sort(list.begin(), list.end(), posting_order);
  }
  return BlogIndex(std::move(postings), summaries.size());
}

std::string serialize_index(const BlogIndex& index) {
  json postings = postings_to_json(index.postings());
  json doc;
  doc["format_version"] = kIndexFormatVersion;
  doc["summary_count"] = index.summary_count();
  doc["checksum"] = fnv1a_hex(postings.dump());
  doc["postings"] = std::move(postings);
  return doc.dump(2) + "\n";
}

BlogIndex parse_index(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw CorruptFileError(e.what());
  }
  if (!doc.is_object() || !doc.contains("format_version") ||
      !doc.at("format_version").is_number_integer()) {
    throw CorruptFileError("missing format_version");
  }
  int version = doc.at("format_version").get<int>();
  if (version != kIndexFormatVersion) {
    throw VersionMismatchError(kIndexFormatVersion, version);
  }

  try {
    BlogIndex::PostingMap postings;
    for (const auto& [term, rows] : doc.at("postings").items()) {
      std::vector<Posting> list;
      for (const auto& row : rows) {
        Posting p;
        p.term_frequency = row.at(0).get<std::uint32_t>();
        p.location = location_from_tag(row.at(1).get<std::string>());
        p.summary_id = row.at(2).get<std::string>();
        if (p.term_frequency == 0) throw CorruptFileError("zero term frequency");
        list.push_back(std::move(p));
      }
      postings.emplace(term, std::move(list));
    }
    std::string expected = fnv1a_hex(postings_to_json(postings).dump());
    if (doc.at("checksum").get<std::string>() != expected) {
      throw CorruptFileError("checksum mismatch");
    }
    return BlogIndex(std::move(postings), doc.at("summary_count").get<std::size_t>());
  } catch (const CorruptFileError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptFileError(e.what());
  }
}

void save_index(const BlogIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << serialize_index(index);
}

BlogIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_index(buffer.str());
}

}  // namespace blogstack
