#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace blogstack {

/// A surface word (lowercased, whitespace-free) together with its stem.
struct Token {
  std::string surface;
  std::string stem;

  bool operator==(const Token&) const = default;
};

/// Lowercase stopword set. The same instance must be used at index time and
/// at query time so term keys line up by construction.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  /// ~125 common English function words.
  static const StopwordList& default_list();

  /// One word per line, '#' starts a comment, blank lines ignored.
  /// Entries are lowercased on load.
  static StopwordList from_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const {
    return words_.count(std::string(word)) > 0;
  }
  std::size_t size() const { return words_.size(); }
  const std::unordered_set<std::string>& words() const { return words_; }

 private:
  std::unordered_set<std::string> words_;
};

/// Splits on maximal runs of non-alphanumeric characters and lowercases.
/// Bytes outside ASCII are treated as word characters, so UTF-8 words survive
/// intact (but are not case-folded).
std::vector<std::string> tokenize(std::string_view text);

/// Order-preserving stopword filter. Tokens are expected lowercase.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops);

/// tokenize -> remove_stopwords -> stem, keeping surface forms alongside stems.
std::vector<Token> preprocess_tokens(std::string_view text, const StopwordList& stops);

/// tokenize -> remove_stopwords -> stem. The single pipeline applied to
/// headings, sentences and queries alike.
std::vector<std::string> preprocess(std::string_view text, const StopwordList& stops);

}  // namespace blogstack
