#include "blogstack/textprep.hpp"

#include <fstream>

#include "blogstack/errors.hpp"
#include "blogstack/porter_stemmer.hpp"

namespace blogstack {

namespace {

bool is_word_char(unsigned char c) {
  if (c >= 0x80) return true;  // UTF-8 lead/continuation bytes
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const char* const kDefaultStopwords[] = {
    "a",      "about",  "above",  "after",   "again",  "against", "all",
    "am",     "an",     "and",    "any",     "are",    "as",      "at",
    "be",     "because", "been",  "before",  "being",  "below",   "between",
    "both",   "but",    "by",     "can",     "cannot", "could",   "did",
    "do",     "does",   "doing",  "down",    "during", "each",    "few",
    "for",    "from",   "further", "had",    "has",    "have",    "having",
    "he",     "her",    "here",   "hers",    "herself", "him",    "himself",
    "his",    "how",    "i",      "if",      "in",     "into",    "is",
    "it",     "its",    "itself", "just",    "me",     "more",    "most",
    "my",     "myself", "no",     "nor",     "not",    "now",     "of",
    "off",    "on",     "once",   "only",    "or",     "other",   "our",
    "ours",   "ourselves", "out", "over",    "own",    "same",    "she",
    "should", "so",     "some",   "such",    "than",   "that",    "the",
    "their",  "theirs", "them",   "themselves", "then", "there",  "these",
    "they",   "this",   "those",  "through", "to",     "too",     "under",
    "until",  "up",     "very",   "was",     "we",     "were",    "what",
    "when",   "where",  "which",  "while",   "who",    "whom",    "why",
    "will",   "with",   "you",    "your",    "yours",  "yourself",
    "yourselves",
};

}  // namespace

const StopwordList& StopwordList::default_list() {
  static const StopwordList instance = [] {
    std::unordered_set<std::string> words;
    for (const char* w : kDefaultStopwords) words.insert(w);
    return StopwordList(std::move(words));
  }();
  return instance;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError(path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string word = trim(line);
    if (word.empty()) continue;
    for (char& c : word) c = ascii_lower(c);
    words.insert(word);
  }
  return StopwordList(std::move(words));
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (is_word_char(static_cast<unsigned char>(ch))) {
      current.push_back(ascii_lower(ch));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stops.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<Token> preprocess_tokens(std::string_view text, const StopwordList& stops) {
  std::vector<Token> out;
  for (auto& surface : tokenize(text)) {
    if (stops.contains(surface)) continue;
    std::string stem = porter_stem(surface);
    out.push_back(Token{std::move(surface), std::move(stem)});
  }
  return out;
}

std::vector<std::string> preprocess(std::string_view text, const StopwordList& stops) {
  std::vector<std::string> out;
  for (auto& surface : tokenize(text)) {
    if (stops.contains(surface)) continue;
    out.push_back(porter_stem(surface));
  }
  return out;
}

}  // namespace blogstack
