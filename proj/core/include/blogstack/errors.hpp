#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blogstack {

// Fatal pipeline errors. Recoverable per-record problems (bad corpus lines,
// pages whose heading is all stopwords) are reported as warnings instead.

class FileNotFoundError : public std::runtime_error {
 public:
  explicit FileNotFoundError(const std::string& path)
      : std::runtime_error("file not found: " + path) {}
};

class DuplicateIdError : public std::runtime_error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : std::runtime_error("duplicate id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class MalformedRowError : public std::runtime_error {
 public:
  MalformedRowError(std::size_t line, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line) + ": " + what_arg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VersionMismatchError : public std::runtime_error {
 public:
  VersionMismatchError(int expected, int got)
      : std::runtime_error("index format version mismatch: expected " +
                           std::to_string(expected) + ", got " +
                           std::to_string(got)) {}
};

class CorruptFileError : public std::runtime_error {
 public:
  explicit CorruptFileError(const std::string& what_arg)
      : std::runtime_error("corrupt file: " + what_arg) {}
};

class EmptyHeadingError : public std::runtime_error {
 public:
  EmptyHeadingError() : std::runtime_error("heading has no terms") {}
};

class HeadingAllStopwordsError : public std::runtime_error {
 public:
  explicit HeadingAllStopwordsError(const std::string& page_id)
      : std::runtime_error("page " + page_id +
                           ": heading yields no terms after preprocessing") {}
};

class EmptyQueryError : public std::runtime_error {
 public:
  EmptyQueryError() : std::runtime_error("query is empty after preprocessing") {}
};

class ZeroQueryTermsError : public std::runtime_error {
 public:
  ZeroQueryTermsError() : std::runtime_error("query term count must be >= 1") {}
};

class DuplicateInRankingError : public std::runtime_error {
 public:
  explicit DuplicateInRankingError(const std::string& id)
      : std::runtime_error("ranked list contains duplicate id: " + id) {}
};

}  // namespace blogstack
