#pragma once

#include <stdexcept>
#include <string>

namespace sage {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line_no = -1)
      : Error(line_no >= 0 ? what + " (line " + std::to_string(line_no) + ")" : what),
        line_no_(line_no) {}
  long line_no() const { return line_no_; }

 private:
  long line_no_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class NegativeGradeError : public Error {
 public:
  explicit NegativeGradeError(const std::string& what) : Error(what) {}
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("corpus is empty") {}
};

class ProviderError : public Error {
 public:
  explicit ProviderError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public Error {
 public:
  DimensionMismatchError(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class NoPositiveJudgmentsError : public Error {
 public:
  explicit NoPositiveJudgmentsError(const std::string& query_id)
      : Error("query has no positive judgments: " + query_id) {}
};

class EmptyQueryError : public Error {
 public:
  EmptyQueryError() : Error("query text is empty") {}
};

class EmptyListError : public Error {
 public:
  EmptyListError() : Error("input list is empty") {}
};

class EmptyBatchError : public Error {
 public:
  EmptyBatchError() : Error("rollout batch is empty") {}
};

class AllParseFailedError : public Error {
 public:
  AllParseFailedError() : Error("no rollout in the batch has a parsed action") {}
};

class BadStrategyIdError : public Error {
 public:
  explicit BadStrategyIdError(int id)
      : Error("strategy id out of range: " + std::to_string(id)) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

class NetworkError : public Error {
 public:
  explicit NetworkError(const std::string& what) : Error(what) {}
};

class AuthError : public Error {
 public:
  AuthError(int status, const std::string& what)
      : Error("auth failure (" + std::to_string(status) + "): " + what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class RateLimitedError : public Error {
 public:
  explicit RateLimitedError(const std::string& what) : Error(what) {}
};

class MalformedResponseError : public Error {
 public:
  explicit MalformedResponseError(const std::string& what) : Error(what) {}
};

class SchemaMismatchError : public Error {
 public:
  explicit SchemaMismatchError(const std::string& what) : Error(what) {}
};

}  // namespace sage
