#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sage {

struct Document {
  std::string doc_id;
  std::string title;  // may be empty
  std::string text;

  bool operator==(const Document&) const = default;
};

struct Query {
  std::string query_id;
  std::string text;

  bool operator==(const Query&) const = default;
};

// Graded relevance judgments, keyed by query then document. Grades are
// non-negative integers; 0 means judged irrelevant.
class QrelSet {
 public:
  void set(const std::string& query_id, const std::string& doc_id, int grade);

  // 0 for unjudged pairs.
  int grade(const std::string& query_id, const std::string& doc_id) const;

  // nullptr when the query has no judgments at all.
  const std::map<std::string, int>* judgments_for(const std::string& query_id) const;

  bool has_positive(const std::string& query_id) const;

  const std::map<std::string, std::map<std::string, int>>& by_query() const {
    return by_query_;
  }

  std::size_t judgment_count() const;
  bool operator==(const QrelSet&) const = default;

 private:
  std::map<std::string, std::map<std::string, int>> by_query_;
};

// BEIR-style loaders. Corpus and queries are JSONL (one object per line,
// UTF-8); qrels are 3-column TSV with an optional header row. Iteration order
// of the returned vectors is the byte order of the source file.
std::vector<Document> load_corpus(const std::filesystem::path& path);
std::vector<Query> load_queries(const std::filesystem::path& path);
QrelSet load_qrels(const std::filesystem::path& path);

// Serializers for the normalized bundle written by `sage ingest`. Loading a
// written file reproduces identical records.
void write_corpus(const std::filesystem::path& path, const std::vector<Document>& docs);
void write_queries(const std::filesystem::path& path, const std::vector<Query>& queries);
void write_qrels(const std::filesystem::path& path, const QrelSet& qrels);

// Checks that every judged query id exists in `queries` (error otherwise) and
// returns the ids of judged queries with at least one positive grade, in query
// file order. Queries with no positive judgment are excluded with a logged
// count (ideal DCG would be zero for them).
std::vector<std::string> evaluable_query_ids(const std::vector<Query>& queries,
                                             const QrelSet& qrels);

}  // namespace sage
