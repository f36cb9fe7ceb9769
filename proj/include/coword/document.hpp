#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coword {

enum class DocType { Article, BookReview, BiographicalItem, EditorialMaterial, Review, Other };

inline constexpr DocType kAllDocTypes[] = {DocType::Article,           DocType::BookReview,
                                           DocType::BiographicalItem,  DocType::EditorialMaterial,
                                           DocType::Review,            DocType::Other};

const char* to_string(DocType type);
std::optional<DocType> doc_type_from_string(std::string_view name);

/// Maps a WoS `DT` value ("Article", "Book Review", ...) onto DocType.
/// Multi-valued types ("Article; Proceedings Paper") use the first entry.
DocType classify_doc_type(std::string_view dt_value);

enum class KeywordField { AuthorKeywords, KeywordsPlus };

const char* to_string(KeywordField field);
std::optional<KeywordField> keyword_field_from_string(std::string_view name);

struct Document {
  std::string id;
  std::optional<int> year;
  DocType doc_type = DocType::Other;
  std::string title;
  std::string source;
  std::vector<std::string> authors;
  std::vector<std::string> author_keywords;
  std::vector<std::string> keywords_plus;
  /// Tags the parser does not interpret, with their value lines in order.
  std::map<std::string, std::vector<std::string>> extra_tags;

  const std::vector<std::string>& keywords(KeywordField field) const {
    return field == KeywordField::AuthorKeywords ? author_keywords : keywords_plus;
  }

  friend bool operator==(const Document&, const Document&) = default;
};

struct Provenance {
  std::vector<std::string> source_files;
  /// ISO-8601 UTC. Taken from the newest input file's modification time so
  /// identical inputs yield identical workspaces.
  std::string parsed_at;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Corpus {
  std::vector<Document> documents;
  Provenance provenance;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

}  // namespace coword
