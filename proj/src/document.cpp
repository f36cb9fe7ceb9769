#include "coword/document.hpp"

#include <algorithm>

#include "coword/error.hpp"
#include "coword/rational.hpp"
#include "coword/text.hpp"

namespace coword {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnterminatedRecord: return "UnterminatedRecord";
    case ParseErrorKind::MalformedTagLine: return "MalformedTagLine";
    case ParseErrorKind::InvalidFieldValue: return "InvalidFieldValue";
    case ParseErrorKind::DuplicateId: return "DuplicateId";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error(std::string(to_string(kind)) + " at line " + std::to_string(line) + ": " + detail),
      kind_(kind),
      line_(line),
      detail_(detail) {}

std::string Rational::to_fixed(int decimals) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  using wide = uint128;
  // round half up: floor((num * scale * 2 + den) / (2 * den))
  const wide scaled = (static_cast<wide>(num_) * scale * 2 + den_) / (static_cast<wide>(den_) * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  const auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - f.size(), '0');
    out += f;
  }
  return out;
}

const char* to_string(DocType type) {
  switch (type) {
    case DocType::Article: return "Article";
    case DocType::BookReview: return "BookReview";
    case DocType::BiographicalItem: return "BiographicalItem";
    case DocType::EditorialMaterial: return "EditorialMaterial";
    case DocType::Review: return "Review";
    case DocType::Other: return "Other";
  }
  return "Other";
}

std::optional<DocType> doc_type_from_string(std::string_view name) {
  for (DocType t : kAllDocTypes) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

DocType classify_doc_type(std::string_view dt_value) {
  const auto parts = text::split_trimmed(dt_value, ';');
  if (parts.empty()) return DocType::Other;
  std::string key = text::to_upper(parts.front());
  std::replace(key.begin(), key.end(), '-', ' ');
  key = text::collapse_whitespace(key);
  if (key == "ARTICLE") return DocType::Article;
  if (key == "BOOK REVIEW") return DocType::BookReview;
  if (key == "BIOGRAPHICAL ITEM") return DocType::BiographicalItem;
  if (key == "EDITORIAL MATERIAL") return DocType::EditorialMaterial;
  if (key == "REVIEW") return DocType::Review;
  return DocType::Other;
}

const char* to_string(KeywordField field) {
  return field == KeywordField::AuthorKeywords ? "author_keywords" : "keywords_plus";
}

std::optional<KeywordField> keyword_field_from_string(std::string_view name) {
  if (name == "author_keywords" || name == "DE") return KeywordField::AuthorKeywords;
  if (name == "keywords_plus" || name == "ID") return KeywordField::KeywordsPlus;
  return std::nullopt;
}

}  // namespace coword
