#include "coword/wos_parser.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "coword/error.hpp"
#include "coword/text.hpp"

namespace coword {

namespace {

struct TagLines {
  std::vector<std::string> lines;
  std::size_t first_line = 0;
};

struct OpenRecord {
  std::size_t start_line = 0;
  std::vector<std::pair<std::string, TagLines>> tags;  // insertion order
  TagLines* current = nullptr;

  TagLines& tag(const std::string& name, std::size_t line) {
    for (auto& [key, value] : tags) {
      if (key == name) return value;
    }
    tags.emplace_back(name, TagLines{{}, line});
    return tags.back().second;
  }
  const TagLines* find(std::string_view name) const {
    for (const auto& [key, value] : tags) {
      if (key == name) return &value;
    }
    return nullptr;
  }
};

bool is_tag_line(std::string_view line) {
  if (line.size() < 2) return false;
  const char a = line[0];
  const char b = line[1];
  if (a < 'A' || a > 'Z') return false;
  if (!((b >= 'A' && b <= 'Z') || (b >= '0' && b <= '9'))) return false;
  return line.size() == 2 || line[2] == ' ';
}

std::string joined(const TagLines& t) {
  std::string out;
  for (const auto& l : t.lines) {
    if (l.empty()) continue;
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

struct ParsedText {
  Corpus corpus;
  std::vector<std::size_t> ordinal_ids;  // documents whose id is doc-<n>
};

Document finish_record(const OpenRecord& rec, std::size_t ordinal, bool& ordinal_id) {
  Document doc;
  if (const auto* ut = rec.find("UT"); ut && !joined(*ut).empty()) {
    doc.id = joined(*ut);
    ordinal_id = false;
  } else {
    doc.id = "doc-" + std::to_string(ordinal);
    ordinal_id = true;
  }
  for (const auto& [tag, value] : rec.tags) {
    if (tag == "UT" || tag == "CR") continue;
    if (tag == "AU") {
      for (const auto& l : value.lines) {
        for (auto& a : text::split_trimmed(l, ';')) doc.authors.push_back(std::move(a));
      }
    } else if (tag == "TI") {
      doc.title = joined(value);
    } else if (tag == "SO") {
      doc.source = joined(value);
    } else if (tag == "DE") {
      doc.author_keywords = text::split_trimmed(joined(value), ';');
    } else if (tag == "ID") {
      doc.keywords_plus = text::split_trimmed(joined(value), ';');
    } else if (tag == "DT") {
      doc.doc_type = classify_doc_type(joined(value));
    } else if (tag == "PY") {
      const std::string v = joined(value);
      int year = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), year);
      if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size() || year <= 0) {
        throw ParseError(ParseErrorKind::InvalidFieldValue, value.first_line,
                         "PY is not a positive year: '" + v + "'");
      }
      doc.year = year;
    } else {
      doc.extra_tags[tag] = value.lines;
    }
  }
  return doc;
}

ParsedText parse_text(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  ParsedText out;
  std::unordered_set<std::string> seen_ids;
  std::optional<OpenRecord> rec;
  bool header_allowed = true;  // FN may open a (new) file section
  bool after_fn = false;
  bool ended = false;
  std::size_t ordinal = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);

    if (text::trim(line).empty()) continue;

    if (line.starts_with("   ")) {
      if (!rec || rec->current == nullptr) {
        throw ParseError(ParseErrorKind::MalformedTagLine, line_no,
                         "continuation line outside a record field");
      }
      rec->current->lines.emplace_back(text::trim(line));
      continue;
    }
    if (!is_tag_line(line)) {
      throw ParseError(ParseErrorKind::MalformedTagLine, line_no,
                       "expected a two-letter tag or a 3-space continuation");
    }
    const std::string tag(line.substr(0, 2));
    const std::string_view value = line.size() > 3 ? text::trim(line.substr(3)) : std::string_view{};

    if (!rec) {
      if (tag == "FN") {
        if (!header_allowed || value.empty()) {
          throw ParseError(ParseErrorKind::MalformedTagLine, line_no, "misplaced or empty FN header");
        }
        header_allowed = false;
        after_fn = true;
        ended = false;
      } else if (tag == "VR") {
        if (!after_fn) {
          throw ParseError(ParseErrorKind::MalformedTagLine, line_no, "VR without preceding FN");
        }
        after_fn = false;
      } else if (tag == "PT") {
        if (ended) {
          throw ParseError(ParseErrorKind::MalformedTagLine, line_no, "record after EF");
        }
        rec.emplace();
        rec->start_line = line_no;
        auto& pt = rec->tag("PT", line_no);
        pt.lines.emplace_back(value);
        rec->current = &pt;
        header_allowed = false;
        after_fn = false;
      } else if (tag == "EF") {
        ended = true;
        header_allowed = true;
        after_fn = false;
      } else {
        throw ParseError(ParseErrorKind::MalformedTagLine, line_no, "tag " + tag + " outside a record");
      }
      continue;
    }

    if (tag == "ER") {
      ++ordinal;
      bool ordinal_id = false;
      Document doc = finish_record(*rec, ordinal, ordinal_id);
      if (!seen_ids.insert(doc.id).second) {
        const auto* ut = rec->find("UT");
        throw ParseError(ParseErrorKind::DuplicateId, ut ? ut->first_line : line_no,
                         "duplicate document id " + doc.id);
      }
      if (ordinal_id) out.ordinal_ids.push_back(out.corpus.documents.size());
      out.corpus.documents.push_back(std::move(doc));
      rec.reset();
    } else if (tag == "PT" || tag == "EF") {
      throw ParseError(ParseErrorKind::UnterminatedRecord, line_no,
                       "record starting at line " + std::to_string(rec->start_line) +
                           " has no ER");
    } else if (tag == "FN" || tag == "VR") {
      throw ParseError(ParseErrorKind::MalformedTagLine, line_no, "header tag inside a record");
    } else {
      auto& t = rec->tag(tag, line_no);
      t.lines.emplace_back(value);
      rec->current = &t;
    }
  }

  if (rec) {
    throw ParseError(ParseErrorKind::UnterminatedRecord, line_no,
                     "record starting at line " + std::to_string(rec->start_line) +
                         " has no ER before end of input");
  }
  return out;
}

std::string iso_utc(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Corpus parse_wos_plaintext(std::string_view text) { return parse_text(text).corpus; }

Corpus load_wos_files(std::span<const std::filesystem::path> paths) {
  std::vector<std::filesystem::path> sorted(paths.begin(), paths.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.filename().generic_string() < b.filename().generic_string() ||
           (a.filename() == b.filename() && a.generic_string() < b.generic_string());
  });

  const auto n = static_cast<std::ptrdiff_t>(sorted.size());
  std::vector<ParsedText> parsed(sorted.size());
  std::vector<std::exception_ptr> errors(sorted.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      std::ifstream in(sorted[i], std::ios::binary);
      if (!in) throw IoError("cannot read " + sorted[i].string());
      std::ostringstream buf;
      buf << in.rdbuf();
      parsed[i] = parse_text(buf.str());
    } catch (const ParseError& e) {
      errors[i] = std::make_exception_ptr(
          ParseError(e.kind(), e.line(), sorted[i].string() + ": " + e.detail()));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Corpus corpus;
  std::filesystem::file_time_type newest{};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    corpus.provenance.source_files.push_back(sorted[i].generic_string());
    newest = std::max(newest, std::filesystem::last_write_time(sorted[i]));
    for (std::size_t idx : parsed[i].ordinal_ids) {
      parsed[i].corpus.documents[idx].id.clear();
    }
    for (auto& doc : parsed[i].corpus.documents) corpus.documents.push_back(std::move(doc));
  }

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    auto& doc = corpus.documents[i];
    if (doc.id.empty()) doc.id = "doc-" + std::to_string(i + 1);
    if (!seen.insert(doc.id).second) {
      throw ParseError(ParseErrorKind::DuplicateId, 0, "document id " + doc.id + " repeats across files");
    }
  }
  if (!sorted.empty()) {
    corpus.provenance.parsed_at = iso_utc(std::chrono::file_clock::to_sys(newest));
  }
  return corpus;
}

}  // namespace coword
