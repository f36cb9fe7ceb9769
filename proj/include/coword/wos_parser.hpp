#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "coword/document.hpp"

namespace coword {

/// Parses a Web of Science "plain text / field tagged" export.
///
/// Records run from `PT` to `ER`; values start at column 4 after a two
/// character tag; continuation lines are indented three spaces. An optional
/// `FN`/`VR` header and the `EF` terminator are accepted. A UTF-8 BOM and
/// CRLF line endings are tolerated. Documents without a `UT` accession get
/// the id `doc-<n>` where n is the 1-based record ordinal.
///
/// Throws ParseError (UnterminatedRecord, MalformedTagLine,
/// InvalidFieldValue, DuplicateId) carrying the offending line number.
Corpus parse_wos_plaintext(std::string_view text);

/// Reads and parses every file (concurrently), concatenating the records in
/// filename order. Ordinal ids are renumbered across the whole corpus.
Corpus load_wos_files(std::span<const std::filesystem::path> paths);

}  // namespace coword
