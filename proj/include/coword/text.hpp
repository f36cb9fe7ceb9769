#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coword::text {

std::string_view trim(std::string_view s);

/// Splits on `sep`, trims every piece and drops empty pieces.
std::vector<std::string> split_trimmed(std::string_view s, char sep);

/// Collapses runs of ASCII whitespace into a single space and trims.
std::string collapse_whitespace(std::string_view s);

/// Uppercases ASCII letters and the Latin-1 supplement range of UTF-8
/// (two-byte sequences starting with 0xC3). Other bytes pass through.
std::string to_upper(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

/// Escapes &, <, >, " and ' for XML attribute and text content.
std::string xml_escape(std::string_view s);

/// Formats `value` with a fixed number of decimals ("C" locale).
std::string fixed(double value, int decimals);

/// Shortest round-trippable decimal for `value`.
std::string shortest(double value);

}  // namespace coword::text
