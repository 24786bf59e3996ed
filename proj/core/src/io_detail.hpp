#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ttable/value.hpp"

namespace ttable::io {

// Delimited-file building blocks shared by the data and table codecs. A field
// remembers whether it was quoted: quoting forces text, and an unquoted empty
// field means absence while a quoted empty one is the empty text value.

struct CsvField {
  std::string text;
  bool quoted = false;
};

using CsvRow = std::vector<CsvField>;

/// Splits into rows of fields; `""` escapes a quote inside a quoted field,
/// CRLF and a missing final newline are accepted. Throws IoError on a stray
/// quote or an unterminated quoted field.
std::vector<CsvRow> parse_csv(std::string_view text);

bool field_absent(const CsvField& field);
Value field_value(const CsvField& field);

/// Renders a value so field_value reads it back: text is quoted when it
/// contains a delimiter, quote, or line break, or when bare it would read as
/// a number, boolean, or absence.
std::string value_field(const Value& value);

/// Quotes an arbitrary field (such as a header name) only when necessary.
std::string escape_field(const std::string& text);

}  // namespace ttable::io
