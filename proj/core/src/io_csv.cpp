#include "io_detail.hpp"

#include "ttable/error.hpp"

namespace ttable::io {

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  CsvField field;
  std::size_t i = 0;
  int line = 1;

  const auto end_field = [&] {
    row.push_back(std::move(field));
    field = {};
  };
  const auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    ++line;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '"') {
      if (!field.text.empty() || field.quoted) {
        throw IoError("line " + std::to_string(line) + ": unexpected quote inside a field");
      }
      field.quoted = true;
      ++i;
      for (;;) {
        if (i >= text.size()) {
          throw IoError("line " + std::to_string(line) + ": unterminated quoted field");
        }
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.text += text[i];
        ++i;
      }
      continue;
    }
    if (c == ',') {
      end_field();
      ++i;
      continue;
    }
    if (c == '\n' || c == '\r') {
      end_row();
      i += (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ? 2 : 1;
      continue;
    }
    if (field.quoted) {
      throw IoError("line " + std::to_string(line) + ": text after closing quote");
    }
    field.text += c;
    ++i;
  }
  if (!field.text.empty() || field.quoted || !row.empty()) {
    end_row();
  }
  return rows;
}

bool field_absent(const CsvField& field) {
  return field.text.empty() && !field.quoted;
}

Value field_value(const CsvField& field) {
  if (field.quoted) {
    return text(field.text);
  }
  if (const auto n = parse_number(field.text)) {
    return num(*n);
  }
  if (field.text == "true") {
    return boolean(true);
  }
  if (field.text == "false") {
    return boolean(false);
  }
  return text(field.text);
}

namespace {

bool needs_quotes(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string value_field(const Value& value) {
  if (!is_text(value)) {
    return format_value(value);
  }
  const std::string& s = std::get<std::string>(value);
  if (s.empty() || needs_quotes(s) || parse_number(s) || s == "true" || s == "false") {
    return quoted(s);
  }
  return s;
}

std::string escape_field(const std::string& text) {
  return needs_quotes(text) ? quoted(text) : text;
}

}  // namespace ttable::io
