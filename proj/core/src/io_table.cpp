#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "io_detail.hpp"
#include "ttable/io.hpp"

namespace ttable::io {

namespace {

std::size_t band_depth(const std::vector<Record>& headers) {
  std::size_t depth = 0;
  for (const auto& r : headers) {
    depth = std::max(depth, r.size());
  }
  return depth;
}

// Header record level i, or empty past the record's depth.
std::string header_cell(const Record& r, std::size_t level, bool quoted_form) {
  if (level >= r.size()) {
    return "";
  }
  const Value& v = (r.begin() + level)->second;
  return quoted_form ? value_field(v) : format_value(v);
}

void write_csv(const Table& t, std::ostream& out) {
  const std::size_t col_depth = band_depth(t.column_headers);
  const std::size_t row_depth = band_depth(t.row_headers);
  const int width = t.width();
  const int height = t.height();

  for (std::size_t level = 0; level < col_depth; ++level) {
    std::string line;
    for (std::size_t i = 0; i < row_depth; ++i) {
      line += ',';
    }
    for (int x = 1; x <= width; ++x) {
      if (x > 1) {
        line += ',';
      }
      line += header_cell(t.column_headers[x - 1], level, true);
    }
    out << line << '\n';
  }
  for (int y = 1; y <= height; ++y) {
    std::string line;
    for (std::size_t level = 0; level < row_depth; ++level) {
      if (level > 0) {
        line += ',';
      }
      line += header_cell(t.row_headers[y - 1], level, true);
    }
    for (int x = 1; x <= width; ++x) {
      if (x > 1 || row_depth > 0) {
        line += ',';
      }
      if (const Value* v = t.cell(x, y)) {
        line += value_field(*v);
      }
    }
    out << line << '\n';
  }
}

void write_text(const Table& t, std::ostream& out) {
  const std::size_t col_depth = band_depth(t.column_headers);
  const std::size_t row_depth = band_depth(t.row_headers);
  const int width = t.width();
  const int height = t.height();
  const std::size_t total_cols = row_depth + static_cast<std::size_t>(width);

  // Assemble the full grid first; column widths come from its longest entries.
  std::vector<std::vector<std::string>> grid;
  for (std::size_t level = 0; level < col_depth; ++level) {
    std::vector<std::string> line(total_cols);
    for (int x = 1; x <= width; ++x) {
      line[row_depth + x - 1] = header_cell(t.column_headers[x - 1], level, false);
    }
    grid.push_back(std::move(line));
  }
  for (int y = 1; y <= height; ++y) {
    std::vector<std::string> line(total_cols);
    for (std::size_t level = 0; level < row_depth; ++level) {
      line[level] = header_cell(t.row_headers[y - 1], level, false);
    }
    for (int x = 1; x <= width; ++x) {
      if (const Value* v = t.cell(x, y)) {
        line[row_depth + x - 1] = format_value(*v);
      }
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(total_cols, 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < total_cols; ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }

  const auto emit = [&](const std::vector<std::string>& line) {
    std::string rendered;
    for (std::size_t i = 0; i < total_cols; ++i) {
      if (i > 0) {
        rendered += (i == row_depth) ? " | " : "  ";
      }
      rendered += line[i];
      rendered.append(widths[i] - line[i].size(), ' ');
    }
    while (!rendered.empty() && rendered.back() == ' ') {
      rendered.pop_back();
    }
    out << rendered << '\n';
  };
  const auto emit_rule = [&] {
    std::string rendered;
    for (std::size_t i = 0; i < total_cols; ++i) {
      if (i > 0) {
        rendered += (i == row_depth) ? "-+-" : "--";
      }
      rendered.append(widths[i], '-');
    }
    out << rendered << '\n';
  };

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (col_depth > 0 && i == col_depth) {
      emit_rule();
    }
    emit(grid[i]);
  }
}

nlohmann::ordered_json value_json(const Value& v) {
  if (is_number(v)) {
    return std::get<double>(v);
  }
  if (is_text(v)) {
    return std::get<std::string>(v);
  }
  return std::get<bool>(v);
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  const auto headers_json = [](const std::vector<Record>& headers) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : headers) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [name, value] : r) {
        obj[name] = value_json(value);
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  };
  doc["colHeaders"] = headers_json(t.column_headers);
  doc["rowHeaders"] = headers_json(t.row_headers);
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& [addr, value] : t.cells) {
    nlohmann::ordered_json cell = nlohmann::ordered_json::object();
    cell["col"] = addr.col;
    cell["row"] = addr.row;
    cell["value"] = value_json(value);
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_table(const Table& table, TableFormat format, std::ostream& out) {
  switch (format) {
    case TableFormat::Csv:
      write_csv(table, out);
      break;
    case TableFormat::Text:
      write_text(table, out);
      break;
    case TableFormat::Json:
      write_json(table, out);
      break;
  }
}

std::string render_table(const Table& table, TableFormat format) {
  std::ostringstream out;
  write_table(table, format, out);
  return out.str();
}

Table parse_table_csv(std::string_view text, int col_levels,
                      const std::vector<std::string>& col_names, int row_levels,
                      const std::vector<std::string>& row_names) {
  if (col_levels < 0 || row_levels < 0) {
    throw IoError("table file: header level counts cannot be negative");
  }
  if (static_cast<std::size_t>(col_levels) != col_names.size()) {
    throw IoError("table file: " + std::to_string(col_levels) + " column levels but " +
                  std::to_string(col_names.size()) + " column names");
  }
  if (static_cast<std::size_t>(row_levels) != row_names.size()) {
    throw IoError("table file: " + std::to_string(row_levels) + " row levels but " +
                  std::to_string(row_names.size()) + " row names");
  }
  for (const auto* names : {&col_names, &row_names}) {
    for (std::size_t i = 0; i < names->size(); ++i) {
      for (std::size_t j = i + 1; j < names->size(); ++j) {
        if ((*names)[i] == (*names)[j]) {
          throw IoError("table file: duplicate header level name '" + (*names)[i] + "'");
        }
      }
    }
  }

  const auto rows = parse_csv(text);
  if (rows.size() < static_cast<std::size_t>(col_levels)) {
    throw IoError("table file: " + std::to_string(col_levels) +
                  " header rows requested but the file has only " + std::to_string(rows.size()));
  }
  std::size_t field_count = rows.empty() ? static_cast<std::size_t>(row_levels) : rows[0].size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != field_count) {
      throw IoError("table file: row " + std::to_string(r + 1) + " has " +
                    std::to_string(rows[r].size()) + " fields, expected " +
                    std::to_string(field_count));
    }
  }
  if (field_count < static_cast<std::size_t>(row_levels)) {
    throw IoError("table file: rows have " + std::to_string(field_count) +
                  " fields, fewer than the " + std::to_string(row_levels) +
                  " row header columns");
  }

  const int width = static_cast<int>(field_count) - row_levels;
  Table t;
  for (int x = 0; x < width; ++x) {
    Record header;
    for (int level = 0; level < col_levels; ++level) {
      const CsvField& f = rows[level][row_levels + x];
      if (!field_absent(f)) {
        header.insert(col_names[level], field_value(f));
      }
    }
    t.column_headers.push_back(std::move(header));
  }
  for (std::size_t r = col_levels; r < rows.size(); ++r) {
    Record header;
    for (int level = 0; level < row_levels; ++level) {
      const CsvField& f = rows[r][level];
      if (!field_absent(f)) {
        header.insert(row_names[level], field_value(f));
      }
    }
    t.row_headers.push_back(std::move(header));
    const int y = static_cast<int>(t.row_headers.size());
    for (int x = 0; x < width; ++x) {
      const CsvField& f = rows[r][row_levels + x];
      if (!field_absent(f)) {
        t.place(x + 1, y, field_value(f));
      }
    }
  }
  return t;
}

}  // namespace ttable::io
