#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "io_detail.hpp"
#include "ttable/io.hpp"

namespace ttable::io {

DataSet parse_data_csv(std::string_view text, const std::string& value_column) {
  const auto rows = parse_csv(text);
  if (rows.empty()) {
    throw IoError("data file: missing header row");
  }

  const CsvRow& header = rows.front();
  std::vector<std::string> names;
  int value_index = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string& name = header[i].text;
    if (name.empty()) {
      throw IoError("data file: empty column name in header");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw IoError("data file: duplicate column '" + name + "'");
    }
    names.push_back(name);
    if (name == value_column) {
      value_index = static_cast<int>(i);
    }
  }
  if (value_index < 0) {
    throw IoError("data file: no column named '" + value_column + "'");
  }

  DataSet out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.size() != header.size()) {
      throw IoError("data file: row " + std::to_string(r + 1) + " has " +
                    std::to_string(row.size()) + " fields, expected " +
                    std::to_string(header.size()));
    }
    if (field_absent(row[value_index])) {
      throw IoError("data file: row " + std::to_string(r + 1) + " has no value");
    }
    AttributedValue item{field_value(row[value_index]), {}};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) == value_index || field_absent(row[i])) {
        continue;
      }
      item.record.insert(names[i], field_value(row[i]));
    }
    out.push_back(std::move(item));
  }
  return out;
}

DataSet parse_data_jsonl(std::string_view text) {
  using nlohmann::json;
  DataSet out;
  std::size_t start = 0;
  int line = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string_view::npos) {
      continue;
    }
    json obj;
    try {
      obj = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw IoError("data file: line " + std::to_string(line) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("value")) {
      throw IoError("data file: line " + std::to_string(line) +
                    ": expected {\"value\": ..., \"attrs\": {...}}");
    }
    const auto scalar = [&](const json& j) -> Value {
      if (j.is_string()) {
        return ttable::text(j.get<std::string>());
      }
      if (j.is_number()) {
        return num(j.get<double>());
      }
      if (j.is_boolean()) {
        return boolean(j.get<bool>());
      }
      throw IoError("data file: line " + std::to_string(line) +
                    ": values must be strings, numbers, or booleans");
    };
    AttributedValue item{scalar(obj["value"]), {}};
    if (obj.contains("attrs")) {
      if (!obj["attrs"].is_object()) {
        throw IoError("data file: line " + std::to_string(line) + ": \"attrs\" must be an object");
      }
      for (const auto& [name, j] : obj["attrs"].items()) {
        if (!item.record.insert(name, scalar(j))) {
          throw IoError("data file: line " + std::to_string(line) + ": duplicate attribute '" +
                        name + "'");
        }
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

DataSet read_data(const std::string& path, const std::string& value_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open data file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    return parse_data_jsonl(content);
  }
  return parse_data_csv(content, value_column);
}

void write_data_csv(const DataSet& data, const std::vector<std::string>& columns,
                    std::ostream& out, const std::string& value_column) {
  for (const auto& name : columns) {
    out << escape_field(name) << ',';
  }
  out << escape_field(value_column) << '\n';
  for (const auto& item : data) {
    for (const auto& name : columns) {
      if (const Value* v = item.record.find(name)) {
        out << value_field(*v);
      }
      out << ',';
    }
    out << value_field(item.value) << '\n';
  }
}

}  // namespace ttable::io
