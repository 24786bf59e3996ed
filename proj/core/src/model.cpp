#include "ttable/model.hpp"

#include <algorithm>
#include <set>

#include "ttable/type_algebra.hpp"

namespace ttable {

bool operator==(const DomainType& a, const DomainType& b) {
  return a.name == b.name && a.values == b.values;
}

bool operator==(const RefinedValue& a, const RefinedValue& b) {
  return a.value == b.value && a.refinement == b.refinement;
}

DomainType plain_type(std::string name, std::vector<Value> values) {
  DomainType type{std::move(name), {}};
  type.values.reserve(values.size());
  for (auto& v : values) {
    type.values.push_back(plain(std::move(v)));
  }
  return type;
}

Record::Record(std::initializer_list<std::pair<std::string, Value>> attrs) {
  for (const auto& [name, value] : attrs) {
    if (!insert(name, value)) {
      throw ModelError("record literal repeats type name '" + name + "'");
    }
  }
}

bool Record::insert(std::string name, Value value) {
  if (contains(name)) {
    return false;
  }
  attrs_.emplace_back(std::move(name), std::move(value));
  return true;
}

const Value* Record::find(std::string_view name) const {
  for (const auto& [n, v] : attrs_) {
    if (n == name) {
      return &v;
    }
  }
  return nullptr;
}

bool Record::subsumes(const Record& other) const {
  for (const auto& [name, value] : other.attrs_) {
    const Value* mine = find(name);
    if (mine == nullptr || !(*mine == value)) {
      return false;
    }
  }
  return true;
}

bool operator==(const Record& a, const Record& b) {
  // Names are unique, so equal sizes plus one-way subsumption mean set equality.
  return a.size() == b.size() && a.subsumes(b);
}

std::optional<Record> merge_records(const Record& a, const Record& b) {
  Record merged = a;
  for (const auto& [name, value] : b) {
    if (const Value* present = merged.find(name)) {
      if (!(*present == value)) {
        return std::nullopt;
      }
      continue;
    }
    merged.insert(name, value);
  }
  return merged;
}

bool operator==(const AttributedValue& a, const AttributedValue& b) {
  return a.value == b.value && a.record == b.record;
}

const Value* Table::cell(int col, int row) const {
  auto it = cells.find(CellAddr{col, row});
  return it == cells.end() ? nullptr : &it->second;
}

void Table::place(int col, int row, Value v) {
  if (col < 1 || col > width() || row < 1 || row > height()) {
    throw ModelError("cell (" + std::to_string(col) + "," + std::to_string(row) +
                     ") lies outside the " + std::to_string(width()) + "x" +
                     std::to_string(height()) + " table");
  }
  auto [it, inserted] = cells.emplace(CellAddr{col, row}, std::move(v));
  if (!inserted) {
    throw ModelError("cell (" + std::to_string(col) + "," + std::to_string(row) +
                     ") is already populated");
  }
}

bool operator==(const Table& a, const Table& b) {
  return a.column_headers == b.column_headers && a.row_headers == b.row_headers &&
         a.cells == b.cells;
}

namespace {

std::string path_string(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) {
      out += ".";
    }
    out += n;
  }
  return out;
}

std::optional<std::string> check_type(const DomainType& type,
                                      std::vector<std::string>& path) {
  path.push_back(type.name);
  // Sibling values must be pairwise distinct (value components only).
  for (std::size_t i = 0; i < type.values.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (type.values[j].value == type.values[i].value) {
        auto msg = "duplicate sibling value " + format_value(type.values[i].value) +
                   " in type " + path_string(path);
        path.pop_back();
        return msg;
      }
    }
  }
  // No type name may repeat along a root-to-leaf path.
  for (const auto& rv : type.values) {
    if (!rv.refinement) {
      continue;
    }
    if (std::find(path.begin(), path.end(), rv.refinement->name) != path.end()) {
      auto msg = "repeated name " + rv.refinement->name + " on path " +
                 path_string(path) + "." + format_value(rv.value) + "." +
                 rv.refinement->name;
      path.pop_back();
      return msg;
    }
    if (auto violation = check_type(*rv.refinement, path)) {
      path.pop_back();
      return violation;
    }
  }
  path.pop_back();
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_type(const DomainType& type) {
  std::vector<std::string> path;
  if (auto violation = check_type(type, path)) {
    return violation;
  }
  // Implied by the rules above; asserted so a regression cannot slip through.
  const auto records = records_of(type);
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = 0; j < records.size(); ++j) {
      if (i != j && records[i].subsumes(records[j])) {
        return "records " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
               " of type " + type.name + " subsume each other";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate_type(const AxisType& axis) {
  if (const auto* type = std::get_if<DomainType>(&axis)) {
    return validate_type(*type);
  }
  return std::nullopt;
}

std::optional<std::string> validate_record(
    const std::vector<std::pair<std::string, Value>>& attrs) {
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (attrs[j].first == attrs[i].first) {
        return "duplicate attribute for type name '" + attrs[i].first + "'";
      }
    }
  }
  return std::nullopt;
}

}  // namespace ttable
