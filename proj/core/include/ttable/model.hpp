#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ttable/error.hpp"
#include "ttable/value.hpp"

namespace ttable {

struct RefinedValue;

/// A user-defined, named, ordered collection of values. Values may themselves
/// be refined by further domain types, so a type is a tree: the name at the
/// root, values as children, subtypes hanging off refined values.
struct DomainType {
  std::string name;
  std::vector<RefinedValue> values;
};

/// One value of a domain type, optionally refined by a subtype.
struct RefinedValue {
  Value value;
  std::optional<DomainType> refinement;  // absent: plain value
};

bool operator==(const DomainType& a, const DomainType& b);
bool operator==(const RefinedValue& a, const RefinedValue& b);

inline RefinedValue plain(Value v) { return RefinedValue{std::move(v), std::nullopt}; }
inline RefinedValue refined(Value v, DomainType t) {
  return RefinedValue{std::move(v), std::move(t)};
}

/// Builds a plain type (bare values only) from a value list.
DomainType plain_type(std::string name, std::vector<Value> values);

/// The singleton type used for untyped single rows or columns: it denotes one
/// empty record, and every lookup against it yields position 1.
struct UnitType {
  friend bool operator==(const UnitType&, const UnitType&) { return true; }
};

/// A table axis: a domain type or Unit.
using AxisType = std::variant<UnitType, DomainType>;

/// Column and row types of a table; the column type drives x, the row type y.
struct TableSpec {
  AxisType column;
  AxisType row;
};

/// A functional attribute set: at most one value per type name. Attributes
/// keep insertion order, which for records derived from types is root-to-leaf
/// path order; equality ignores order.
class Record {
 public:
  Record() = default;

  /// Throws ModelError on a duplicate name; meant for literals in code.
  Record(std::initializer_list<std::pair<std::string, Value>> attrs);

  /// Adds an attribute; returns false (and changes nothing) if the name is taken.
  bool insert(std::string name, Value value);

  const Value* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  /// True when every attribute of `other` occurs here with an equal value.
  bool subsumes(const Record& other) const;

  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }
  auto begin() const { return attrs_.begin(); }
  auto end() const { return attrs_.end(); }

  friend bool operator==(const Record& a, const Record& b);

 private:
  std::vector<std::pair<std::string, Value>> attrs_;
};

/// Set union of two records; nullopt when they disagree on a shared name.
/// Attributes of `a` come first, then the attributes only `b` has.
std::optional<Record> merge_records(const Record& a, const Record& b);

/// A datum together with the attributes describing it. The record may be
/// empty, and attribute values need not belong to any declared type.
struct AttributedValue {
  Value value;
  Record record;
};

bool operator==(const AttributedValue& a, const AttributedValue& b);

/// Ordered attributed data. Order is preserved from the source; it matters
/// only as the fold order of collision aggregation.
using DataSet = std::vector<AttributedValue>;

/// 1-based cell address; col comes from the column type, row from the row type.
struct CellAddr {
  int col = 0;
  int row = 0;
  friend bool operator==(const CellAddr&, const CellAddr&) = default;
};

/// Row-major address order, so cell iteration follows reading order.
struct RowMajor {
  bool operator()(const CellAddr& a, const CellAddr& b) const {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

/// A sparse grid of values plus the header records of both axes. Dimensions
/// are defined by the header sequences, not by the populated cells.
struct Table {
  std::vector<Record> column_headers;
  std::vector<Record> row_headers;
  std::map<CellAddr, Value, RowMajor> cells;

  int width() const { return static_cast<int>(column_headers.size()); }
  int height() const { return static_cast<int>(row_headers.size()); }

  const Value* cell(int col, int row) const;

  /// Places a value; throws ModelError when the address lies outside the
  /// header bounds or is already populated.
  void place(int col, int row, Value v);

  friend bool operator==(const Table& a, const Table& b);
};

/// Checks the structural rules of a domain type: sibling values pairwise
/// distinct, no type name repeated along any root-to-leaf path, and (implied
/// by those two, asserted anyway) a record sequence free of duplicates and
/// mutual subsumption. Returns a description of the first violation with the
/// offending path, or nullopt when the type is valid.
std::optional<std::string> validate_type(const DomainType& type);
std::optional<std::string> validate_type(const AxisType& axis);

/// Checks a raw attribute list for duplicate type names before it becomes a
/// Record; ingestion layers must reject violations.
std::optional<std::string> validate_record(
    const std::vector<std::pair<std::string, Value>>& attrs);

}  // namespace ttable
