#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ttable/model.hpp"

namespace ttable::io {

// ---------------------------------------------------------------------------
// Type definition files
//
// A JSON array of type definitions:
//   [ { "name": "Company",
//       "values": [ "CoA",
//                   { "value": "CoB", "refine": { "ref": "Quarter" } },
//                   { "value": "CoC", "refine": { "name": "R", "values": [...] } } ] },
//     ... ]
// Named refs resolve against the file's own definitions and must be acyclic.

/// Parses, resolves, and validates a type definition document.
/// Throws IoError with distinct messages for parse errors, unresolved refs,
/// cyclic refs, and validation failures.
std::map<std::string, DomainType, std::less<>> parse_types(std::string_view text);
std::map<std::string, DomainType, std::less<>> read_types(const std::string& path);

// ---------------------------------------------------------------------------
// Data files
//
// Delimited form: a header row of type names plus one column named `value`
// (name overridable); each body row is one attributed value, an empty field
// meaning the attribute is absent. Line-delimited structured form: one JSON
// object {"value": v, "attrs": {...}} per line. read_data sniffs the form.
// Unquoted fields parse as numbers or booleans when they look like one;
// quoted fields are always text.

DataSet parse_data_csv(std::string_view text, const std::string& value_column = "value");
DataSet parse_data_jsonl(std::string_view text);
DataSet read_data(const std::string& path, const std::string& value_column = "value");

/// Writes a data set in the delimited form with the given attribute columns;
/// the value column is written last. Absent attributes become empty fields.
void write_data_csv(const DataSet& data, const std::vector<std::string>& columns,
                    std::ostream& out, const std::string& value_column = "value");

// ---------------------------------------------------------------------------
// Table rendering

enum class TableFormat { Csv, Text, Json };

/// Renders a table. Header bands have one lane per nesting level in
/// root-to-leaf order; records touching fewer levels pad trailing cells
/// empty, and a Unit axis renders no band at all. Output is byte-identical
/// for a given table.
void write_table(const Table& table, TableFormat format, std::ostream& out);
std::string render_table(const Table& table, TableFormat format);

/// Reads a rendered delimited table back: `col_levels` header rows whose
/// levels are named by `col_names`, then data rows starting with `row_levels`
/// header fields named by `row_names`. Empty header fields are padding;
/// empty data fields are empty cells.
Table parse_table_csv(std::string_view text, int col_levels,
                      const std::vector<std::string>& col_names, int row_levels,
                      const std::vector<std::string>& row_names);

}  // namespace ttable::io
