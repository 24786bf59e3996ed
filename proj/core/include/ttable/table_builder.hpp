#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ttable/model.hpp"

namespace ttable {

enum class AggKind { Max, Min, Sum, First, Last, Count, Concat };

/// Combines the ordered values colliding at one address. The fold runs left
/// to right in data order, so no commutativity, associativity, or identity
/// element is required. Sum, max, and min insist on numbers; first, last,
/// count, and concat accept anything; concat joins rendered values with the
/// separator.
struct AggregateFn {
  AggKind kind = AggKind::Max;
  std::string separator{};  // concat only
  friend bool operator==(const AggregateFn&, const AggregateFn&) = default;
};

/// Collision makes construction fail (the default).
struct ErrorPolicy {
  friend bool operator==(const ErrorPolicy&, const ErrorPolicy&) { return true; }
};

/// Every address receiving two or more values stays empty.
struct DropPolicy {
  friend bool operator==(const DropPolicy&, const DropPolicy&) { return true; }
};

using CollisionPolicy = std::variant<ErrorPolicy, DropPolicy, AggregateFn>;

/// Constructs a table from attributed data: each item is placed at the
/// positions its record locates in the column and row types; items lacking
/// either attribute are simply ignored. Headers are the record sequences of
/// the two types, and they fix the dimensions even where no data lands.
/// Aggregation touches only addresses with at least two values; a single
/// value is placed as-is, and empty cells are kept empty.
Table build(const AxisType& column_type, const AxisType& row_type, const DataSet& data,
            const CollisionPolicy& policy = ErrorPolicy{});
Table build(const TableSpec& spec, const DataSet& data,
            const CollisionPolicy& policy = ErrorPolicy{});

/// Exchanges the two axes: cell (x,y) moves to (y,x), headers swap roles.
Table transpose(const Table& table);

/// Lane predicate for row/column filtering: receives the lane's header record
/// and its populated cells as (1-based position along the lane, value) pairs.
using LanePredicate =
    std::function<bool(const Record& header, const std::vector<std::pair<int, Value>>& cells)>;

/// Keeps the rows satisfying the predicate; survivors are renumbered
/// consecutively in their original order, headers filtered in step.
Table filter_rows(const Table& table, const LanePredicate& keep);

/// Column-wise analogue of filter_rows.
Table filter_cols(const Table& table, const LanePredicate& keep);

bool lane_empty(const Record& header, const std::vector<std::pair<int, Value>>& cells);
bool lane_nonempty(const Record& header, const std::vector<std::pair<int, Value>>& cells);

}  // namespace ttable
