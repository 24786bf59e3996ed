#include "ttable/table_builder.hpp"

#include <map>
#include <utility>

#include "overload.hpp"
#include "ttable/type_algebra.hpp"

namespace ttable {

namespace {

std::string describe_address(const CellAddr& addr) {
  return "(" + std::to_string(addr.col) + "," + std::to_string(addr.row) + ")";
}

double require_number(const Value& v, const char* fn) {
  if (!is_number(v)) {
    throw BuildError(std::string(fn) + " cannot combine non-numeric value " + format_value(v));
  }
  return std::get<double>(v);
}

Value combine(const AggregateFn& fn, const std::vector<Value>& group) {
  switch (fn.kind) {
    case AggKind::Max: {
      double best = require_number(group.front(), "max");
      for (std::size_t i = 1; i < group.size(); ++i) {
        best = std::max(best, require_number(group[i], "max"));
      }
      return num(best);
    }
    case AggKind::Min: {
      double best = require_number(group.front(), "min");
      for (std::size_t i = 1; i < group.size(); ++i) {
        best = std::min(best, require_number(group[i], "min"));
      }
      return num(best);
    }
    case AggKind::Sum: {
      double total = 0.0;
      for (const auto& v : group) {
        total += require_number(v, "sum");
      }
      return num(total);
    }
    case AggKind::First:
      return group.front();
    case AggKind::Last:
      return group.back();
    case AggKind::Count:
      return num(static_cast<double>(group.size()));
    case AggKind::Concat: {
      std::string joined;
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (i > 0) {
          joined += fn.separator;
        }
        joined += format_value(group[i]);
      }
      return text(std::move(joined));
    }
  }
  throw BuildError("unknown aggregate function");
}

}  // namespace

Table build(const AxisType& column, const AxisType& row, const DataSet& data,
            const CollisionPolicy& policy) {
  if (auto violation = validate_type(column)) {
    throw ModelError("column type: " + *violation);
  }
  if (auto violation = validate_type(row)) {
    throw ModelError("row type: " + *violation);
  }

  Table out;
  out.column_headers = records_of(column);
  out.row_headers = records_of(row);

  // Placement goes address by address in data order. Under the error policy
  // the first address to receive a second value decides the error, so the
  // scan can stop there; the other policies need the full per-address groups.
  std::map<CellAddr, std::vector<Value>, RowMajor> groups;
  for (const auto& item : data) {
    const auto x = position_of(item.record, column);
    const auto y = position_of(item.record, row);
    if (!x || !y) {
      continue;
    }
    const CellAddr addr{*x, *y};
    auto& group = groups[addr];
    if (!group.empty() && std::holds_alternative<ErrorPolicy>(policy)) {
      throw BuildError("ambiguous placement at " + describe_address(addr) + ": " +
                       format_value(group.front()) + " and " + format_value(item.value) +
                       " map to the same cell");
    }
    group.push_back(item.value);
  }

  for (const auto& [addr, group] : groups) {
    if (group.size() == 1) {
      out.place(addr.col, addr.row, group.front());
      continue;
    }
    std::visit(Overload{
                   [](const ErrorPolicy&) {},  // unreachable: scan above threw
                   [](const DropPolicy&) {},
                   [&](const AggregateFn& fn) { out.place(addr.col, addr.row, combine(fn, group)); },
               },
               policy);
  }
  return out;
}

Table build(const TableSpec& spec, const DataSet& data, const CollisionPolicy& policy) {
  return build(spec.column, spec.row, data, policy);
}

Table transpose(const Table& t) {
  Table out;
  out.column_headers = t.row_headers;
  out.row_headers = t.column_headers;
  for (const auto& [addr, value] : t.cells) {
    out.place(addr.row, addr.col, value);
  }
  return out;
}

namespace {

std::vector<std::vector<std::pair<int, Value>>> cells_by_row(const Table& t) {
  std::vector<std::vector<std::pair<int, Value>>> rows(t.height());
  for (const auto& [addr, value] : t.cells) {
    rows[addr.row - 1].emplace_back(addr.col, value);
  }
  return rows;
}

std::vector<std::vector<std::pair<int, Value>>> cells_by_col(const Table& t) {
  std::vector<std::vector<std::pair<int, Value>>> cols(t.width());
  for (const auto& [addr, value] : t.cells) {
    cols[addr.col - 1].emplace_back(addr.row, value);
  }
  return cols;
}

}  // namespace

Table filter_rows(const Table& t, const LanePredicate& keep) {
  const auto rows = cells_by_row(t);
  std::vector<int> new_index(t.height() + 1, 0);
  Table out;
  out.column_headers = t.column_headers;
  for (int y = 1; y <= t.height(); ++y) {
    if (keep(t.row_headers[y - 1], rows[y - 1])) {
      out.row_headers.push_back(t.row_headers[y - 1]);
      new_index[y] = static_cast<int>(out.row_headers.size());
    }
  }
  for (const auto& [addr, value] : t.cells) {
    if (new_index[addr.row] != 0) {
      out.place(addr.col, new_index[addr.row], value);
    }
  }
  return out;
}

Table filter_cols(const Table& t, const LanePredicate& keep) {
  const auto cols = cells_by_col(t);
  std::vector<int> new_index(t.width() + 1, 0);
  Table out;
  out.row_headers = t.row_headers;
  for (int x = 1; x <= t.width(); ++x) {
    if (keep(t.column_headers[x - 1], cols[x - 1])) {
      out.column_headers.push_back(t.column_headers[x - 1]);
      new_index[x] = static_cast<int>(out.column_headers.size());
    }
  }
  for (const auto& [addr, value] : t.cells) {
    if (new_index[addr.col] != 0) {
      out.place(new_index[addr.col], addr.row, value);
    }
  }
  return out;
}

bool lane_empty(const Record&, const std::vector<std::pair<int, Value>>& cells) {
  return cells.empty();
}

bool lane_nonempty(const Record& header, const std::vector<std::pair<int, Value>>& cells) {
  return !lane_empty(header, cells);
}

}  // namespace ttable
