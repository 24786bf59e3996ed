#include "ttable/data_algebra.hpp"

#include <algorithm>

namespace ttable {

DataSet select_data(const DataSet& data, const RecordPredicateFn& keep) {
  DataSet out;
  std::copy_if(data.begin(), data.end(), std::back_inserter(out),
               [&](const AttributedValue& item) { return keep(item.record); });
  return out;
}

DomainType derive_type(const DataSet& data, const std::string& name) {
  DomainType out{name, {}};
  for (const auto& item : data) {
    const Value* v = item.record.find(name);
    if (v == nullptr) {
      continue;
    }
    const bool seen = std::any_of(out.values.begin(), out.values.end(),
                                  [&](const RefinedValue& rv) { return rv.value == *v; });
    if (!seen) {
      out.values.push_back(plain(*v));
    }
  }
  return out;
}

DataSet table_to_data(const Table& t) {
  DataSet out;
  for (const auto& [addr, value] : t.cells) {
    const Record& col = t.column_headers[addr.col - 1];
    const Record& row = t.row_headers[addr.row - 1];
    auto merged = merge_records(col, row);
    if (!merged) {
      throw ModelError("cell (" + std::to_string(addr.col) + "," + std::to_string(addr.row) +
                       "): column and row headers disagree on a shared attribute");
    }
    out.push_back({value, std::move(*merged)});
  }
  return out;
}

}  // namespace ttable
