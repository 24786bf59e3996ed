#pragma once

#include <functional>
#include <string>

#include "ttable/model.hpp"

namespace ttable {

using RecordPredicateFn = std::function<bool(const Record&)>;

/// Keeps the items whose record satisfies the predicate, preserving order.
DataSet select_data(const DataSet& data, const RecordPredicateFn& keep);

/// Plain type named `name` holding the distinct values of attribute `name`
/// across the data, in first-appearance order. An attribute present nowhere
/// yields the empty type.
DomainType derive_type(const DataSet& data, const std::string& name);

/// One attributed value per populated cell, emitted row-major; each record is
/// the union of the cell's column and row header records. Throws ModelError
/// when the two headers disagree on a shared type name.
DataSet table_to_data(const Table& table);

}  // namespace ttable
