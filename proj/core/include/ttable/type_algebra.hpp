#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ttable/model.hpp"

namespace ttable {

using ValuePredicateFn = std::function<bool(const Value&)>;

/// The record sequence a type denotes: one record per root-to-leaf path, in
/// value order. A plain value yields a single-attribute record; a refined
/// value expands into one record per path of its subtype, prefixed with its
/// own attribute; an empty type denotes no records. Unit denotes the single
/// empty record.
std::vector<Record> records_of(const DomainType& type);
std::vector<Record> records_of(const AxisType& axis);

/// 1-based index of the unique type record subsumed by `record`; nullopt when
/// none is. Uniqueness follows from type validity plus functional records.
/// Every record has position 1 against Unit.
std::optional<int> position_of(const Record& record, const AxisType& axis);
std::optional<int> position_of(const Record& record, const DomainType& type);

/// Keeps the top-level values satisfying the predicate, in order, with their
/// refinements untouched. The predicate sees only top-level value components.
DomainType select_type(const DomainType& type, const ValuePredicateFn& keep);

/// Reverses the top-level value order; refinements travel with their values.
DomainType reverse_type(const DomainType& type);

/// Appends the given values as plain values at the end of the top level.
/// Throws ModelError when a value is already present at the top level.
DomainType extend_type(const DomainType& type, const std::vector<Value>& values);

/// Attaches `refinement` as a whole to every leaf value of `base`: a plain
/// leaf v becomes v[refinement], a refined value recurses into its subtype.
/// Throws ModelError when the operands share a type name, which would break
/// path distinctness. Not commutative.
DomainType refine(const DomainType& base, const DomainType& refinement);

/// Inverse of refine: removes the deepest refinement level of every branch.
/// A refined value whose subtype is plain becomes plain; deeper refinements
/// recurse. Plain types are fixed points.
DomainType coarsen(const DomainType& type);

/// True when no value of the type is refined.
bool is_plain(const DomainType& type);

/// Descriptions of branches refined by an empty type: such branches denote no
/// records and can never receive data. Meant for diagnostics.
std::vector<std::string> empty_refinement_paths(const DomainType& type);
std::vector<std::string> empty_refinement_paths(const AxisType& axis);

}  // namespace ttable
