#include "ttable/type_algebra.hpp"

#include <algorithm>
#include <set>

#include "overload.hpp"

namespace ttable {

std::vector<Record> records_of(const DomainType& type) {
  std::vector<Record> out;
  for (const auto& rv : type.values) {
    if (!rv.refinement) {
      Record r;
      r.insert(type.name, rv.value);
      out.push_back(std::move(r));
      continue;
    }
    // A refined value contributes one record per path of its subtype; an
    // empty subtype therefore contributes nothing.
    for (const Record& sub : records_of(*rv.refinement)) {
      Record r;
      r.insert(type.name, rv.value);
      for (const auto& [name, value] : sub) {
        r.insert(name, value);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Record> records_of(const AxisType& axis) {
  return std::visit(Overload{
                        [](const UnitType&) { return std::vector<Record>{Record{}}; },
                        [](const DomainType& t) { return records_of(t); },
                    },
                    axis);
}

std::optional<int> position_of(const Record& record, const AxisType& axis) {
  if (std::holds_alternative<UnitType>(axis)) {
    return 1;
  }
  return position_of(record, std::get<DomainType>(axis));
}

std::optional<int> position_of(const Record& record, const DomainType& type) {
  const auto records = records_of(type);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (record.subsumes(records[i])) {
      return static_cast<int>(i) + 1;
    }
  }
  return std::nullopt;
}

DomainType select_type(const DomainType& type, const ValuePredicateFn& keep) {
  DomainType out{type.name, {}};
  for (const auto& rv : type.values) {
    if (keep(rv.value)) {
      out.values.push_back(rv);
    }
  }
  return out;
}

DomainType reverse_type(const DomainType& type) {
  DomainType out{type.name, {type.values.rbegin(), type.values.rend()}};
  return out;
}

DomainType extend_type(const DomainType& type, const std::vector<Value>& values) {
  DomainType out = type;
  for (const auto& v : values) {
    const bool taken = std::any_of(out.values.begin(), out.values.end(),
                                   [&](const RefinedValue& rv) { return rv.value == v; });
    if (taken) {
      throw ModelError("extend: value " + format_value(v) +
                       " is already at the top level of type " + type.name);
    }
    out.values.push_back(plain(v));
  }
  return out;
}

namespace {

void collect_names(const DomainType& type, std::set<std::string>& out) {
  out.insert(type.name);
  for (const auto& rv : type.values) {
    if (rv.refinement) {
      collect_names(*rv.refinement, out);
    }
  }
}

DomainType refine_unchecked(const DomainType& base, const DomainType& refinement) {
  DomainType out{base.name, {}};
  for (const auto& rv : base.values) {
    if (rv.refinement) {
      out.values.push_back(refined(rv.value, refine_unchecked(*rv.refinement, refinement)));
    } else {
      out.values.push_back(refined(rv.value, refinement));
    }
  }
  return out;
}

}  // namespace

DomainType refine(const DomainType& base, const DomainType& refinement) {
  std::set<std::string> base_names;
  std::set<std::string> refinement_names;
  collect_names(base, base_names);
  collect_names(refinement, refinement_names);
  for (const auto& name : refinement_names) {
    if (base_names.count(name) != 0) {
      throw ModelError("refine: type name " + name + " occurs in both operands");
    }
  }
  return refine_unchecked(base, refinement);
}

bool is_plain(const DomainType& type) {
  return std::none_of(type.values.begin(), type.values.end(),
                      [](const RefinedValue& rv) { return rv.refinement.has_value(); });
}

DomainType coarsen(const DomainType& type) {
  DomainType out{type.name, {}};
  for (const auto& rv : type.values) {
    if (!rv.refinement || is_plain(*rv.refinement)) {
      out.values.push_back(plain(rv.value));
    } else {
      out.values.push_back(refined(rv.value, coarsen(*rv.refinement)));
    }
  }
  return out;
}

namespace {

void scan_empty_refinements(const DomainType& type, const std::string& prefix,
                            std::vector<std::string>& out) {
  for (const auto& rv : type.values) {
    if (!rv.refinement) {
      continue;
    }
    const std::string here = prefix + "." + format_value(rv.value);
    if (rv.refinement->values.empty()) {
      out.push_back("value " + here + " is refined by the empty type '" +
                    rv.refinement->name + "' and can never hold data");
    } else {
      scan_empty_refinements(*rv.refinement, here, out);
    }
  }
}

}  // namespace

std::vector<std::string> empty_refinement_paths(const DomainType& type) {
  std::vector<std::string> out;
  scan_empty_refinements(type, type.name, out);
  return out;
}

std::vector<std::string> empty_refinement_paths(const AxisType& axis) {
  if (const auto* type = std::get_if<DomainType>(&axis)) {
    return empty_refinement_paths(*type);
  }
  return {};
}

}  // namespace ttable
