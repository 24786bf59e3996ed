#pragma once

#include <string>
#include <vector>

#include "ttable/model.hpp"
#include "ttable/type_algebra.hpp"

// The running example used across the suites: quarterly earnings of three
// companies, with one company missing two quarters and one missing all but
// one, so both empty cells and aggregation have something to chew on.

namespace testsupport {

inline ttable::DomainType quarter() {
  return ttable::plain_type("Quarter",
                            {ttable::text("Q1"), ttable::text("Q2"), ttable::text("Q3")});
}

inline ttable::DomainType company() {
  return ttable::plain_type("Company",
                            {ttable::text("CoA"), ttable::text("CoB"), ttable::text("CoC")});
}

inline ttable::Record rec(
    std::initializer_list<std::pair<std::string, ttable::Value>> attrs) {
  ttable::Record r;
  for (const auto& [name, value] : attrs) {
    r.insert(name, value);
  }
  return r;
}

inline ttable::AttributedValue earning(double value, const std::string& co,
                                       const std::string& q) {
  return {ttable::num(value),
          rec({{"Company", ttable::text(co)}, {"Quarter", ttable::text(q)}})};
}

inline ttable::DataSet earnings() {
  return {earning(3.5, "CoA", "Q1"), earning(2.9, "CoA", "Q2"), earning(4.0, "CoA", "Q3"),
          earning(3.2, "CoB", "Q1"), earning(4.3, "CoB", "Q3"), earning(4.9, "CoC", "Q2")};
}

}  // namespace testsupport
