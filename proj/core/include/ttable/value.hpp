#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ttable {

/// A scalar datum: number, text, or boolean. The same representation carries
/// cell contents, domain-type values, and record attribute values.
///
/// Equality is exact per alternative: the text "3.5" never equals the number
/// 3.5. The alternative order fixes the cross-kind ordering number < text <
/// boolean, which exists only to make output deterministic.
using Value = std::variant<double, std::string, bool>;

inline Value num(double v) { return Value{v}; }
inline Value text(std::string v) { return Value{std::move(v)}; }
inline Value boolean(bool v) { return Value{v}; }

inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_text(const Value& v) { return std::holds_alternative<std::string>(v); }
inline bool is_boolean(const Value& v) { return std::holds_alternative<bool>(v); }

/// Renders a value for output: numbers in shortest round-trip form without
/// trailing zeros and with `.` as the decimal separator regardless of locale,
/// booleans as true/false, text verbatim.
std::string format_value(const Value& v);

/// Parses a finite decimal number; the whole input must be consumed.
/// Returns nullopt for anything else (including inf/nan spellings).
std::optional<double> parse_number(std::string_view s);

}  // namespace ttable
