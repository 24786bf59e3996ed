#include "ttable/value.hpp"

#include <charconv>
#include <cmath>

#include "overload.hpp"

namespace ttable {

std::string format_value(const Value& v) {
  return std::visit(Overload{
                        [](double d) {
                          char buf[32];
                          auto res = std::to_chars(buf, buf + sizeof(buf), d);
                          return std::string(buf, res.ptr);
                        },
                        [](const std::string& s) { return s; },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                    },
                    v);
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) {
    return std::nullopt;
  }
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(out)) {
    return std::nullopt;
  }
  return out;
}

}  // namespace ttable
