#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ttable/io.hpp"

namespace ttable::io {

namespace {

using nlohmann::json;

Value literal_value(const json& j, const std::string& where) {
  if (j.is_string()) {
    return text(j.get<std::string>());
  }
  if (j.is_number()) {
    return num(j.get<double>());
  }
  if (j.is_boolean()) {
    return boolean(j.get<bool>());
  }
  throw IoError("types file: " + where + ": expected a string, number, or boolean literal");
}

class TypeResolver {
 public:
  explicit TypeResolver(const json& doc) {
    if (!doc.is_array()) {
      throw IoError("types file: top level must be an array of type definitions");
    }
    for (const auto& def : doc) {
      if (!def.is_object() || !def.contains("name") || !def["name"].is_string()) {
        throw IoError("types file: every definition needs a string \"name\"");
      }
      const auto name = def["name"].get<std::string>();
      if (!defs_.emplace(name, &def).second) {
        throw IoError("types file: duplicate type definition '" + name + "'");
      }
      order_.push_back(name);
    }
  }

  std::map<std::string, DomainType, std::less<>> resolve_all() {
    std::map<std::string, DomainType, std::less<>> out;
    for (const auto& name : order_) {
      std::set<std::string> visiting;
      out.emplace(name, resolve_named(name, visiting));
    }
    for (const auto& [name, type] : out) {
      if (auto violation = validate_type(type)) {
        throw IoError("types file: type '" + name + "': " + *violation);
      }
    }
    return out;
  }

 private:
  DomainType resolve_named(const std::string& name, std::set<std::string>& visiting) {
    const auto it = defs_.find(name);
    if (it == defs_.end()) {
      throw IoError("types file: unresolved type reference '" + name + "'");
    }
    if (!visiting.insert(name).second) {
      throw IoError("types file: cyclic type reference involving '" + name + "'");
    }
    DomainType type = resolve_def(*it->second, visiting);
    visiting.erase(name);
    return type;
  }

  DomainType resolve_def(const json& def, std::set<std::string>& visiting) {
    if (!def.contains("name") || !def["name"].is_string()) {
      throw IoError("types file: every definition needs a string \"name\"");
    }
    const auto name = def["name"].get<std::string>();
    if (!def.contains("values") || !def["values"].is_array()) {
      throw IoError("types file: type '" + name + "' needs a \"values\" array");
    }
    DomainType type{name, {}};
    for (const auto& entry : def["values"]) {
      if (!entry.is_object()) {
        type.values.push_back(plain(literal_value(entry, "type '" + name + "'")));
        continue;
      }
      if (!entry.contains("value")) {
        throw IoError("types file: type '" + name + "': refined entries need a \"value\"");
      }
      const Value v = literal_value(entry["value"], "type '" + name + "'");
      if (!entry.contains("refine")) {
        type.values.push_back(plain(v));
        continue;
      }
      const json& refinement = entry["refine"];
      if (!refinement.is_object()) {
        throw IoError("types file: type '" + name +
                      "': \"refine\" must be {\"ref\": name} or an inline definition");
      }
      if (refinement.contains("ref")) {
        if (!refinement["ref"].is_string()) {
          throw IoError("types file: type '" + name + "': \"ref\" must be a type name");
        }
        type.values.push_back(
            refined(v, resolve_named(refinement["ref"].get<std::string>(), visiting)));
      } else if (refinement.contains("name")) {
        type.values.push_back(refined(v, resolve_def(refinement, visiting)));
      } else {
        throw IoError("types file: type '" + name +
                      "': \"refine\" must be {\"ref\": name} or an inline definition");
      }
    }
    return type;
  }

  std::map<std::string, const json*> defs_;
  std::vector<std::string> order_;
};

}  // namespace

std::map<std::string, DomainType, std::less<>> parse_types(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("types file: ") + e.what());
  }
  return TypeResolver(doc).resolve_all();
}

std::map<std::string, DomainType, std::less<>> read_types(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open types file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_types(buf.str());
}

}  // namespace ttable::io
