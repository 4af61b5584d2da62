#include <fstream>
#include <sstream>

#include <json.hpp>

#include "itdist/errors.hpp"
#include "itdist/globular.hpp"

namespace itdist {

namespace {

using json = nlohmann::json;
using NameMap = std::vector<std::pair<std::string, std::string>>;

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<NameMap> read_maps(const json& doc, const char* name, std::size_t n) {
  const json& maps = field(doc, name);
  if (!maps.is_array() || maps.size() != n) {
    throw FormatError(std::string("'") + name + "' must be an array of " + std::to_string(n) +
                      " objects");
  }
  std::vector<NameMap> out;
  for (std::size_t d = 0; d < n; ++d) {
    if (!maps[d].is_object()) {
      throw FormatError(std::string("'") + name + "'[" + std::to_string(d) +
                        "] must map cell names to cell names");
    }
    NameMap entries;
    for (const auto& [from, to] : maps[d].items()) {
      if (!to.is_string()) {
        throw FormatError(std::string(name) + "('" + from + "') must be a cell name");
      }
      entries.emplace_back(from, to.get<std::string>());
    }
    out.push_back(std::move(entries));
  }
  return out;
}

}  // namespace

GlobularSet parse_globular(std::string_view json_text, bool require_globular) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed globular set: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("globular set must be a JSON object");
  const json& n_field = field(doc, "n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 0) {
    throw FormatError("'n' must be a non-negative integer");
  }
  auto n = static_cast<std::size_t>(n_field.get<long long>());

  const json& cells_field = field(doc, "cells");
  if (!cells_field.is_array() || cells_field.size() != n + 1) {
    throw FormatError("'cells' must be an array of " + std::to_string(n + 1) + " name lists");
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t d = 0; d <= n; ++d) {
    if (!cells_field[d].is_array()) {
      throw FormatError("'cells'[" + std::to_string(d) + "] must be an array of names");
    }
    std::vector<std::string> names;
    for (const json& name : cells_field[d]) {
      if (!name.is_string()) {
        throw FormatError("'cells'[" + std::to_string(d) + "] holds a non-string entry");
      }
      names.push_back(name.get<std::string>());
    }
    cells.push_back(std::move(names));
  }

  GlobularSet g = make_globular(n, std::move(cells), read_maps(doc, "src", n),
                                read_maps(doc, "tgt", n));
  if (require_globular) {
    CheckReport report = validate_globular(g);
    if (!report.passed()) {
      const Witness& w = report.witnesses().front();
      throw GlobularityError("cell '" + w.input + "' violates " + w.diagram + " (" + w.left +
                             " vs " + w.right + ")");
    }
  }
  return g;
}

GlobularSet load_globular(const std::filesystem::path& path, bool require_globular) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_globular(text.str(), require_globular);
}

}  // namespace itdist
