#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

using Json = nlohmann::ordered_json;

/// Matrices are encoded as nested arrays of [re, im] pairs.
Json matrix_to_json(const Operator& m);
Operator matrix_from_json(const Json& j);

struct GroupSpecFile {
  int symbols = 0;
  std::vector<Perm> generators;
};

/// Group spec: { "symbols": m, "generators": [[image array], ...] }.
GroupSpecFile parse_group_spec(const Json& j);

/// Built-group description: Cayley table, inverses and the defining action,
/// under schema "qrf-group/1". Element order follows the closure contract.
Json group_to_json(const BuiltGroup& built, int symbols);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qrf
