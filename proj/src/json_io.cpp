#include "qrf/json_io.hpp"

#include <fstream>

namespace qrf {

Json matrix_to_json(const Operator& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ConfigError("matrix must be a non-empty array of rows");
  const auto rows = j.size();
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ConfigError("matrix rows must be non-empty arrays");
  Operator m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ConfigError("matrix row " + std::to_string(i) + " has ragged length");
    for (size_t k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ConfigError("matrix entries must be [re, im] pairs");
      m(i, k) = Cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

GroupSpecFile parse_group_spec(const Json& j) {
  if (!j.is_object()) throw ConfigError("group spec must be a JSON object");
  if (!j.contains("symbols") || !j["symbols"].is_number_integer())
    throw ConfigError("group spec needs an integer \"symbols\" field");
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    throw ConfigError("group spec needs a non-empty \"generators\" array");

  GroupSpecFile spec;
  spec.symbols = j["symbols"].get<int>();
  if (spec.symbols <= 0) throw ConfigError("\"symbols\" must be positive");
  for (const Json& gen : j["generators"]) {
    if (!gen.is_array())
      throw ConfigError("each generator must be an image array");
    Perm p;
    p.reserve(gen.size());
    for (const Json& v : gen) {
      if (!v.is_number_integer())
        throw ConfigError("generator entries must be integers");
      p.push_back(v.get<int>());
    }
    if (static_cast<int>(p.size()) != spec.symbols)
      throw ConfigError("generator length " + std::to_string(p.size()) +
                        " does not match \"symbols\" = " +
                        std::to_string(spec.symbols));
    spec.generators.push_back(std::move(p));
  }
  return spec;
}

Json group_to_json(const BuiltGroup& built, int symbols) {
  const int n = built.group->order();
  Json j;
  j["schema"] = "qrf-group/1";
  j["symbols"] = symbols;
  j["order"] = n;
  j["generator_indices"] = built.group->generator_indices();
  Json cayley = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(built.group->mul(a, b));
    cayley.push_back(std::move(row));
  }
  j["cayley"] = std::move(cayley);
  Json inverse = Json::array();
  for (int a = 0; a < n; ++a) inverse.push_back(built.group->inv(a));
  j["inverse"] = std::move(inverse);
  Json action = Json::array();
  for (int g = 0; g < n; ++g) {
    Json row = Json::array();
    for (int x = 0; x < symbols; ++x) row.push_back(built.defining_action.apply(g, x));
    action.push_back(std::move(row));
  }
  j["action"] = std::move(action);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qrf
