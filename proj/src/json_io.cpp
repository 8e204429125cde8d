#include "glat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace glat {

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Int& x = m.at(i, j);
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(long(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError(field, "expected an integer entry in field '" + field + "'");
}

}  // namespace

IntMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError(field, "expected a matrix (array of rows) in field '" + field + "'");
  int rows = int(j.size());
  int cols = int(j[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != cols)
      throw ParseError(field, "ragged rows in field '" + field + "'");
    for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c], field);
  }
  return m;
}

std::variant<MatrixGroup, PermGroupSpec> group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
    throw ParseError("format", "missing string field 'format'");
  std::string fmt = j["format"].get<std::string>();
  std::string name = j.value("name", std::string());
  if (fmt == "glattice-group.v1") {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      throw ParseError("rank", "missing integer field 'rank'");
    int rank = j["rank"].get<int>();
    if (rank < 0) throw ParseError("rank", "'rank' must be nonnegative");
    if (!j.contains("generators") || !j["generators"].is_array())
      throw ParseError("generators", "missing array field 'generators'");
    std::vector<IntMatrix> gens;
    for (const auto& gj : j["generators"]) {
      IntMatrix m = matrix_from_json(gj, "generators");
      if (m.rows() != rank || m.cols() != rank)
        throw ParseError("generators", "generator shape does not match 'rank'");
      gens.push_back(std::move(m));
    }
    try {
      return MatrixGroup(rank, std::move(gens), name);
    } catch (const NonUnimodularGenerator&) {
      throw ParseError("generators", "a generator has determinant other than +-1");
    }
  }
  if (fmt == "perm-group.v1") {
    if (!j.contains("degree") || !j["degree"].is_number_integer())
      throw ParseError("degree", "missing integer field 'degree'");
    PermGroupSpec s;
    s.name = name;
    s.degree = j["degree"].get<int>();
    if (!j.contains("generators") || !j["generators"].is_array())
      throw ParseError("generators", "missing array field 'generators'");
    for (const auto& gj : j["generators"]) {
      if (!gj.is_array()) throw ParseError("generators", "generator must be an image list");
      std::vector<int> img;
      for (const auto& v : gj) {
        if (!v.is_number_integer())
          throw ParseError("generators", "image lists hold 1-indexed integers");
        img.push_back(v.get<int>());
      }
      s.generators.push_back(std::move(img));
    }
    return s;
  }
  throw ParseError("format", "unknown format tag '" + fmt + "'");
}

json group_to_json(const MatrixGroup& g) {
  json j;
  j["format"] = "glattice-group.v1";
  if (!g.name().empty()) j["name"] = g.name();
  j["rank"] = g.rank();
  json gens = json::array();
  for (const auto& m : g.gens()) gens.push_back(matrix_to_json(m));
  j["generators"] = std::move(gens);
  return j;
}

json perm_spec_to_json(const PermGroupSpec& s) {
  json j;
  j["format"] = "perm-group.v1";
  if (!s.name.empty()) j["name"] = s.name;
  j["degree"] = s.degree;
  j["generators"] = s.generators;
  return j;
}

std::string digest(const json& j) {
  std::string s = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("file", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("file", std::string("JSON parse failure: ") + e.what());
  }
  return j;
}

}  // namespace

std::variant<MatrixGroup, PermGroupSpec> read_group_file(const std::string& path) {
  return group_from_json(parse_file(path));
}

IntMatrix read_matrix_file(const std::string& path) {
  json j = parse_file(path);
  if (j.is_object() && j.contains("matrix"))
    return matrix_from_json(j["matrix"], "matrix");
  return matrix_from_json(j, "matrix");
}

}  // namespace glat
