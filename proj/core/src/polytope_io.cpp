#include "mvdist/polytope_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mvdist/error.hpp"

namespace mvdist {
namespace {

using nlohmann::json;

Scalar coordinate(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump()));
  throw Error(ErrorKind::parse, "coordinates must be integers or \"p/q\" strings, got " + v.dump());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

VertexData parse_vertex_json(std::string_view text) {
  const json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::parse, "malformed JSON");
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices")) {
    throw Error(ErrorKind::parse, "expected an object with \"dim\" and \"vertices\"");
  }
  const json& dim = doc["dim"];
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw Error(ErrorKind::parse, "\"dim\" must be a positive integer");
  VertexData out;
  out.dim = dim.get<std::size_t>();
  const json& vs = doc["vertices"];
  if (!vs.is_array() || vs.empty()) throw Error(ErrorKind::parse, "\"vertices\" must be a nonempty array");
  for (const json& v : vs) {
    if (!v.is_array() || v.size() != out.dim) throw Error(ErrorKind::parse, "vertex of wrong length: " + v.dump());
    Point p(out.dim);
    for (std::size_t i = 0; i < out.dim; ++i) p[i] = coordinate(v[i]);
    out.vertices.push_back(std::move(p));
  }
  return out;
}

VertexData read_vertex_file(const std::string& path) { return parse_vertex_json(slurp(path)); }

std::string to_json(const VertexData& data) {
  json vs = json::array();
  for (const auto& p : data.vertices) {
    json row = json::array();
    for (const auto& c : p) row.push_back(to_string(c));
    vs.push_back(std::move(row));
  }
  json doc;
  doc["dim"] = data.dim;
  doc["vertices"] = std::move(vs);
  return doc.dump();
}

std::string to_json(const VPolytope& p) { return to_json(VertexData{p.dim(), p.vertices()}); }

VPolytope read_polytope_file(const std::string& path) {
  VertexData data = read_vertex_file(path);
  if (data.dim != 2 && data.dim != 3) {
    throw Error(ErrorKind::domain, path + ": exact computations need dimension 2 or 3 (use the estimator)");
  }
  return convex_hull(std::move(data.vertices), data.dim);
}

void write_polytope_file(const std::string& path, const VPolytope& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::config, "cannot write " + path);
  out << to_json(p) << '\n';
}

}  // namespace mvdist
