#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvdist/polytope.hpp"

namespace mvdist {

/// Contents of a polytope file: {"dim": n, "vertices": [["p/q", ...], ...]}.
/// Any dimension is accepted here; the exact kernel needs 2 or 3.
struct VertexData {
  std::size_t dim = 0;
  std::vector<Point> vertices;
};

VertexData parse_vertex_json(std::string_view text);
VertexData read_vertex_file(const std::string& path);

std::string to_json(const VertexData& data);
/// Canonical vertex order, compact; byte-stable for equal polytopes.
std::string to_json(const VPolytope& p);

VPolytope read_polytope_file(const std::string& path);
void write_polytope_file(const std::string& path, const VPolytope& p);

}  // namespace mvdist
