#include "ricciforge/forman.hpp"

#include "ricciforge/error.hpp"
#include "ricciforge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace ricciforge {

namespace {

std::vector<std::size_t> sorted(std::span<const std::size_t> s) {
  std::vector<std::size_t> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> common(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

double forman_curvature(const WeightedCellComplex& c, CellId alpha) {
  const double wa = c.weight(alpha);
  if (!(wa > 0.0)) return 0.0;  // zero-weight vertex: the leading factor vanishes
  const auto up = sorted(c.cofaces(alpha));
  const auto down = sorted(c.faces(alpha));

  double coface_term = 0.0;
  for (std::size_t b : up) coface_term += wa / c.weight({alpha.dim + 1, b});
  double face_term = 0.0;
  for (std::size_t g : down) face_term += c.weight({alpha.dim - 1, g}) / wa;

  double parallel_term = 0.0;
  for (const CellId& a1 : parallel_neighbors(c, alpha)) {
    const double w1 = c.weight(a1);
    const double root = std::sqrt(wa * w1);
    double up_coupling = 0.0;
    for (std::size_t b : common(up, sorted(c.cofaces(a1)))) up_coupling += root / c.weight({alpha.dim + 1, b});
    double down_coupling = 0.0;
    for (std::size_t g : common(down, sorted(c.faces(a1)))) down_coupling += c.weight({alpha.dim - 1, g}) / root;
    parallel_term += std::abs(up_coupling - down_coupling);
  }
  return wa * (coface_term + face_term - parallel_term);
}

double forman_ricci_edge(const WeightedCellComplex& c, std::size_t edge) {
  const double we = c.weight(edge_id(edge));
  const auto [v1, v2] = c.edge_vertices(edge);

  // For each neighbouring edge: coupling through shared 2-cells, through shared vertices.
  struct Coupling {
    std::size_t edge;
    double via_faces = 0.0;
    double via_vertices = 0.0;
    bool shares_face = false;
    bool shares_vertex = false;
  };
  std::vector<Coupling> near;
  auto slot = [&near](std::size_t e) -> Coupling& {
    for (auto& x : near) {
      if (x.edge == e) return x;
    }
    near.push_back({e});
    return near.back();
  };

  double face_sum = 0.0;
  for (std::size_t f : c.cofaces(edge_id(edge))) {
    const double wf = c.weight(face_id(f));
    face_sum += we / wf;
    for (std::size_t other : c.face_edges(f)) {
      if (other == edge) continue;
      Coupling& s = slot(other);
      s.shares_face = true;
      s.via_faces += std::sqrt(we * c.weight(edge_id(other))) / wf;
    }
  }
  const double vertex_sum = (c.weight(vertex_id(v1)) + c.weight(vertex_id(v2))) / we;
  for (std::size_t v : {v1, v2}) {
    const double wv = c.weight(vertex_id(v));
    for (std::size_t other : c.vertex_edges(v)) {
      if (other == edge) continue;
      Coupling& s = slot(other);
      s.shares_vertex = true;
      s.via_vertices += wv / std::sqrt(we * c.weight(edge_id(other)));
    }
  }

  double parallel_sum = 0.0;
  for (const auto& s : near) {
    if (s.shares_face != s.shares_vertex) parallel_sum += std::abs(s.via_faces - s.via_vertices);
  }
  return we * (face_sum + vertex_sum - parallel_sum);
}

namespace {

// Side of a square opposite to `edge`.
std::size_t opposite_side(const WeightedCellComplex& c, std::size_t face, std::size_t edge) {
  const auto edges = c.face_edges(face);
  if (edges.size() != 4) {
    throw Error(ErrorCode::InvalidArgument,
                "face " + std::to_string(face) + " is not a square (" + std::to_string(edges.size()) + " sides)");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (edges[i] == edge) return edges[(i + 2) % 4];
  }
  throw Error(ErrorCode::InvalidArgument, "edge is not on the face");
}

}  // namespace

double forman_ricci_grid2d(const WeightedCellComplex& c, std::size_t edge) {
  const double w0 = c.weight(edge_id(edge));
  double coface = 0.0, coupling = 0.0;
  for (std::size_t f : c.cofaces(edge_id(edge))) {
    const double wc = c.weight(face_id(f));
    const double wi = c.weight(edge_id(opposite_side(c, f, edge)));
    coface += w0 / wc;
    coupling += std::sqrt(w0 * wi) / wc;
  }
  return w0 * (coface - coupling);
}

double forman_ricci_grid3d(const WeightedCellComplex& c, std::size_t edge) {
  const double w0 = c.weight(edge_id(edge));
  double inv = 0.0, coupling = 0.0;
  for (std::size_t f : c.cofaces(edge_id(edge))) {
    const double wc = c.weight(face_id(f));
    inv += 1.0 / wc;
    coupling += std::sqrt(c.weight(edge_id(opposite_side(c, f, edge)))) / wc;
  }
  return w0 * (w0 * inv - std::sqrt(w0) * coupling);
}

double forman_ricci_mesh(const WeightedCellComplex& c, std::size_t edge) {
  const double we = c.weight(edge_id(edge));
  const auto [v1, v2] = c.edge_vertices(edge);
  std::vector<std::size_t> in_triangle;  // edges sharing a triangle with e
  double triangles = 0.0;
  for (std::size_t t : c.cofaces(edge_id(edge))) {
    const auto fe = c.face_edges(t);
    if (fe.size() != 3) throw Error(ErrorCode::NonTriangularFace, "face " + std::to_string(t));
    triangles += we / c.weight(face_id(t));
    in_triangle.insert(in_triangle.end(), fe.begin(), fe.end());
  }
  double endpoints = 0.0, parallel = 0.0;
  for (std::size_t v : {v1, v2}) {
    const double wv = c.weight(vertex_id(v));
    endpoints += wv / we;
    for (std::size_t other : c.vertex_edges(v)) {
      for (std::size_t t : c.cofaces(edge_id(other))) {
        if (c.face_edges(t).size() != 3) throw Error(ErrorCode::NonTriangularFace, "face " + std::to_string(t));
      }
      if (other == edge) continue;
      if (std::find(in_triangle.begin(), in_triangle.end(), other) != in_triangle.end()) continue;
      parallel += wv / std::sqrt(we * c.weight(edge_id(other)));
    }
  }
  return we * (triangles + endpoints - parallel);
}

double forman_ricci_graph(const WeightedCellComplex& c, std::size_t edge) {
  const double we = c.weight(edge_id(edge));
  const auto [v1, v2] = c.edge_vertices(edge);
  double sum = 0.0;
  for (std::size_t v : {v1, v2}) {
    const double wv = c.weight(vertex_id(v));
    sum += wv / we;
    for (std::size_t other : c.vertex_edges(v)) {
      if (other != edge) sum -= wv / std::sqrt(we * c.weight(edge_id(other)));
    }
  }
  return we * sum;
}

std::string_view to_string(FormanVariant v) {
  switch (v) {
    case FormanVariant::General: return "forman";
    case FormanVariant::Edge: return "forman";
    case FormanVariant::Grid2d: return "forman-grid2d";
    case FormanVariant::Grid3d: return "forman-grid3d";
    case FormanVariant::Mesh: return "forman-mesh";
    case FormanVariant::Graph: return "forman-graph";
  }
  return "forman";
}

CurvatureField forman_field(const WeightedCellComplex& c, FormanVariant variant) {
  auto eval = [&](std::size_t e) {
    switch (variant) {
      case FormanVariant::General: return forman_curvature(c, edge_id(e));
      case FormanVariant::Edge: return forman_ricci_edge(c, e);
      case FormanVariant::Grid2d: return forman_ricci_grid2d(c, e);
      case FormanVariant::Grid3d: return forman_ricci_grid3d(c, e);
      case FormanVariant::Mesh: return forman_ricci_mesh(c, e);
      case FormanVariant::Graph: return forman_ricci_graph(c, e);
    }
    return 0.0;
  };
  return make_field(std::string(to_string(variant)), 1, parallel_map(c.num_edges(), eval));
}

}  // namespace ricciforge
