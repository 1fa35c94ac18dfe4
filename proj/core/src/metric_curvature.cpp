#include "ricciforge/metric_curvature.hpp"

#include "ricciforge/error.hpp"
#include "ricciforge/parallel.hpp"
#include "geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ricciforge {

double menger_curvature(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
    throw Error(ErrorCode::TriangleInequality, "side lengths must be positive");
  }
  const double longest = std::max({a, b, c});
  const double rest = a + b + c - longest;
  if (rest < longest * (1.0 - 1e-12)) {
    throw Error(ErrorCode::TriangleInequality, "sides " + std::to_string(a) + ", " + std::to_string(b) +
                                                   ", " + std::to_string(c));
  }
  return 4.0 * geom::triangle_area(a, b, c) / (a * b * c);
}

double haantjes_path_curvature(double path_length, double chord_length) {
  if (!(chord_length > 0.0)) throw Error(ErrorCode::InvalidArgument, "chord length must be positive");
  if (path_length < chord_length) {
    throw Error(ErrorCode::InvalidArgument, "path (" + std::to_string(path_length) +
                                                ") shorter than chord (" + std::to_string(chord_length) + ")");
  }
  return std::sqrt(24.0 * (path_length - chord_length) /
                   (chord_length * chord_length * chord_length));
}

double haantjes_cell_curvature(const WeightedCellComplex& c, std::size_t face, std::size_t edge,
                               HaantjesForm form) {
  double perimeter = 0.0;
  bool found = false;
  for (std::size_t e : c.face_edges(face)) {
    perimeter += c.weight(edge_id(e));
    found = found || e == edge;
  }
  if (!found) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(edge) + " is not on face " + std::to_string(face));
  }
  const double chord = c.weight(edge_id(edge));
  const double kappa = haantjes_path_curvature(perimeter - chord, chord);
  return form == HaantjesForm::Cell ? 2.0 * std::numbers::pi - kappa : kappa;
}

double ricci_haantjes(const WeightedCellComplex& c, std::size_t edge, HaantjesForm form) {
  double sum = 0.0;
  for (std::size_t f : c.cofaces(edge_id(edge))) sum += haantjes_cell_curvature(c, f, edge, form);
  return sum;
}

namespace {

std::array<double, 3> triangle_sides(const WeightedCellComplex& c, std::size_t face) {
  const auto edges = c.face_edges(face);
  if (edges.size() != 3) {
    throw Error(ErrorCode::NonTriangularFace,
                "face " + std::to_string(face) + " has " + std::to_string(edges.size()) + " sides");
  }
  return {c.weight(edge_id(edges[0])), c.weight(edge_id(edges[1])), c.weight(edge_id(edges[2]))};
}

// Angle at `vertex` inside triangle `face`, plus the triangle area.
std::pair<double, double> corner(const WeightedCellComplex& c, std::size_t face, std::size_t vertex) {
  const auto sides = triangle_sides(c, face);
  const auto cyc = c.face_vertices(face);
  // edge i joins cyc[i] and cyc[i+1]; the side opposite cyc[k] is edge k+1.
  std::size_t k = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (cyc[i] == vertex) k = i;
  }
  if (k == 3) throw Error(ErrorCode::InvalidArgument, "vertex is not on the face");
  const double opposite = sides[(k + 1) % 3];
  const double a = sides[k];
  const double b = sides[(k + 2) % 3];
  const double area = geom::triangle_area(sides[0], sides[1], sides[2]);
  const double longest = std::max({sides[0], sides[1], sides[2]});
  if (area <= 1e-14 * longest * longest) {
    throw Error(ErrorCode::Degenerate, "triangle " + std::to_string(face) + " is degenerate");
  }
  return {geom::angle_from_sides(a, b, opposite), area};
}

std::vector<std::size_t> faces_at_vertex(const WeightedCellComplex& c, std::size_t vertex) {
  std::vector<std::size_t> faces;
  for (std::size_t e : c.vertex_edges(vertex)) {
    for (std::size_t f : c.cofaces(edge_id(e))) faces.push_back(f);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

}  // namespace

double face_menger(const WeightedCellComplex& c, std::size_t face) {
  const auto s = triangle_sides(c, face);
  return menger_curvature(s[0], s[1], s[2]);
}

double ricci_menger(const WeightedCellComplex& c, std::size_t edge) {
  double sum = 0.0;
  for (std::size_t f : c.cofaces(edge_id(edge))) sum += face_menger(c, f);
  return sum;
}

double scal_menger(const WeightedCellComplex& c, std::size_t vertex) {
  double sum = 0.0;
  for (std::size_t f : faces_at_vertex(c, vertex)) sum += face_menger(c, f);
  return sum;
}

double defect_curvature(const WeightedCellComplex& c, std::size_t vertex) {
  double angles = 0.0;
  for (std::size_t f : faces_at_vertex(c, vertex)) angles += corner(c, f, vertex).first;
  return 2.0 * std::numbers::pi - angles;
}

double defect_density(const WeightedCellComplex& c, std::size_t vertex) {
  double angles = 0.0;
  double area = 0.0;
  for (std::size_t f : faces_at_vertex(c, vertex)) {
    const auto [angle, a] = corner(c, f, vertex);
    angles += angle;
    area += a;
  }
  if (area <= 0.0) throw Error(ErrorCode::Degenerate, "vertex " + std::to_string(vertex) + " has no area");
  return (2.0 * std::numbers::pi - angles) / (area / 3.0);
}

DistanceFn chord_metric(const WeightedCellComplex& c) {
  if (!c.has_embedding()) throw Error(ErrorCode::MissingEmbedding, "chord metric needs vertex positions");
  return [c](std::size_t u, std::size_t v) { return geom::distance(c.position(u), c.position(v)); };
}

DistanceFn boundary_path_metric(const WeightedCellComplex& c, std::size_t face) {
  const auto cyc = c.face_vertices(face);
  const auto edges = c.face_edges(face);
  std::vector<std::size_t> vertices(cyc.begin(), cyc.end());
  std::vector<double> prefix{0.0};  // arc length from vertices[0] to vertices[i]
  for (std::size_t e : edges) prefix.push_back(prefix.back() + c.weight(edge_id(e)));
  const double perimeter = prefix.back();
  return [vertices, prefix, perimeter, face](std::size_t u, std::size_t v) {
    auto position = [&](std::size_t x) {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == x) return prefix[i];
      }
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(x) + " is not on face " + std::to_string(face));
    };
    const double d = std::abs(position(u) - position(v));
    return std::min(d, perimeter - d);
  };
}

DistanceFn great_circle_metric(const WeightedCellComplex& c, const Vec3& center, double radius) {
  if (!c.has_embedding()) throw Error(ErrorCode::MissingEmbedding, "great-circle metric needs vertex positions");
  return [c, center, radius](std::size_t u, std::size_t v) {
    const Vec3 a = geom::sub(c.position(u), center);
    const Vec3 b = geom::sub(c.position(v), center);
    const double angle = std::atan2(geom::norm(geom::cross(a, b)), geom::dot(a, b));
    return radius * angle;
  };
}

CurvatureField menger_field(const WeightedCellComplex& c) {
  return make_field("menger", 1, parallel_map(c.num_edges(), [&](std::size_t e) { return ricci_menger(c, e); }));
}

CurvatureField haantjes_field(const WeightedCellComplex& c, HaantjesForm form) {
  auto field = make_field("haantjes", 1,
                          parallel_map(c.num_edges(), [&](std::size_t e) { return ricci_haantjes(c, e, form); }));
  field.metadata["form"] = form == HaantjesForm::Cell ? "cell" : "raw";
  return field;
}

CurvatureField defect_field(const WeightedCellComplex& c) {
  return make_field("defect", 0,
                    parallel_map(c.num_vertices(), [&](std::size_t v) { return defect_curvature(c, v); }));
}

CurvatureField defect_density_field(const WeightedCellComplex& c) {
  return make_field("defect-density", 0,
                    parallel_map(c.num_vertices(), [&](std::size_t v) { return defect_density(c, v); }));
}

}  // namespace ricciforge
