#include "ricciforge/complex.hpp"

#include "ricciforge/error.hpp"
#include "ricciforge/parallel.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace ricciforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingFace: return "DanglingFace";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::MalformedCell: return "MalformedCell";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::MissingEmbedding: return "MissingEmbedding";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::TriangleInequality: return "TriangleInequality";
    case ErrorCode::NonTriangularFace: return "NonTriangularFace";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

struct WeightedCellComplex::Topology {
  // faces[p][i]: indices of (p-1)-cells bounding p-cell i; cofaces[p][i]: (p+1)-cells containing it.
  std::array<std::vector<std::vector<std::size_t>>, kMaxCellDimension + 1> faces;
  std::array<std::vector<std::vector<std::size_t>>, kMaxCellDimension + 1> cofaces;
  std::vector<std::vector<std::size_t>> face_cycle;  // vertex cycle per 2-cell
};

namespace {

void check_weight(int dim, std::size_t index, double w) {
  const bool ok = std::isfinite(w) && (dim == 0 ? w >= 0.0 : w > 0.0);
  if (!ok) {
    throw Error(ErrorCode::InvalidWeight, "cell (" + std::to_string(dim) + ", " +
                                              std::to_string(index) + ") has weight " +
                                              std::to_string(w));
  }
}

// Orders the edges of a 2-cell into a cycle; returns (edges, vertices) aligned so
// that edges[i] joins vertices[i] and vertices[i+1].
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> order_cycle(
    std::size_t face, const std::vector<std::size_t>& edges,
    const std::vector<std::vector<std::size_t>>& edge_vertices) {
  auto malformed = [face](const std::string& why) {
    return Error(ErrorCode::MalformedCell, "2-cell " + std::to_string(face) + " " + why);
  };
  if (edges.size() < 2) throw malformed("needs at least two boundary edges");
  {
    std::vector<std::size_t> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw malformed("repeats a boundary edge");
    }
  }
  std::vector<std::pair<std::size_t, int>> degree;  // small: linear scans are fine
  auto bump = [&degree](std::size_t v) {
    for (auto& [u, d] : degree) {
      if (u == v) {
        ++d;
        return;
      }
    }
    degree.emplace_back(v, 1);
  };
  for (std::size_t e : edges) {
    bump(edge_vertices[e][0]);
    bump(edge_vertices[e][1]);
  }
  for (const auto& [v, d] : degree) {
    if (d != 2) throw malformed("boundary is not a closed cycle at vertex " + std::to_string(v));
  }

  // Follow the input direction: start at the end of edges[0] not shared with edges[1].
  std::size_t start = edge_vertices[edges[0]][0];
  std::size_t current = edge_vertices[edges[0]][1];
  if (edges.size() > 2) {
    const auto& second = edge_vertices[edges[1]];
    if (start == second[0] || start == second[1]) std::swap(start, current);
  }
  std::vector<std::size_t> cyc_edges{edges[0]};
  std::vector<std::size_t> cyc_vertices{start};
  std::vector<bool> used(edges.size(), false);
  used[0] = true;
  while (current != cyc_vertices.front()) {
    bool advanced = false;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (used[k]) continue;
      const auto& ev = edge_vertices[edges[k]];
      if (ev[0] != current && ev[1] != current) continue;
      used[k] = true;
      cyc_vertices.push_back(current);
      cyc_edges.push_back(edges[k]);
      current = ev[0] == current ? ev[1] : ev[0];
      advanced = true;
      break;
    }
    if (!advanced) throw malformed("boundary walk got stuck");
  }
  if (cyc_edges.size() != edges.size()) throw malformed("boundary has more than one cycle");
  return {std::move(cyc_edges), std::move(cyc_vertices)};
}

}  // namespace

WeightedCellComplex::WeightedCellComplex()
    : topo_(std::make_shared<Topology>()), weights_(kMaxCellDimension + 1) {}

WeightedCellComplex build_complex(const ComplexDescription& description) {
  const auto& cells = description.cells;
  if (cells.size() > static_cast<std::size_t>(kMaxCellDimension) + 1) {
    for (std::size_t p = kMaxCellDimension + 1; p < cells.size(); ++p) {
      if (!cells[p].empty()) {
        throw Error(ErrorCode::DimensionTooHigh,
                    "cells of dimension " + std::to_string(p) + " are not supported");
      }
    }
  }

  auto topo = std::make_shared<WeightedCellComplex::Topology>();
  WeightedCellComplex out;
  const std::size_t levels = std::min<std::size_t>(cells.size(), kMaxCellDimension + 1);

  for (std::size_t p = 0; p < levels; ++p) {
    const int dim = static_cast<int>(p);
    const std::size_t lower = p == 0 ? 0 : cells[p - 1].size();
    auto& faces = topo->faces[p];
    auto& weights = out.weights_[p];
    faces.reserve(cells[p].size());
    weights.reserve(cells[p].size());
    for (std::size_t i = 0; i < cells[p].size(); ++i) {
      const CellSpec& spec = cells[p][i];
      check_weight(dim, i, spec.weight);
      if (p == 0 && !spec.faces.empty()) {
        throw Error(ErrorCode::MalformedCell, "vertex " + std::to_string(i) + " lists faces");
      }
      for (std::size_t f : spec.faces) {
        if (f >= lower) {
          throw Error(ErrorCode::DanglingFace, "cell (" + std::to_string(p) + ", " +
                                                   std::to_string(i) + ") references missing (" +
                                                   std::to_string(p - 1) + ", " +
                                                   std::to_string(f) + ")");
        }
      }
      if (p == 1 && (spec.faces.size() != 2 || spec.faces[0] == spec.faces[1])) {
        throw Error(ErrorCode::MalformedEdge,
                    "edge " + std::to_string(i) + " must have exactly two distinct vertices");
      }
      faces.push_back(spec.faces);
      weights.push_back(spec.weight);
    }
  }

  if (levels > 2) {
    topo->face_cycle.reserve(topo->faces[2].size());
    for (std::size_t f = 0; f < topo->faces[2].size(); ++f) {
      auto [edges, vertices] = order_cycle(f, topo->faces[2][f], topo->faces[1]);
      topo->faces[2][f] = std::move(edges);
      topo->face_cycle.push_back(std::move(vertices));
    }
  }
  if (levels > 3) {
    for (std::size_t s = 0; s < topo->faces[3].size(); ++s) {
      std::vector<std::size_t> sorted = topo->faces[3][s];
      std::sort(sorted.begin(), sorted.end());
      if (sorted.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::MalformedCell, "3-cell " + std::to_string(s) + " has repeated or too few faces");
      }
      std::vector<std::pair<std::size_t, int>> edge_use;
      for (std::size_t f : sorted) {
        for (std::size_t e : topo->faces[2][f]) {
          auto it = std::find_if(edge_use.begin(), edge_use.end(),
                                 [e](const auto& x) { return x.first == e; });
          if (it == edge_use.end()) {
            edge_use.emplace_back(e, 1);
          } else {
            ++it->second;
          }
        }
      }
      for (const auto& [e, n] : edge_use) {
        if (n != 2) {
          throw Error(ErrorCode::MalformedCell, "3-cell " + std::to_string(s) +
                                                    " boundary is not closed at edge " + std::to_string(e));
        }
      }
    }
  }

  for (std::size_t p = 0; p < levels; ++p) {
    topo->cofaces[p].assign(topo->faces[p].size(), {});
  }
  for (std::size_t p = 1; p < levels; ++p) {
    for (std::size_t i = 0; i < topo->faces[p].size(); ++i) {
      for (std::size_t f : topo->faces[p][i]) topo->cofaces[p - 1][f].push_back(i);
    }
  }

  if (description.positions) {
    if (description.positions->size() != topo->faces[0].size()) {
      throw Error(ErrorCode::InvalidArgument, "positions size does not match vertex count");
    }
    out.positions_ = std::make_shared<const std::vector<Vec3>>(*description.positions);
  }
  out.topo_ = std::move(topo);
  return out;
}

int WeightedCellComplex::dimension() const {
  for (int p = kMaxCellDimension; p >= 0; --p) {
    if (num_cells(p) > 0) return p;
  }
  return -1;
}

std::size_t WeightedCellComplex::num_cells(int dim) const {
  if (dim < 0 || dim > kMaxCellDimension) return 0;
  return topo_->faces[static_cast<std::size_t>(dim)].size();
}

bool WeightedCellComplex::contains(CellId id) const {
  return id.dim >= 0 && id.dim <= kMaxCellDimension && id.index < num_cells(id.dim);
}

namespace {
void require(const WeightedCellComplex& c, CellId id) {
  if (!c.contains(id)) {
    throw Error(ErrorCode::UnknownCell,
                "(" + std::to_string(id.dim) + ", " + std::to_string(id.index) + ")");
  }
}
}  // namespace

std::span<const std::size_t> WeightedCellComplex::faces(CellId id) const {
  require(*this, id);
  return topo_->faces[static_cast<std::size_t>(id.dim)][id.index];
}

std::span<const std::size_t> WeightedCellComplex::cofaces(CellId id) const {
  require(*this, id);
  return topo_->cofaces[static_cast<std::size_t>(id.dim)][id.index];
}

double WeightedCellComplex::weight(CellId id) const {
  require(*this, id);
  return weights_[static_cast<std::size_t>(id.dim)][id.index];
}

std::span<const double> WeightedCellComplex::weights(int dim) const {
  if (dim < 0 || dim > kMaxCellDimension) return {};
  return weights_[static_cast<std::size_t>(dim)];
}

std::array<std::size_t, 2> WeightedCellComplex::edge_vertices(std::size_t edge) const {
  const auto f = faces(edge_id(edge));
  return {f[0], f[1]};
}

std::size_t WeightedCellComplex::other_vertex(std::size_t edge, std::size_t vertex) const {
  const auto [a, b] = edge_vertices(edge);
  if (a == vertex) return b;
  if (b == vertex) return a;
  throw Error(ErrorCode::InvalidArgument,
              "vertex " + std::to_string(vertex) + " is not on edge " + std::to_string(edge));
}

std::span<const std::size_t> WeightedCellComplex::face_edges(std::size_t face) const {
  return faces(face_id(face));
}

std::span<const std::size_t> WeightedCellComplex::face_vertices(std::size_t face) const {
  require(*this, face_id(face));
  return topo_->face_cycle[face];
}

std::span<const std::size_t> WeightedCellComplex::vertex_edges(std::size_t vertex) const {
  return cofaces(vertex_id(vertex));
}

std::vector<std::size_t> WeightedCellComplex::cell_vertices(CellId id) const {
  require(*this, id);
  std::vector<std::size_t> current{id.index};
  for (int d = id.dim; d > 0; --d) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      const auto f = topo_->faces[static_cast<std::size_t>(d)][i];
      next.insert(next.end(), f.begin(), f.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return current;
}

std::optional<std::size_t> WeightedCellComplex::find_edge(std::size_t u, std::size_t v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  for (std::size_t e : vertex_edges(u)) {
    if (other_vertex(e, u) == v) return e;
  }
  return std::nullopt;
}

std::span<const Vec3> WeightedCellComplex::positions() const {
  if (!positions_) throw Error(ErrorCode::MissingEmbedding, "complex has no vertex positions");
  return *positions_;
}

const Vec3& WeightedCellComplex::position(std::size_t vertex) const {
  const auto p = positions();
  if (vertex >= p.size()) throw Error(ErrorCode::UnknownCell, "vertex " + std::to_string(vertex));
  return p[vertex];
}

WeightedCellComplex WeightedCellComplex::with_weights(int dim, std::vector<double> weights) const {
  if (dim < 0 || dim > kMaxCellDimension || weights.size() != num_cells(dim)) {
    throw Error(ErrorCode::InvalidArgument, "weight vector does not match the cell count");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) check_weight(dim, i, weights[i]);
  WeightedCellComplex out = *this;
  out.weights_[static_cast<std::size_t>(dim)] = std::move(weights);
  return out;
}

WeightedCellComplex WeightedCellComplex::with_unit_weights() const {
  WeightedCellComplex out = *this;
  for (auto& level : out.weights_) std::fill(level.begin(), level.end(), 1.0);
  return out;
}

WeightedCellComplex WeightedCellComplex::with_positions(std::vector<Vec3> positions) const {
  if (positions.size() != num_vertices()) {
    throw Error(ErrorCode::InvalidArgument, "positions size does not match vertex count");
  }
  WeightedCellComplex out = *this;
  out.positions_ = std::make_shared<const std::vector<Vec3>>(std::move(positions));
  return out;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

std::vector<CellSpec>& ComplexBuilder::level(int dim) {
  if (desc_.cells.size() <= static_cast<std::size_t>(dim)) desc_.cells.resize(static_cast<std::size_t>(dim) + 1);
  return desc_.cells[static_cast<std::size_t>(dim)];
}

std::size_t ComplexBuilder::add_vertex(double weight) {
  auto& v = level(0);
  v.push_back({{}, weight});
  positions_.push_back({0.0, 0.0, 0.0});
  vertex_edges_.emplace_back();
  return v.size() - 1;
}

std::size_t ComplexBuilder::add_vertex(const Vec3& position, double weight) {
  const std::size_t id = add_vertex(weight);
  positions_[id] = position;
  any_position_ = true;
  return id;
}

ComplexDescription ComplexBuilder::description() const {
  ComplexDescription d = desc_;
  if (any_position_) d.positions = positions_;
  return d;
}

std::size_t ComplexBuilder::add_edge(std::size_t u, std::size_t v, double weight) {
  auto& e = level(1);
  e.push_back({{u, v}, weight});
  const std::size_t id = e.size() - 1;
  if (u < vertex_edges_.size()) vertex_edges_[u].emplace_back(v, id);
  if (v < vertex_edges_.size() && v != u) vertex_edges_[v].emplace_back(u, id);
  return id;
}

std::size_t ComplexBuilder::edge_between(std::size_t u, std::size_t v, double weight) {
  if (u < vertex_edges_.size()) {
    for (const auto& [w, e] : vertex_edges_[u]) {
      if (w == v) return e;
    }
  }
  return add_edge(u, v, weight);
}

std::size_t ComplexBuilder::add_face(std::vector<std::size_t> edges, double weight) {
  auto& f = level(2);
  f.push_back({std::move(edges), weight});
  return f.size() - 1;
}

std::size_t ComplexBuilder::add_face_by_vertices(std::span<const std::size_t> cycle, double weight,
                                                 double edge_weight) {
  std::vector<std::size_t> edges;
  edges.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.push_back(edge_between(cycle[i], cycle[(i + 1) % cycle.size()], edge_weight));
  }
  return add_face(std::move(edges), weight);
}

std::size_t ComplexBuilder::add_solid(std::vector<std::size_t> faces, double weight) {
  auto& s = level(3);
  s.push_back({std::move(faces), weight});
  return s.size() - 1;
}

// ---------------------------------------------------------------------------
// Queries

ValidationReport inspect(const WeightedCellComplex& c) {
  ValidationReport r;
  for (int p = 0; p <= kMaxCellDimension; ++p) r.counts[static_cast<std::size_t>(p)] = c.num_cells(p);
  r.euler_characteristic = euler_characteristic(c);
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const std::size_t n = c.cofaces(edge_id(e)).size();
    if (n == 1) ++r.boundary_edges;
    if (n >= 3) ++r.nonmanifold_edges;
  }
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    if (c.vertex_edges(v).empty()) ++r.isolated_vertices;
  }
  r.all_faces_triangles = c.num_faces() > 0;
  r.all_faces_quads = c.num_faces() > 0;
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const std::size_t k = c.face_edges(f).size();
    r.all_faces_triangles = r.all_faces_triangles && k == 3;
    r.all_faces_quads = r.all_faces_quads && k == 4;
  }
  r.closed_surface = c.num_faces() > 0 && c.num_cells(3) == 0 && r.boundary_edges == 0 &&
                     r.nonmanifold_edges == 0;
  if (r.closed_surface) {
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
      if (c.cofaces(edge_id(e)).size() != 2) r.closed_surface = false;
    }
  }
  return r;
}

std::vector<CellId> parallel_neighbors(const WeightedCellComplex& c, CellId alpha) {
  if (!c.contains(alpha)) {
    throw Error(ErrorCode::UnknownCell,
                "(" + std::to_string(alpha.dim) + ", " + std::to_string(alpha.index) + ")");
  }
  std::set<std::size_t> via_coface;
  std::set<std::size_t> via_face;
  for (std::size_t beta : c.cofaces(alpha)) {
    for (std::size_t other : c.faces({alpha.dim + 1, beta})) {
      if (other != alpha.index) via_coface.insert(other);
    }
  }
  if (alpha.dim > 0) {
    for (std::size_t gamma : c.faces(alpha)) {
      for (std::size_t other : c.cofaces({alpha.dim - 1, gamma})) {
        if (other != alpha.index) via_face.insert(other);
      }
    }
  }
  std::vector<std::size_t> xor_set;
  std::set_symmetric_difference(via_coface.begin(), via_coface.end(), via_face.begin(), via_face.end(),
                                std::back_inserter(xor_set));
  std::vector<CellId> out;
  out.reserve(xor_set.size());
  for (std::size_t i : xor_set) out.push_back({alpha.dim, i});
  return out;
}

long euler_characteristic(const WeightedCellComplex& c) {
  long chi = 0;
  for (int p = 0; p <= kMaxCellDimension; ++p) {
    const long n = static_cast<long>(c.num_cells(p));
    chi += (p % 2 == 0) ? n : -n;
  }
  return chi;
}

namespace {

double point_set_diameter(const WeightedCellComplex& c, std::span<const std::size_t> vertices) {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      d = std::max(d, geom::distance(c.position(vertices[i]), c.position(vertices[j])));
    }
  }
  return d;
}

double polygon_area(const WeightedCellComplex& c, std::size_t face) {
  std::vector<Vec3> pts;
  for (std::size_t v : c.face_vertices(face)) pts.push_back(c.position(v));
  return geom::norm(geom::vector_area(pts));
}

// Volume of a 3-cell by fanning each boundary polygon to the vertex centroid.
// Exact for cells that are star-shaped about their centroid (cubes, convex cells).
double solid_volume(const WeightedCellComplex& c, std::size_t solid) {
  const auto verts = c.cell_vertices({3, solid});
  Vec3 centroid{0, 0, 0};
  for (std::size_t v : verts) centroid = geom::add(centroid, c.position(v));
  centroid = geom::scale(centroid, 1.0 / static_cast<double>(verts.size()));
  double vol = 0.0;
  for (std::size_t f : c.faces({3, solid})) {
    const auto cyc = c.face_vertices(f);
    const Vec3& p0 = c.position(cyc[0]);
    for (std::size_t k = 1; k + 1 < cyc.size(); ++k) {
      const Vec3 a = geom::sub(p0, centroid);
      const Vec3 b = geom::sub(c.position(cyc[k]), centroid);
      const Vec3 d = geom::sub(c.position(cyc[k + 1]), centroid);
      vol += std::abs(geom::dot(a, geom::cross(b, d))) / 6.0;
    }
  }
  return vol;
}

}  // namespace

WeightedCellComplex with_geometric_weights(const WeightedCellComplex& c) {
  if (!c.has_embedding()) throw Error(ErrorCode::MissingEmbedding, "geometric weights need vertex positions");
  WeightedCellComplex out = c.with_weights(0, std::vector<double>(c.num_vertices(), 1.0));
  std::vector<double> w(c.num_edges());
  for (std::size_t e = 0; e < w.size(); ++e) {
    const auto [a, b] = c.edge_vertices(e);
    w[e] = geom::distance(c.position(a), c.position(b));
  }
  out = out.with_weights(1, std::move(w));
  w.assign(c.num_faces(), 0.0);
  for (std::size_t f = 0; f < w.size(); ++f) w[f] = polygon_area(c, f);
  out = out.with_weights(2, std::move(w));
  w.assign(c.num_cells(3), 0.0);
  for (std::size_t s = 0; s < w.size(); ++s) w[s] = solid_volume(c, s);
  return out.with_weights(3, std::move(w));
}

Thickness thickness(const WeightedCellComplex& c, CellId cell) {
  if (!c.contains(cell)) throw Error(ErrorCode::UnknownCell, "thickness of a missing cell");
  if (!c.has_embedding()) throw Error(ErrorCode::MissingEmbedding, "thickness needs vertex positions");

  // Collect every face of every dimension, the cell itself included.
  std::array<std::set<std::size_t>, kMaxCellDimension + 1> closure;
  closure[static_cast<std::size_t>(cell.dim)].insert(cell.index);
  for (int d = cell.dim; d > 0; --d) {
    for (std::size_t i : closure[static_cast<std::size_t>(d)]) {
      for (std::size_t f : c.faces({d, i})) closure[static_cast<std::size_t>(d - 1)].insert(f);
    }
  }

  double best = 1.0;  // vertices: Vol = 1, diam^0 = 1
  for (std::size_t e : closure[1]) {
    const auto [a, b] = c.edge_vertices(e);
    const double len = geom::distance(c.position(a), c.position(b));
    // length / length = 1, so edges only matter for the zero-diameter check
    if (len <= 0.0) throw Error(ErrorCode::Degenerate, "zero-diameter edge " + std::to_string(e));
  }
  for (std::size_t f : closure[2]) {
    const double diam = point_set_diameter(c, c.face_vertices(f));
    if (diam <= 0.0) throw Error(ErrorCode::Degenerate, "zero-diameter face " + std::to_string(f));
    best = std::min(best, polygon_area(c, f) / (diam * diam));
  }
  for (std::size_t s : closure[3]) {
    const auto verts = c.cell_vertices({3, s});
    const double diam = point_set_diameter(c, verts);
    if (diam <= 0.0) throw Error(ErrorCode::Degenerate, "zero-diameter 3-cell " + std::to_string(s));
    best = std::min(best, solid_volume(c, s) / (diam * diam * diam));
  }
  return {best, best <= 1e-12};
}

std::vector<double> distances_from(const WeightedCellComplex& c, std::size_t source) {
  if (source >= c.num_vertices()) throw Error(ErrorCode::UnknownCell, "vertex " + std::to_string(source));
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(c.num_vertices(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  const auto lengths = c.weights(1);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (std::size_t e : c.vertex_edges(u)) {
      const std::size_t w = c.other_vertex(e, u);
      const double nd = d + lengths[e];
      if (nd < dist[w]) {
        dist[w] = nd;
        queue.emplace(nd, w);
      }
    }
  }
  return dist;
}

double geodesic_distance(const WeightedCellComplex& c, std::size_t u, std::size_t v) {
  if (v >= c.num_vertices()) throw Error(ErrorCode::UnknownCell, "vertex " + std::to_string(v));
  const double d = distances_from(c, u)[v];
  if (!std::isfinite(d)) {
    throw Error(ErrorCode::Disconnected,
                "no path between vertices " + std::to_string(u) + " and " + std::to_string(v));
  }
  return d;
}

double diameter(const WeightedCellComplex& c) {
  if (c.num_vertices() == 0) return 0.0;
  const auto eccentricity = parallel_map(
      c.num_vertices(),
      [&](std::size_t s) {
        const auto d = distances_from(c, s);
        return *std::max_element(d.begin(), d.end());
      },
      8);
  const double diam = *std::max_element(eccentricity.begin(), eccentricity.end());
  if (!std::isfinite(diam)) throw Error(ErrorCode::Disconnected, "1-skeleton is not connected");
  return diam;
}

}  // namespace ricciforge
