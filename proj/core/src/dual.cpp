#include "ricciforge/dual.hpp"

#include "ricciforge/error.hpp"
#include "geometry.hpp"

#include <cmath>
#include <string>

namespace ricciforge {

namespace {

void require_manifold(const WeightedCellComplex& c) {
  if (c.num_cells(3) > 0) throw Error(ErrorCode::InvalidArgument, "dual needs a 2-dimensional complex");
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    if (c.cofaces(edge_id(e)).size() >= 3) {
      throw Error(ErrorCode::NonManifold, "edge " + std::to_string(e) + " bounds " +
                                              std::to_string(c.cofaces(edge_id(e)).size()) + " faces");
    }
  }
}

bool strictly_acute(double a, double b, double c) {
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  return a2 + b2 > c2 && b2 + c2 > a2 && a2 + c2 > b2;
}

Vec3 face_center_point(const WeightedCellComplex& c, std::size_t face) {
  const auto cyc = c.face_vertices(face);
  if (cyc.size() == 3) {
    const Vec3& A = c.position(cyc[0]);
    const Vec3& B = c.position(cyc[1]);
    const Vec3& C = c.position(cyc[2]);
    const double a = geom::distance(B, C), b = geom::distance(A, C), cc = geom::distance(A, B);
    if (strictly_acute(a, b, cc)) {
      // Barycentric circumcentre weights a^2(b^2+c^2-a^2), ...
      const double wa = a * a * (b * b + cc * cc - a * a);
      const double wb = b * b * (a * a + cc * cc - b * b);
      const double wc = cc * cc * (a * a + b * b - cc * cc);
      const double s = wa + wb + wc;
      return geom::scale(geom::add(geom::add(geom::scale(A, wa), geom::scale(B, wb)), geom::scale(C, wc)),
                         1.0 / s);
    }
  }
  Vec3 m{0, 0, 0};
  for (std::size_t v : cyc) m = geom::add(m, c.position(v));
  return geom::scale(m, 1.0 / static_cast<double>(cyc.size()));
}

}  // namespace

double face_center_distance(const WeightedCellComplex& c, std::size_t face, std::size_t edge) {
  const auto edges = c.face_edges(face);
  std::size_t k = edges.size();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] == edge) k = i;
  }
  if (k == edges.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(edge) + " is not on face " + std::to_string(face));
  }
  if (edges.size() == 3) {
    const double a = c.weight(edge_id(edges[k]));
    const double b = c.weight(edge_id(edges[(k + 1) % 3]));
    const double d = c.weight(edge_id(edges[(k + 2) % 3]));
    const double area = geom::triangle_area(a, b, d);
    if (area <= 0.0) throw Error(ErrorCode::Degenerate, "face " + std::to_string(face) + " has zero area");
    if (strictly_acute(a, b, d)) {
      // R cos(A), A the angle opposite the edge.
      const double R = a * b * d / (4.0 * area);
      const double cosA = (b * b + d * d - a * a) / (2.0 * b * d);
      return R * cosA;
    }
    return 2.0 * area / (3.0 * a);
  }
  if (!c.has_embedding()) {
    throw Error(ErrorCode::MissingEmbedding, "non-triangular face " + std::to_string(face) +
                                                 " needs vertex positions for its centre");
  }
  const Vec3 m = face_center_point(c, face);
  const auto [u, v] = c.edge_vertices(edge);
  const Vec3 dir = geom::sub(c.position(v), c.position(u));
  const double len = geom::norm(dir);
  if (len <= 0.0) throw Error(ErrorCode::Degenerate, "zero-length edge " + std::to_string(edge));
  return geom::norm(geom::cross(geom::sub(m, c.position(u)), dir)) / len;
}

DualComplex build_dual(const WeightedCellComplex& c) {
  require_manifold(c);
  DualComplex d;
  d.primal = c;
  ComplexBuilder b;

  const bool embedded = c.has_embedding();
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    if (embedded) {
      b.add_vertex(face_center_point(c, f), c.weight(face_id(f)));
    } else {
      b.add_vertex(c.weight(face_id(f)));
    }
    d.vertex_face.push_back(f);
  }

  d.primal_edge_dual.assign(c.num_edges(), std::nullopt);
  std::vector<double> dual_length(c.num_edges(), 0.0);
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto faces = c.cofaces(edge_id(e));
    if (faces.size() != 2) continue;
    const double w = face_center_distance(c, faces[0], e) + face_center_distance(c, faces[1], e);
    if (!(w > 0.0)) throw Error(ErrorCode::Degenerate, "dual edge of " + std::to_string(e) + " has zero length");
    d.primal_edge_dual[e] = b.add_edge(faces[0], faces[1], w);
    dual_length[e] = w;
    d.edge_primal.push_back(e);
  }

  d.primal_vertex_dual.assign(c.num_vertices(), std::nullopt);
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const auto edges = c.vertex_edges(v);
    if (edges.empty()) continue;
    bool interior = true;
    for (std::size_t e : edges) interior = interior && d.primal_edge_dual[e].has_value();
    if (!interior) continue;

    // Walk the faces around v: enter a face through one edge at v, leave through the other.
    std::vector<std::size_t> ring;
    std::size_t e = edges[0];
    std::size_t f = c.cofaces(edge_id(e))[0];
    for (std::size_t guard = 0; guard <= edges.size(); ++guard) {
      ring.push_back(*d.primal_edge_dual[e]);
      std::size_t next = e;
      for (std::size_t fe : c.face_edges(f)) {
        if (fe == e) continue;
        const auto [p, q] = c.edge_vertices(fe);
        if (p == v || q == v) {
          next = fe;
          break;
        }
      }
      e = next;
      const auto cf = c.cofaces(edge_id(e));
      f = cf[0] == f ? cf[1] : cf[0];
      if (e == edges[0]) break;
    }
    if (ring.size() != edges.size()) {
      // Pinched vertex: faces around v do not form one cycle.
      throw Error(ErrorCode::NonManifold, "vertex " + std::to_string(v) + " has a non-disk neighbourhood");
    }
    double weight = 0.0;
    for (std::size_t pe : edges) weight += c.weight(edge_id(pe)) * dual_length[pe] / 4.0;
    d.primal_vertex_dual[v] = b.add_face(ring, weight);
    d.cell_vertex.push_back(v);
  }

  d.complex = b.build();
  return d;
}

WeightedCellComplex dual_graph(const WeightedCellComplex& c) {
  require_manifold(c);
  ComplexBuilder b;
  for (std::size_t f = 0; f < c.num_faces(); ++f) b.add_vertex(c.weight(face_id(f)));
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto faces = c.cofaces(edge_id(e));
    if (faces.size() == 2) b.add_edge(faces[0], faces[1], c.weight(edge_id(e)));
  }
  return b.build();
}

}  // namespace ricciforge
