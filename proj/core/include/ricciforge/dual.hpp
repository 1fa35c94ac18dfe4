#pragma once

#include "ricciforge/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ricciforge {

/// Dual of a 2-dimensional complex: one vertex per 2-cell, one edge per
/// interior edge (weight r_i + r_j), one 2-cell per interior vertex.
///
/// r_i is the distance from the centre of face i to the shared edge. The centre
/// is the circumcentre for strictly acute triangles and the barycentre
/// otherwise; triangles use intrinsic edge lengths (the primal edge weights).
/// Non-triangular faces use the vertex centroid and need an embedding.
struct DualComplex {
  WeightedCellComplex primal;
  WeightedCellComplex complex;

  std::vector<std::size_t> vertex_face;  // dual vertex -> primal 2-cell
  std::vector<std::size_t> edge_primal;  // dual edge -> primal edge
  std::vector<std::size_t> cell_vertex;  // dual 2-cell -> primal vertex
  std::vector<std::optional<std::size_t>> primal_edge_dual;    // primal edge -> dual edge
  std::vector<std::optional<std::size_t>> primal_vertex_dual;  // primal vertex -> dual 2-cell
};

/// Dual vertices carry the primal face weight; dual 2-cells carry
/// sum over primal edges e at v of l_e * w(e*) / 4. When the primal complex is
/// embedded, dual vertices are placed at the face centres.
/// Throws NonManifold if an edge bounds three or more 2-cells.
DualComplex build_dual(const WeightedCellComplex& c);

/// Distance from the centre of `face` (as in build_dual) to its boundary edge `edge`.
double face_center_distance(const WeightedCellComplex& c, std::size_t face, std::size_t edge);

/// Graph with one node per 2-cell (weight = face weight) and one edge per
/// interior edge (weight = the original edge weight). No 2-cells.
WeightedCellComplex dual_graph(const WeightedCellComplex& c);

}  // namespace ricciforge
