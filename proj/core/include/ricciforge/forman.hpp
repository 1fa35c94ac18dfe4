#pragma once

#include "ricciforge/complex.hpp"
#include "ricciforge/curvature_field.hpp"

#include <cstddef>
#include <string_view>

namespace ricciforge {

/// Forman curvature function F_p(alpha) of a p-cell:
///   w(a) [ sum_{b > a} w(a)/w(b) + sum_{g < a} w(g)/w(a)
///          - sum_{a1 || a} | sum_{b > a, a1} sqrt(w(a) w(a1))/w(b)
///                          - sum_{g < a, a1} w(g)/sqrt(w(a) w(a1)) | ]
/// with parallelism as in parallel_neighbors.
double forman_curvature(const WeightedCellComplex& c, CellId alpha);

/// Ric_F(e) = F_1(e), evaluated from the 2-skeleton around the edge without
/// going through parallel_neighbors.
double forman_ricci_edge(const WeightedCellComplex& c, std::size_t edge);

/// Square-grid closed form (vertex weights taken as 0):
///   w0 [ sum_i w0/w(c_i) - sum_i sqrt(w0 w(e_i))/w(c_i) ]
/// with e_i the side of square c_i opposite to the edge. Boundary edges use
/// the squares present. Throws InvalidArgument on a non-square face.
double forman_ricci_grid2d(const WeightedCellComplex& c, std::size_t edge);

/// Cubical-grid closed form over the (up to 4) squares at the edge:
///   w0 [ w0 sum_i 1/w(c_i) - sqrt(w0) sum_i sqrt(w(e_i))/w(c_i) ]
double forman_ricci_grid3d(const WeightedCellComplex& c, std::size_t edge);

/// Triangle-mesh formula: triangle terms, endpoint terms, and for each
/// endpoint v the edges at v sharing no triangle with e.
/// Throws NonTriangularFace.
double forman_ricci_mesh(const WeightedCellComplex& c, std::size_t edge);

/// Reduced graph formula (2-cells ignored):
///   w_e ( w_v1/w_e + w_v2/w_e - sum_{e' at v1} w_v1/sqrt(w_e w_e')
///                            - sum_{e' at v2} w_v2/sqrt(w_e w_e') )
double forman_ricci_graph(const WeightedCellComplex& c, std::size_t edge);

enum class FormanVariant { General, Edge, Grid2d, Grid3d, Mesh, Graph };

std::string_view to_string(FormanVariant v);

/// Edge field of the chosen formula, computed in parallel over edges.
CurvatureField forman_field(const WeightedCellComplex& c, FormanVariant variant = FormanVariant::Edge);

}  // namespace ricciforge
