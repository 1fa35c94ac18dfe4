#pragma once

#include "ricciforge/complex.hpp"
#include "ricciforge/curvature_field.hpp"
#include "ricciforge/dual.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ricciforge {

/// Six pairwise distances among points 0..3, stored as
/// d01, d02, d03, d12, d13, d23.
struct MetricQuadruple {
  std::array<double, 6> d{};

  double operator()(int i, int j) const;
  static MetricQuadruple from_points(const std::array<Vec3, 4>& p);
  static MetricQuadruple from_function(const std::array<std::size_t, 4>& v,
                                       const std::function<double(std::size_t, std::size_t)>& dist);
};

/// Curvature kappa of the constant-curvature surface S_kappa into which the
/// quadruple embeds isometrically.
///
/// Roots of the normalized embedding determinant are bracketed on a
/// log-spaced grid over [-(10/d_min)^2, (pi/d_max)^2], refined by bisection
/// to `tol` (relative to the scan scale), and filtered to genuine embeddings;
/// the valid root nearest to zero is returned.
/// Throws TriangleInequality, Degenerate (a collinear triple) or NoEmbedding.
double wald_quadruple_curvature(const MetricQuadruple& q, double tol = 1e-10);

/// 4 Area / (abc); 0 for collinear input. Throws TriangleInequality.
double menger_curvature(double a, double b, double c);

/// sqrt(24 (L - c) / c^3). Throws InvalidArgument when L < c or c <= 0.
double haantjes_path_curvature(double path_length, double chord_length);

enum class HaantjesForm {
  Cell,  // 2 pi - kappa_H(path)
  Raw,   // kappa_H(path)
};

/// Haantjes curvature of a 2-cell seen from one of its boundary edges: the
/// complementary boundary walk is the path, the edge weight is the chord.
double haantjes_cell_curvature(const WeightedCellComplex& c, std::size_t face, std::size_t edge,
                               HaantjesForm form = HaantjesForm::Cell);
/// Sum of haantjes_cell_curvature over the 2-cells at the edge (0 if none).
double ricci_haantjes(const WeightedCellComplex& c, std::size_t edge,
                      HaantjesForm form = HaantjesForm::Cell);

/// Menger curvature of a triangular face from its edge weights.
double face_menger(const WeightedCellComplex& c, std::size_t face);
/// Sum of Menger curvatures of the triangles at the edge.
double ricci_menger(const WeightedCellComplex& c, std::size_t edge);
/// Sum of Menger curvatures of the triangles at the vertex.
double scal_menger(const WeightedCellComplex& c, std::size_t vertex);

/// 2 pi minus the sum of triangle angles at the vertex (law of cosines on the
/// edge weights). Throws NonTriangularFace or Degenerate.
double defect_curvature(const WeightedCellComplex& c, std::size_t vertex);
/// Angle defect divided by a third of the incident triangle area (1/length^2).
double defect_density(const WeightedCellComplex& c, std::size_t vertex);

/// Distance between two vertices of a cell.
using DistanceFn = std::function<double(std::size_t, std::size_t)>;

/// Euclidean distance between embedded vertices.
DistanceFn chord_metric(const WeightedCellComplex& c);
/// Shorter way around the boundary cycle of `face`, with edge weights as lengths.
DistanceFn boundary_path_metric(const WeightedCellComplex& c, std::size_t face);
/// Great-circle distance after projecting embedded vertices onto the sphere
/// of the given centre and radius.
DistanceFn great_circle_metric(const WeightedCellComplex& c, const Vec3& center = {0, 0, 0},
                               double radius = 1.0);

/// min of wald_quadruple_curvature over all 4-subsets of the cell's vertices.
/// Degenerate quadruples are skipped; throws TooFewVertices, or Degenerate
/// when every quadruple is degenerate.
double cell_curvature_wald(const WeightedCellComplex& c, std::size_t face, const DistanceFn& dist);
/// Chord metric when embedded, else the boundary path metric.
double cell_curvature_wald(const WeightedCellComplex& c, std::size_t face);
double cell_curvature_wald(const DualComplex& d, std::size_t cell, const DistanceFn& dist);

/// cell_curvature_wald for every 2-cell of the dual, in cell order.
std::vector<double> dual_cell_curvatures(const DualComplex& d, const DistanceFn& dist);

/// Sum of cell curvatures over the dual 2-cells containing dual edge `edge`;
/// `vertex` must be an endpoint of the edge.
double ricci_wald(const DualComplex& d, std::size_t vertex, std::size_t edge,
                  std::span<const double> cell_curvature);
double ricci_wald(const DualComplex& d, std::size_t vertex, std::size_t edge, const DistanceFn& dist);
/// Sum of cell curvatures over the dual 2-cells at the vertex.
double scal_wald(const DualComplex& d, std::size_t vertex, std::span<const double> cell_curvature);
double scal_wald(const DualComplex& d, std::size_t vertex, const DistanceFn& dist);
/// Sum of ricci_wald over the dual edges at the vertex.
double scal_wald_directional(const DualComplex& d, std::size_t vertex,
                             std::span<const double> cell_curvature);

enum class StarAggregate { Min, Mean };

/// Wald curvature of the 1-star of a vertex of a triangulated surface.
///
/// Distances between link vertices are measured in the star unfolded around
/// the vertex (law of cosines with the accumulated face angles at v), using
/// only edge weights. Quadruples {v, a, b, c} for which some pair is
/// separated by an angle of at least pi are degenerate and skipped.
double vertex_wald_curvature(const WeightedCellComplex& c, std::size_t vertex,
                             StarAggregate aggregate = StarAggregate::Min);

/// Whole-complex fields; every entity in id order.
CurvatureField menger_field(const WeightedCellComplex& c);          // edges, Ric_M
CurvatureField haantjes_field(const WeightedCellComplex& c, HaantjesForm form = HaantjesForm::Cell);
CurvatureField defect_field(const WeightedCellComplex& c);          // vertices
CurvatureField defect_density_field(const WeightedCellComplex& c);  // vertices
CurvatureField wald_vertex_field(const WeightedCellComplex& c, StarAggregate aggregate = StarAggregate::Min);
/// Cell curvatures of the 2-cells; cells with fewer than 4 vertices are omitted.
CurvatureField wald_cell_field(const WeightedCellComplex& c);

}  // namespace ricciforge
