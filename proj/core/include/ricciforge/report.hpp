#pragma once

#include "ricciforge/complex.hpp"
#include "ricciforge/curvature_field.hpp"

#include <optional>
#include <string_view>

namespace ricciforge {

enum class GeometryType { Spherical, Euclidean, Hyperbolic, Mixed };

std::string_view to_string(GeometryType t);

struct GaussBonnetResult {
  double total_defect = 0.0;
  double expected = 0.0;  // 2 pi chi
  double residual = 0.0;  // |total - expected|
  bool closed_surface = false;
  bool pass = false;
};

struct BonnetMyersResult {
  double k0 = 0.0;
  double min_curvature = 0.0;
  double diameter = 0.0;
  double bound = 0.0;             // pi / sqrt(K0)
  double tolerance_factor = 1.0;  // allowed graph-metric overshoot
  bool precondition_met = false;  // every field value >= K0
  bool pass = false;              // precondition_met && diameter <= factor * bound
};

struct GeometryReport {
  long euler_characteristic = 0;
  GeometryType by_euler = GeometryType::Euclidean;
  std::optional<GeometryType> by_curvature;
  bool agree = true;
  std::optional<GaussBonnetResult> gauss_bonnet;
  std::optional<BonnetMyersResult> bonnet_myers;
};

/// Prototype class by the sign of chi, and by the sign of the edge field when
/// one is given (all > tol, all within tol of 0, all < -tol; otherwise Mixed).
GeometryReport classify_geometry(const WeightedCellComplex& c, const CurvatureField* field = nullptr,
                                 double tol = 1e-9);

/// Sum of angle defects against 2 pi chi; pass when closed and residual <= tol.
GaussBonnetResult gauss_bonnet(const WeightedCellComplex& c, double tol = 1e-9);

/// Graph diameter against pi / sqrt(K0) given a vertex curvature field.
/// Throws InvalidArgument when K0 <= 0. A field value below K0 is reported as
/// an unmet precondition (pass = false), never silently passed.
BonnetMyersResult bonnet_myers_check(const WeightedCellComplex& c, const CurvatureField& field, double k0,
                                     double tolerance_factor = 1.0);

}  // namespace ricciforge
