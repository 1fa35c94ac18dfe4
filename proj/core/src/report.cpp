#include "ricciforge/report.hpp"

#include "ricciforge/error.hpp"
#include "ricciforge/metric_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace ricciforge {

CurvatureField make_field(std::string method, int entity_dim, std::vector<double> values) {
  CurvatureField f;
  f.method = std::move(method);
  f.entity_dim = entity_dim;
  f.ids.resize(values.size());
  std::iota(f.ids.begin(), f.ids.end(), std::size_t{0});
  f.values = std::move(values);
  return f;
}

double stable_mean(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  const double x0 = x.front();
  double acc = 0.0;
  for (double v : x) acc += v - x0;
  return x0 + acc / static_cast<double>(x.size());
}

FieldSummary summarize(const CurvatureField& field) {
  FieldSummary s;
  s.count = field.values.size();
  if (s.count == 0) return s;
  s.min = *std::min_element(field.values.begin(), field.values.end());
  s.max = *std::max_element(field.values.begin(), field.values.end());
  s.sum = std::accumulate(field.values.begin(), field.values.end(), 0.0);
  s.mean = stable_mean(field.values);
  return s;
}

std::string_view to_string(GeometryType t) {
  switch (t) {
    case GeometryType::Spherical: return "spherical";
    case GeometryType::Euclidean: return "euclidean";
    case GeometryType::Hyperbolic: return "hyperbolic";
    case GeometryType::Mixed: return "mixed";
  }
  return "mixed";
}

GeometryReport classify_geometry(const WeightedCellComplex& c, const CurvatureField* field, double tol) {
  GeometryReport r;
  r.euler_characteristic = euler_characteristic(c);
  r.by_euler = r.euler_characteristic > 0   ? GeometryType::Spherical
               : r.euler_characteristic < 0 ? GeometryType::Hyperbolic
                                            : GeometryType::Euclidean;
  if (field != nullptr && !field->empty()) {
    const bool all_pos = std::all_of(field->values.begin(), field->values.end(), [tol](double x) { return x > tol; });
    const bool all_neg = std::all_of(field->values.begin(), field->values.end(), [tol](double x) { return x < -tol; });
    const bool all_zero =
        std::all_of(field->values.begin(), field->values.end(), [tol](double x) { return std::abs(x) <= tol; });
    r.by_curvature = all_pos    ? GeometryType::Spherical
                     : all_neg  ? GeometryType::Hyperbolic
                     : all_zero ? GeometryType::Euclidean
                                : GeometryType::Mixed;
    r.agree = *r.by_curvature == r.by_euler;
  }
  return r;
}

GaussBonnetResult gauss_bonnet(const WeightedCellComplex& c, double tol) {
  GaussBonnetResult r;
  double total = 0.0;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) total += defect_curvature(c, v);
  r.total_defect = total;
  r.expected = 2.0 * std::numbers::pi * static_cast<double>(euler_characteristic(c));
  r.residual = std::abs(total - r.expected);
  r.closed_surface = inspect(c).closed_surface;
  r.pass = r.closed_surface && r.residual <= tol;
  return r;
}

BonnetMyersResult bonnet_myers_check(const WeightedCellComplex& c, const CurvatureField& field, double k0,
                                     double tolerance_factor) {
  if (!(k0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "K0 must be positive");
  if (field.empty()) throw Error(ErrorCode::InvalidArgument, "empty curvature field");
  BonnetMyersResult r;
  r.k0 = k0;
  r.tolerance_factor = tolerance_factor;
  r.min_curvature = *std::min_element(field.values.begin(), field.values.end());
  r.precondition_met = r.min_curvature >= k0;
  r.diameter = diameter(c);
  r.bound = std::numbers::pi / std::sqrt(k0);
  r.pass = r.precondition_met && r.diameter <= tolerance_factor * r.bound;
  return r;
}

}  // namespace ricciforge
