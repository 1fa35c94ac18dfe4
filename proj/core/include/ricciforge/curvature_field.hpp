#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ricciforge {

/// Curvature values keyed by cells of one dimension.
///
/// `method` is one of wald-cell, wald-vertex, menger, haantjes, defect,
/// defect-density, forman, forman-grid2d, forman-grid3d, forman-mesh,
/// forman-graph (free-form, but writers and the CLI use these names).
struct CurvatureField {
  std::string method;
  int entity_dim = 0;
  std::vector<std::size_t> ids;
  std::vector<double> values;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

/// Field with ids 0..values.size()-1.
CurvatureField make_field(std::string method, int entity_dim, std::vector<double> values);

struct FieldSummary {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double sum = 0.0;
};

FieldSummary summarize(const CurvatureField& field);

/// x0 + sum(x_i - x0) / n: exact for constant input, where the naive sum is not.
double stable_mean(const std::vector<double>& x);

}  // namespace ricciforge
