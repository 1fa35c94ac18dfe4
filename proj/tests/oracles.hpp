#pragma once

// Independent re-implementations used to cross-check the library. They share
// no code with core/src beyond the complex accessors faces() and weight().

#include "ricciforge/ricciforge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ricciforge::CellId;
using ricciforge::WeightedCellComplex;

inline std::set<std::size_t> face_set(const WeightedCellComplex& c, CellId a) {
  const auto f = c.faces(a);
  return {f.begin(), f.end()};
}

// (p+1)-cells having `a` in their boundary, found by scanning every cell.
inline std::vector<std::size_t> scanned_cofaces(const WeightedCellComplex& c, CellId a) {
  std::vector<std::size_t> out;
  if (a.dim + 1 > 3) return out;
  for (std::size_t b = 0; b < c.num_cells(a.dim + 1); ++b) {
    const auto f = c.faces({a.dim + 1, b});
    if (std::find(f.begin(), f.end(), a.index) != f.end()) out.push_back(b);
  }
  return out;
}

// Forman curvature function evaluated literally from its definition.
inline double forman(const WeightedCellComplex& c, CellId a) {
  const int p = a.dim;
  const double wa = c.weight(a);
  const auto up = scanned_cofaces(c, a);
  const auto down = face_set(c, a);
  double coface_term = 0.0, face_term = 0.0, parallel_term = 0.0;
  for (std::size_t b : up) coface_term += wa / c.weight({p + 1, b});
  for (std::size_t g : down) face_term += c.weight({p - 1, g}) / wa;
  const std::set<std::size_t> up_set(up.begin(), up.end());
  for (std::size_t i = 0; i < c.num_cells(p); ++i) {
    if (i == a.index) continue;
    const CellId b{p, i};
    const auto up_b = scanned_cofaces(c, b);
    std::vector<std::size_t> common_up;
    for (std::size_t x : up_b) {
      if (up_set.count(x)) common_up.push_back(x);
    }
    std::vector<std::size_t> common_down;
    for (std::size_t x : face_set(c, b)) {
      if (down.count(x)) common_down.push_back(x);
    }
    if (common_up.empty() == common_down.empty()) continue;
    const double wb = c.weight(b);
    double s = 0.0;
    for (std::size_t x : common_up) s += std::sqrt(wa * wb) / c.weight({p + 1, x});
    for (std::size_t x : common_down) s -= c.weight({p - 1, x}) / std::sqrt(wa * wb);
    parallel_term += std::abs(s);
  }
  return wa * (coface_term + face_term - parallel_term);
}

// Angle defect from embedded coordinates via atan2 of cross and dot products.
inline double defect_from_positions(const WeightedCellComplex& c, std::size_t v) {
  double sum = 0.0;
  const auto& p = c.position(v);
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto vs = c.face_vertices(f);
    const auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) continue;
    const std::size_t k = static_cast<std::size_t>(it - vs.begin());
    const auto& a = c.position(vs[(k + 1) % vs.size()]);
    const auto& b = c.position(vs[(k + vs.size() - 1) % vs.size()]);
    const std::array<double, 3> u{a[0] - p[0], a[1] - p[1], a[2] - p[2]};
    const std::array<double, 3> w{b[0] - p[0], b[1] - p[1], b[2] - p[2]};
    const std::array<double, 3> x{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
    sum += std::atan2(std::hypot(x[0], x[1], x[2]), u[0] * w[0] + u[1] * w[1] + u[2] * w[2]);
  }
  return 2.0 * std::numbers::pi - sum;
}

// Reciprocal circumradius from coordinates: |AB x AC| * 2 / (|AB| |AC| |BC|).
inline double menger_from_points(const std::array<double, 2>& a, const std::array<double, 2>& b,
                                 const std::array<double, 2>& c) {
  const double cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  const double ab = std::hypot(b[0] - a[0], b[1] - a[1]);
  const double ac = std::hypot(c[0] - a[0], c[1] - a[1]);
  const double bc = std::hypot(c[0] - b[0], c[1] - b[1]);
  return 2.0 * std::abs(cross) / (ab * ac * bc);
}

enum class Model { Euclidean, Sphere, Hyperbolic };

// Four points in the model surface of curvature 0, +1 or -1, given by polar
// coordinates around a base point, and their exact geodesic distances.
struct ModelSample {
  ricciforge::MetricQuadruple q;
  double kappa = 0.0;
};

inline double model_distance(Model m, double r1, double t1, double r2, double t2) {
  const double dt = t1 - t2;
  switch (m) {
    case Model::Euclidean: return std::sqrt(std::max(0.0, r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(dt)));
    case Model::Sphere: {
      const double c = std::cos(r1) * std::cos(r2) + std::sin(r1) * std::sin(r2) * std::cos(dt);
      return std::acos(std::clamp(c, -1.0, 1.0));
    }
    case Model::Hyperbolic: {
      const double c = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(dt);
      return std::acosh(std::max(1.0, c));
    }
  }
  return 0.0;
}

// Smallest interior angle over the four triangles, from the flat law of
// cosines on the model distances; used to reject nearly collinear samples.
inline double min_triangle_angle(const ricciforge::MetricQuadruple& q) {
  double best = std::numbers::pi;
  const int tri[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : tri) {
    const double a = q(t[1], t[2]), b = q(t[0], t[2]), c = q(t[0], t[1]);
    const double A = std::acos(std::clamp((b * b + c * c - a * a) / (2 * b * c), -1.0, 1.0));
    const double B = std::acos(std::clamp((a * a + c * c - b * b) / (2 * a * c), -1.0, 1.0));
    best = std::min({best, A, B, std::numbers::pi - A - B});
  }
  return best;
}

inline ModelSample sample_model(Model m, std::mt19937_64& rng, double max_radius = 1.0) {
  std::uniform_real_distribution<double> radius(0.1 * max_radius, max_radius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  while (true) {
    std::array<double, 4> r{}, t{};
    for (int i = 0; i < 4; ++i) {
      r[i] = radius(rng);
      t[i] = angle(rng);
    }
    ModelSample s;
    s.kappa = m == Model::Euclidean ? 0.0 : m == Model::Sphere ? 1.0 : -1.0;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) s.q.d[k++] = model_distance(m, r[i], t[i], r[j], t[j]);
    }
    if (min_triangle_angle(s.q) > 0.15) return s;
  }
}

// Random simple graph on n vertices with edge probability p and unit weights.
inline std::vector<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return e;
}

inline std::vector<double> random_weights(std::size_t n, std::mt19937_64& rng, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> w(n);
  for (double& x : w) x = u(rng);
  return w;
}

// Copy with random weights in [lo, hi] on every dimension >= min_dim.
inline WeightedCellComplex randomize_weights(const WeightedCellComplex& c, std::mt19937_64& rng, int min_dim = 0) {
  WeightedCellComplex out = c;
  for (int d = min_dim; d <= std::max(0, c.dimension()); ++d) {
    out = out.with_weights(d, random_weights(c.num_cells(d), rng));
  }
  return out;
}

}  // namespace oracle
