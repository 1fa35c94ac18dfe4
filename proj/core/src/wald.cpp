#include "ricciforge/metric_curvature.hpp"

#include "ricciforge/error.hpp"
#include "ricciforge/parallel.hpp"
#include "geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace ricciforge {

namespace {

constexpr int kPairs[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
constexpr int kScanPoints = 240;   // per sign
constexpr double kScanDecades = 12.0;

// (1 - cos(sqrt(k) d)) / k, continued through k = 0 and into k < 0 via cosh.
double chord_term(double kappa, double d) {
  if (kappa == 0.0) return 0.5 * d * d;
  const double x = 0.5 * std::sqrt(std::abs(kappa)) * d;
  double s;
  if (x < 1e-4) {
    s = kappa > 0.0 ? 1.0 - x * x / 6.0 : 1.0 + x * x / 6.0;
  } else {
    s = kappa > 0.0 ? std::sin(x) / x : std::sinh(x) / x;
  }
  return 0.5 * d * d * s * s;
}

// det[cos(sqrt(k) d_ij)] / k^3 written as k det(A) + det[[0, 1^T], [1, A]];
// analytic in k and proportional to the Cayley-Menger determinant at k = 0.
double embedding_determinant(const MetricQuadruple& q, double kappa) {
  Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
  Eigen::Matrix<double, 5, 5> B = Eigen::Matrix<double, 5, 5>::Zero();
  for (int i = 0; i < 4; ++i) {
    B(0, i + 1) = 1.0;
    B(i + 1, 0) = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      A(i, j) = chord_term(kappa, q(i, j));
      B(i + 1, j + 1) = A(i, j);
    }
  }
  return kappa * A.determinant() + B.determinant();
}

// The root is a genuine embedding: a PSD cosine Gram on the sphere, a Gram of
// Lorentz signature on the hyperbolic plane, a PSD Euclidean Gram when flat.
bool embeds(const MetricQuadruple& q, double kappa) {
  constexpr double eps = 1e-7;
  if (std::abs(kappa) < 1e-9) {
    Eigen::Matrix3d G;
    for (int i = 1; i < 4; ++i) {
      for (int j = 1; j < 4; ++j) {
        const double di = q(0, i), dj = q(0, j), dij = i == j ? 0.0 : q(i, j);
        G(i - 1, j - 1) = 0.5 * (di * di + dj * dj - dij * dij);
      }
    }
    const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(G).eigenvalues();
    return ev.minCoeff() >= -eps * std::max(1.0, ev.cwiseAbs().maxCoeff());
  }
  const double r = std::sqrt(std::abs(kappa));
  Eigen::Matrix4d G;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double d = i == j ? 0.0 : q(i, j);
      G(i, j) = kappa > 0.0 ? std::cos(r * d) : std::cosh(r * d);
    }
  }
  const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(G).eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (kappa > 0.0) return ev.minCoeff() >= -eps * scale;
  int positive = 0;
  for (int i = 0; i < 4; ++i) {
    if (ev(i) > eps * scale) ++positive;
  }
  return positive == 1;
}

void check_triangles(const MetricQuadruple& q) {
  for (double d : q.d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw Error(ErrorCode::Degenerate, "quadruple has a non-positive distance");
    }
  }
  constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : triples) {
    double s[3] = {q(t[0], t[1]), q(t[0], t[2]), q(t[1], t[2])};
    std::sort(s, s + 3);
    const double excess = s[0] + s[1] - s[2];
    if (excess < -1e-9 * s[2]) {
      throw Error(ErrorCode::TriangleInequality, "quadruple violates a triangle inequality");
    }
    if (excess <= 1e-10 * s[2]) {
      throw Error(ErrorCode::Degenerate, "quadruple contains a collinear triple");
    }
  }
}

}  // namespace

double MetricQuadruple::operator()(int i, int j) const {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) {
    throw Error(ErrorCode::InvalidArgument, "quadruple index out of range");
  }
  return d[static_cast<std::size_t>(kPairs[i][j])];
}

MetricQuadruple MetricQuadruple::from_points(const std::array<Vec3, 4>& p) {
  MetricQuadruple q;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      q.d[static_cast<std::size_t>(kPairs[i][j])] = geom::distance(p[static_cast<std::size_t>(i)],
                                                                    p[static_cast<std::size_t>(j)]);
    }
  }
  return q;
}

MetricQuadruple MetricQuadruple::from_function(const std::array<std::size_t, 4>& v,
                                               const std::function<double(std::size_t, std::size_t)>& dist) {
  MetricQuadruple q;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      q.d[static_cast<std::size_t>(kPairs[i][j])] =
          dist(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
  }
  return q;
}

double wald_quadruple_curvature(const MetricQuadruple& input, double tol) {
  check_triangles(input);
  // Work with d_max = 1; kappa scales as 1/length^2.
  const double dmax = *std::max_element(input.d.begin(), input.d.end());
  const double dmin = *std::min_element(input.d.begin(), input.d.end());
  MetricQuadruple q;
  for (std::size_t i = 0; i < 6; ++i) q.d[i] = input.d[i] / dmax;
  const double kmax = std::numbers::pi * std::numbers::pi;
  const double kmin = -(10.0 / (dmin / dmax)) * (10.0 / (dmin / dmax));

  std::vector<double> grid;
  grid.reserve(2 * kScanPoints + 3);
  for (int i = kScanPoints; i >= 0; --i) {
    grid.push_back(kmin * std::pow(10.0, -kScanDecades * i / kScanPoints));
  }
  grid.push_back(0.0);
  for (int i = kScanPoints; i >= 0; --i) {
    grid.push_back(kmax * std::pow(10.0, -kScanDecades * i / kScanPoints));
  }
  std::sort(grid.begin(), grid.end());

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = embedding_determinant(q, grid[i]);

  std::vector<double> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) roots.push_back(grid[i]);
    if (i + 1 == grid.size()) break;
    if ((values[i] < 0.0 && values[i + 1] > 0.0) || (values[i] > 0.0 && values[i + 1] < 0.0)) {
      double lo = grid[i], hi = grid[i + 1];
      double flo = values[i];
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = embedding_determinant(q, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
  }

  std::optional<double> best;
  for (double k : roots) {
    if (!embeds(q, k)) continue;
    if (!best || std::abs(k) < std::abs(*best)) best = k;
  }
  if (!best) throw Error(ErrorCode::NoEmbedding, "no embedding curvature in the scan range");
  return *best / (dmax * dmax);
}

double cell_curvature_wald(const WeightedCellComplex& c, std::size_t face, const DistanceFn& dist) {
  const auto cyc = c.face_vertices(face);
  const std::size_t n = cyc.size();
  if (n < 4) {
    throw Error(ErrorCode::TooFewVertices,
                "cell " + std::to_string(face) + " has " + std::to_string(n) + " vertices");
  }
  std::optional<double> best;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t i = b + 1; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const auto q = MetricQuadruple::from_function({cyc[a], cyc[b], cyc[i], cyc[j]}, dist);
          try {
            const double k = wald_quadruple_curvature(q);
            if (!best || k < *best) best = k;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::Degenerate) throw;
          }
        }
      }
    }
  }
  if (!best) throw Error(ErrorCode::Degenerate, "every quadruple of cell " + std::to_string(face) + " is degenerate");
  return *best;
}

double cell_curvature_wald(const WeightedCellComplex& c, std::size_t face) {
  return cell_curvature_wald(c, face, c.has_embedding() ? chord_metric(c) : boundary_path_metric(c, face));
}

double cell_curvature_wald(const DualComplex& d, std::size_t cell, const DistanceFn& dist) {
  return cell_curvature_wald(d.complex, cell, dist);
}

std::vector<double> dual_cell_curvatures(const DualComplex& d, const DistanceFn& dist) {
  return parallel_map(
      d.complex.num_faces(), [&](std::size_t f) { return cell_curvature_wald(d.complex, f, dist); }, 4);
}

double ricci_wald(const DualComplex& d, std::size_t vertex, std::size_t edge,
                  std::span<const double> cell_curvature) {
  const auto [a, b] = d.complex.edge_vertices(edge);
  if (a != vertex && b != vertex) {
    throw Error(ErrorCode::InvalidArgument,
                "dual edge " + std::to_string(edge) + " does not start at vertex " + std::to_string(vertex));
  }
  double sum = 0.0;
  for (std::size_t f : d.complex.cofaces(edge_id(edge))) sum += cell_curvature[f];
  return sum;
}

double ricci_wald(const DualComplex& d, std::size_t vertex, std::size_t edge, const DistanceFn& dist) {
  const auto [a, b] = d.complex.edge_vertices(edge);
  if (a != vertex && b != vertex) {
    throw Error(ErrorCode::InvalidArgument,
                "dual edge " + std::to_string(edge) + " does not start at vertex " + std::to_string(vertex));
  }
  double sum = 0.0;
  for (std::size_t f : d.complex.cofaces(edge_id(edge))) sum += cell_curvature_wald(d.complex, f, dist);
  return sum;
}

namespace {
std::vector<std::size_t> cells_at(const WeightedCellComplex& c, std::size_t vertex) {
  std::vector<std::size_t> cells;
  for (std::size_t e : c.vertex_edges(vertex)) {
    for (std::size_t f : c.cofaces(edge_id(e))) cells.push_back(f);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}
}  // namespace

double scal_wald(const DualComplex& d, std::size_t vertex, std::span<const double> cell_curvature) {
  double sum = 0.0;
  for (std::size_t f : cells_at(d.complex, vertex)) sum += cell_curvature[f];
  return sum;
}

double scal_wald(const DualComplex& d, std::size_t vertex, const DistanceFn& dist) {
  double sum = 0.0;
  for (std::size_t f : cells_at(d.complex, vertex)) sum += cell_curvature_wald(d.complex, f, dist);
  return sum;
}

double scal_wald_directional(const DualComplex& d, std::size_t vertex, std::span<const double> cell_curvature) {
  double sum = 0.0;
  for (std::size_t e : d.complex.vertex_edges(vertex)) sum += ricci_wald(d, vertex, e, cell_curvature);
  return sum;
}

double vertex_wald_curvature(const WeightedCellComplex& c, std::size_t vertex, StarAggregate aggregate) {
  const auto edges = c.vertex_edges(vertex);
  for (std::size_t e : edges) {
    if (c.cofaces(edge_id(e)).size() > 2) throw Error(ErrorCode::NonManifold, "edge " + std::to_string(e));
  }
  // Start on a boundary edge if there is one, so an open fan is walked end to end.
  std::size_t start = edges.empty() ? 0 : edges[0];
  for (std::size_t e : edges) {
    if (c.cofaces(edge_id(e)).size() == 1) {
      start = e;
      break;
    }
  }
  std::vector<std::size_t> nbr;
  std::vector<double> radius;
  std::vector<double> theta;
  double total = 0.0;
  bool closed = false;
  if (!edges.empty() && !c.cofaces(edge_id(start)).empty()) {
    std::size_t e = start;
    std::size_t f = c.cofaces(edge_id(e))[0];
    nbr.push_back(c.other_vertex(e, vertex));
    radius.push_back(c.weight(edge_id(e)));
    theta.push_back(0.0);
    for (std::size_t guard = 0; guard <= edges.size(); ++guard) {
      const auto fe = c.face_edges(f);
      if (fe.size() != 3) throw Error(ErrorCode::NonTriangularFace, "face " + std::to_string(f));
      std::size_t next = e;
      for (std::size_t x : fe) {
        if (x == e) continue;
        const auto [p, q] = c.edge_vertices(x);
        if (p == vertex || q == vertex) next = x;
      }
      const double a = c.weight(edge_id(e));
      const double b = c.weight(edge_id(next));
      double opposite = 0.0;
      for (std::size_t x : fe) {
        if (x != e && x != next) opposite = c.weight(edge_id(x));
      }
      if (geom::triangle_area(a, b, opposite) <= 0.0) {
        throw Error(ErrorCode::Degenerate, "triangle " + std::to_string(f) + " is degenerate");
      }
      total += geom::angle_from_sides(a, b, opposite);
      e = next;
      if (e == start) {
        closed = true;
        break;
      }
      nbr.push_back(c.other_vertex(e, vertex));
      radius.push_back(c.weight(edge_id(e)));
      theta.push_back(total);
      const auto cf = c.cofaces(edge_id(e));
      if (cf.size() < 2) break;
      f = cf[0] == f ? cf[1] : cf[0];
    }
  }
  if (nbr.size() != edges.size()) {
    throw Error(ErrorCode::NonManifold, "star of vertex " + std::to_string(vertex) + " is not a single fan");
  }
  if (nbr.size() < 3) {
    throw Error(ErrorCode::TooFewVertices, "vertex " + std::to_string(vertex) + " has fewer than 3 neighbours");
  }

  const std::size_t n = nbr.size();
  std::vector<double> gap(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double g = std::abs(theta[i] - theta[j]);
      if (closed) g = std::min(g, total - g);
      gap[i * n + j] = g;
    }
  }
  auto dist = [&](std::size_t i, std::size_t j) {
    const double ri = radius[i], rj = radius[j];
    return std::sqrt(std::max(0.0, ri * ri + rj * rj - 2.0 * ri * rj * std::cos(gap[i * n + j])));
  };

  double best = 0.0, sum = 0.0;
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t i = b + 1; i < n; ++i) {
        if (gap[a * n + b] >= std::numbers::pi || gap[a * n + i] >= std::numbers::pi ||
            gap[b * n + i] >= std::numbers::pi) {
          continue;
        }
        MetricQuadruple q;
        q.d = {radius[a], radius[b], radius[i], dist(a, b), dist(a, i), dist(b, i)};
        try {
          const double k = wald_quadruple_curvature(q);
          best = count == 0 ? k : std::min(best, k);
          sum += k;
          ++count;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Degenerate && e.code() != ErrorCode::NoEmbedding) throw;
        }
      }
    }
  }
  if (count == 0) {
    throw Error(ErrorCode::Degenerate, "no usable quadruple in the star of vertex " + std::to_string(vertex));
  }
  return aggregate == StarAggregate::Min ? best : sum / static_cast<double>(count);
}

CurvatureField wald_vertex_field(const WeightedCellComplex& c, StarAggregate aggregate) {
  auto field = make_field("wald-vertex", 0, parallel_map(
                                                c.num_vertices(),
                                                [&](std::size_t v) { return vertex_wald_curvature(c, v, aggregate); },
                                                4));
  field.metadata["aggregate"] = aggregate == StarAggregate::Min ? "min" : "mean";
  return field;
}

CurvatureField wald_cell_field(const WeightedCellComplex& c) {
  std::vector<std::size_t> ids;
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    if (c.face_vertices(f).size() >= 4) ids.push_back(f);
  }
  CurvatureField field;
  field.method = "wald-cell";
  field.entity_dim = 2;
  field.values = parallel_map(ids.size(), [&](std::size_t i) { return cell_curvature_wald(c, ids[i]); }, 4);
  field.ids = std::move(ids);
  field.metadata["distance"] = c.has_embedding() ? "chord" : "boundary-path";
  return field;
}

}  // namespace ricciforge
