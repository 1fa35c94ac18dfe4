#include "ricciforge/generators.hpp"

#include "ricciforge/error.hpp"
#include "geometry.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

namespace ricciforge::gen {

namespace {

using Tri = std::array<std::size_t, 3>;

WeightedCellComplex embedded_polygons(const std::vector<Vec3>& pts,
                                      const std::vector<std::vector<std::size_t>>& polys) {
  ComplexBuilder b;
  for (const auto& p : pts) b.add_vertex(p);
  for (const auto& poly : polys) b.add_face_by_vertices(poly);
  return with_geometric_weights(b.build());
}

WeightedCellComplex embedded_mesh(const std::vector<Vec3>& pts, const std::vector<Tri>& tris) {
  std::vector<std::vector<std::size_t>> polys;
  polys.reserve(tris.size());
  for (const auto& t : tris) polys.push_back({t[0], t[1], t[2]});
  return embedded_polygons(pts, polys);
}

// Triangles among points whose three sides all have the given length.
std::vector<Tri> triangles_by_edge_length(const std::vector<Vec3>& pts, double len) {
  const double tol = 1e-9 * len;
  auto adjacent = [&](std::size_t i, std::size_t j) { return std::abs(geom::distance(pts[i], pts[j]) - len) < tol; };
  std::vector<Tri> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (adjacent(i, k) && adjacent(j, k)) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

std::vector<Vec3> icosahedron_points() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> p;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      p.push_back({0.0, s1, s2 * phi});
      p.push_back({s1, s2 * phi, 0.0});
      p.push_back({s2 * phi, 0.0, s1});
    }
  }
  return p;
}

}  // namespace

WeightedCellComplex filled_triangle(double side) {
  const double h = side * std::sqrt(3.0) / 2.0;
  return embedded_mesh({{0, 0, 0}, {side, 0, 0}, {side / 2.0, h, 0}}, {Tri{0, 1, 2}});
}

WeightedCellComplex hollow_triangle(double side) {
  const double h = side * std::sqrt(3.0) / 2.0;
  ComplexBuilder b;
  b.add_vertex({0, 0, 0});
  b.add_vertex({side, 0, 0});
  b.add_vertex({side / 2.0, h, 0});
  b.add_edge(0, 1, side);
  b.add_edge(1, 2, side);
  b.add_edge(2, 0, side);
  return b.build();
}

WeightedCellComplex tetrahedron(double edge) {
  const double s = edge / (2.0 * std::sqrt(2.0));
  std::vector<Vec3> p = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  return embedded_mesh(p, {Tri{0, 1, 2}, Tri{0, 1, 3}, Tri{0, 2, 3}, Tri{1, 2, 3}});
}

WeightedCellComplex cube_triangulated() {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  // Faces as vertex cycles, each split along the diagonal through its first vertex.
  const std::vector<std::array<std::size_t, 4>> quads = {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                                         {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
  std::vector<Tri> tris;
  for (const auto& q : quads) {
    tris.push_back({q[0], q[1], q[2]});
    tris.push_back({q[0], q[2], q[3]});
  }
  return embedded_mesh(p, tris);
}

WeightedCellComplex octahedron() {
  std::vector<Vec3> p = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return embedded_mesh(p, triangles_by_edge_length(p, std::sqrt(2.0)));
}

WeightedCellComplex icosahedron() {
  auto p = icosahedron_points();
  const auto tris = triangles_by_edge_length(p, 2.0);
  for (auto& x : p) x = geom::scale(x, 1.0 / geom::norm(x));
  return embedded_mesh(p, tris);
}

WeightedCellComplex icosphere(int subdivisions, double radius) {
  if (subdivisions < 0) throw Error(ErrorCode::InvalidArgument, "subdivisions must be non-negative");
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  auto p = icosahedron_points();
  auto tris = triangles_by_edge_length(p, 2.0);
  for (auto& x : p) x = geom::scale(x, 1.0 / geom::norm(x));
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid;
    auto midpoint = [&](std::size_t a, std::size_t b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      Vec3 m = geom::scale(geom::add(p[a], p[b]), 0.5);
      p.push_back(geom::scale(m, 1.0 / geom::norm(m)));
      mid.emplace(key, p.size() - 1);
      return p.size() - 1;
    };
    std::vector<Tri> next;
    next.reserve(tris.size() * 4);
    for (const auto& t : tris) {
      const std::size_t ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  for (auto& x : p) x = geom::scale(x, radius);
  return embedded_mesh(p, tris);
}

WeightedCellComplex perturb_radially(const WeightedCellComplex& c, double amount, std::uint64_t seed) {
  if (!(amount >= 0.0 && amount < 1.0)) throw Error(ErrorCode::InvalidArgument, "amount must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> factor(1.0 - amount, 1.0 + amount);
  std::vector<Vec3> p(c.positions().begin(), c.positions().end());
  for (auto& x : p) x = geom::scale(x, factor(rng));
  return with_geometric_weights(c.with_positions(std::move(p)));
}

WeightedCellComplex planar_triangulated_grid(std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) throw Error(ErrorCode::InvalidArgument, "grid needs at least one cell");
  std::vector<Vec3> p;
  for (std::size_t j = 0; j <= ny; ++j) {
    for (std::size_t i = 0; i <= nx; ++i) p.push_back({double(i), double(j), 0.0});
  }
  auto id = [nx](std::size_t i, std::size_t j) { return j * (nx + 1) + i; };
  std::vector<Tri> tris;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return embedded_mesh(p, tris);
}

WeightedCellComplex square_grid(std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) throw Error(ErrorCode::InvalidArgument, "grid needs at least one cell");
  std::vector<Vec3> p;
  for (std::size_t j = 0; j <= ny; ++j) {
    for (std::size_t i = 0; i <= nx; ++i) p.push_back({double(i), double(j), 0.0});
  }
  auto id = [nx](std::size_t i, std::size_t j) { return j * (nx + 1) + i; };
  std::vector<std::vector<std::size_t>> quads;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) quads.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  }
  return embedded_polygons(p, quads);
}

WeightedCellComplex square_grid_torus(std::size_t nx, std::size_t ny) {
  if (nx < 3 || ny < 3) throw Error(ErrorCode::InvalidArgument, "periodic grid needs at least 3x3 cells");
  ComplexBuilder b;
  for (std::size_t k = 0; k < nx * ny; ++k) b.add_vertex();
  auto id = [nx, ny](std::size_t i, std::size_t j) { return (j % ny) * nx + (i % nx); };
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const std::array<std::size_t, 4> q = {id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)};
      b.add_face_by_vertices(q);
    }
  }
  return b.build();
}

WeightedCellComplex flat_torus_triangulated(std::size_t nx, std::size_t ny) {
  if (nx < 3 || ny < 3) throw Error(ErrorCode::InvalidArgument, "periodic grid needs at least 3x3 cells");
  ComplexBuilder b;
  for (std::size_t k = 0; k < nx * ny; ++k) b.add_vertex();
  auto id = [nx, ny](std::size_t i, std::size_t j) { return (j % ny) * nx + (i % nx); };
  const double diag = std::sqrt(2.0);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t a = id(i, j), r = id(i + 1, j), d = id(i + 1, j + 1), u = id(i, j + 1);
      const std::size_t ar = b.edge_between(a, r, 1.0), rd = b.edge_between(r, d, 1.0);
      const std::size_t ad = b.edge_between(a, d, diag), du = b.edge_between(d, u, 1.0);
      const std::size_t ua = b.edge_between(u, a, 1.0);
      b.add_face({ar, rd, ad}, 0.5);
      b.add_face({ad, du, ua}, 0.5);
    }
  }
  return b.build();
}

WeightedCellComplex cube_grid(std::size_t nx, std::size_t ny, std::size_t nz) {
  if (nx == 0 || ny == 0 || nz == 0) throw Error(ErrorCode::InvalidArgument, "grid needs at least one cube");
  ComplexBuilder b;
  auto vid = [&](std::size_t i, std::size_t j, std::size_t k) { return (k * (ny + 1) + j) * (nx + 1) + i; };
  for (std::size_t k = 0; k <= nz; ++k) {
    for (std::size_t j = 0; j <= ny; ++j) {
      for (std::size_t i = 0; i <= nx; ++i) b.add_vertex({double(i), double(j), double(k)});
    }
  }
  std::map<std::array<std::size_t, 4>, std::size_t> squares;  // sorted corner ids -> face
  auto square = [&](std::array<std::size_t, 4> cyc) {
    auto key = cyc;
    std::sort(key.begin(), key.end());
    auto it = squares.find(key);
    if (it != squares.end()) return it->second;
    const std::size_t f = b.add_face_by_vertices(cyc);
    squares.emplace(key, f);
    return f;
  };
  for (std::size_t k = 0; k < nz; ++k) {
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t i = 0; i < nx; ++i) {
        auto v = [&](int di, int dj, int dk) { return vid(i + di, j + dj, k + dk); };
        std::vector<std::size_t> faces = {
            square({v(0, 0, 0), v(1, 0, 0), v(1, 1, 0), v(0, 1, 0)}),
            square({v(0, 0, 1), v(1, 0, 1), v(1, 1, 1), v(0, 1, 1)}),
            square({v(0, 0, 0), v(1, 0, 0), v(1, 0, 1), v(0, 0, 1)}),
            square({v(0, 1, 0), v(1, 1, 0), v(1, 1, 1), v(0, 1, 1)}),
            square({v(0, 0, 0), v(0, 1, 0), v(0, 1, 1), v(0, 0, 1)}),
            square({v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1)}),
        };
        b.add_solid(std::move(faces));
      }
    }
  }
  return b.build();
}

WeightedCellComplex torus_of_revolution(double R, double r, std::size_t nu, std::size_t nv) {
  if (!(R > r && r > 0.0) || nu < 3 || nv < 3) {
    throw Error(ErrorCode::InvalidArgument, "torus needs R > r > 0 and at least 3x3 samples");
  }
  std::vector<Vec3> p;
  for (std::size_t j = 0; j < nv; ++j) {
    const double v = 2.0 * std::numbers::pi * double(j) / double(nv);
    for (std::size_t i = 0; i < nu; ++i) {
      const double u = 2.0 * std::numbers::pi * double(i) / double(nu);
      p.push_back({(R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u), r * std::sin(v)});
    }
  }
  auto id = [nu, nv](std::size_t i, std::size_t j) { return (j % nv) * nu + (i % nu); };
  std::vector<Tri> tris;
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t i = 0; i < nu; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return embedded_mesh(p, tris);
}

WeightedCellComplex genus2_surface() {
  std::set<std::array<int, 3>> voxels;
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (y == 1 && (x == 1 || x == 3)) continue;
      voxels.insert({x, y, 0});
    }
  }
  std::map<std::array<int, 3>, std::size_t> ids;
  std::vector<Vec3> p;
  auto vertex = [&](int x, int y, int z) {
    const std::array<int, 3> key{x, y, z};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    p.push_back({double(x), double(y), double(z)});
    ids.emplace(key, p.size() - 1);
    return p.size() - 1;
  };
  std::vector<Tri> tris;
  for (const auto& v : voxels) {
    for (int axis = 0; axis < 3; ++axis) {
      for (int side : {0, 1}) {
        auto n = v;
        n[static_cast<std::size_t>(axis)] += side == 0 ? -1 : 1;
        if (voxels.count(n)) continue;
        // Corners of the exposed square in cyclic order.
        const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
        std::array<std::size_t, 4> q{};
        const int offs[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        for (int c = 0; c < 4; ++c) {
          std::array<int, 3> corner = v;
          corner[static_cast<std::size_t>(axis)] += side;
          corner[static_cast<std::size_t>(a1)] += offs[c][0];
          corner[static_cast<std::size_t>(a2)] += offs[c][1];
          q[static_cast<std::size_t>(c)] = vertex(corner[0], corner[1], corner[2]);
        }
        tris.push_back({q[0], q[1], q[2]});
        tris.push_back({q[0], q[2], q[3]});
      }
    }
  }
  return embedded_mesh(p, tris);
}

WeightedCellComplex capped_prism(double length, double cap_height) {
  if (!(length > 0.0 && cap_height > 0.0)) throw Error(ErrorCode::InvalidArgument, "length and cap height must be positive");
  std::vector<Vec3> p;
  for (double z : {0.0, length}) {
    for (int k = 0; k < 6; ++k) {
      const double a = std::numbers::pi * k / 3.0;
      p.push_back({std::cos(a), std::sin(a), z});
    }
  }
  p.push_back({0, 0, -cap_height});
  p.push_back({0, 0, length + cap_height});
  std::vector<Tri> tris;
  for (std::size_t k = 0; k < 6; ++k) {
    const std::size_t k1 = (k + 1) % 6;
    tris.push_back({k, k1, 6 + k1});
    tris.push_back({k, 6 + k1, 6 + k});
    tris.push_back({12, k, k1});
    tris.push_back({13, 6 + k, 6 + k1});
  }
  return embedded_mesh(p, tris);
}

}  // namespace ricciforge::gen
