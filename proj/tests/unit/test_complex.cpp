#include "../oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ricciforge;

namespace {

WeightedCellComplex path_graph() {
  ComplexBuilder b;
  for (int i = 0; i < 3; ++i) b.add_vertex();
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  return b.build();
}

WeightedCellComplex two_squares() {
  ComplexBuilder b;
  for (int i = 0; i < 6; ++i) b.add_vertex();
  const std::size_t c1[] = {0, 1, 4, 3};
  const std::size_t c2[] = {1, 2, 5, 4};
  b.add_face_by_vertices(c1);
  b.add_face_by_vertices(c2);
  return b.build();
}

bool has(const std::vector<CellId>& v, CellId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("filled triangle is a disk") {
    const auto c = gen::filled_triangle();
    CHECK(c.num_vertices() == 3);
    CHECK(c.num_edges() == 3);
    CHECK(c.num_faces() == 1);
    CHECK(euler_characteristic(c) == 1);
    CHECK(c.dimension() == 2);
  }

  TEST_CASE("tetrahedron boundary is a sphere") {
    const auto c = gen::tetrahedron();
    CHECK(c.num_edges() == 6);
    CHECK(c.num_faces() == 4);
    CHECK(euler_characteristic(c) == 2);
    const auto r = inspect(c);
    CHECK(r.closed_surface);
    CHECK(r.all_faces_triangles);
    CHECK(r.euler_characteristic == 2);
  }

  TEST_CASE("dangling face reference is rejected") {
    ComplexDescription d;
    d.cells.resize(2);
    d.cells[0].resize(2);
    d.cells[1].push_back({{0, 5}, 1.0});
    try {
      build_complex(d);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DanglingFace);
    }
  }

  TEST_CASE("malformed input is rejected with the right code") {
    ComplexDescription d;
    d.cells.resize(2);
    d.cells[0].resize(3);
    d.cells[1].push_back({{0, 1, 2}, 1.0});
    try {
      build_complex(d);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedEdge);
    }
    d.cells[1] = {{{0, 1}, -1.0}};
    try {
      build_complex(d);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidWeight);
    }
    d.cells.resize(5);
    d.cells[1] = {{{0, 1}, 1.0}};
    d.cells[4].push_back({{0}, 1.0});
    CHECK_THROWS_AS(build_complex(d), Error);
  }

  TEST_CASE("vertex weights may be zero, edge weights may not") {
    const auto c = gen::square_grid(2, 2);
    CHECK_NOTHROW(c.with_weights(0, std::vector<double>(c.num_vertices(), 0.0)));
    CHECK_THROWS_AS(c.with_weights(1, std::vector<double>(c.num_edges(), 0.0)), Error);
  }

  TEST_CASE("incidence indexes are symmetric") {
    const auto c = gen::cube_grid(2, 2, 1);
    for (int d = 1; d <= c.dimension(); ++d) {
      for (std::size_t i = 0; i < c.num_cells(d); ++i) {
        for (std::size_t f : c.faces({d, i})) {
          const auto up = c.cofaces({d - 1, f});
          CHECK(std::find(up.begin(), up.end(), i) != up.end());
        }
      }
    }
  }

  TEST_CASE("parallel neighbours of a filled triangle edge are empty") {
    const auto c = gen::filled_triangle();
    CHECK(parallel_neighbors(c, edge_id(0)).empty());
  }

  TEST_CASE("hollow triangle edges are parallel through vertices") {
    const auto c = gen::hollow_triangle();
    const auto p = parallel_neighbors(c, edge_id(0));
    CHECK(p.size() == 2);
    CHECK(has(p, edge_id(1)));
    CHECK(has(p, edge_id(2)));
  }

  TEST_CASE("opposite sides of a square are parallel through the face") {
    const auto c = two_squares();
    const auto shared = *c.find_edge(1, 4);
    const auto opposite = *c.find_edge(0, 3);
    const auto p = parallel_neighbors(c, edge_id(shared));
    CHECK(has(p, edge_id(opposite)));
    CHECK(has(p, edge_id(*c.find_edge(2, 5))));
    CHECK_FALSE(has(p, edge_id(*c.find_edge(0, 1))));
  }

  TEST_CASE("parallelism is symmetric and satisfies the exclusive-or law") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      ComplexBuilder b;
      const std::size_t n = 7;
      for (std::size_t i = 0; i < n; ++i) b.add_vertex();
      for (auto [u, v] : oracle::random_edges(n, 0.5, rng)) b.add_edge(u, v);
      std::bernoulli_distribution fill(0.5);
      const auto base = b.build();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            if (base.find_edge(i, j) && base.find_edge(j, k) && base.find_edge(i, k) && fill(rng)) {
              const std::size_t cyc[] = {i, j, k};
              b.add_face_by_vertices(cyc);
            }
          }
        }
      }
      const auto c = b.build();
      for (std::size_t e = 0; e < c.num_edges(); ++e) {
        for (const CellId f : parallel_neighbors(c, edge_id(e))) {
          CHECK(has(parallel_neighbors(c, f), edge_id(e)));
          const auto a = oracle::face_set(c, edge_id(e));
          const auto bb = oracle::face_set(c, f);
          bool share_face = false;
          for (auto x : a) share_face = share_face || bb.count(x);
          const auto ua = oracle::scanned_cofaces(c, edge_id(e));
          const auto ub = oracle::scanned_cofaces(c, f);
          bool share_coface = false;
          for (auto x : ua) share_coface = share_coface || std::find(ub.begin(), ub.end(), x) != ub.end();
          CHECK(share_face != share_coface);
        }
      }
    }
  }

  TEST_CASE("unknown cell is an error") {
    const auto c = gen::filled_triangle();
    try {
      parallel_neighbors(c, edge_id(99));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownCell);
    }
  }

  TEST_CASE("euler characteristic of reference surfaces") {
    CHECK(euler_characteristic(gen::square_grid_torus(4, 5)) == 0);
    CHECK(euler_characteristic(gen::flat_torus_triangulated(4, 4)) == 0);
    CHECK(euler_characteristic(gen::genus2_surface()) == -2);
    CHECK(euler_characteristic(gen::icosphere(2)) == 2);
    CHECK(euler_characteristic(gen::cube_grid(2, 2, 2)) == 1);
  }

  TEST_CASE("euler characteristic survives subdivision") {
    for (int n = 0; n <= 2; ++n) CHECK(euler_characteristic(gen::icosphere(n)) == 2);
    CHECK(euler_characteristic(gen::planar_triangulated_grid(2, 2)) ==
          euler_characteristic(gen::planar_triangulated_grid(5, 3)));
  }

  TEST_CASE("thickness") {
    const auto tri = gen::filled_triangle();
    const auto t = thickness(tri, face_id(0));
    CHECK(t.value == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
    CHECK_FALSE(t.degenerate);
    const auto sq = gen::square_grid(1, 1);
    CHECK(thickness(sq, face_id(0)).value == doctest::Approx(0.5).epsilon(1e-12));

    ComplexBuilder b;
    b.add_vertex({0, 0, 0});
    b.add_vertex({1, 0, 0});
    b.add_vertex({2, 0, 0});
    const std::size_t cyc[] = {0, 1, 2};
    b.add_face_by_vertices(cyc);
    const auto flat = b.build();
    const auto d = thickness(flat, face_id(0));
    CHECK(d.value == 0.0);
    CHECK(d.degenerate);

    try {
      thickness(gen::flat_torus_triangulated(3, 3), face_id(0));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingEmbedding);
    }
  }

  TEST_CASE("geodesic distance and diameter") {
    const auto p = path_graph();
    CHECK(geodesic_distance(p, 0, 2) == 2.0);
    CHECK(diameter(gen::tetrahedron().with_unit_weights()) == 1.0);
    const double d = diameter(gen::icosphere(3));
    CHECK(d >= std::numbers::pi * 0.999);
    CHECK(d <= std::numbers::pi * 1.1);

    ComplexBuilder b;
    b.add_vertex();
    b.add_vertex();
    try {
      diameter(b.build());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Disconnected);
    }
  }

  TEST_CASE("geodesic distance is a metric on sampled triples") {
    const auto c = gen::perturb_radially(gen::icosphere(1), 0.2, 3);
    std::vector<std::vector<double>> d;
    for (std::size_t v = 0; v < c.num_vertices(); ++v) d.push_back(distances_from(c, v));
    for (std::size_t a = 0; a < c.num_vertices(); ++a) {
      for (std::size_t b = 0; b < c.num_vertices(); ++b) {
        CHECK(d[a][b] == doctest::Approx(d[b][a]).epsilon(1e-12));
        for (std::size_t x = 0; x < c.num_vertices(); x += 5) CHECK(d[a][b] <= d[a][x] + d[x][b] + 1e-12);
      }
    }
  }

  TEST_CASE("geometric weights") {
    const auto c = with_geometric_weights(gen::filled_triangle(2.0));
    CHECK(c.weight(vertex_id(0)) == 1.0);
    CHECK(c.weight(edge_id(0)) == doctest::Approx(2.0));
    CHECK(c.weight(face_id(0)) == doctest::Approx(std::sqrt(3.0)));
    CHECK_THROWS_AS(with_geometric_weights(gen::flat_torus_triangulated(3, 3)), Error);
  }

  TEST_CASE("weight copies share topology") {
    const auto c = gen::icosahedron();
    const auto u = c.with_unit_weights();
    CHECK(u.num_edges() == c.num_edges());
    for (int d = 0; d <= 2; ++d) {
      for (double w : u.weights(d)) CHECK(w == 1.0);
    }
    CHECK(c.weight(edge_id(0)) != 1.0);
  }
}
