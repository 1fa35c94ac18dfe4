#include "../oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ricciforge;

namespace {

std::vector<std::size_t> degree_sequence(const WeightedCellComplex& c) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) d.push_back(c.vertex_edges(v).size());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> face_size_sequence(const WeightedCellComplex& c) {
  std::vector<std::size_t> d;
  for (std::size_t f = 0; f < c.num_faces(); ++f) d.push_back(c.face_vertices(f).size());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("dual") {
  TEST_CASE("dual of the regular tetrahedron") {
    const auto d = build_dual(gen::tetrahedron());
    CHECK(d.complex.num_vertices() == 4);
    CHECK(d.complex.num_edges() == 6);
    CHECK(d.complex.num_faces() == 4);
    for (std::size_t f = 0; f < 4; ++f) CHECK(d.complex.face_vertices(f).size() == 3);
    const double w0 = d.complex.weight(edge_id(0));
    CHECK(w0 > 0.0);
    for (std::size_t e = 0; e < 6; ++e) CHECK(d.complex.weight(edge_id(e)) == doctest::Approx(w0).epsilon(1e-12));
    // r = inradius of the unit equilateral triangle, twice.
    CHECK(w0 == doctest::Approx(2.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));
  }

  TEST_CASE("dual of the icosahedron is dodecahedral") {
    const auto d = build_dual(gen::icosahedron());
    CHECK(d.complex.num_vertices() == 20);
    CHECK(d.complex.num_edges() == 30);
    CHECK(d.complex.num_faces() == 12);
    for (std::size_t f = 0; f < 12; ++f) CHECK(d.complex.face_vertices(f).size() == 5);
    CHECK(euler_characteristic(d.complex) == 2);
  }

  TEST_CASE("non-manifold edge is rejected") {
    ComplexBuilder b;
    for (int i = 0; i < 5; ++i) b.add_vertex();
    for (std::size_t apex : {2u, 3u, 4u}) {
      const std::size_t cyc[] = {0, 1, apex};
      b.add_face_by_vertices(cyc);
    }
    try {
      build_dual(b.build());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonManifold);
    }
  }

  TEST_CASE("dual edge weight is the sum of centre distances") {
    const auto c = gen::perturb_radially(gen::icosphere(1), 0.1, 5);
    const auto d = build_dual(c);
    for (std::size_t e = 0; e < d.complex.num_edges(); ++e) {
      const std::size_t pe = d.edge_primal[e];
      const auto faces = c.cofaces(edge_id(pe));
      REQUIRE(faces.size() == 2);
      const double r = face_center_distance(c, faces[0], pe) + face_center_distance(c, faces[1], pe);
      CHECK(d.complex.weight(edge_id(e)) == doctest::Approx(r).epsilon(1e-14));
      CHECK(r > 0.0);
    }
  }

  TEST_CASE("obtuse triangles fall back to the barycentre") {
    ComplexBuilder b;
    b.add_vertex({0, 0, 0});
    b.add_vertex({4, 0, 0});
    b.add_vertex({2, 0.3, 0});
    const std::size_t cyc[] = {0, 1, 2};
    b.add_face_by_vertices(cyc);
    const auto c = with_geometric_weights(b.build());
    const auto base = *c.find_edge(0, 1);
    CHECK(face_center_distance(c, 0, base) == doctest::Approx(0.1).epsilon(1e-12));
  }

  TEST_CASE("closed surfaces keep chi and dualize twice back to the original shape") {
    for (const auto& c : {gen::tetrahedron(), gen::octahedron(), gen::icosahedron(), gen::cube_triangulated()}) {
      const auto d = build_dual(c);
      CHECK(euler_characteristic(d.complex) == euler_characteristic(c));
      const auto dd = build_dual(d.complex);
      CHECK(dd.complex.num_vertices() == c.num_vertices());
      CHECK(dd.complex.num_edges() == c.num_edges());
      CHECK(dd.complex.num_faces() == c.num_faces());
      CHECK(degree_sequence(dd.complex) == degree_sequence(c));
      CHECK(face_size_sequence(dd.complex) == face_size_sequence(c));
    }
  }

  TEST_CASE("dual of a disk keeps only interior cells") {
    const auto c = gen::planar_triangulated_grid(3, 3);
    const auto d = build_dual(c);
    const auto r = inspect(c);
    CHECK(d.complex.num_vertices() == c.num_faces());
    CHECK(d.complex.num_edges() == c.num_edges() - r.boundary_edges);
    CHECK(d.complex.num_faces() == 4);  // interior vertices of a 3x3 grid
    for (std::size_t k = 0; k < d.cell_vertex.size(); ++k) {
      CHECK(d.primal_vertex_dual[d.cell_vertex[k]] == k);
    }
  }

  TEST_CASE("dual graph weights follow the primal") {
    const auto c = with_geometric_weights(gen::perturb_radially(gen::icosphere(1), 0.1, 2));
    const auto g = dual_graph(c);
    CHECK(g.num_vertices() == c.num_faces());
    CHECK(g.num_edges() == c.num_edges());
    CHECK(g.num_faces() == 0);
    for (std::size_t f = 0; f < c.num_faces(); ++f) CHECK(g.weight(vertex_id(f)) == c.weight(face_id(f)));
    std::vector<double> pw(c.weights(1).begin(), c.weights(1).end());
    std::vector<double> gw(g.weights(1).begin(), g.weights(1).end());
    std::sort(pw.begin(), pw.end());
    std::sort(gw.begin(), gw.end());
    CHECK(pw == gw);
  }
}
