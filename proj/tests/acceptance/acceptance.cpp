#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace ricciforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || s < budget_s;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %-34s %8.3fs", pass ? "PASS" : "FAIL", id, name, s);
  if (budget_s > 0) std::printf(" (limit %gs)", budget_s);
  if (!in_time) std::printf(" over time");
  if (!r.detail.empty()) std::printf(" %s", r.detail.c_str());
  std::printf("\n");
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

WeightedCellComplex random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  ComplexBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex();
  for (auto [u, v] : oracle::random_edges(n, p, rng)) b.add_edge(u, v);
  return b.build();
}

std::size_t degree(const WeightedCellComplex& c, std::size_t v) { return c.vertex_edges(v).size(); }

Outcome fill_increment() {
  std::mt19937_64 rng(1001);
  int done = 0;
  double worst = 0.0;
  while (done < 100) {
    const std::size_t n = 6 + rng() % 6;
    const auto edges = oracle::random_edges(n, 0.55, rng);
    std::set<std::pair<std::size_t, std::size_t>> has(edges.begin(), edges.end());
    std::vector<std::array<std::size_t, 3>> tris;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          if (has.count({a, b}) && has.count({a, c}) && has.count({b, c})) tris.push_back({a, b, c});
    if (tris.size() < 2) continue;
    std::shuffle(tris.begin(), tris.end(), rng);
    ComplexBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex();
    for (auto [u, v] : edges) b.add_edge(u, v);
    const std::size_t filled = 1 + rng() % (tris.size() - 1);
    for (std::size_t i = 1; i <= filled && i < tris.size(); ++i) b.add_face_by_vertices(tris[i]);
    const auto before = b.build();
    const auto& t = tris[0];
    const std::size_t e = *before.find_edge(t[0], t[1]);
    b.add_face_by_vertices(t);
    const auto after = b.build();
    const double diff = forman_curvature(after, edge_id(e)) - forman_curvature(before, edge_id(e));
    worst = std::max(worst, std::abs(diff - 3.0));
    ++done;
  }
  return {worst <= 1e-12, "max |dRic - 3| = " + sci(worst)};
}

Outcome specializations() {
  std::mt19937_64 rng(1002);
  double worst = 0.0;
  auto compare = [&](double special, double general) {
    worst = std::max(worst, std::abs(special - general) / std::max(1.0, std::abs(general)));
  };
  for (int i = 0; i < 1000; ++i) {
    auto g2 = oracle::randomize_weights(gen::square_grid(2 + i % 3, 2 + i % 2), rng, 1);
    g2 = g2.with_weights(0, std::vector<double>(g2.num_vertices(), 0.0));
    for (std::size_t e = 0; e < g2.num_edges(); ++e) compare(forman_ricci_grid2d(g2, e), forman_curvature(g2, edge_id(e)));
    auto g3 = oracle::randomize_weights(gen::cube_grid(2, 1 + i % 2, 1 + i % 2), rng, 1);
    g3 = g3.with_weights(0, std::vector<double>(g3.num_vertices(), 0.0));
    for (std::size_t e = 0; e < g3.num_edges(); ++e) compare(forman_ricci_grid3d(g3, e), forman_curvature(g3, edge_id(e)));
    const auto mesh = oracle::randomize_weights(i % 2 ? gen::octahedron() : gen::icosahedron(), rng);
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) compare(forman_ricci_mesh(mesh, e), forman_curvature(mesh, edge_id(e)));
    const auto graph = oracle::randomize_weights(random_graph(rng, 8 + i % 5, 0.35), rng);
    for (std::size_t e = 0; e < graph.num_edges(); ++e) compare(forman_ricci_graph(graph, e), forman_curvature(graph, edge_id(e)));
  }
  return {worst <= 1e-12, "max rel diff = " + sci(worst)};
}

Outcome wald_models() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const auto m = static_cast<oracle::Model>(i % 3);
    const auto s = oracle::sample_model(m, rng);
    worst = std::max(worst, std::abs(wald_quadruple_curvature(s.q) - s.kappa));
  }
  return {worst <= 1e-6, "max |K - kappa| = " + sci(worst)};
}

Outcome gauss_bonnet_surfaces() {
  Outcome r;
  for (const auto& c : {gen::tetrahedron(), gen::cube_triangulated(), gen::flat_torus_triangulated(6, 6),
                        gen::genus2_surface()}) {
    const auto g = gauss_bonnet(c, 1e-9);
    r.ok = r.ok && g.pass && g.residual <= 1e-9;
    r.detail += io::format_double(g.total_defect / std::numbers::pi) + "pi ";
  }
  return r;
}

Outcome comparison() {
  Outcome r;
  for (int i = 0; i < 50; ++i) {
    const auto base = gen::icosphere(1 + i % 2);
    const auto d = build_dual(gen::perturb_radially(base, 0.01 + 0.002 * i, 500 + i));
    const auto K = dual_cell_curvatures(d, great_circle_metric(d.complex));
    const double k0 = *std::min_element(K.begin(), K.end());
    for (std::size_t v = 0; v < d.complex.num_vertices(); ++v) {
      for (std::size_t e : d.complex.vertex_edges(v)) r.ok = r.ok && ricci_wald(d, v, e, K) >= 2 * k0;
      r.ok = r.ok && scal_wald_directional(d, v, K) >= 6 * k0;
      r.ok = r.ok && scal_wald(d, v, K) >= 3 * k0;
    }
  }
  r.detail = "50 duals";
  return r;
}

Outcome bonnet_myers() {
  const auto c = gen::icosphere(3);
  const auto b = bonnet_myers_check(c, defect_density_field(c), 0.8, 1.1);
  return {b.pass, "min K = " + io::format_double(b.min_curvature) + ", diam = " + io::format_double(b.diameter) +
                      ", bound = " + io::format_double(b.bound)};
}

bool stays_fixed(const WeightedCellComplex& c, FlowConfig cfg) {
  cfg.max_steps = 100;
  const auto t = run_flow(c, cfg);
  if (t.records.size() != 101) return false;
  for (const auto& rec : t.records) {
    if (rec.weights != t.records.front().weights) return false;
  }
  const auto w = c.weights(1);
  return std::equal(w.begin(), w.end(), t.records.front().weights.begin(), t.records.front().weights.end());
}

Outcome fixed_points() {
  Outcome r;
  const auto ico = gen::icosahedron().with_unit_weights();
  for (auto m : {FlowMethod::Metric, FlowMethod::MetricSymmetric}) {
    FlowConfig cfg;
    cfg.method = m;
    cfg.normalized = true;
    r.ok = r.ok && stays_fixed(ico, cfg);
  }
  for (const auto& c : {gen::tetrahedron().with_unit_weights(), gen::flat_torus_triangulated(5, 5).with_unit_weights(),
                        gen::square_grid_torus(4, 4).with_unit_weights()}) {
    r.ok = r.ok && stays_fixed(c, forman_defaults(true));
  }
  r.detail = "metric x2, forman x3";
  return r;
}

Outcome flow_convergence() {
  const auto c = gen::perturb_radially(gen::icosphere(2), 0.1, 7);
  FlowConfig cfg;
  cfg.method = FlowMethod::MetricSymmetric;
  cfg.normalized = true;
  cfg.backend = VertexBackend::Defect;
  cfg.h = 0.25;
  cfg.max_steps = 200;
  const auto t = run_flow(c, cfg);
  const auto conv = detect_convergence(t);
  const double s0 = t.records.front().spread, s1 = t.records.back().spread;
  return {s1 <= 0.5 * s0 && conv.c2 > 0.0, "spread " + io::format_double(s0) + " -> " + io::format_double(s1) +
                                               ", c2 = " + io::format_double(conv.c2) +
                                               ", R2 = " + io::format_double(conv.r_squared)};
}

Outcome graph_closed_form() {
  std::mt19937_64 rng(1009);
  Outcome r;
  std::size_t edges = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 5 + i % 20, 0.1 + 0.005 * i);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge_vertices(e);
      const double expected = 4.0 - double(degree(g, u)) - double(degree(g, v));
      r.ok = r.ok && forman_ricci_graph(g, e) == expected && forman_curvature(g, edge_id(e)) == expected;
      ++edges;
    }
  }
  r.detail = std::to_string(edges) + " edges";
  return r;
}

Outcome flat_grids() {
  Outcome r;
  std::size_t checked = 0;
  const auto g2 = gen::square_grid(5, 4).with_unit_weights();
  for (std::size_t e = 0; e < g2.num_edges(); ++e) {
    const auto [u, v] = g2.edge_vertices(e);
    if (degree(g2, u) != 4 || degree(g2, v) != 4) continue;
    r.ok = r.ok && forman_curvature(g2, edge_id(e)) == 0.0 && forman_ricci_grid2d(g2, e) == 0.0;
    ++checked;
  }
  const auto g3 = gen::cube_grid(4, 3, 3).with_unit_weights();
  for (std::size_t e = 0; e < g3.num_edges(); ++e) {
    const auto [u, v] = g3.edge_vertices(e);
    if (degree(g3, u) != 6 || degree(g3, v) != 6) continue;
    r.ok = r.ok && forman_curvature(g3, edge_id(e)) == 0.0 && forman_ricci_grid3d(g3, e) == 0.0;
    ++checked;
  }
  r.ok = r.ok && checked > 0;
  r.detail = std::to_string(checked) + " interior edges";
  return r;
}

}  // namespace

int main() {
  criterion(1, "forman +3 triangle fill", 5, fill_increment);
  criterion(2, "specialized forman formulas", 30, specializations);
  criterion(3, "wald curvature on model surfaces", 10, wald_models);
  criterion(4, "gauss-bonnet with angle defect", 1, gauss_bonnet_surfaces);
  criterion(5, "wald comparison bounds on duals", 0, comparison);
  criterion(6, "bonnet-myers on icosphere(3)", 5, bonnet_myers);
  criterion(7, "normalized flow fixed points", 0, fixed_points);
  criterion(8, "metric flow convergence", 60, flow_convergence);
  criterion(9, "graph curvature 4 - d1 - d2", 0, graph_closed_form);
  criterion(10, "flat grids interior edges", 0, flat_grids);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
