#include "../oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ricciforge;

namespace {

WeightedCellComplex single_edge(double l = 1.0) {
  ComplexBuilder b;
  b.add_vertex();
  b.add_vertex();
  b.add_edge(0, 1, l);
  return b.build();
}

FlowConfig euler(double h, bool normalized = false) {
  FlowConfig cfg;
  cfg.h = h;
  cfg.normalized = normalized;
  return cfg;
}

FlowTrace synthetic_trace(const std::function<double(double)>& k, std::size_t n, double dt) {
  FlowTrace t;
  for (std::size_t i = 0; i < n; ++i) {
    FlowRecord r;
    r.step = i;
    r.time = double(i) * dt;
    r.curvature = {k(r.time), -k(r.time)};
    r.weights = {1.0};
    t.records.push_back(r);
  }
  return t;
}

}  // namespace

TEST_SUITE("flow") {
  TEST_CASE("config validation") {
    FlowConfig cfg;
    cfg.max_steps = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    CHECK_THROWS_AS(run_flow(gen::tetrahedron(), cfg), Error);
    cfg.max_steps = 1;
    cfg.h = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.h = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    CHECK(forman_defaults().h == 1.0);
  }

  TEST_CASE("plain metric step by hand") {
    const double K[] = {0.5, 0.5};
    const auto s = metric_flow_step(single_edge(), K, euler(0.1));
    CHECK(s.weights[0] == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(s.h_used == 0.1);
    CHECK(s.halvings == 0);
  }

  TEST_CASE("symmetric metric step by hand and edge reversal") {
    const double K[] = {1.0, 0.0};
    CHECK(metric_flow_step_symmetric(single_edge(), K, euler(0.1)).weights[0] == doctest::Approx(0.95).epsilon(1e-15));
    const double R[] = {0.0, 1.0};
    CHECK(metric_flow_step_symmetric(single_edge(), R, euler(0.1)).weights[0] ==
          metric_flow_step_symmetric(single_edge(), K, euler(0.1)).weights[0]);
  }

  TEST_CASE("plain and symmetric flows with equal endpoint curvature") {
    const double K[] = {0.3, 0.3};
    const auto plain = metric_flow_step(single_edge(), K, euler(0.1, true));
    const auto sym = metric_flow_step_symmetric(single_edge(), K, euler(0.1, true));
    CHECK(plain.weights == sym.weights);
    const auto p = metric_flow_step(single_edge(), K, euler(0.1)).weights[0] - 1.0;
    const auto q = metric_flow_step_symmetric(single_edge(), K, euler(0.1)).weights[0] - 1.0;
    CHECK(p == doctest::Approx(2 * q).epsilon(1e-12));
  }

  TEST_CASE("constant curvature is a fixed point of the normalized metric flow") {
    const auto c = gen::icosahedron().with_unit_weights();
    const auto K = vertex_backend(VertexBackend::Defect)(c);
    const auto s = metric_flow_step(c, K, euler(0.1, true));
    CHECK(std::equal(s.weights.begin(), s.weights.end(), c.weights(1).begin()));
  }

  TEST_CASE("zero curvature is stationary for the plain flow") {
    const auto c = gen::flat_torus_triangulated(4, 4);
    const std::vector<double> K(c.num_vertices(), 0.0);
    const auto s = metric_flow_step(c, K, euler(0.3));
    CHECK(std::equal(s.weights.begin(), s.weights.end(), c.weights(1).begin()));
  }

  TEST_CASE("shrink-step guard halves until valid") {
    const double K[] = {1.0, 1.0};
    const auto s = metric_flow_step(single_edge(), K, euler(1.0));
    CHECK(s.halvings >= 1);
    CHECK(s.h_used == 1.0 / std::pow(2.0, s.halvings));
    CHECK(s.weights[0] > 0.0);
    CHECK(s.valid);
  }

  TEST_CASE("clamp and abort guards") {
    const double K[] = {1.0, 1.0};
    FlowConfig cfg = euler(1.0);
    cfg.guard = GuardPolicy::Clamp;
    const auto s = metric_flow_step(single_edge(), K, cfg);
    CHECK(s.clamped);
    CHECK(s.weights[0] == cfg.clamp_floor);
    cfg.guard = GuardPolicy::Abort;
    try {
      metric_flow_step(single_edge(), K, cfg);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateMetric);
    }
  }

  TEST_CASE("triangle inequality is guarded") {
    const auto c = gen::filled_triangle();
    const std::vector<double> K = {3.0, 0.0, 0.0};
    FlowConfig cfg = euler(0.5);
    cfg.guard = GuardPolicy::Abort;
    CHECK_THROWS_AS(metric_flow_step(c, K, cfg), Error);
    cfg.guard = GuardPolicy::ShrinkStep;
    const auto s = metric_flow_step(c, K, cfg);
    CHECK(metric_is_valid(c, s.weights));
  }

  TEST_CASE("RK4 matches the closed form to fourth order") {
    const double K = 0.7;
    const double Ks[] = {K, K};
    for (double h : {0.1, 0.05}) {
      FlowConfig cfg = euler(h);
      cfg.integrator = Integrator::RK4;
      const double exact = std::exp(-2 * K * h);
      const double rk = metric_flow_step(single_edge(), Ks, cfg).weights[0];
      CHECK(std::abs(rk - exact) <= std::pow(2 * K * h, 5));
      const auto live = metric_flow_step(
          single_edge(), [&](const WeightedCellComplex&) { return std::vector<double>{K, K}; }, cfg);
      CHECK(live.weights[0] == doctest::Approx(rk).epsilon(1e-14));
      cfg.integrator = Integrator::Euler;
      const double eu = metric_flow_step(single_edge(), Ks, cfg).weights[0];
      CHECK(std::abs(eu - exact) > std::abs(rk - exact));
    }
  }

  TEST_CASE("forman step by hand") {
    FlowConfig cfg = forman_defaults();
    cfg.h = 0.1;
    const auto s = forman_flow_step(gen::filled_triangle().with_unit_weights(), cfg);
    for (double w : s.weights) CHECK(w == doctest::Approx(0.7).epsilon(1e-15));
    const auto hollow = gen::hollow_triangle().with_unit_weights();
    const auto h = forman_flow_step(hollow, forman_defaults());
    CHECK(std::equal(h.weights.begin(), h.weights.end(), hollow.weights(1).begin()));
  }

  TEST_CASE("normalized forman flow fixes constant curvature") {
    const auto t = gen::tetrahedron().with_unit_weights();
    const auto s = forman_flow_step(t, forman_defaults(true));
    CHECK(std::equal(s.weights.begin(), s.weights.end(), t.weights(1).begin()));
  }

  TEST_CASE("forman graph flow uses the reduced formula") {
    const auto c = gen::filled_triangle().with_unit_weights();
    CHECK(forman_flow_curvature(c, FlowMethod::FormanGraph) == std::vector<double>(3, 0.0));
    CHECK(forman_flow_curvature(c, FlowMethod::Forman) == std::vector<double>(3, 3.0));
  }

  TEST_CASE("flat grid under normalized forman flow stays put") {
    const auto c = gen::square_grid_torus(4, 4);
    FlowConfig cfg = forman_defaults(true);
    cfg.max_steps = 20;
    const auto t = run_flow(c, cfg);
    CHECK(t.records.size() == 21);
    for (const auto& r : t.records) CHECK(r.weights == t.records.front().weights);
    CHECK(t.curvature_dim == 1);
  }

  TEST_CASE("normalized metric flow on icosphere(2) contracts the spread") {
    FlowConfig cfg = euler(0.1, true);
    cfg.method = FlowMethod::MetricSymmetric;
    cfg.max_steps = 60;
    for (const auto& c : {gen::icosphere(2), gen::perturb_radially(gen::icosphere(2), 0.1, 7)}) {
      const auto t = run_flow(c, cfg);
      CHECK(t.curvature_dim == 0);
      for (std::size_t k = 11; k < t.records.size(); ++k) CHECK(t.records[k].spread <= t.records[k - 1].spread);
      for (const auto& r : t.records) {
        for (double w : r.weights) CHECK(w > 0.0);
      }
      for (std::size_t k = 1; k < t.records.size(); ++k) CHECK(t.records[k].time > t.records[k - 1].time);
    }
  }

  TEST_CASE("runs are deterministic") {
    FlowConfig cfg = euler(0.2, true);
    cfg.max_steps = 15;
    cfg.integrator = Integrator::RK4;
    const auto c = gen::perturb_radially(gen::icosphere(1), 0.1, 3);
    const auto a = run_flow(c, cfg);
    const auto b = run_flow(c, cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
      CHECK(a.records[k].weights == b.records[k].weights);
      CHECK(a.records[k].curvature == b.records[k].curvature);
    }
  }

  TEST_CASE("stop spread ends the run early") {
    FlowConfig cfg = euler(0.25, true);
    cfg.max_steps = 200;
    cfg.stop_spread = 1e-3;
    const auto t = run_flow(gen::perturb_radially(gen::icosphere(2), 0.1, 7), cfg);
    CHECK(t.records.size() < 201);
    CHECK(t.records.back().spread <= 1e-3);
    CHECK(t.status == FlowStatus::Stationary);
  }

  TEST_CASE("backend failures carry the step index") {
    FlowConfig cfg = euler(0.1);
    cfg.max_steps = 3;
    try {
      run_flow(gen::square_grid(2, 2), cfg);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("step 0") != std::string::npos);
    }
  }

  TEST_CASE("convergence of a synthetic exponential") {
    const auto t = synthetic_trace([](double s) { return 2.0 * std::exp(-0.5 * s); }, 200, 0.5);
    const auto r = detect_convergence(t);
    CHECK(r.converged);
    CHECK(r.exponential);
    CHECK(r.c1 == doctest::Approx(2.0).epsilon(0.05));
    CHECK(r.c2 == doctest::Approx(0.5).epsilon(0.05));
    CHECK(r.r_squared >= 0.99);
  }

  TEST_CASE("constant trace is exact") {
    const auto r = detect_convergence(synthetic_trace([](double) { return 1.0; }, 20, 1.0));
    CHECK(r.converged);
    CHECK(r.exact);
    CHECK_FALSE(r.exponential);
    CHECK(r.c2 == 0.0);
  }

  TEST_CASE("oscillation does not converge") {
    const auto r = detect_convergence(synthetic_trace([](double s) { return std::sin(s); }, 100, 0.7));
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.exponential);
    CHECK(r.c2 == 0.0);
  }

  TEST_CASE("short traces are rejected") {
    CHECK_THROWS_AS(detect_convergence(synthetic_trace([](double) { return 1.0; }, 9, 1.0)), Error);
  }

  TEST_CASE("positive rate only with exponential decay") {
    const auto slow = detect_convergence(synthetic_trace([](double s) { return 1.0 / (1.0 + s); }, 100, 1.0));
    CHECK((slow.c2 > 0.0) == slow.exponential);
  }
}
