#include "ricciforge/flow.hpp"

#include "ricciforge/curvature_field.hpp"
#include "ricciforge/error.hpp"
#include "ricciforge/forman.hpp"
#include "ricciforge/metric_curvature.hpp"
#include "ricciforge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ricciforge {

std::string_view to_string(FlowMethod m) {
  switch (m) {
    case FlowMethod::Metric: return "metric";
    case FlowMethod::MetricSymmetric: return "metric-sym";
    case FlowMethod::Forman: return "forman";
    case FlowMethod::FormanGraph: return "forman-graph";
  }
  return "metric";
}

std::string_view to_string(Integrator i) { return i == Integrator::Euler ? "euler" : "rk4"; }

std::string_view to_string(GuardPolicy g) {
  switch (g) {
    case GuardPolicy::ShrinkStep: return "shrink";
    case GuardPolicy::Clamp: return "clamp";
    case GuardPolicy::Abort: return "abort";
  }
  return "shrink";
}

std::string_view to_string(VertexBackend b) {
  switch (b) {
    case VertexBackend::Defect: return "defect";
    case VertexBackend::DefectDensity: return "defect-density";
    case VertexBackend::WaldStar: return "wald";
  }
  return "defect-density";
}

std::string_view to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::Completed: return "completed";
    case FlowStatus::Stationary: return "stationary";
    case FlowStatus::GuardStopped: return "guard-stopped";
  }
  return "completed";
}

void FlowConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "step size must be positive");
  if (max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  if (max_halvings < 0) throw Error(ErrorCode::InvalidArgument, "max_halvings must be non-negative");
  if (!(clamp_floor > 0.0 && clamp_floor < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "clamp_floor must lie in (0, 1)");
  }
}

FlowConfig forman_defaults(bool normalized) {
  FlowConfig cfg;
  cfg.method = FlowMethod::Forman;
  cfg.normalized = normalized;
  cfg.h = 1.0;
  return cfg;
}

VertexCurvatureFn vertex_backend(VertexBackend backend) {
  switch (backend) {
    case VertexBackend::Defect:
      return [](const WeightedCellComplex& c) {
        return parallel_map(c.num_vertices(), [&](std::size_t v) { return defect_curvature(c, v); });
      };
    case VertexBackend::DefectDensity:
      return [](const WeightedCellComplex& c) {
        return parallel_map(c.num_vertices(), [&](std::size_t v) { return defect_density(c, v); });
      };
    case VertexBackend::WaldStar:
      return [](const WeightedCellComplex& c) {
        return parallel_map(c.num_vertices(), [&](std::size_t v) { return vertex_wald_curvature(c, v); }, 4);
      };
  }
  throw Error(ErrorCode::InvalidArgument, "unknown vertex backend");
}

bool metric_is_valid(const WeightedCellComplex& c, std::span<const double> lengths) {
  for (double l : lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) return false;
  }
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    double sum = 0.0, longest = 0.0;
    for (std::size_t e : c.face_edges(f)) {
      sum += lengths[e];
      longest = std::max(longest, lengths[e]);
    }
    if (!(longest < sum - longest)) return false;
  }
  return true;
}

namespace {

// Per-edge growth rate r in dl/dt = r l.
std::vector<double> metric_rates(const WeightedCellComplex& c, const std::vector<double>& K, bool symmetric,
                                 bool normalized) {
  if (K.size() != c.num_vertices()) {
    throw Error(ErrorCode::InvalidArgument, "vertex curvature size does not match the complex");
  }
  const double mean = normalized ? stable_mean(K) : 0.0;
  std::vector<double> r(c.num_edges());
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const auto [i, j] = c.edge_vertices(e);
    if (normalized) {
      r[e] = mean - 0.5 * (K[i] + K[j]);
    } else {
      r[e] = symmetric ? -0.5 * (K[i] + K[j]) : -(K[i] + K[j]);
    }
  }
  return r;
}

using Candidate = std::function<std::vector<double>(double h)>;
using Validity = std::function<bool(std::span<const double>)>;

// Applies the guard policy to candidate(h) for h, h/2, ...
StepResult guarded(const WeightedCellComplex& c, const FlowConfig& cfg, const Candidate& candidate,
                   const Validity& valid) {
  cfg.validate();
  const auto old = c.weights(1);
  StepResult out;
  double h = cfg.h;
  for (int halvings = 0;; ++halvings) {
    std::vector<double> w;
    bool ok = true;
    try {
      w = candidate(h);
      ok = valid(w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate && e.code() != ErrorCode::InvalidWeight) throw;
      ok = false;  // an intermediate stage left the valid region
    }
    if (ok) {
      out.weights = std::move(w);
      out.h_used = h;
      out.halvings = halvings;
      return out;
    }
    switch (cfg.guard) {
      case GuardPolicy::Abort:
        throw Error(ErrorCode::DegenerateMetric, "step of size " + std::to_string(h) + " leaves the valid region");
      case GuardPolicy::Clamp: {
        if (w.size() != old.size()) w.assign(old.begin(), old.end());
        for (std::size_t e = 0; e < w.size(); ++e) {
          const double floor = cfg.clamp_floor * old[e];
          if (!(w[e] >= floor) || !std::isfinite(w[e])) w[e] = floor;
        }
        out.weights = std::move(w);
        out.h_used = h;
        out.valid = false;
        out.clamped = true;
        return out;
      }
      case GuardPolicy::ShrinkStep:
        if (halvings >= cfg.max_halvings) {
          out.weights.assign(old.begin(), old.end());
          out.h_used = 0.0;
          out.halvings = halvings;
          out.valid = false;
          return out;
        }
        h *= 0.5;
        break;
    }
  }
}

std::vector<double> axpy(std::span<const double> l, const std::vector<double>& k, double a) {
  std::vector<double> out(l.begin(), l.end());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] += a * k[e];
  return out;
}

StepResult metric_step_frozen(const WeightedCellComplex& c, std::span<const double> K, const FlowConfig& cfg,
                              bool symmetric) {
  const auto rates = metric_rates(c, std::vector<double>(K.begin(), K.end()), symmetric, cfg.normalized);
  const auto l = c.weights(1);
  auto candidate = [&](double h) {
    std::vector<double> w(l.size());
    for (std::size_t e = 0; e < l.size(); ++e) {
      const double x = h * rates[e];
      // Euler, or RK4 on the linear ODE with frozen rate (Taylor polynomial of exp).
      const double factor =
          cfg.integrator == Integrator::Euler ? 1.0 + x : 1.0 + x * (1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0)));
      w[e] = l[e] * factor;
    }
    return w;
  };
  return guarded(c, cfg, candidate, [&](std::span<const double> w) { return metric_is_valid(c, w); });
}

StepResult metric_step_live(const WeightedCellComplex& c, const VertexCurvatureFn& K, const FlowConfig& cfg,
                            bool symmetric) {
  const auto l = c.weights(1);
  auto deriv = [&](std::span<const double> lengths) {
    const WeightedCellComplex state = c.with_weights(1, std::vector<double>(lengths.begin(), lengths.end()));
    const auto r = metric_rates(state, K(state), symmetric, cfg.normalized);
    std::vector<double> d(lengths.size());
    for (std::size_t e = 0; e < d.size(); ++e) d[e] = r[e] * lengths[e];
    return d;
  };
  const auto k1 = deriv(l);
  auto candidate = [&](double h) {
    if (cfg.integrator == Integrator::Euler) return axpy(l, k1, h);
    auto stage = [&](const std::vector<double>& x) {
      if (!metric_is_valid(c, x)) throw Error(ErrorCode::Degenerate, "RK4 stage left the valid region");
      return deriv(x);
    };
    const auto k2 = stage(axpy(l, k1, h / 2.0));
    const auto k3 = stage(axpy(l, k2, h / 2.0));
    const auto k4 = stage(axpy(l, k3, h));
    std::vector<double> w(l.begin(), l.end());
    for (std::size_t e = 0; e < w.size(); ++e) w[e] += h / 6.0 * (k1[e] + 2.0 * k2[e] + 2.0 * k3[e] + k4[e]);
    return w;
  };
  return guarded(c, cfg, candidate, [&](std::span<const double> w) { return metric_is_valid(c, w); });
}

}  // namespace

StepResult metric_flow_step(const WeightedCellComplex& c, std::span<const double> K, const FlowConfig& cfg) {
  return metric_step_frozen(c, K, cfg, false);
}

StepResult metric_flow_step(const WeightedCellComplex& c, const VertexCurvatureFn& K, const FlowConfig& cfg) {
  return metric_step_live(c, K, cfg, false);
}

StepResult metric_flow_step_symmetric(const WeightedCellComplex& c, std::span<const double> K,
                                      const FlowConfig& cfg) {
  return metric_step_frozen(c, K, cfg, true);
}

StepResult metric_flow_step_symmetric(const WeightedCellComplex& c, const VertexCurvatureFn& K,
                                      const FlowConfig& cfg) {
  return metric_step_live(c, K, cfg, true);
}

std::vector<double> forman_flow_curvature(const WeightedCellComplex& c, FlowMethod method) {
  if (method == FlowMethod::FormanGraph) {
    return parallel_map(c.num_edges(), [&](std::size_t e) { return forman_ricci_graph(c, e); });
  }
  return parallel_map(c.num_edges(), [&](std::size_t e) { return forman_ricci_edge(c, e); });
}

namespace {

StepResult forman_step_with(const WeightedCellComplex& c, const std::vector<double>& ric, const FlowConfig& cfg) {
  const double mean = cfg.normalized ? stable_mean(ric) : 0.0;
  const auto g = c.weights(1);
  auto candidate = [&](double h) {
    std::vector<double> w(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) w[e] = g[e] * (1.0 - h * (ric[e] - mean));
    return w;
  };
  auto positive = [](std::span<const double> w) {
    return std::all_of(w.begin(), w.end(), [](double x) { return x > 0.0 && std::isfinite(x); });
  };
  return guarded(c, cfg, candidate, positive);
}

}  // namespace

StepResult forman_flow_step(const WeightedCellComplex& c, const FlowConfig& cfg) {
  return forman_step_with(c, forman_flow_curvature(c, cfg.method), cfg);
}

namespace {

void fill_stats(FlowRecord& r) {
  r.mean = stable_mean(r.curvature);
  r.spread = 0.0;
  for (double x : r.curvature) r.spread = std::max(r.spread, std::abs(x - r.mean));
}

}  // namespace

FlowTrace run_flow(const WeightedCellComplex& c, const FlowConfig& cfg) {
  cfg.validate();
  const bool forman = cfg.method == FlowMethod::Forman || cfg.method == FlowMethod::FormanGraph;
  const bool symmetric = cfg.method == FlowMethod::MetricSymmetric;
  const VertexCurvatureFn K = forman ? VertexCurvatureFn{} : vertex_backend(cfg.backend);
  auto curvature = [&](const WeightedCellComplex& state, std::size_t step) {
    try {
      return forman ? forman_flow_curvature(state, cfg.method) : K(state);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(step) + ": " + e.detail());
    }
  };

  FlowTrace trace;
  trace.config = cfg;
  trace.curvature_dim = forman ? 1 : 0;

  WeightedCellComplex state = c;
  FlowRecord first;
  first.weights.assign(c.weights(1).begin(), c.weights(1).end());
  first.curvature = curvature(state, 0);
  fill_stats(first);
  trace.records.push_back(std::move(first));

  double time = 0.0;
  for (std::size_t step = 1; step <= cfg.max_steps; ++step) {
    if (cfg.stop_spread && trace.records.back().spread <= *cfg.stop_spread) {
      trace.status = FlowStatus::Stationary;
      trace.message = "curvature spread reached " + std::to_string(*cfg.stop_spread);
      break;
    }
    const auto& current = trace.records.back().curvature;
    StepResult s;
    try {
      if (forman) {
        s = forman_step_with(state, current, cfg);
      } else if (cfg.integrator == Integrator::Euler) {
        s = symmetric ? metric_flow_step_symmetric(state, current, cfg) : metric_flow_step(state, current, cfg);
      } else {
        s = symmetric ? metric_flow_step_symmetric(state, K, cfg) : metric_flow_step(state, K, cfg);
      }
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(step) + ": " + e.detail());
    }
    if (!s.valid && !s.clamped) {
      trace.status = FlowStatus::GuardStopped;
      trace.message = "step " + std::to_string(step) + ": no valid step after " + std::to_string(s.halvings) +
                      " halvings";
      break;
    }
    time += s.h_used;
    state = state.with_weights(1, s.weights);
    FlowRecord r;
    r.step = step;
    r.time = time;
    r.h = s.h_used;
    r.weights = std::move(s.weights);
    r.valid = s.valid;
    if (s.clamped) {
      // The clamped metric may not admit curvature; keep the previous values.
      r.curvature = trace.records.back().curvature;
      fill_stats(r);
      trace.records.push_back(std::move(r));
      trace.status = FlowStatus::GuardStopped;
      trace.message = "step " + std::to_string(step) + ": weights clamped";
      break;
    }
    r.curvature = curvature(state, step);
    fill_stats(r);
    trace.records.push_back(std::move(r));
  }
  return trace;
}

}  // namespace ricciforge
