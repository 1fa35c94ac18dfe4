#pragma once

#include "ricciforge/complex.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ricciforge {

enum class FlowMethod {
  Metric,           // dl/dt = -(K_i + K_j) l
  MetricSymmetric,  // dl/dt = -((K_i + K_j) / 2) l
  Forman,           // gamma' = gamma (1 - h Ric_F), edge formula
  FormanGraph,      // same with the reduced graph formula
};

enum class Integrator { Euler, RK4 };
enum class GuardPolicy { ShrinkStep, Clamp, Abort };
enum class VertexBackend { Defect, DefectDensity, WaldStar };

std::string_view to_string(FlowMethod m);
std::string_view to_string(Integrator i);
std::string_view to_string(GuardPolicy g);
std::string_view to_string(VertexBackend b);

struct FlowConfig {
  FlowMethod method = FlowMethod::Metric;
  bool normalized = false;
  double h = 0.1;
  std::size_t max_steps = 100;
  Integrator integrator = Integrator::Euler;
  GuardPolicy guard = GuardPolicy::ShrinkStep;
  VertexBackend backend = VertexBackend::Defect;
  int max_halvings = 30;
  double clamp_floor = 1e-6;  // clamp policy: fraction of the previous weight
  /// Stop once max |K - mean| falls to this value (disabled when empty).
  std::optional<double> stop_spread;

  /// Throws InvalidArgument when h <= 0 or max_steps == 0.
  void validate() const;
};

/// Forman flows use h = 1 (one clock tick) unless overridden.
FlowConfig forman_defaults(bool normalized = false);

/// Vertex curvature of the metric flows for a given complex state.
using VertexCurvatureFn = std::function<std::vector<double>(const WeightedCellComplex&)>;
VertexCurvatureFn vertex_backend(VertexBackend backend);

struct StepResult {
  std::vector<double> weights;
  double h_used = 0.0;
  int halvings = 0;
  bool valid = true;    // false when the clamp policy had to clip
  bool clamped = false;
};

/// Lengths stay positive and every face keeps strict polygon inequalities.
bool metric_is_valid(const WeightedCellComplex& c, std::span<const double> lengths);

/// One Euler step of the plain metric flow with curvature frozen at K.
StepResult metric_flow_step(const WeightedCellComplex& c, std::span<const double> K, const FlowConfig& cfg);
/// One step (Euler or RK4 per cfg) re-evaluating curvature at each stage.
StepResult metric_flow_step(const WeightedCellComplex& c, const VertexCurvatureFn& K, const FlowConfig& cfg);

StepResult metric_flow_step_symmetric(const WeightedCellComplex& c, std::span<const double> K,
                                      const FlowConfig& cfg);
StepResult metric_flow_step_symmetric(const WeightedCellComplex& c, const VertexCurvatureFn& K,
                                      const FlowConfig& cfg);

/// Edge curvature driving the Forman flows (edge formula, or graph formula
/// for FormanGraph).
std::vector<double> forman_flow_curvature(const WeightedCellComplex& c, FlowMethod method);
StepResult forman_flow_step(const WeightedCellComplex& c, const FlowConfig& cfg);

struct FlowRecord {
  std::size_t step = 0;
  double time = 0.0;
  double h = 0.0;                  // step size that produced this record (0 for the initial one)
  std::vector<double> weights;     // edge weights
  std::vector<double> curvature;   // vertex K (metric) or edge Ric_F (Forman)
  double mean = 0.0;
  double spread = 0.0;             // max |curvature - mean|
  bool valid = true;
};

enum class FlowStatus { Completed, Stationary, GuardStopped };

std::string_view to_string(FlowStatus s);

struct FlowTrace {
  FlowConfig config;
  std::vector<FlowRecord> records;
  FlowStatus status = FlowStatus::Completed;
  std::string message;
  int curvature_dim = 0;  // 0 for metric flows, 1 for Forman flows
};

/// Runs up to cfg.max_steps steps. Record 0 is the input state. Stops early
/// when cfg.stop_spread is reached or a guard gives up. Backend failures are
/// rethrown with the step index in the message.
FlowTrace run_flow(const WeightedCellComplex& c, const FlowConfig& cfg);

struct ConvergenceReport {
  bool converged = false;
  bool exact = false;        // curvature constant over the whole trace
  bool exponential = false;  // c2 > 0 and r_squared >= threshold
  std::vector<double> limit_curvature;
  std::vector<double> limit_weights;
  double c1 = 0.0;
  double c2 = 0.0;
  double r_squared = 0.0;
  double initial_deviation = 0.0;  // max_i |K_i(0) - K_i(inf)|
  double tail_spread = 0.0;
  std::size_t fit_points = 0;
  std::string message;
};

/// Tail-averaged limits and a least-squares fit of log max_i |K_i(t) - K_i(inf)|
/// against t. Needs at least 10 records (InvalidArgument otherwise).
ConvergenceReport detect_convergence(const FlowTrace& trace, double fit_threshold = 0.9);

}  // namespace ricciforge
