#include "ricciforge/flow.hpp"

#include "ricciforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ricciforge {

namespace {

double deviation(const std::vector<double>& x, const std::vector<double>& limit) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - limit[i]));
  return d;
}

std::vector<double> tail_mean(const std::vector<FlowRecord>& records, std::size_t tail, bool weights) {
  const std::size_t n = records.size();
  const auto& last = weights ? records.back().weights : records.back().curvature;
  std::vector<double> mean(last.size(), 0.0);
  for (std::size_t k = n - tail; k < n; ++k) {
    const auto& x = weights ? records[k].weights : records[k].curvature;
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += x[i];
  }
  for (double& m : mean) m /= static_cast<double>(tail);
  return mean;
}

}  // namespace

ConvergenceReport detect_convergence(const FlowTrace& trace, double fit_threshold) {
  const auto& rec = trace.records;
  const std::size_t n = rec.size();
  if (n < 10) {
    throw Error(ErrorCode::InvalidArgument, "convergence detection needs at least 10 records, got " + std::to_string(n));
  }
  ConvergenceReport r;

  bool finite = true;
  for (const auto& x : rec) {
    for (double v : x.curvature) finite = finite && std::isfinite(v);
    for (double v : x.weights) finite = finite && std::isfinite(v);
  }
  if (!finite) {
    r.message = "non-finite values in the trace";
    return r;
  }

  bool constant = true;
  for (const auto& x : rec) constant = constant && x.curvature == rec.front().curvature;
  if (constant) {
    r.converged = true;
    r.exact = true;
    r.limit_curvature = rec.front().curvature;
    r.limit_weights = rec.back().weights;
    r.message = "curvature constant over the trace";
    return r;
  }

  const std::size_t tail = std::max<std::size_t>(3, n / 10);
  r.limit_curvature = tail_mean(rec, tail, false);
  r.limit_weights = tail_mean(rec, tail, true);

  std::vector<double> D(n);
  for (std::size_t k = 0; k < n; ++k) D[k] = deviation(rec[k].curvature, r.limit_curvature);
  r.initial_deviation = D[0];
  r.tail_spread = *std::max_element(D.end() - static_cast<std::ptrdiff_t>(tail), D.end());

  const bool weights_positive =
      std::all_of(r.limit_weights.begin(), r.limit_weights.end(), [](double w) { return w > 0.0; });
  r.converged = weights_positive && r.tail_spread <= std::max(1e-12, 1e-3 * r.initial_deviation);

  // Fit log D = log c1 - c2 t between a burn-in and the tail, above the noise floor.
  const double floor = 10.0 * r.tail_spread;
  const std::size_t burn_in = n >= 4 * tail ? tail : 0;
  double st = 0, sy = 0, stt = 0, sty = 0, syy = 0;
  std::size_t m = 0;
  for (std::size_t k = burn_in; k + tail < n; ++k) {
    if (!(D[k] > floor) || !(D[k] > 0.0)) continue;
    const double t = rec[k].time, y = std::log(D[k]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    syy += y * y;
    ++m;
  }
  r.fit_points = m;
  if (m >= 3) {
    const double mm = static_cast<double>(m);
    const double vt = stt - st * st / mm;
    const double vy = syy - sy * sy / mm;
    const double cty = sty - st * sy / mm;
    if (vt > 0.0) {
      const double slope = cty / vt;
      const double intercept = (sy - slope * st) / mm;
      r.c2 = std::max(0.0, -slope);
      r.c1 = std::exp(intercept);
      r.r_squared = vy > 0.0 ? (cty * cty) / (vt * vy) : 1.0;
      r.exponential = r.converged && -slope > 0.0 && r.r_squared >= fit_threshold;
      if (!r.exponential) r.c2 = 0.0;
    }
  }
  if (!r.converged) {
    r.message = weights_positive ? "tail does not settle" : "limit weights are not positive";
  } else {
    r.message = r.exponential ? "exponential convergence" : "converged, no exponential fit";
  }
  return r;
}

}  // namespace ricciforge
