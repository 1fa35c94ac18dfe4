#include "ricciforge/io.hpp"

#include "ricciforge/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace ricciforge::io {

using nlohmann::json;

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double from_json_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json vector_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error(ErrorCode::Io, "cannot format number");
  return std::string(buf, ptr);
}

ReportFormat report_format_for(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? ReportFormat::Csv : ReportFormat::Json;
}

std::string field_to_json(const CurvatureField& field) {
  json j;
  j["method"] = field.method;
  j["entity_dim"] = field.entity_dim;
  json values = json::array();
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    values.push_back({{"id", field.ids[i]}, {"value", number(field.values[i])}});
  }
  j["values"] = std::move(values);
  j["metadata"] = field.metadata;
  return j.dump(2) + "\n";
}

std::string field_to_csv(const CurvatureField& field) {
  std::string out = "id,value\n";
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    out += std::to_string(field.ids[i]) + "," + format_double(field.values[i]) + "\n";
  }
  return out;
}

CurvatureField field_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    CurvatureField f;
    f.method = j.at("method").get<std::string>();
    f.entity_dim = j.at("entity_dim").get<int>();
    for (const auto& v : j.at("values")) {
      f.ids.push_back(v.at("id").get<std::size_t>());
      f.values.push_back(from_json_number(v.at("value")));
    }
    if (j.contains("metadata")) f.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return f;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid field JSON: ") + e.what());
  }
}

CurvatureField field_from_csv(std::string_view text, std::string method, int entity_dim) {
  CurvatureField f;
  f.method = std::move(method);
  f.entity_dim = entity_dim;
  std::size_t line = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    const std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    if (line == 1) {
      if (row != "id,value") throw ParseError(1, "expected header 'id,value'");
      continue;
    }
    if (row.empty()) continue;
    const std::size_t comma = row.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, "expected 'id,value'");
    std::size_t id = 0;
    double value = 0.0;
    const auto r1 = std::from_chars(row.data(), row.data() + comma, id);
    const auto r2 = std::from_chars(row.data() + comma + 1, row.data() + row.size(), value);
    if (r1.ec != std::errc() || r1.ptr != row.data() + comma || r2.ec != std::errc() ||
        r2.ptr != row.data() + row.size()) {
      throw ParseError(line, "malformed row '" + std::string(row) + "'");
    }
    f.ids.push_back(id);
    f.values.push_back(value);
  }
  return f;
}

std::string trace_to_json(const FlowTrace& trace, const ConvergenceReport* convergence) {
  json j;
  const auto& cfg = trace.config;
  j["config"] = {{"method", to_string(cfg.method)},
                 {"normalized", cfg.normalized},
                 {"h", cfg.h},
                 {"max_steps", cfg.max_steps},
                 {"integrator", to_string(cfg.integrator)},
                 {"guard", to_string(cfg.guard)},
                 {"backend", to_string(cfg.backend)}};
  j["status"] = to_string(trace.status);
  j["message"] = trace.message;
  j["curvature_dim"] = trace.curvature_dim;
  json records = json::array();
  for (const auto& r : trace.records) {
    records.push_back({{"step", r.step},
                       {"time", r.time},
                       {"h", r.h},
                       {"mean", number(r.mean)},
                       {"spread", number(r.spread)},
                       {"valid", r.valid},
                       {"weights", vector_json(r.weights)},
                       {"curvature", vector_json(r.curvature)}});
  }
  j["records"] = std::move(records);
  if (convergence != nullptr) {
    const auto& c = *convergence;
    j["convergence"] = {{"converged", c.converged},
                        {"exact", c.exact},
                        {"exponential", c.exponential},
                        {"c1", number(c.c1)},
                        {"c2", number(c.c2)},
                        {"r_squared", number(c.r_squared)},
                        {"initial_deviation", number(c.initial_deviation)},
                        {"tail_spread", number(c.tail_spread)},
                        {"fit_points", c.fit_points},
                        {"message", c.message},
                        {"limit_curvature", vector_json(c.limit_curvature)},
                        {"limit_weights", vector_json(c.limit_weights)}};
  }
  return j.dump(2) + "\n";
}

std::string trace_to_csv(const FlowTrace& trace, const WeightedCellComplex& c) {
  std::string out = "step,time,edge,weight,curvature\n";
  for (const auto& r : trace.records) {
    for (std::size_t e = 0; e < r.weights.size(); ++e) {
      double k = 0.0;
      if (trace.curvature_dim == 1) {
        k = r.curvature[e];
      } else {
        const auto [a, b] = c.edge_vertices(e);
        k = 0.5 * (r.curvature[a] + r.curvature[b]);
      }
      out += std::to_string(r.step) + "," + format_double(r.time) + "," + std::to_string(e) + "," +
             format_double(r.weights[e]) + "," + format_double(k) + "\n";
    }
  }
  return out;
}

std::string report_to_json(const GeometryReport& report) {
  json j;
  j["euler_characteristic"] = report.euler_characteristic;
  j["by_euler"] = to_string(report.by_euler);
  if (report.by_curvature) {
    j["by_curvature"] = to_string(*report.by_curvature);
    j["agree"] = report.agree;
  }
  if (report.gauss_bonnet) {
    const auto& g = *report.gauss_bonnet;
    j["gauss_bonnet"] = {{"total_defect", g.total_defect},
                         {"expected", g.expected},
                         {"residual", g.residual},
                         {"closed_surface", g.closed_surface},
                         {"pass", g.pass}};
  }
  if (report.bonnet_myers) {
    const auto& b = *report.bonnet_myers;
    j["bonnet_myers"] = {{"k0", b.k0},
                         {"min_curvature", number(b.min_curvature)},
                         {"diameter", b.diameter},
                         {"bound", b.bound},
                         {"tolerance_factor", b.tolerance_factor},
                         {"precondition_met", b.precondition_met},
                         {"pass", b.pass}};
  }
  return j.dump(2) + "\n";
}

}  // namespace ricciforge::io
