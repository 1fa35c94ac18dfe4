#pragma once

#include "ricciforge/complex.hpp"
#include "ricciforge/curvature_field.hpp"
#include "ricciforge/flow.hpp"
#include "ricciforge/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ricciforge::io {

enum class MeshFormat { Off, Obj };

/// Triangulated, embedded complex: vertex weight 1, edge weight = length,
/// face weight = area. Polygons are fanned from their first vertex, with one
/// warning per fanned face. Throws ParseError (with line) or Error(Degenerate)
/// on a zero-length edge.
WeightedCellComplex parse_mesh(std::string_view text, MeshFormat format,
                               std::vector<std::string>* warnings = nullptr);
WeightedCellComplex load_mesh(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
/// Format from the extension (.off / .obj); throws InvalidArgument otherwise.
MeshFormat mesh_format_for(const std::filesystem::path& path);

std::string format_off(const WeightedCellComplex& c);
void write_off(const WeightedCellComplex& c, const std::filesystem::path& path);

struct ImageGrid {
  WeightedCellComplex complex;
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 0;
  double height_scale = 0.0;
  std::vector<unsigned> gray;  // row-major, width * height
};

/// Square grid from a PGM (P2 or P5). Pixel = 2-cell with weight gray + 1,
/// grid edge between pixels a and b has weight sqrt(1 + s^2 (g_a - g_b)^2)
/// (weight 1 on the image border), vertex weights 0. s defaults to 1/maxval.
ImageGrid parse_pgm(std::string_view bytes, std::optional<double> height_scale = std::nullopt);
ImageGrid load_image_grid(const std::filesystem::path& path, std::optional<double> height_scale = std::nullopt);
/// Grid complex from gray levels directly (same weighting as parse_pgm).
ImageGrid image_grid(std::size_t width, std::size_t height, std::vector<unsigned> gray, unsigned maxval,
                     std::optional<double> height_scale = std::nullopt);

struct Graph {
  WeightedCellComplex complex;
  std::vector<std::string> names;  // vertex index -> node name
};

/// Edge list "u v w_e [w_u w_v]", whitespace separated, '#' comments.
/// Node weights default to 1. Throws ParseError on malformed lines,
/// non-positive weights, self loops, duplicate edges or conflicting node weights.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);
std::string format_graph(const WeightedCellComplex& c, const std::vector<std::string>& names = {});
void write_graph(const WeightedCellComplex& c, const std::filesystem::path& path,
                 const std::vector<std::string>& names = {});

/// Shortest text that parses back to the same double.
std::string format_double(double x);

enum class ReportFormat { Json, Csv };
/// From the extension (.csv -> Csv, anything else -> Json).
ReportFormat report_format_for(const std::filesystem::path& path);

/// {method, entity_dim, values: [{id, value}], metadata}
std::string field_to_json(const CurvatureField& field);
/// "id,value" header plus one row per entity.
std::string field_to_csv(const CurvatureField& field);
CurvatureField field_from_json(std::string_view text);
/// Method and entity dimension are not stored in CSV; they are passed in.
CurvatureField field_from_csv(std::string_view text, std::string method = "", int entity_dim = 0);

/// Trace JSON carries config, records and an optional convergence report.
std::string trace_to_json(const FlowTrace& trace, const ConvergenceReport* convergence = nullptr);
/// One row per (record, edge): step,time,edge,weight,curvature. For metric
/// flows the curvature column is the edge's driving value (K_i + K_j) / 2.
std::string trace_to_csv(const FlowTrace& trace, const WeightedCellComplex& c);

std::string report_to_json(const GeometryReport& report);

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace ricciforge::io
