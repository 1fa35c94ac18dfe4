#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ricciforge {

using Vec3 = std::array<double, 3>;

/// Cells above this dimension are rejected at ingestion.
inline constexpr int kMaxCellDimension = 3;

struct CellId {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const CellId&, const CellId&) = default;
};

inline CellId vertex_id(std::size_t i) { return {0, i}; }
inline CellId edge_id(std::size_t i) { return {1, i}; }
inline CellId face_id(std::size_t i) { return {2, i}; }

/// Input description of one cell. `faces` are indices of cells one dimension
/// lower. For 2-cells they must form a single closed edge cycle, in any order.
struct CellSpec {
  std::vector<std::size_t> faces;
  double weight = 1.0;
};

/// cells[p] lists the p-cells; cells[0] entries carry no faces.
struct ComplexDescription {
  std::vector<std::vector<CellSpec>> cells;
  std::optional<std::vector<Vec3>> positions;
};

/// Immutable weighted CW complex (dimension <= 3) with up/down incidence.
///
/// Topology and vertex positions are shared between copies; only weights are
/// owned per instance, so `with_weights` is cheap and flows can produce a new
/// complex per step without touching incidence data.
///
/// 2-cells keep an oriented boundary cycle: face_edges(f)[i] joins
/// face_vertices(f)[i] and face_vertices(f)[(i + 1) % k].
class WeightedCellComplex {
 public:
  WeightedCellComplex();

  /// Highest dimension holding at least one cell, -1 when empty.
  int dimension() const;
  std::size_t num_cells(int dim) const;
  std::size_t num_vertices() const { return num_cells(0); }
  std::size_t num_edges() const { return num_cells(1); }
  std::size_t num_faces() const { return num_cells(2); }

  bool contains(CellId id) const;

  std::span<const std::size_t> faces(CellId id) const;
  std::span<const std::size_t> cofaces(CellId id) const;

  double weight(CellId id) const;
  std::span<const double> weights(int dim) const;

  std::array<std::size_t, 2> edge_vertices(std::size_t edge) const;
  std::size_t other_vertex(std::size_t edge, std::size_t vertex) const;
  std::span<const std::size_t> face_edges(std::size_t face) const;
  std::span<const std::size_t> face_vertices(std::size_t face) const;
  /// Edges at a vertex (its 1-cofaces).
  std::span<const std::size_t> vertex_edges(std::size_t vertex) const;
  /// Distinct vertices of a cell of any dimension, sorted ascending
  /// (for 2-cells use face_vertices to get the cycle order).
  std::vector<std::size_t> cell_vertices(CellId id) const;

  /// First edge joining u and v, if any.
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  bool has_embedding() const { return positions_ != nullptr; }
  std::span<const Vec3> positions() const;
  const Vec3& position(std::size_t vertex) const;

  /// Copy with the weights of one dimension replaced (same validation rules
  /// as build_complex).
  WeightedCellComplex with_weights(int dim, std::vector<double> weights) const;
  /// Copy with every weight set to 1, vertices included.
  WeightedCellComplex with_unit_weights() const;
  /// Copy with vertex positions attached (or replaced).
  WeightedCellComplex with_positions(std::vector<Vec3> positions) const;

  struct Topology;

 private:
  friend WeightedCellComplex build_complex(const ComplexDescription&);

  std::shared_ptr<const Topology> topo_;
  std::vector<std::vector<double>> weights_;
  std::shared_ptr<const std::vector<Vec3>> positions_;
};

/// Validates the description and builds incidence indexes.
/// Throws Error with DanglingFace, InvalidWeight, MalformedEdge,
/// MalformedCell or DimensionTooHigh.
WeightedCellComplex build_complex(const ComplexDescription& description);

/// Incremental construction helper used by loaders and generators.
class ComplexBuilder {
 public:
  std::size_t add_vertex(double weight = 1.0);
  std::size_t add_vertex(const Vec3& position, double weight = 1.0);
  std::size_t add_edge(std::size_t u, std::size_t v, double weight = 1.0);
  /// Returns the existing u-v edge or creates it.
  std::size_t edge_between(std::size_t u, std::size_t v, double weight = 1.0);
  std::size_t add_face(std::vector<std::size_t> edges, double weight = 1.0);
  /// Face from a vertex cycle; missing edges are created with `edge_weight`.
  std::size_t add_face_by_vertices(std::span<const std::size_t> cycle, double weight = 1.0,
                                   double edge_weight = 1.0);
  std::size_t add_solid(std::vector<std::size_t> faces, double weight = 1.0);

  std::size_t num_vertices() const { return desc_.cells.empty() ? 0 : desc_.cells[0].size(); }
  ComplexDescription description() const;
  WeightedCellComplex build() const { return build_complex(description()); }

 private:
  std::vector<CellSpec>& level(int dim);

  ComplexDescription desc_;
  std::vector<Vec3> positions_;
  bool any_position_ = false;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> vertex_edges_;  // (neighbour, edge)
};

struct ValidationReport {
  std::array<std::size_t, kMaxCellDimension + 1> counts{};
  long euler_characteristic = 0;
  std::size_t boundary_edges = 0;      // edges in exactly one 2-cell
  std::size_t nonmanifold_edges = 0;   // edges in three or more 2-cells
  std::size_t isolated_vertices = 0;
  bool all_faces_triangles = false;
  bool all_faces_quads = false;
  bool closed_surface = false;         // every edge in exactly two 2-cells, no 3-cells
};

ValidationReport inspect(const WeightedCellComplex& c);

/// All p-cells beta != alpha that share a (p+1)-coface with alpha or a
/// (p-1)-face with alpha, but not both. Sorted by index.
std::vector<CellId> parallel_neighbors(const WeightedCellComplex& c, CellId alpha);

/// Alternating cell count.
long euler_characteristic(const WeightedCellComplex& c);

struct Thickness {
  double value = 0.0;
  bool degenerate = false;
};

/// min over all faces b of the cell (any dimension l) of Vol(b) / diam(b)^l,
/// with Vol = 1 for vertices. Needs an embedding.
Thickness thickness(const WeightedCellComplex& c, CellId cell);

/// Copy with weights from the embedding: vertices 1, edges length, 2-cells
/// area, 3-cells volume. Throws MissingEmbedding.
WeightedCellComplex with_geometric_weights(const WeightedCellComplex& c);

/// Shortest-path distances on the 1-skeleton with edge weights as lengths.
std::vector<double> distances_from(const WeightedCellComplex& c, std::size_t source);
double geodesic_distance(const WeightedCellComplex& c, std::size_t u, std::size_t v);
/// Max over vertex pairs; throws Disconnected when the 1-skeleton is not connected.
double diameter(const WeightedCellComplex& c);

}  // namespace ricciforge
