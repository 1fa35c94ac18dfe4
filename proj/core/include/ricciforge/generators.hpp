#pragma once

#include "ricciforge/complex.hpp"

#include <cstddef>
#include <cstdint>

namespace ricciforge::gen {

// Embedded triangle meshes carry geometric weights: vertex 1, edge length,
// face area. Intrinsic ones (no positions) carry edge lengths and face areas.

WeightedCellComplex filled_triangle(double side = 1.0);
/// Three vertices and three edges, no 2-cell.
WeightedCellComplex hollow_triangle(double side = 1.0);
WeightedCellComplex tetrahedron(double edge = 1.0);
/// Unit cube surface, each square split into two triangles.
WeightedCellComplex cube_triangulated();
WeightedCellComplex octahedron();
WeightedCellComplex icosahedron();
/// Icosahedron subdivided n times, projected to the sphere (n=2: 162 vertices).
WeightedCellComplex icosphere(int subdivisions, double radius = 1.0);
/// Moves every vertex along its radius by a factor in [1 - amount, 1 + amount].
WeightedCellComplex perturb_radially(const WeightedCellComplex& c, double amount, std::uint64_t seed);

/// nx x ny unit squares in the plane, each split along a diagonal.
WeightedCellComplex planar_triangulated_grid(std::size_t nx, std::size_t ny);
/// nx x ny unit squares (quad 2-cells), embedded in the plane.
WeightedCellComplex square_grid(std::size_t nx, std::size_t ny);
/// Periodic nx x ny square grid (nx, ny >= 3), unit weights, no embedding.
WeightedCellComplex square_grid_torus(std::size_t nx, std::size_t ny);
/// Periodic triangulated grid, intrinsic lengths 1, 1, sqrt(2); flat, no embedding.
WeightedCellComplex flat_torus_triangulated(std::size_t nx, std::size_t ny);
/// nx x ny x nz unit cubes with 3-cells, unit weights, embedded.
WeightedCellComplex cube_grid(std::size_t nx, std::size_t ny, std::size_t nz);
/// Triangulated torus of revolution (major radius R, minor radius r).
WeightedCellComplex torus_of_revolution(double R, double r, std::size_t nu, std::size_t nv);
/// Closed genus-2 surface: boundary of a 5x3x1 block of unit cubes with two
/// cubes removed, squares split into triangles. chi = -2.
WeightedCellComplex genus2_surface();
/// Hexagonal prism of the given length and unit circumradius, closed by two
/// low pyramids. Every angle defect is positive but the diameter grows with length.
WeightedCellComplex capped_prism(double length, double cap_height = 0.2);

}  // namespace ricciforge::gen
