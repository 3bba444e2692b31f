#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "orbitile/classification.hpp"

namespace orbitile {

// Planar isometry x -> m x + t.
struct PlanarIsometry {
    Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
    Eigen::Vector2d t = Eigen::Vector2d::Zero();

    Eigen::Vector2d operator()(const Eigen::Vector2d& x) const { return m * x + t; }
    PlanarIsometry then(const PlanarIsometry& g) const;  // g after this
    PlanarIsometry inverse() const;
};

PlanarIsometry reflection_across(const Eigen::Vector2d& p0, const Eigen::Vector2d& p1);

// One congruent rhombus (or square) of the lattice. Vertices are ordered
// base, base+u, base+u+v, base+v. ring_index == max(|i|, |j|) of
// lattice_coords.
struct RhombusTile {
    std::array<Eigen::Vector2d, 4> vertices;
    int ring_index = 0;
    Eigen::Vector2i lattice_coords = Eigen::Vector2i::Zero();
    int case_id = 0;
    int fundamental_copies = 0;  // orbit-space copies per tile, at most 4

    double area() const;
};

// Fundamental rhombus/square of a flat case (14..17): the square for 17, the
// doubled equilateral for 16, and the reflected-then-doubled triangles for 14
// and 15. Throws std::domain_error for non-flat cases.
RhombusTile fundamental_rhombus(const OrbitSpaceCase& flat_case);

// Ring-indexed lattice of congruent rhombi. Ring 0 is the tile containing
// the fundamental domain; ring n adds every tile with max(|i|,|j|) == n.
struct PlanarRingTiling {
    int case_id = 0;
    std::vector<Eigen::Vector2d> fundamental_polygon;  // orbit space, ccw, inside tile (0,0)
    RhombusTile fundamental;
    Eigen::Vector2d u, v;  // lattice basis (rhombus edge vectors)
    int copies_per_tile = 0;
    int n_max = -1;
    std::vector<RhombusTile> tiles;  // ordered by (ring, i, j)

    Eigen::Vector2d lattice_coords_of(const Eigen::Vector2d& x) const;  // fractional (s,t)
    Eigen::Vector2i tile_of(const Eigen::Vector2d& x) const;
    std::size_t tiles_in_ring(int n) const;  // count present in ring n

    // Generators of the wallpaper group: reflections across the fundamental
    // polygon's edges.
    std::vector<PlanarIsometry> edge_reflections() const;
};

PlanarRingTiling build_rings(const RhombusTile& fundamental, int n_max);
PlanarRingTiling build_rings(const OrbitSpaceCase& flat_case, int n_max);

// Orbit of a marked interior point under the wallpaper group, restricted to
// rings 0..n_max. Copies are deduplicated within tolerance and canonically
// ordered; ops[i] maps q to copies[i]. Throws NonGenericError when q sits on
// a mirror line (within 1e-9) or outside the open fundamental domain.
struct PointOrbit {
    std::vector<Eigen::Vector2d> copies;
    std::vector<PlanarIsometry> ops;
    std::vector<Eigen::Vector2i> tile_of_copy;

    std::size_t max_copies_per_tile() const;
};

PointOrbit point_orbit_in_rings(const Eigen::Vector2d& q, const PlanarRingTiling& tiling,
                                int n_max);

// Wallpaper-group elements whose fundamental-domain image meets rings
// 0..n_max: breadth-first closure of the edge reflections, pruned by a
// bounding box.
std::vector<PlanarIsometry> wallpaper_elements(const PlanarRingTiling& tiling, int n_max);

// Representative of q inside the open fundamental domain (the orbit of a
// principal point meets it exactly once). NonGenericError when q sits on a
// mirror line.
Eigen::Vector2d fold_to_fundamental(const PlanarRingTiling& tiling, const Eigen::Vector2d& q);

}  // namespace orbitile
