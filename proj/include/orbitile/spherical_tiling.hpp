#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "orbitile/classification.hpp"
#include "orbitile/rational.hpp"

namespace orbitile {

// Spherical triangle with unit vertices and declared rational angles (as
// multiples of pi) at a, b, c respectively. Construct through
// triangle_from_angles, which guarantees measured == declared within 1e-9.
struct SphericalTriangle {
    Eigen::Vector3d a, b, c;
    std::array<Rational, 3> angles;

    double excess() const;                       // measured spherical area
    std::array<double, 3> side_lengths() const;  // arcs opposite a, b, c
};

// Canonical placement: a at the north pole, b on the prime meridian. Sides
// come from the spherical law of cosines for angles,
//   cos a = (cos alpha + cos beta cos gamma) / (sin beta sin gamma).
// Throws NotSphericalError when alpha+beta+gamma <= pi or an angle leaves
// (0, pi).
SphericalTriangle triangle_from_angles(Rational alpha, Rational beta, Rational gamma);

// Reflection tiling of S^2. Triangle tilings are generated by edge-reflection
// closure; the sphere and hemisphere-pair models cover the two boundaryless
// table rows that are not triangles. Immutable once built.
struct SphericalTiling {
    enum class Kind { Triangles, WholeSphere, HemispherePair };

    struct Tile {
        std::array<int, 3> v;    // vertex indices, orientation-normalized
        Eigen::Matrix3d op;      // group element mapping the fundamental tile here
        std::array<int, 3> nbr;  // neighbor tile across edge (v0v1, v1v2, v2v0)
    };

    Kind kind = Kind::Triangles;
    int case_id = 0;  // classification row this tiling models, when known
    std::vector<Eigen::Vector3d> vertices;
    std::vector<Tile> tiles;
    int fundamental = 0;
    SphericalTriangle fundamental_triangle{};  // Triangles kind only
    std::vector<Eigen::Matrix3d> group;        // one element per tile

    std::size_t tile_count() const;
    double total_area() const;  // sum of tile areas; 4*pi for a closed tiling

    // Deterministic identity of the tiling: sorted quantized tile keys.
    std::vector<std::string> canonical_keys() const;

    // Orbit of a point under the tiling group, deduplicated and canonically
    // ordered (lexicographic by quantized coordinates).
    std::vector<Eigen::Vector3d> point_orbit(const Eigen::Vector3d& q) const;
};

// Breadth-first closure of the fundamental triangle under its three edge
// reflections. Requires every angle to be pi/n, n >= 2 (UnsupportedCaseError
// otherwise). Fails with NonClosingError when the closure exceeds
// budget_factor times the Gauss-Bonnet tile count.
SphericalTiling generate_tiling(const SphericalTriangle& fundamental, double budget_factor = 10.0);

SphericalTiling whole_sphere_tiling();    // table row 1: one tile, trivial group
SphericalTiling hemisphere_pair_tiling(); // row 8 doubled: two hemispheres, group {I, diag(1,1,-1)}

// Closed orbit space obtained by doubling a triangle across its boundary:
// the tile pair (triangle, mirror image) with cone angles twice the triangle
// angles. Downstream unfolding uses the full tiling instead.
struct DoubledSpace {
    SphericalTiling pair;               // two tiles glued along the marked edge
    std::vector<Rational> cone_angles;  // multiples of pi
};

DoubledSpace doubled(const SphericalTriangle& fundamental);
DoubledSpace doubled_hemisphere();  // full sphere as two tiles

// Model tiling for a concrete positive-curvature case. Cases 2, 3, 9, 10
// throw UnsupportedCaseError (positive but not constant curvature, no
// tiling); symbolic families throw std::invalid_argument.
SphericalTiling tiling_for_case(const OrbitSpaceCase& concrete_case, double budget_factor = 10.0);

}  // namespace orbitile
