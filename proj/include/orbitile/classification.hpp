#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbitile/rational.hpp"

namespace orbitile {

enum class CurvatureClass { ConstantPositive, PositiveNonConstant, Flat };

std::string to_string(CurvatureClass c);

// One angle cell of a classification row. Concrete cells hold a rational
// multiple of pi. Family rows leave cells symbolic: 'a'/'b' range over the
// admissible boundary set, 'p'/'q' are integer orders >= 2 entering the angle
// as coefficient*pi/p.
struct AngleCell {
    Rational multiple_of_pi{0};
    char symbol = 0;
    Rational coefficient{1};  // used only with 'p'/'q' symbols

    bool symbolic() const { return symbol != 0; }
    std::string str() const;
};

AngleCell concrete_angle(Rational multiple_of_pi);
AngleCell boundary_parameter(char symbol);              // 'a' or 'b'
AngleCell order_parameter(char symbol, Rational coeff); // angle = coeff*pi/symbol

enum class TilingTarget { Sphere, Plane };

// Tile count column: a fixed integer, one of the two table formulas, or
// "infinite" for the planar rows.
struct TileCount {
    enum class Kind { Finite, FourP, FourPiOverAlpha, Infinite };
    Kind kind = Kind::Finite;
    long value = 0;

    std::string str() const;
    long eval(long p) const;  // substitute p (or pi/alpha) into the formula
};

struct TilingDescriptor {
    TilingTarget target = TilingTarget::Sphere;
    std::string tile_label;              // "S^2" or "Hemisphere"; empty for polygons
    std::vector<AngleCell> tile_angles;  // polygon tiles only
    TileCount count;

    std::string tile_str() const;
};

// One row of the classification. Family rows carry symbolic cells; concrete
// rows have every cell numeric. Exterior (boundary) angles are multiples of
// pi; interior cone points are stored as angle cells 2pi/p.
struct OrbitSpaceCase {
    int case_id = 0;
    std::vector<AngleCell> boundary_angles;
    std::vector<AngleCell> cone_angles;
    CurvatureClass curvature = CurvatureClass::ConstantPositive;
    std::optional<TilingDescriptor> tiling;

    bool symbolic() const;
    std::vector<int> cone_orders() const;  // concrete rows only
};

// Structural invariants: boundary implies no cone points, arc/cone caps per
// curvature class, admissible angle values. Throws std::logic_error on
// violation.
void validate(const OrbitSpaceCase& c);

// The admissible boundary-arc angles, as multiples of pi: {1/2, 1/3, 1/4, 1/6}.
std::vector<Rational> admissible_boundary_angles();

// Geodesic-triangle angle gate: positive curvature needs sum > pi, flat needs
// sum == pi exactly.
bool angle_sum_test(const std::array<Rational, 3>& angles, CurvatureClass curvature);

// Largest possible average triangle angle sum when a k-arc boundary is
// triangulated from one corner and every corner angle is at most pi/2:
// (pi/2) * k/(k-2), returned as a multiple of pi. Domain error for k < 3.
Rational average_angle_argument(int k);

// Tables 1 and 2, derived from the angle lattice and the averaging argument
// rather than transcribed.
std::vector<OrbitSpaceCase> enumerate_positive_cases();
std::vector<OrbitSpaceCase> enumerate_flat_cases();
std::vector<OrbitSpaceCase> enumerate_all_cases();

// Substitute family parameters. `p` replaces 'p' (or 'a', as pi/alpha) and
// `q` replaces 'q'/'b' when present. For boundary parameters the value must
// lie in {2,3,4,6}.
OrbitSpaceCase instantiate(const OrbitSpaceCase& family, long p, long q = 0);

// Concrete members for tests and the pipeline: integer parameters and
// pi/alpha drawn from {2,...,6} (boundary parameters restricted to the
// admissible set).
std::vector<OrbitSpaceCase> concrete_instances(const OrbitSpaceCase& family);

// Case lookup in the combined table; throws std::out_of_range for ids
// outside 1..17.
OrbitSpaceCase case_by_id(int case_id);

}  // namespace orbitile
