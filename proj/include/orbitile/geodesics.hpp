#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "orbitile/planar_tiling.hpp"
#include "orbitile/spherical_tiling.hpp"

namespace orbitile {

// Index bookkeeping for the endpoint bilinear form: m is the smallest value
// its index may take; lambda = max(1, 1-m) is the safety factor entering the
// homology bounds. Each record's contribution is modeled as 0, so m widens
// enumeration horizons and bounds but never individual indices.
struct IndexParams {
    int m = 0;
    int lambda() const { return m >= 1 ? 1 : 1 - m; }
};

enum class StratumKind { Antipode, Edge };

struct CrossingEvent {
    double t = 0;  // arc length (sphere) or segment parameter (plane)
    StratumKind kind = StratumKind::Edge;
    int stratum_dim = 1;
};

// One critical geodesic of the endpoint-constrained energy functional,
// unfolded into the model space.
struct GeodesicRecord {
    int target_copy_id = 0;
    int direction_sign = +1;  // the two arcs per copy on the sphere; +1 on the plane
    int winding = 0;          // full circuits past the first hit (sphere)
    double length = 0;
    Eigen::Vector3d initial_direction = Eigen::Vector3d::Zero();  // z = 0 in the plane
    int antipodal_crossings = 0;                                  // sphere only
    std::vector<CrossingEvent> stratum_crossings;                 // ordered by t
    int visits_to_q = 1;  // times the geodesic meets its target copy
    int index_a_contribution = 0;
    int index = 0;
};

struct SphereConfig {
    Eigen::Vector3d p, q;
    unsigned seed = 0;
};

struct PlaneConfig {
    Eigen::Vector2d p, q;
    unsigned seed = 0;
};

struct GenericityResult {
    bool ok = true;
    std::string reason;
};

// Genericity of a marked configuration. The basepoint must avoid every great
// circle (line) spanned by two distinct, non-antipodal copies of q, must not
// coincide with (or, on the sphere, be antipodal to) a copy, and q itself
// must be a principal (mirror-free) point. Mutually antipodal copy pairs are
// exempt from the circle test: great circles are centrally symmetric, so the
// circle through any copy always contains its antipode.
GenericityResult genericity_check(const SphereConfig& cfg, const SphericalTiling& tiling);
GenericityResult genericity_check(const PlaneConfig& cfg, const PlanarRingTiling& tiling,
                                  int horizon_rings);

// Deterministic generic draws: attempt k uses the engine seeded with
// seed + k, so a failed draw advances without perturbing any geodesic.
SphereConfig draw_sphere_config(const SphericalTiling& tiling, unsigned seed);
PlaneConfig draw_plane_config(const PlanarRingTiling& tiling, unsigned seed, int horizon_rings);

struct GeodesicCensus {
    int case_id = 0;
    IndexParams params;
    int max_index = 0;
    unsigned seed = 0;
    std::size_t copy_count = 0;
    std::vector<Eigen::Vector3d> copies;  // orbit of q, indexed by target_copy_id (z = 0 planar)
    std::vector<GeodesicRecord> records;  // sorted by (copy, winding, direction)

    std::size_t single_visit_count() const;
    int max_index_seen() const;
};

// Antipode passages of a great-circle arc of the given length: events at odd
// multiples of pi strictly inside (0, length).
std::vector<CrossingEvent> crossing_events(double arc_length);

// Ordered transversal tile-edge crossings of the open segment p -> q in the
// rhombus lattice. Vertex or tangential incidence raises NonGenericError.
std::vector<CrossingEvent> crossing_events(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                                           const PlanarRingTiling& tiling);

// Critical geodesics from p to every copy of q: both arcs of the great
// circle through each copy plus all windings needed so that every record of
// index <= max_index appears (crossing cap max_index - min(m, 0)). The index
// of a record is its antipodal crossing count under the zero-contribution
// model.
GeodesicCensus sphere_geodesics(const SphericalTiling& tiling, const SphereConfig& cfg,
                                IndexParams params, int max_index);

// Straight segments from p to every copy of q in rings 0..max_index-m; the
// index counts transversal tile-edge crossings. The tiling must already be
// built through the horizon.
GeodesicCensus plane_geodesics(const PlanarRingTiling& tiling, const PlaneConfig& cfg,
                               IndexParams params, int max_index);

}  // namespace orbitile
