#include "orbitile/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "orbitile/errors.hpp"
#include "orbitile/spherical.hpp"
#include "orbitile/tolerance.hpp"

namespace orbitile {

namespace {

constexpr int kDrawAttempts = 64;

int crossing_cap(IndexParams params, int max_index) {
    return max_index - std::min(params.m, 0);
}

void sort_records(std::vector<GeodesicRecord>& records) {
    std::sort(records.begin(), records.end(), [](const GeodesicRecord& a, const GeodesicRecord& b) {
        if (a.target_copy_id != b.target_copy_id) return a.target_copy_id < b.target_copy_id;
        if (a.winding != b.winding) return a.winding < b.winding;
        return a.direction_sign > b.direction_sign;
    });
}

}  // namespace

std::size_t GeodesicCensus::single_visit_count() const {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [](const GeodesicRecord& r) { return r.visits_to_q == 1; }));
}

int GeodesicCensus::max_index_seen() const {
    int best = -1;
    for (const GeodesicRecord& r : records) best = std::max(best, r.index);
    return best;
}

std::vector<CrossingEvent> crossing_events(double arc_length) {
    // The basepoint's antipode sits at arc length pi along either direction
    // and recurs every full circuit.
    std::vector<CrossingEvent> events;
    for (double t = kPi; t < arc_length; t += 2.0 * kPi)
        events.push_back({t, StratumKind::Antipode, 0});
    return events;
}

std::vector<CrossingEvent> crossing_events(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                                           const PlanarRingTiling& tiling) {
    const double tol = predicate_tolerance();
    const Eigen::Vector2d a = tiling.lattice_coords_of(p);
    const Eigen::Vector2d b = tiling.lattice_coords_of(q);

    struct Hit {
        double t;
        int family;
        Eigen::Vector2d point;
    };
    std::vector<Hit> hits;
    for (int family = 0; family < 2; ++family) {
        const double s0 = a[family], s1 = b[family];
        if (std::abs(s1 - s0) < tol) continue;  // parallel to this edge family
        const double lo = std::min(s0, s1), hi = std::max(s0, s1);
        for (long k = static_cast<long>(std::ceil(lo)); k < hi; ++k) {
            const double kk = static_cast<double>(k);
            if (kk <= lo || kk >= hi) continue;
            const double t = (kk - s0) / (s1 - s0);
            hits.push_back({t, family, p + t * (q - p)});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });

    for (std::size_t i = 0; i + 1 < hits.size(); ++i)
        if (hits[i].family != hits[i + 1].family &&
            (hits[i].point - hits[i + 1].point).norm() < tol)
            throw NonGenericError("geodesic segment passes through a tiling vertex");

    std::vector<CrossingEvent> events;
    events.reserve(hits.size());
    for (const Hit& h : hits) events.push_back({h.t, StratumKind::Edge, 1});
    return events;
}

GenericityResult genericity_check(const SphereConfig& cfg, const SphericalTiling& tiling) {
    const double tol = predicate_tolerance();

    // Principal points have full orbits; a collapsed orbit means the point
    // sits on a mirror.
    if (tiling.point_orbit(cfg.q).size() != tiling.group.size())
        return {false, "target point lies on a mirror of the tiling group"};
    if (tiling.point_orbit(cfg.p).size() != tiling.group.size())
        return {false, "basepoint lies on a mirror of the tiling group"};

    const std::vector<Eigen::Vector3d> copies = tiling.point_orbit(cfg.q);
    for (std::size_t i = 0; i < copies.size(); ++i) {
        const double d = sph::arc_distance(cfg.p, copies[i]);
        if (d < tol) return {false, "basepoint coincides with copy " + std::to_string(i)};
        if (kPi - d < tol)
            return {false, "basepoint is antipodal to copy " + std::to_string(i)};
    }
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            // Great circles are centrally symmetric, so a circle through a
            // copy always contains its antipode; antipodal pairs span no
            // test circle.
            if ((copies[i] + copies[j]).norm() < 1e-7) continue;
            const Eigen::Vector3d n = copies[i].cross(copies[j]).normalized();
            if (std::abs(cfg.p.dot(n)) < tol)
                return {false, "basepoint lies on the great circle through copies " +
                                   std::to_string(i) + " and " + std::to_string(j)};
        }
    return {true, ""};
}

GenericityResult genericity_check(const PlaneConfig& cfg, const PlanarRingTiling& tiling,
                                  int horizon_rings) {
    const double tol = predicate_tolerance();

    PointOrbit orbit;
    try {
        orbit = point_orbit_in_rings(fold_to_fundamental(tiling, cfg.q), tiling, horizon_rings);
    } catch (const NonGenericError& e) {
        return {false, e.what()};
    }

    for (const PlanarIsometry& g : wallpaper_elements(tiling, horizon_rings))
        if ((g.m - Eigen::Matrix2d::Identity()).norm() + g.t.norm() > 1e-7 &&
            (g(cfg.p) - cfg.p).norm() < tol)
            return {false, "basepoint lies on a mirror line of the wallpaper group"};

    const std::vector<Eigen::Vector2d>& copies = orbit.copies;
    for (std::size_t i = 0; i < copies.size(); ++i)
        if ((cfg.p - copies[i]).norm() < tol)
            return {false, "basepoint coincides with copy " + std::to_string(i)};
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            const Eigen::Vector2d d = copies[j] - copies[i];
            const Eigen::Vector2d w = cfg.p - copies[i];
            if (std::abs(d.x() * w.y() - d.y() * w.x()) / d.norm() < tol)
                return {false, "basepoint lies on the line through copies " + std::to_string(i) +
                                   " and " + std::to_string(j)};
        }
    return {true, ""};
}

namespace {

Eigen::Vector3d random_sphere_point(std::mt19937_64& eng, const SphericalTiling& tiling) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (tiling.kind) {
        case SphericalTiling::Kind::Triangles: {
            const SphericalTriangle& f = tiling.fundamental_triangle;
            const double w0 = 0.05 + 0.9 * unit(eng);
            const double w1 = 0.05 + 0.9 * unit(eng);
            const double w2 = 0.05 + 0.9 * unit(eng);
            return (w0 * f.a + w1 * f.b + w2 * f.c).normalized();
        }
        case SphericalTiling::Kind::HemispherePair: {
            const double z = 0.05 + 0.9 * unit(eng);
            const double phi = 2.0 * kPi * unit(eng);
            const double r = std::sqrt(1.0 - z * z);
            return {r * std::cos(phi), r * std::sin(phi), z};
        }
        case SphericalTiling::Kind::WholeSphere: {
            const double z = -0.9 + 1.8 * unit(eng);
            const double phi = 2.0 * kPi * unit(eng);
            const double r = std::sqrt(1.0 - z * z);
            return {r * std::cos(phi), r * std::sin(phi), z};
        }
    }
    throw std::logic_error("unreachable");
}

Eigen::Vector2d random_plane_point(std::mt19937_64& eng, const PlanarRingTiling& tiling) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto& poly = tiling.fundamental_polygon;
    if (poly.size() == 4) {
        const Eigen::Vector2d d1 = poly[1] - poly[0];
        const Eigen::Vector2d d2 = poly[3] - poly[0];
        return poly[0] + (0.05 + 0.9 * unit(eng)) * d1 + (0.05 + 0.9 * unit(eng)) * d2;
    }
    double w0 = 0.05 + unit(eng), w1 = 0.05 + unit(eng), w2 = 0.05 + unit(eng);
    const double s = w0 + w1 + w2;
    return (w0 * poly[0] + w1 * poly[1] + w2 * poly[2]) / s;
}

}  // namespace

SphereConfig draw_sphere_config(const SphericalTiling& tiling, unsigned seed) {
    for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
        std::mt19937_64 eng(seed + static_cast<unsigned>(attempt));
        SphereConfig cfg;
        cfg.p = random_sphere_point(eng, tiling);
        cfg.q = random_sphere_point(eng, tiling);
        cfg.seed = seed;
        if (genericity_check(cfg, tiling).ok) return cfg;
    }
    throw NonGenericError("no generic spherical configuration found after redraws");
}

PlaneConfig draw_plane_config(const PlanarRingTiling& tiling, unsigned seed, int horizon_rings) {
    for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
        std::mt19937_64 eng(seed + static_cast<unsigned>(attempt));
        PlaneConfig cfg;
        cfg.p = random_plane_point(eng, tiling);
        cfg.q = random_plane_point(eng, tiling);
        cfg.seed = seed;
        if (!genericity_check(cfg, tiling, horizon_rings).ok) continue;
        // Crossing events must also avoid lattice vertices for every copy.
        try {
            for (const Eigen::Vector2d& c :
                 point_orbit_in_rings(cfg.q, tiling, horizon_rings).copies)
                crossing_events(cfg.p, c, tiling);
        } catch (const NonGenericError&) {
            continue;
        }
        return cfg;
    }
    throw NonGenericError("no generic planar configuration found after redraws");
}

GeodesicCensus sphere_geodesics(const SphericalTiling& tiling, const SphereConfig& cfg,
                                IndexParams params, int max_index) {
    if (max_index < 0) throw std::domain_error("max_index must be nonnegative");
    const GenericityResult gen = genericity_check(cfg, tiling);
    if (!gen.ok) throw NonGenericError(gen.reason);

    const std::vector<Eigen::Vector3d> copies = tiling.point_orbit(cfg.q);
    const int cap = crossing_cap(params, max_index);

    GeodesicCensus census;
    census.case_id = tiling.case_id;
    census.params = params;
    census.max_index = max_index;
    census.seed = cfg.seed;
    census.copy_count = copies.size();
    census.copies = copies;

    for (std::size_t i = 0; i < copies.size(); ++i) {
        const double d = sph::arc_distance(cfg.p, copies[i]);
        const Eigen::Vector3d toward = sph::initial_tangent(cfg.p, copies[i]);
        for (int sign : {+1, -1}) {
            const double first = sign > 0 ? d : 2.0 * kPi - d;
            const Eigen::Vector3d dir = sign > 0 ? toward : Eigen::Vector3d(-toward);
            for (int w = 0;; ++w) {
                GeodesicRecord rec;
                rec.target_copy_id = static_cast<int>(i);
                rec.direction_sign = sign;
                rec.winding = w;
                rec.length = first + 2.0 * kPi * w;
                rec.initial_direction = dir;
                rec.stratum_crossings = crossing_events(rec.length);
                rec.antipodal_crossings = static_cast<int>(rec.stratum_crossings.size());
                rec.visits_to_q = w + 1;
                rec.index_a_contribution = 0;
                rec.index = std::max(0, rec.antipodal_crossings + rec.index_a_contribution);
                // single-visit arcs are always emitted; extensions stop at
                // the crossing cap
                const bool over_cap = rec.antipodal_crossings > cap;
                if (over_cap && w > 0) break;
                census.records.push_back(std::move(rec));
                if (over_cap) break;
            }
        }
    }
    sort_records(census.records);
    return census;
}

GeodesicCensus plane_geodesics(const PlanarRingTiling& tiling, const PlaneConfig& cfg,
                               IndexParams params, int max_index) {
    if (max_index < 0) throw std::domain_error("max_index must be nonnegative");
    const int horizon = std::max(0, crossing_cap(params, max_index));

    // Rings are counted from the tile containing p; drawn configurations put
    // p in tile (0,0).
    const Eigen::Vector2i p_tile = tiling.tile_of(cfg.p);
    const int p_ring = std::max(std::abs(p_tile.x()), std::abs(p_tile.y()));
    if (tiling.n_max < horizon + p_ring)
        throw std::invalid_argument("planar tiling not built through the enumeration horizon");

    const GenericityResult gen = genericity_check(cfg, tiling, horizon + p_ring);
    if (!gen.ok) throw NonGenericError(gen.reason);

    const PointOrbit orbit =
        point_orbit_in_rings(fold_to_fundamental(tiling, cfg.q), tiling, horizon + p_ring);

    GeodesicCensus census;
    census.case_id = tiling.case_id;
    census.params = params;
    census.max_index = max_index;
    census.seed = cfg.seed;
    for (const Eigen::Vector2d& c : orbit.copies) census.copies.emplace_back(c.x(), c.y(), 0.0);

    std::size_t kept = 0;
    for (std::size_t i = 0; i < orbit.copies.size(); ++i) {
        const Eigen::Vector2i t = orbit.tile_of_copy[i];
        if (std::max(std::abs(t.x() - p_tile.x()), std::abs(t.y() - p_tile.y())) > horizon)
            continue;
        ++kept;
        GeodesicRecord rec;
        rec.target_copy_id = static_cast<int>(i);
        rec.direction_sign = +1;
        rec.winding = 0;
        rec.length = (orbit.copies[i] - cfg.p).norm();
        const Eigen::Vector2d dir = (orbit.copies[i] - cfg.p).normalized();
        rec.initial_direction = {dir.x(), dir.y(), 0.0};
        rec.stratum_crossings = crossing_events(cfg.p, orbit.copies[i], tiling);
        rec.antipodal_crossings = 0;
        rec.visits_to_q = 1;
        rec.index_a_contribution = 0;
        rec.index = std::max(0, static_cast<int>(rec.stratum_crossings.size()) +
                                    rec.index_a_contribution);
        census.records.push_back(std::move(rec));
    }
    census.copy_count = kept;
    sort_records(census.records);
    return census;
}

}  // namespace orbitile
