#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "orbitile/errors.hpp"
#include "orbitile/spherical.hpp"
#include "orbitile/spherical_tiling.hpp"

using namespace orbitile;

namespace {

Eigen::Vector3d random_unit(std::mt19937_64& eng) {
    std::normal_distribution<double> n;
    Eigen::Vector3d v(n(eng), n(eng), n(eng));
    return v.normalized();
}

}  // namespace

TEST_CASE("reflect: axis point, fixed circle, involution") {
    std::mt19937_64 eng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Vector3d n = random_unit(eng);
        CHECK((sph::reflect(n, n) + n).norm() < 1e-12);
        // a point on the mirror circle is fixed
        Eigen::Vector3d x = random_unit(eng);
        x = (x - x.dot(n) * n).normalized();
        CHECK((sph::reflect(x, n) - x).norm() < 1e-12);
        // involution
        const Eigen::Vector3d y = random_unit(eng);
        CHECK((sph::reflect(sph::reflect(y, n), n) - y).norm() < 1e-12);
        // the matrix form agrees and is orthogonal with det -1
        const Eigen::Matrix3d r = sph::reflection_matrix(n);
        CHECK((r * y - sph::reflect(y, n)).norm() < 1e-12);
        CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-12);
        CHECK(r.determinant() == doctest::Approx(-1.0));
    }
}

TEST_CASE("triangle_from_angles: octant") {
    const SphericalTriangle t =
        triangle_from_angles(Rational(1, 2), Rational(1, 2), Rational(1, 2));
    for (double side : t.side_lengths()) CHECK(side == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(t.excess() == doctest::Approx(kPi / 2));
}

TEST_CASE("triangle_from_angles: (pi/2, pi/3, pi/4) against the re-measurement oracle") {
    const SphericalTriangle t =
        triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 4));
    // law of cosines for angles: cos a = (0 + cos(pi/3) cos(pi/4)) /
    // (sin(pi/3) sin(pi/4)) = 1/sqrt(3)
    CHECK(t.b.dot(t.c) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    // oracle: measured angles of the rebuilt triangle match the declaration
    CHECK(sph::vertex_angle(t.a, t.b, t.c) == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(sph::vertex_angle(t.b, t.c, t.a) == doctest::Approx(kPi / 3).epsilon(1e-10));
    CHECK(sph::vertex_angle(t.c, t.a, t.b) == doctest::Approx(kPi / 4).epsilon(1e-10));
    for (const Eigen::Vector3d& v : {t.a, t.b, t.c}) CHECK(std::abs(v.norm() - 1.0) < 1e-12);
}

TEST_CASE("triangle_from_angles rejects non-spherical input") {
    CHECK_THROWS_AS(triangle_from_angles(Rational(1, 6), Rational(1, 6), Rational(1, 6)),
                    NotSphericalError);
    CHECK_THROWS_AS(triangle_from_angles(Rational(1, 2), Rational(1, 4), Rational(1, 4)),
                    NotSphericalError);  // flat, not spherical
    CHECK_THROWS_AS(triangle_from_angles(Rational(0), Rational(1, 2), Rational(1, 2)),
                    NotSphericalError);
}

TEST_CASE("generate_tiling tile counts") {
    struct Row {
        std::array<long, 3> denom;
        std::size_t tiles;
    };
    const Row rows[] = {
        {{2, 2, 2}, 8},  {{2, 2, 3}, 12}, {{2, 2, 4}, 16}, {{2, 2, 5}, 20},
        {{2, 2, 6}, 24}, {{2, 3, 3}, 24}, {{2, 3, 4}, 48}, {{2, 3, 5}, 120},
    };
    for (const Row& row : rows) {
        const SphericalTiling tiling = generate_tiling(triangle_from_angles(
            Rational(1, row.denom[0]), Rational(1, row.denom[1]), Rational(1, row.denom[2])));
        CHECK(tiling.tile_count() == row.tiles);
        CHECK(tiling.group.size() == row.tiles);
        CHECK(tiling.total_area() == doctest::Approx(4 * kPi).epsilon(1e-9));
    }
}

TEST_CASE("generate_tiling requires angles pi/n") {
    CHECK_THROWS_AS(generate_tiling(triangle_from_angles(Rational(2, 5), Rational(2, 5),
                                                         Rational(2, 5))),
                    UnsupportedCaseError);
}

TEST_CASE("non-closing reflections trip the tile budget") {
    // Declared angles say octant, vertices say (2pi/5)^3: the reflections
    // generate a dense set and the budget converts that into an error.
    SphericalTriangle lying =
        triangle_from_angles(Rational(2, 5), Rational(2, 5), Rational(2, 5));
    lying.angles = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(generate_tiling(lying), NonClosingError);
}

TEST_CASE("tiling invariants: congruence, edges, group closure, no overlap") {
    const SphericalTiling tiling =
        generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 4)));

    SUBCASE("every tile congruent to the fundamental tile") {
        const auto ref = tiling.fundamental_triangle.side_lengths();
        std::multiset<long> ref_key;
        for (double s : ref) ref_key.insert(llround(s * 1e9));
        for (const SphericalTiling::Tile& t : tiling.tiles) {
            const Eigen::Vector3d& a = tiling.vertices[t.v[0]];
            const Eigen::Vector3d& b = tiling.vertices[t.v[1]];
            const Eigen::Vector3d& c = tiling.vertices[t.v[2]];
            std::multiset<long> key;
            key.insert(llround(sph::arc_distance(b, c) * 1e9));
            key.insert(llround(sph::arc_distance(c, a) * 1e9));
            key.insert(llround(sph::arc_distance(a, b) * 1e9));
            CHECK(key == ref_key);
        }
    }

    SUBCASE("every edge is shared by exactly two tiles") {
        std::map<std::pair<int, int>, int> edge_count;
        for (const SphericalTiling::Tile& t : tiling.tiles)
            for (int e = 0; e < 3; ++e) {
                int i = t.v[e], j = t.v[(e + 1) % 3];
                if (i > j) std::swap(i, j);
                ++edge_count[{i, j}];
            }
        for (const auto& [edge, count] : edge_count) CHECK(count == 2);
        // and adjacency is symmetric
        for (std::size_t id = 0; id < tiling.tiles.size(); ++id)
            for (int nbr : tiling.tiles[id].nbr) {
                REQUIRE(nbr >= 0);
                const auto& back = tiling.tiles[nbr].nbr;
                CHECK(std::count(back.begin(), back.end(), static_cast<int>(id)) >= 1);
            }
    }

    SUBCASE("group closure and orthogonality") {
        std::vector<Eigen::Matrix3d> gens;
        const SphericalTriangle& f = tiling.fundamental_triangle;
        gens.push_back(sph::reflection_matrix(f.a.cross(f.b).normalized()));
        gens.push_back(sph::reflection_matrix(f.b.cross(f.c).normalized()));
        gens.push_back(sph::reflection_matrix(f.c.cross(f.a).normalized()));
        for (const Eigen::Matrix3d& g : tiling.group) {
            CHECK((g * g.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-9);
            for (const Eigen::Matrix3d& r : gens) {
                const Eigen::Matrix3d h = g * r;
                const bool found = std::any_of(
                    tiling.group.begin(), tiling.group.end(),
                    [&](const Eigen::Matrix3d& x) { return (x - h).norm() < 1e-6; });
                CHECK(found);
            }
        }
    }

    SUBCASE("tile centroids lie in no other tile") {
        auto inside = [&](const SphericalTiling::Tile& t, const Eigen::Vector3d& x) {
            const Eigen::Vector3d& a = tiling.vertices[t.v[0]];
            const Eigen::Vector3d& b = tiling.vertices[t.v[1]];
            const Eigen::Vector3d& c = tiling.vertices[t.v[2]];
            return a.cross(b).dot(x) > 1e-9 && b.cross(c).dot(x) > 1e-9 &&
                   c.cross(a).dot(x) > 1e-9;
        };
        for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
            const auto& t = tiling.tiles[i];
            const Eigen::Vector3d centroid = (tiling.vertices[t.v[0]] + tiling.vertices[t.v[1]] +
                                              tiling.vertices[t.v[2]])
                                                 .normalized();
            CHECK(inside(t, centroid));
            for (std::size_t j = 0; j < tiling.tiles.size(); ++j)
                if (j != i) CHECK_FALSE(inside(tiling.tiles[j], centroid));
        }
    }

    SUBCASE("determinism: regeneration yields identical canonical keys") {
        const SphericalTiling again =
            generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 4)));
        CHECK(tiling.canonical_keys() == again.canonical_keys());
    }
}

TEST_CASE("isometry: group elements reproduce tile vertices") {
    const SphericalTiling tiling =
        generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 3)));
    const SphericalTriangle& f = tiling.fundamental_triangle;
    for (const SphericalTiling::Tile& t : tiling.tiles) {
        // the op maps the fundamental vertex set onto the tile vertex set
        std::array<Eigen::Vector3d, 3> image = {t.op * f.a, t.op * f.b, t.op * f.c};
        for (const Eigen::Vector3d& x : image) {
            double best = 1e9;
            for (int vid : t.v) best = std::min(best, (tiling.vertices[vid] - x).norm());
            CHECK(best < 1e-9);
        }
    }
}

TEST_CASE("doubled triangles carry doubled cone angles") {
    const DoubledSpace d4 =
        doubled(triangle_from_angles(Rational(1, 2), Rational(1, 2), Rational(1, 5)));
    CHECK(d4.cone_angles == std::vector<Rational>{Rational(1), Rational(1), Rational(2, 5)});
    CHECK(d4.pair.tiles.size() == 2);

    const DoubledSpace d5 =
        doubled(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 3)));
    CHECK(d5.cone_angles == std::vector<Rational>{Rational(1), Rational(2, 3), Rational(2, 3)});

    const DoubledSpace hemi = doubled_hemisphere();
    CHECK(hemi.pair.tile_count() == 2);
    CHECK(hemi.pair.total_area() == doctest::Approx(4 * kPi));
}

TEST_CASE("total area equals 4 pi for all table tilings") {
    CHECK(whole_sphere_tiling().total_area() == doctest::Approx(4 * kPi));
    CHECK(hemisphere_pair_tiling().total_area() == doctest::Approx(4 * kPi));
    // octant: 8 tiles of excess pi/2; icosahedral: 120 tiles of excess pi/30
    const SphericalTiling octant =
        generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
    CHECK(octant.total_area() == doctest::Approx(8 * (kPi / 2)));
    const SphericalTiling icosa =
        generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 5)));
    CHECK(icosa.total_area() == doctest::Approx(120 * (kPi / 30)));
    const SphericalTiling tetra =
        generate_tiling(triangle_from_angles(Rational(1, 2), Rational(1, 3), Rational(1, 3)));
    CHECK(tetra.total_area() == doctest::Approx(24 * (kPi / 6)));
}

TEST_CASE("tiling_for_case dispatch") {
    CHECK(tiling_for_case(case_by_id(1)).kind == SphericalTiling::Kind::WholeSphere);
    CHECK(tiling_for_case(case_by_id(8)).kind == SphericalTiling::Kind::HemispherePair);
    CHECK(tiling_for_case(instantiate(case_by_id(4), 3)).tile_count() == 12);
    CHECK(tiling_for_case(case_by_id(12)).tile_count() == 24);
    CHECK(tiling_for_case(case_by_id(13)).tile_count() == 48);
    CHECK_THROWS_AS(tiling_for_case(instantiate(case_by_id(2), 3)), UnsupportedCaseError);
    CHECK_THROWS_AS(tiling_for_case(instantiate(case_by_id(9), 2)), UnsupportedCaseError);
    CHECK_THROWS_AS(tiling_for_case(case_by_id(4)), std::invalid_argument);  // symbolic family
    CHECK_THROWS_AS(tiling_for_case(case_by_id(16)), UnsupportedCaseError);  // flat
}
