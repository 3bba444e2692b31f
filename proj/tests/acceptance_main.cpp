// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run directly or through ctest.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitile/cli.hpp"
#include "orbitile/classification.hpp"
#include "orbitile/geodesics.hpp"
#include "orbitile/json_io.hpp"
#include "orbitile/morse_bounds.hpp"
#include "orbitile/planar_tiling.hpp"
#include "orbitile/spherical.hpp"
#include "orbitile/spherical_tiling.hpp"

using namespace orbitile;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void note(const std::string& msg) { g_notes.push_back(msg); }

#define ACCEPT(cond, what)                                   \
    do {                                                     \
        if (!(cond)) {                                       \
            note(std::string("  failed: ") + what);          \
            ok = false;                                      \
        }                                                    \
    } while (0)

void report(int id, const std::string& name, bool ok, double secs) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs);
    for (const std::string& n : g_notes) std::printf("%s\n", n.c_str());
    g_notes.clear();
    if (!ok) ++g_failures;
}

// Every tiled positive-curvature instance: (case id, family parameter).
std::vector<std::pair<int, long>> tiled_positive_instances() {
    std::vector<std::pair<int, long>> out = {{1, 0}, {5, 0}, {6, 0}, {7, 0},
                                             {8, 0}, {12, 0}, {13, 0}};
    for (long p = 2; p <= 6; ++p) out.push_back({4, p});
    for (long k : {2L, 3L, 4L, 6L}) out.push_back({11, k});
    return out;
}

OrbitSpaceCase concrete_case(int id, long param) {
    OrbitSpaceCase c = case_by_id(id);
    return c.symbolic() ? instantiate(c, param) : c;
}

// Independent copy enumeration: reflect the marked point tile by tile across
// edges, never touching the stored group matrices.
std::size_t brute_force_copy_count(const SphericalTiling& tiling, const Eigen::Vector3d& q) {
    if (tiling.kind == SphericalTiling::Kind::WholeSphere) return 1;
    if (tiling.kind == SphericalTiling::Kind::HemispherePair) {
        Eigen::Vector3d mirror = q;
        mirror.z() = -mirror.z();
        return (mirror - q).norm() < 1e-7 ? 1 : 2;
    }
    struct State {
        std::array<Eigen::Vector3d, 3> tri;
        Eigen::Vector3d image;
    };
    auto tri_key = [](const std::array<Eigen::Vector3d, 3>& tri) {
        std::array<std::array<long, 3>, 3> k;
        for (int i = 0; i < 3; ++i)
            k[i] = {llround(tri[i].x() * 1e6), llround(tri[i].y() * 1e6),
                    llround(tri[i].z() * 1e6)};
        std::sort(k.begin(), k.end());
        std::ostringstream os;
        for (const auto& v : k) os << v[0] << ',' << v[1] << ',' << v[2] << ';';
        return os.str();
    };
    const SphericalTriangle& f = tiling.fundamental_triangle;
    std::deque<State> frontier{{{f.a, f.b, f.c}, q}};
    std::set<std::string> seen{tri_key(frontier.front().tri)};
    std::set<std::array<long, 3>> images;
    while (!frontier.empty()) {
        const State s = frontier.front();
        frontier.pop_front();
        images.insert({llround(s.image.x() * 1e6), llround(s.image.y() * 1e6),
                       llround(s.image.z() * 1e6)});
        for (int e = 0; e < 3; ++e) {
            const Eigen::Vector3d n = s.tri[e].cross(s.tri[(e + 1) % 3]).normalized();
            State next;
            for (int i = 0; i < 3; ++i) next.tri[i] = sph::reflect(s.tri[i], n);
            next.image = sph::reflect(s.image, n);
            if (seen.insert(tri_key(next.tri)).second) frontier.push_back(next);
        }
    }
    return images.size();
}

// ---------------------------------------------------------------------------

bool criterion1_table_reproduction() {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();

    const std::string golden =
        "#,Ext Angles,Int Angles,Tiling?,Tile,No. Tiles\n"
        "1,,,Yes,S^2,1\n"
        "2,,2pi/p,No,,\n"
        "3,,\"2pi/p, 2pi/q\",No,,\n"
        "4,,\"pi, pi, 2pi/p\",Yes,\"(pi/2,pi/2,pi/p)\",4p\n"
        "5,,\"pi, 2pi/3, 2pi/3\",Yes,\"(pi/2,pi/3,pi/3)\",24\n"
        "6,,\"pi, 2pi/3, pi/2\",Yes,\"(pi/2,pi/3,pi/4)\",48\n"
        "7,,\"pi, 2pi/3, 2pi/5\",Yes,\"(pi/2,pi/3,pi/5)\",120\n"
        "8,pi,,Yes,Hemisphere,2\n"
        "9,alpha,,No,,\n"
        "10,\"alpha, beta\",,No,,\n"
        "11,\"pi/2, pi/2, alpha\",,Yes,\"(pi/2,pi/2,alpha)\",4pi/alpha\n"
        "12,\"pi/2, pi/3, pi/3\",,Yes,\"(pi/2,pi/3,pi/3)\",24\n"
        "13,\"pi/2, pi/3, pi/4\",,Yes,\"(pi/2,pi/3,pi/4)\",48\n";
    const std::string golden_flat =
        "#,Ext Angles,Int Angles,Tiling?,Tile,No. Tiles\n"
        "14,\"pi/2, pi/3, pi/6\",,Yes,\"(pi/2,pi/3,pi/6)\",infinite\n"
        "15,\"pi/2, pi/4, pi/4\",,Yes,\"(pi/2,pi/4,pi/4)\",infinite\n"
        "16,\"pi/3, pi/3, pi/3\",,Yes,\"(pi/3,pi/3,pi/3)\",infinite\n"
        "17,\"pi/2, pi/2, pi/2, pi/2\",,Yes,\"(pi/2,pi/2,pi/2,pi/2)\",infinite\n";

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "orbitile_acceptance";
    fs::create_directories(dir);

    RunConfig cfg;
    cfg.command = "classify";
    cfg.format = "csv";
    cfg.curvature = "pos";
    cfg.out_path = (dir / "pos.csv").string();
    ACCEPT(cmd_classify(cfg) == kExitOk, "classify pos exit status");
    cfg.curvature = "flat";
    cfg.out_path = (dir / "flat.csv").string();
    ACCEPT(cmd_classify(cfg) == kExitOk, "classify flat exit status");

    auto slurp = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream os;
        os << is.rdbuf();
        return os.str();
    };
    ACCEPT(slurp(dir / "pos.csv") == golden, "Table 1 golden encoding (13 rows)");
    ACCEPT(slurp(dir / "flat.csv") == golden_flat, "Table 2 golden encoding (4 rows)");

    const double secs = seconds_since(t0);
    ACCEPT(secs < 1.0, "runtime under 1 s");
    fs::remove_all(dir);
    report(1, "classification matches the golden tables", ok, secs);
    return ok;
}

bool criterion2_tile_counts(std::map<std::string, SphericalTiling>& cache) {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();

    struct Row {
        std::array<long, 3> denom;
        std::size_t expected;
    };
    std::vector<Row> rows;
    for (long p = 2; p <= 6; ++p) rows.push_back({{2, 2, p}, static_cast<std::size_t>(4 * p)});
    rows.push_back({{2, 3, 3}, 24});
    rows.push_back({{2, 3, 4}, 48});
    rows.push_back({{2, 3, 5}, 120});

    for (const Row& row : rows) {
        const auto tstart = std::chrono::steady_clock::now();
        const SphericalTiling tiling = generate_tiling(triangle_from_angles(
            Rational(1, row.denom[0]), Rational(1, row.denom[1]), Rational(1, row.denom[2])));
        const double run = seconds_since(tstart);
        std::ostringstream label;
        label << "(pi/" << row.denom[0] << ",pi/" << row.denom[1] << ",pi/" << row.denom[2] << ")";
        ACCEPT(tiling.tile_count() == row.expected,
               label.str() + " yields " + std::to_string(row.expected) + " tiles");
        ACCEPT(run < 5.0, label.str() + " under 5 s");
        cache[label.str()] = tiling;
    }
    const SphericalTiling hemi = doubled_hemisphere().pair;
    ACCEPT(hemi.tile_count() == 2, "doubled hemisphere yields 2 tiles");
    cache["hemisphere"] = hemi;
    cache["sphere"] = whole_sphere_tiling();

    report(2, "reflection tilings close at the table tile counts", ok, seconds_since(t0));
    return ok;
}

bool criterion3_area(const std::map<std::string, SphericalTiling>& cache) {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [label, tiling] : cache)
        ACCEPT(std::abs(tiling.total_area() - 4 * kPi) < 1e-6,
               label + " total spherical excess is 4pi within 1e-6");
    report(3, "area conservation across all generated tilings", ok, seconds_since(t0));
    return ok;
}

bool criterion4_census(std::map<int, std::vector<std::pair<long, SphericalTiling>>>& tilings) {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();

    for (const auto& [id, param] : tiled_positive_instances()) {
        const auto case_start = std::chrono::steady_clock::now();
        const OrbitSpaceCase c = concrete_case(id, param);
        const SphericalTiling tiling = tiling_for_case(c);
        tilings[id].push_back({param, tiling});
        const std::size_t tiles = tiling.tile_count();
        for (unsigned seed = 1; seed <= 10; ++seed) {
            const SphereConfig cfg = draw_sphere_config(tiling, seed);
            const GeodesicCensus census = sphere_geodesics(tiling, cfg, IndexParams{0}, 2);
            const std::size_t oracle = brute_force_copy_count(tiling, cfg.q);
            if (census.single_visit_count() != 2 * tiles ||
                census.single_visit_count() != 2 * oracle) {
                std::ostringstream msg;
                msg << "case " << id << " (param " << param << ", seed " << seed
                    << "): single-visit " << census.single_visit_count() << ", 2c " << 2 * tiles
                    << ", brute force " << 2 * oracle;
                ACCEPT(false, msg.str());
            }
        }
        ACCEPT(seconds_since(case_start) < 10.0,
               "case " + std::to_string(id) + " census under 10 s");
    }
    report(4, "single-visit geodesic count is 2c on every tiled case, 10 seeds", ok,
           seconds_since(t0));
    return ok;
}

bool criterion5_linear(const std::map<int, std::vector<std::pair<long, SphericalTiling>>>& tilings) {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    const int n_max = 20;

    for (const auto& [id, instances] : tilings) {
        const auto case_start = std::chrono::steady_clock::now();
        for (const auto& [param, tiling] : instances) {
            for (int m : {0, -1}) {
                std::vector<BettiBoundReport> reports;
                for (unsigned seed = 1; seed <= 10; ++seed) {
                    const SphereConfig cfg = draw_sphere_config(tiling, seed);
                    const GeodesicCensus census =
                        sphere_geodesics(tiling, cfg, IndexParams{m}, n_max);
                    reports.push_back(check_linear_bound(
                        index_histogram(census.records),
                        static_cast<long>(tiling.tile_count()), IndexParams{m}, n_max));
                }
                const BettiBoundReport worst = aggregate_worst_case(reports);
                std::ostringstream label;
                label << "case " << id << " (param " << param << ", m " << m << ")";
                ACCEPT(worst.all_satisfied(),
                       label.str() + " cumulative <= 2c*lambda*(n+1) for all n <= 20");
                ACCEPT(worst.fitted_degree <= kLinearDegreeThreshold,
                       label.str() + " fitted growth degree <= 1.2 (got " +
                           std::to_string(worst.fitted_degree) + ")");
                ACCEPT(worst.verdict == Verdict::EllipticConsistent,
                       label.str() + " verdict elliptic-consistent");
            }
        }
        ACCEPT(seconds_since(case_start) < 30.0,
               "case " + std::to_string(id) + " bound checks under 30 s");
    }
    report(5, "linear homology bound (m in {0,-1}, n <= 20) on every spherical case", ok,
           seconds_since(t0));
    return ok;
}

bool criterion6_quadratic() {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    const int n_max = 20;

    for (int id : {14, 15, 16, 17}) {
        const auto case_start = std::chrono::steady_clock::now();
        const PlanarRingTiling tiling = build_rings(case_by_id(id), n_max);
        std::vector<BettiBoundReport> reports;
        for (unsigned seed = 1; seed <= 10; ++seed) {
            const PlaneConfig cfg = draw_plane_config(tiling, seed, n_max);
            const GeodesicCensus census = plane_geodesics(tiling, cfg, IndexParams{0}, n_max);
            reports.push_back(
                check_quadratic_bound(index_histogram(census.records), IndexParams{0}, n_max));
        }
        const BettiBoundReport worst = aggregate_worst_case(reports);
        const std::string label = "case " + std::to_string(id);
        ACCEPT(worst.all_satisfied(), label + " cumulative <= 4(2(n-m)+1)^2 for all n <= 20");
        ACCEPT(worst.fitted_degree <= kQuadraticDegreeThreshold,
               label + " fitted growth degree <= 2.2 (got " +
                   std::to_string(worst.fitted_degree) + ")");
        ACCEPT(seconds_since(case_start) < 30.0, label + " under 30 s");
    }

    // exact ring counts through n = 50
    const PlanarRingTiling big = build_rings(case_by_id(17), 50);
    std::size_t cumulative = 0;
    for (int n = 0; n <= 50; ++n) {
        const std::size_t in_ring = big.tiles_in_ring(n);
        cumulative += in_ring;
        const std::size_t expect_ring = n == 0 ? 1 : static_cast<std::size_t>(8 * n);
        if (in_ring != expect_ring ||
            cumulative != static_cast<std::size_t>((2 * n + 1)) * (2 * n + 1)) {
            ACCEPT(false, "ring " + std::to_string(n) + " cardinality/cumulative mismatch");
            break;
        }
    }
    report(6, "quadratic homology bound on every flat case; ring counts exact to n = 50", ok,
           seconds_since(t0));
    return ok;
}

bool criterion7_properties(const std::map<std::string, SphericalTiling>& cache) {
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();

    // --- tile congruence: angles and side lengths within 1e-9 ---
    std::size_t congruence_trials = 0;
    for (const auto& [label, tiling] : cache) {
        if (tiling.kind != SphericalTiling::Kind::Triangles) continue;
        const auto ref_sides = tiling.fundamental_triangle.side_lengths();
        std::multiset<long> ref_side_key, ref_angle_key;
        for (double s : ref_sides) ref_side_key.insert(llround(s * 1e10));
        for (Rational a : tiling.fundamental_triangle.angles)
            ref_angle_key.insert(llround(angle_value(a) * 1e10));
        for (const SphericalTiling::Tile& t : tiling.tiles) {
            const Eigen::Vector3d& a = tiling.vertices[t.v[0]];
            const Eigen::Vector3d& b = tiling.vertices[t.v[1]];
            const Eigen::Vector3d& c = tiling.vertices[t.v[2]];
            std::multiset<long> side_key{llround(sph::arc_distance(b, c) * 1e10),
                                         llround(sph::arc_distance(c, a) * 1e10),
                                         llround(sph::arc_distance(a, b) * 1e10)};
            std::multiset<long> angle_key{llround(sph::vertex_angle(a, b, c) * 1e10),
                                          llround(sph::vertex_angle(b, c, a) * 1e10),
                                          llround(sph::vertex_angle(c, a, b) * 1e10)};
            bool close = true;
            {
                auto i = side_key.begin();
                for (auto j = ref_side_key.begin(); j != ref_side_key.end(); ++j, ++i)
                    if (std::abs(*i - *j) > 10) close = false;  // 1e-9 on a 1e-10 grid
                auto k = angle_key.begin();
                for (auto j = ref_angle_key.begin(); j != ref_angle_key.end(); ++j, ++k)
                    if (std::abs(*k - *j) > 10) close = false;
            }
            if (!close) {
                ACCEPT(false, label + ": incongruent tile");
                break;
            }
            ++congruence_trials;
        }
    }
    ACCEPT(congruence_trials >= 100, "at least 100 congruence trials");

    // --- every edge shared by exactly two tiles ---
    std::size_t edge_trials = 0;
    for (const auto& [label, tiling] : cache) {
        if (tiling.kind != SphericalTiling::Kind::Triangles) continue;
        std::map<std::pair<int, int>, int> edge_count;
        for (const SphericalTiling::Tile& t : tiling.tiles)
            for (int e = 0; e < 3; ++e) {
                int i = t.v[e], j = t.v[(e + 1) % 3];
                if (i > j) std::swap(i, j);
                ++edge_count[{i, j}];
            }
        for (const auto& [edge, count] : edge_count) {
            if (count != 2) {
                ACCEPT(false, label + ": edge not shared by exactly 2 tiles");
                break;
            }
            ++edge_trials;
        }
    }
    ACCEPT(edge_trials >= 100, "at least 100 edge trials");

    // --- no overlap: tile centroids lie in no other tile ---
    std::size_t centroid_trials = 0;
    for (const auto& [label, tiling] : cache) {
        if (tiling.kind != SphericalTiling::Kind::Triangles) continue;
        auto inside = [&](const SphericalTiling::Tile& t, const Eigen::Vector3d& x) {
            const Eigen::Vector3d& a = tiling.vertices[t.v[0]];
            const Eigen::Vector3d& b = tiling.vertices[t.v[1]];
            const Eigen::Vector3d& c = tiling.vertices[t.v[2]];
            return a.cross(b).dot(x) > 1e-9 && b.cross(c).dot(x) > 1e-9 &&
                   c.cross(a).dot(x) > 1e-9;
        };
        bool bad = false;
        for (std::size_t i = 0; i < tiling.tiles.size() && !bad; ++i) {
            const auto& t = tiling.tiles[i];
            const Eigen::Vector3d centroid =
                (tiling.vertices[t.v[0]] + tiling.vertices[t.v[1]] + tiling.vertices[t.v[2]])
                    .normalized();
            if (!inside(t, centroid)) bad = true;
            for (std::size_t j = 0; j < tiling.tiles.size(); ++j)
                if (j != i && inside(tiling.tiles[j], centroid)) bad = true;
            ++centroid_trials;
        }
        if (bad) ACCEPT(false, label + ": overlapping tiles detected by centroid test");
    }
    ACCEPT(centroid_trials >= 100, "at least 100 centroid trials");

    // --- reflection involution over random draws ---
    {
        std::mt19937_64 eng(2024);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 120; ++trial) {
            const Eigen::Vector3d n =
                Eigen::Vector3d(gauss(eng), gauss(eng), gauss(eng)).normalized();
            const Eigen::Vector3d x =
                Eigen::Vector3d(gauss(eng), gauss(eng), gauss(eng)).normalized();
            if ((sph::reflect(sph::reflect(x, n), n) - x).norm() > 1e-12) {
                ACCEPT(false, "reflection involution failed");
                break;
            }
        }
    }

    // --- enumeration determinism across randomized seeds ---
    {
        std::size_t determinism_trials = 0;
        bool bad = false;
        for (const auto& [label, tiling] : cache) {
            for (unsigned seed = 100; seed < 113 && !bad; ++seed) {
                const GeodesicCensus a =
                    sphere_geodesics(tiling, draw_sphere_config(tiling, seed), IndexParams{0}, 3);
                const GeodesicCensus b =
                    sphere_geodesics(tiling, draw_sphere_config(tiling, seed), IndexParams{0}, 3);
                if (a.records.size() != b.records.size()) bad = true;
                for (std::size_t i = 0; i < a.records.size() && !bad; ++i)
                    if (a.records[i].length != b.records[i].length ||
                        a.records[i].index != b.records[i].index ||
                        a.records[i].target_copy_id != b.records[i].target_copy_id)
                        bad = true;
                ++determinism_trials;
            }
        }
        if (bad) ACCEPT(false, "census enumeration is not deterministic");
        ACCEPT(determinism_trials >= 100, "at least 100 determinism trials");
    }

    // --- group-symmetry bijection of censuses ---
    {
        std::size_t symmetry_trials = 0;
        bool bad = false;
        auto fingerprint = [](const GeodesicCensus& census) {
            std::multiset<std::tuple<long, int, int>> out;
            for (const GeodesicRecord& r : census.records)
                out.insert({llround(r.length * 1e9), r.index, r.visits_to_q});
            return out;
        };
        for (const auto& [label, tiling] : cache) {
            if (tiling.kind != SphericalTiling::Kind::Triangles) continue;
            if (tiling.tile_count() > 48) continue;
            for (unsigned seed = 7; seed < 11 && !bad; ++seed) {
                const SphereConfig cfg = draw_sphere_config(tiling, seed);
                const GeodesicCensus base = sphere_geodesics(tiling, cfg, IndexParams{0}, 3);
                const auto base_print = fingerprint(base);
                const std::size_t step = std::max<std::size_t>(1, tiling.group.size() / 4);
                for (std::size_t gi = 1; gi < tiling.group.size() && !bad; gi += step) {
                    SphereConfig moved;
                    moved.p = tiling.group[gi] * cfg.p;
                    moved.q = tiling.group[gi] * cfg.q;
                    moved.seed = cfg.seed;
                    const GeodesicCensus other =
                        sphere_geodesics(tiling, moved, IndexParams{0}, 3);
                    if (fingerprint(other) != base_print) bad = true;
                    ++symmetry_trials;
                }
            }
        }
        if (bad) ACCEPT(false, "group symmetry bijection failed");
        ACCEPT(symmetry_trials >= 100, "at least 100 symmetry trials");
    }

    report(7, "property suites (congruence, edges, overlap, involution, determinism, symmetry)",
           ok, seconds_since(t0));
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_table_reproduction();

    std::map<std::string, SphericalTiling> tiling_cache;
    criterion2_tile_counts(tiling_cache);
    criterion3_area(tiling_cache);

    std::map<int, std::vector<std::pair<long, SphericalTiling>>> case_tilings;
    criterion4_census(case_tilings);
    criterion5_linear(case_tilings);
    criterion6_quadratic();
    criterion7_properties(tiling_cache);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
