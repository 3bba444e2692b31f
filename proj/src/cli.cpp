#include "orbitile/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "orbitile/classification.hpp"
#include "orbitile/errors.hpp"
#include "orbitile/geodesics.hpp"
#include "orbitile/json_io.hpp"
#include "orbitile/morse_bounds.hpp"
#include "orbitile/planar_tiling.hpp"
#include "orbitile/spherical_tiling.hpp"
#include "orbitile/tolerance.hpp"

using nlohmann::json;

namespace orbitile {

namespace {

// Output is staged in a temporary file and renamed into place.
void write_atomically(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

json provenance(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    if (cfg.case_id) j["case_id"] = *cfg.case_id;
    if (cfg.param) j["param"] = cfg.param;
    if (cfg.param2) j["param2"] = cfg.param2;
    if (!cfg.angles.empty()) {
        json a = json::array();
        for (Rational r : cfg.angles) a.push_back(r.str());
        j["angles"] = a;
    }
    j["curvature"] = cfg.curvature;
    j["seed"] = cfg.seed;
    j["m"] = cfg.m;
    j["n_max"] = cfg.n_max;
    j["format"] = cfg.format;
    j["tolerance"] = predicate_tolerance();
    return j;
}

// Concrete case for a case-id request; parametric families default to their
// smallest member unless --param is given.
OrbitSpaceCase resolve_case(const RunConfig& cfg) {
    OrbitSpaceCase c = case_by_id(*cfg.case_id);
    if (!c.symbolic()) return c;
    const long p = cfg.param > 0 ? cfg.param : 2;
    const long q = cfg.param2 > 0 ? cfg.param2 : p;
    return instantiate(c, p, q);
}

// Map explicit --angles to a classification row: the flat triangles/square by
// exact angle sum, anything spherical as an ad-hoc row with the triangle as
// its own tile.
OrbitSpaceCase resolve_angles(const std::vector<Rational>& angles) {
    if (angles.size() == 4) {
        for (Rational r : angles)
            if (r != Rational(1, 2))
                throw UnsupportedCaseError("a flat quadrilateral orbit space must be the square");
        return case_by_id(17);
    }
    if (angles.size() != 3) throw std::invalid_argument("--angles takes 3 or 4 rationals");
    const Rational sum = angles[0] + angles[1] + angles[2];
    if (sum == Rational(1)) {
        std::array<Rational, 3> sorted = {angles[0], angles[1], angles[2]};
        std::sort(sorted.begin(), sorted.end(), [](Rational a, Rational b) { return b < a; });
        for (const OrbitSpaceCase& c : enumerate_flat_cases()) {
            if (c.boundary_angles.size() != 3) continue;
            std::array<Rational, 3> row = {c.boundary_angles[0].multiple_of_pi,
                                           c.boundary_angles[1].multiple_of_pi,
                                           c.boundary_angles[2].multiple_of_pi};
            if (row == sorted) return c;
        }
        throw UnsupportedCaseError("flat triangle outside the admissible table");
    }
    if (!(sum > Rational(1)))
        throw UnsupportedCaseError("angle sum below pi: not a nonnegative-curvature orbit space");
    OrbitSpaceCase c;
    c.case_id = 0;
    c.curvature = CurvatureClass::ConstantPositive;
    c.boundary_angles = {concrete_angle(angles[0]), concrete_angle(angles[1]),
                         concrete_angle(angles[2])};
    TilingDescriptor t;
    t.target = TilingTarget::Sphere;
    t.tile_angles = c.boundary_angles;
    const Rational count = Rational(4) / (sum - Rational(1));
    t.count = {TileCount::Kind::Finite, count.den() == 1 ? count.num() : 0};
    c.tiling = t;
    return c;
}

OrbitSpaceCase resolve_target(const RunConfig& cfg) {
    if (!cfg.angles.empty()) return resolve_angles(cfg.angles);
    if (cfg.case_id) return resolve_case(cfg);
    throw std::invalid_argument("either --case or --angles is required");
}

struct PipelineResult {
    GeodesicCensus census;
    BettiBoundReport report;
};

PipelineResult run_pipeline(const RunConfig& cfg, const OrbitSpaceCase& c) {
    PipelineResult out;
    if (c.curvature == CurvatureClass::Flat) {
        const int horizon = std::max(0, cfg.n_max - std::min(cfg.m, 0));
        const PlanarRingTiling tiling = build_rings(c, horizon);
        const PlaneConfig config = draw_plane_config(tiling, cfg.seed, horizon);
        out.census = plane_geodesics(tiling, config, IndexParams{cfg.m}, cfg.n_max);
        out.report = check_quadratic_bound(index_histogram(out.census.records),
                                           IndexParams{cfg.m}, cfg.n_max);
    } else {
        const SphericalTiling tiling = tiling_for_case(c);
        const SphereConfig config = draw_sphere_config(tiling, cfg.seed);
        out.census = sphere_geodesics(tiling, config, IndexParams{cfg.m}, cfg.n_max);
        out.report = check_linear_bound(index_histogram(out.census.records),
                                        static_cast<long>(tiling.tile_count()),
                                        IndexParams{cfg.m}, cfg.n_max);
    }
    out.report.case_id = c.case_id;
    return out;
}

}  // namespace

int cmd_classify(const RunConfig& cfg) {
    std::vector<OrbitSpaceCase> cases;
    if (cfg.curvature == "pos") cases = enumerate_positive_cases();
    else if (cfg.curvature == "flat") cases = enumerate_flat_cases();
    else cases = enumerate_all_cases();

    if (cfg.format == "csv") write_atomically(cfg.out_path, classification_csv(cases));
    else write_atomically(cfg.out_path, to_json(cases).dump(2) + "\n");
    return kExitOk;
}

int cmd_tile(const RunConfig& cfg) {
    const OrbitSpaceCase c = resolve_target(cfg);
    json j;
    if (c.curvature == CurvatureClass::Flat) {
        j = to_json(build_rings(c, cfg.n_max));
    } else {
        j = to_json(tiling_for_case(c));
    }
    j["config"] = provenance(cfg);
    write_atomically(cfg.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_geodesics(const RunConfig& cfg) {
    const OrbitSpaceCase c = resolve_target(cfg);
    json j;
    if (c.curvature == CurvatureClass::Flat) {
        const int horizon = std::max(0, cfg.n_max - std::min(cfg.m, 0));
        const PlanarRingTiling tiling = build_rings(c, horizon);
        const PlaneConfig config = draw_plane_config(tiling, cfg.seed, horizon);
        GeodesicCensus census = plane_geodesics(tiling, config, IndexParams{cfg.m}, cfg.n_max);
        census.case_id = c.case_id;
        j = to_json(census);
        j["configuration"]["p"] = json::array({config.p.x(), config.p.y()});
        j["configuration"]["q"] = json::array({config.q.x(), config.q.y()});
    } else {
        const SphericalTiling tiling = tiling_for_case(c);
        const SphereConfig config = draw_sphere_config(tiling, cfg.seed);
        GeodesicCensus census = sphere_geodesics(tiling, config, IndexParams{cfg.m}, cfg.n_max);
        j = to_json(census);
        j["configuration"]["p"] = json::array({config.p.x(), config.p.y(), config.p.z()});
        j["configuration"]["q"] = json::array({config.q.x(), config.q.y(), config.q.z()});
    }
    j["config"] = provenance(cfg);
    write_atomically(cfg.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_pipeline(const RunConfig& cfg) {
    const OrbitSpaceCase c = resolve_target(cfg);
    const PipelineResult result = run_pipeline(cfg, c);

    if (cfg.format == "csv") {
        write_atomically(cfg.out_path, report_csv(result.report));
    } else {
        json j = to_json(result.report);
        j["config"] = provenance(cfg);
        j["summary"] = {{"copy_count", result.census.copy_count},
                        {"single_visit_count", result.census.single_visit_count()},
                        {"max_index_seen", result.census.max_index_seen()}};
        write_atomically(cfg.out_path, j.dump(2) + "\n");
    }
    if (!cfg.plot_out.empty()) write_atomically(cfg.plot_out, report_plot_data(result.report));
    return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Orbit-space tilings, geodesic censuses and homology growth bounds"};
    app.require_subcommand(1);
    app.set_config("--config");

    RunConfig cfg;
    std::vector<std::string> angle_args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--case", cfg.case_id, "classification case id (1..17)")
            ->check(CLI::Range(1, 17));
        sub->add_option("--param", cfg.param, "family parameter p (or pi/alpha)")
            ->check(CLI::Range(2L, 64L));
        sub->add_option("--param2", cfg.param2, "second family parameter")
            ->check(CLI::Range(2L, 64L));
        sub->add_option("--angles", angle_args, "orbit-space angles as rationals, e.g. 1/2 1/3 1/4")
            ->expected(3, 4);
        sub->add_option("--seed", cfg.seed, "configuration seed");
        sub->add_option("--m", cfg.m, "smallest endpoint-form index")->check(CLI::Range(-8, 8));
        sub->add_option("--n-max", cfg.n_max, "largest index / ring horizon")
            ->check(CLI::Range(0, 200));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--plot-out", cfg.plot_out, "x-y series output path");
    };

    CLI::App* classify = app.add_subcommand("classify", "emit the orbit-space classification");
    classify->add_option("--curvature", cfg.curvature, "pos | flat | all")
        ->check(CLI::IsMember({"pos", "flat", "all"}));
    classify->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    classify->add_option("--out", cfg.out_path, "output path (default stdout)");

    CLI::App* tile = app.add_subcommand("tile", "build the tiling of a case");
    add_common(tile);
    CLI::App* geodesics = app.add_subcommand("geodesics", "enumerate critical geodesics");
    add_common(geodesics);
    CLI::App* pipeline = app.add_subcommand("pipeline", "tile, enumerate and check bounds");
    add_common(pipeline);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            cfg.command = "classify";
            return cmd_classify(cfg);
        }
        for (const std::string& s : angle_args) cfg.angles.push_back(parse_rational(s));
        if (tile->parsed()) {
            cfg.command = "tile";
            return cmd_tile(cfg);
        }
        if (geodesics->parsed()) {
            cfg.command = "geodesics";
            return cmd_geodesics(cfg);
        }
        cfg.command = "pipeline";
        return cmd_pipeline(cfg);
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "unsupported case: " << e.what() << "\n";
        return kExitUnsupportedCase;
    } catch (const NonClosingError& e) {
        std::cerr << "numerical non-closure: " << e.what() << "\n";
        return kExitNonClosing;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace orbitile
