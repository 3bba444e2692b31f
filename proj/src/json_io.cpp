#include "orbitile/json_io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

using nlohmann::json;

namespace orbitile {

namespace {

json angle_cell_json(const AngleCell& cell) {
    if (cell.symbol == 'a') return "alpha";
    if (cell.symbol == 'b') return "beta";
    if (cell.symbolic())  // same multiple-of-pi convention, symbolic order
        return cell.coefficient.str() + "/" + std::string(1, cell.symbol);
    return cell.multiple_of_pi.str();  // "n/d" multiple of pi
}

json cone_order_json(const AngleCell& cell) {
    if (cell.symbolic()) return std::string(1, cell.symbol);
    const Rational m = cell.multiple_of_pi;
    return 2 * m.den() / m.num();
}

json tile_count_json(const TileCount& count) {
    if (count.kind == TileCount::Kind::Finite) return count.value;
    return count.str();
}

std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

json vec2(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }
json vec3(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

json to_json(const OrbitSpaceCase& c) {
    json j;
    j["case_id"] = c.case_id;
    j["boundary_angles"] = json::array();
    for (const AngleCell& cell : c.boundary_angles) j["boundary_angles"].push_back(angle_cell_json(cell));
    j["cone_orders"] = json::array();
    for (const AngleCell& cell : c.cone_angles) j["cone_orders"].push_back(cone_order_json(cell));
    j["curvature_class"] = to_string(c.curvature);
    if (c.tiling) {
        json t;
        t["target"] = c.tiling->target == TilingTarget::Sphere ? "sphere" : "plane";
        t["tile"] = c.tiling->tile_str();
        t["tile_angles"] = json::array();
        for (const AngleCell& cell : c.tiling->tile_angles)
            t["tile_angles"].push_back(angle_cell_json(cell));
        t["count"] = tile_count_json(c.tiling->count);
        j["tiling"] = t;
    } else {
        j["tiling"] = nullptr;
    }
    return j;
}

json to_json(const std::vector<OrbitSpaceCase>& cases) {
    json arr = json::array();
    for (const OrbitSpaceCase& c : cases) arr.push_back(to_json(c));
    return arr;
}

json to_json(const SphericalTiling& tiling) {
    json j;
    switch (tiling.kind) {
        case SphericalTiling::Kind::Triangles: j["kind"] = "triangles"; break;
        case SphericalTiling::Kind::WholeSphere: j["kind"] = "whole-sphere"; break;
        case SphericalTiling::Kind::HemispherePair: j["kind"] = "hemisphere-pair"; break;
    }
    j["case_id"] = tiling.case_id;
    j["group_order"] = tiling.group.size();
    j["fundamental"] = tiling.fundamental;
    j["vertices"] = json::array();
    for (const Eigen::Vector3d& v : tiling.vertices) j["vertices"].push_back(vec3(v));
    j["tiles"] = json::array();
    j["adjacency"] = json::array();
    for (const SphericalTiling::Tile& t : tiling.tiles) {
        j["tiles"].push_back(json::array({t.v[0], t.v[1], t.v[2]}));
        j["adjacency"].push_back(json::array({t.nbr[0], t.nbr[1], t.nbr[2]}));
    }
    return j;
}

json to_json(const PlanarRingTiling& tiling) {
    json j;
    j["case_id"] = tiling.case_id;
    j["fundamental_polygon"] = json::array();
    for (const Eigen::Vector2d& v : tiling.fundamental_polygon)
        j["fundamental_polygon"].push_back(vec2(v));
    j["lattice_basis"] = json::array({vec2(tiling.u), vec2(tiling.v)});
    j["copies_per_tile"] = tiling.copies_per_tile;
    j["n_max"] = tiling.n_max;
    json rings = json::array();
    for (int r = 0; r <= tiling.n_max; ++r) {
        json ring;
        ring["ring"] = r;
        ring["tiles"] = json::array();
        for (const RhombusTile& t : tiling.tiles)
            if (t.ring_index == r)
                ring["tiles"].push_back(json::array({t.lattice_coords.x(), t.lattice_coords.y()}));
        rings.push_back(ring);
    }
    j["rings"] = rings;
    return j;
}

json to_json(const PointOrbit& orbit) {
    json j;
    j["copies"] = json::array();
    j["tiles"] = json::array();
    for (std::size_t i = 0; i < orbit.copies.size(); ++i) {
        j["copies"].push_back(vec2(orbit.copies[i]));
        j["tiles"].push_back(
            json::array({orbit.tile_of_copy[i].x(), orbit.tile_of_copy[i].y()}));
    }
    return j;
}

json to_json(const GeodesicRecord& rec) {
    json j;
    j["copy"] = rec.target_copy_id;
    j["direction_sign"] = rec.direction_sign;
    j["winding"] = rec.winding;
    j["length"] = rec.length;
    j["initial_direction"] = vec3(rec.initial_direction);
    j["antipodal_crossings"] = rec.antipodal_crossings;
    json events = json::array();
    for (const CrossingEvent& e : rec.stratum_crossings) {
        json ev;
        ev["t"] = e.t;
        ev["kind"] = e.kind == StratumKind::Antipode ? "antipode" : "edge";
        ev["stratum_dim"] = e.stratum_dim;
        events.push_back(ev);
    }
    j["stratum_crossings"] = events;
    j["visits_to_q"] = rec.visits_to_q;
    j["index_a_contribution"] = rec.index_a_contribution;
    j["index"] = rec.index;
    return j;
}

json to_json(const GeodesicCensus& census) {
    json j;
    j["configuration"] = {{"case_id", census.case_id},
                          {"seed", census.seed},
                          {"m", census.params.m},
                          {"max_index", census.max_index}};
    j["copies"] = json::array();
    for (const Eigen::Vector3d& c : census.copies) j["copies"].push_back(vec3(c));
    j["records"] = json::array();
    for (const GeodesicRecord& r : census.records) j["records"].push_back(to_json(r));
    json per_index = json::object();
    for (const auto& [idx, count] : index_histogram(census.records))
        per_index[std::to_string(idx)] = count;
    j["summary"] = {{"copy_count", census.copy_count},
                    {"single_visit_count", census.single_visit_count()},
                    {"max_index_seen", census.max_index_seen()},
                    {"per_index", per_index}};
    return j;
}

json to_json(const BettiBoundReport& report) {
    json j;
    j["case_id"] = report.case_id;
    j["m"] = report.params.m;
    j["lambda"] = report.params.lambda();
    j["kind"] = report.bound_kind == BettiBoundReport::BoundKind::Linear ? "linear" : "quadratic";
    if (report.bound_kind == BettiBoundReport::BoundKind::Linear) j["c"] = report.c;
    json hist = json::object();
    for (const auto& [idx, count] : report.histogram) hist[std::to_string(idx)] = count;
    j["histogram"] = hist;
    json table = json::array();
    for (std::size_t n = 0; n < report.cumulative.size(); ++n)
        table.push_back({{"n", n},
                         {"cumulative", report.cumulative[n]},
                         {"bound", report.bound_values[n]},
                         {"satisfied", report.satisfied[n] != 0}});
    j["table"] = table;
    if (std::isnan(report.fitted_degree)) j["fitted_degree"] = nullptr;
    else j["fitted_degree"] = report.fitted_degree;
    j["verdict"] = to_string(report.verdict);
    return j;
}

std::string classification_csv(const std::vector<OrbitSpaceCase>& cases) {
    std::ostringstream os;
    os << "#,Ext Angles,Int Angles,Tiling?,Tile,No. Tiles\n";
    for (const OrbitSpaceCase& c : cases) {
        std::string ext, interior;
        for (std::size_t i = 0; i < c.boundary_angles.size(); ++i)
            ext += (i ? ", " : "") + c.boundary_angles[i].str();
        for (std::size_t i = 0; i < c.cone_angles.size(); ++i)
            interior += (i ? ", " : "") + c.cone_angles[i].str();
        os << c.case_id << ',' << csv_cell(ext) << ',' << csv_cell(interior) << ','
           << (c.tiling ? "Yes" : "No") << ',';
        if (c.tiling)
            os << csv_cell(c.tiling->tile_str()) << ',' << c.tiling->count.str();
        else
            os << ',';
        os << '\n';
    }
    return os.str();
}

std::string report_csv(const BettiBoundReport& report) {
    std::ostringstream os;
    os << "n,cumulative,bound,satisfied\n";
    for (std::size_t n = 0; n < report.cumulative.size(); ++n)
        os << n << ',' << report.cumulative[n] << ',' << report.bound_values[n] << ','
           << (report.satisfied[n] ? "true" : "false") << '\n';
    return os.str();
}

std::string report_plot_data(const BettiBoundReport& report) {
    std::ostringstream os;
    os << "# n cumulative bound\n";
    for (std::size_t n = 0; n < report.cumulative.size(); ++n)
        os << n << ' ' << report.cumulative[n] << ' ' << report.bound_values[n] << '\n';
    return os.str();
}

}  // namespace orbitile
