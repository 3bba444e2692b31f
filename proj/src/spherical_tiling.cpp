#include "orbitile/spherical_tiling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "orbitile/errors.hpp"
#include "orbitile/spherical.hpp"
#include "orbitile/tolerance.hpp"

namespace orbitile {

namespace {

constexpr double kKeyGrid = 1e-6;   // canonical-key quantization
constexpr double kMergeTol = 1e-7;  // reflection-chain drift is far smaller

using Key3 = std::array<long long, 3>;

Key3 quantize(const Eigen::Vector3d& p) {
    return {llround(p.x() / kKeyGrid), llround(p.y() / kKeyGrid), llround(p.z() / kKeyGrid)};
}

// Point pool keyed on a 1e-6 grid. Lookup probes the 27 neighboring cells so
// that a point drifting across a cell boundary still finds its
// representative.
class PointPool {
public:
    int insert(const Eigen::Vector3d& p) {
        const Key3 k = quantize(p);
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy)
                for (long long dz = -1; dz <= 1; ++dz) {
                    auto it = map_.find({k[0] + dx, k[1] + dy, k[2] + dz});
                    if (it != map_.end() && (points_[it->second] - p).norm() < kMergeTol)
                        return it->second;
                }
        const int id = static_cast<int>(points_.size());
        points_.push_back(p);
        map_.emplace(k, id);
        return id;
    }

    const std::vector<Eigen::Vector3d>& points() const { return points_; }

private:
    std::map<Key3, int> map_;
    std::vector<Eigen::Vector3d> points_;
};

std::array<int, 3> sorted3(std::array<int, 3> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

double SphericalTriangle::excess() const { return sph::triangle_excess(a, b, c); }

std::array<double, 3> SphericalTriangle::side_lengths() const {
    return {sph::arc_distance(b, c), sph::arc_distance(c, a), sph::arc_distance(a, b)};
}

SphericalTriangle triangle_from_angles(Rational alpha, Rational beta, Rational gamma) {
    for (Rational r : {alpha, beta, gamma})
        if (!(r > Rational(0)) || !(r < Rational(1)))
            throw NotSphericalError("triangle angles must lie in (0, pi)");
    if (!(alpha + beta + gamma > Rational(1)))
        throw NotSphericalError("angle sum " + (alpha + beta + gamma).str() +
                                "*pi does not exceed pi");

    const double A = angle_value(alpha), B = angle_value(beta), C = angle_value(gamma);
    const double cb = (std::cos(B) + std::cos(A) * std::cos(C)) / (std::sin(A) * std::sin(C));
    const double cc = (std::cos(C) + std::cos(A) * std::cos(B)) / (std::sin(A) * std::sin(B));
    const double b = std::acos(std::clamp(cb, -1.0, 1.0));
    const double c = std::acos(std::clamp(cc, -1.0, 1.0));

    SphericalTriangle t;
    t.a = Eigen::Vector3d(0, 0, 1);
    t.b = Eigen::Vector3d(std::sin(c), 0, std::cos(c));
    t.c = Eigen::Vector3d(std::sin(b) * std::cos(A), std::sin(b) * std::sin(A), std::cos(b));
    t.angles = {alpha, beta, gamma};

    const double measured[3] = {sph::vertex_angle(t.a, t.b, t.c), sph::vertex_angle(t.b, t.c, t.a),
                                sph::vertex_angle(t.c, t.a, t.b)};
    const double declared[3] = {A, B, C};
    for (int i = 0; i < 3; ++i)
        if (std::abs(measured[i] - declared[i]) > 1e-9)
            throw NotSphericalError("constructed triangle fails angle re-measurement");
    return t;
}

std::size_t SphericalTiling::tile_count() const {
    if (kind == Kind::Triangles) return tiles.size();
    return kind == Kind::WholeSphere ? 1 : 2;
}

double SphericalTiling::total_area() const {
    if (kind != Kind::Triangles) return 4.0 * kPi;  // one sphere or two hemispheres
    double area = 0;
    for (const Tile& t : tiles)
        area += sph::triangle_excess(vertices[t.v[0]], vertices[t.v[1]], vertices[t.v[2]]);
    return area;
}

std::vector<std::string> SphericalTiling::canonical_keys() const {
    std::vector<std::string> keys;
    keys.reserve(tiles.size());
    for (const Tile& t : tiles) {
        std::array<Key3, 3> vk;
        for (int i = 0; i < 3; ++i) vk[i] = quantize(vertices[t.v[i]]);
        std::sort(vk.begin(), vk.end());
        std::ostringstream os;
        for (const Key3& k : vk) os << k[0] << ',' << k[1] << ',' << k[2] << ';';
        keys.push_back(os.str());
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<Eigen::Vector3d> SphericalTiling::point_orbit(const Eigen::Vector3d& q) const {
    PointPool pool;
    for (const Eigen::Matrix3d& g : group) pool.insert(g * q);
    std::vector<Eigen::Vector3d> copies = pool.points();
    std::sort(copies.begin(), copies.end(), [](const Eigen::Vector3d& x, const Eigen::Vector3d& y) {
        return quantize(x) < quantize(y);
    });
    return copies;
}

SphericalTiling generate_tiling(const SphericalTriangle& fundamental, double budget_factor) {
    for (Rational r : fundamental.angles)
        if (r.num() != 1 || r.den() < 2)
            throw UnsupportedCaseError("reflection closure needs angles pi/n with n >= 2; got " +
                                       angle_str(r));

    const Rational excess =
        fundamental.angles[0] + fundamental.angles[1] + fundamental.angles[2] - Rational(1);
    const Rational count = Rational(4) / excess;
    if (count.den() != 1) throw std::logic_error("non-integral expected tile count");
    const long expected = count.num();
    const long budget = static_cast<long>(budget_factor * static_cast<double>(expected));

    SphericalTiling tiling;
    tiling.kind = SphericalTiling::Kind::Triangles;
    tiling.fundamental_triangle = fundamental;
    tiling.fundamental = 0;

    PointPool pool;
    std::map<std::array<int, 3>, int> tile_ids;  // sorted vertex ids -> tile

    auto add_tile = [&](std::array<int, 3> v, const Eigen::Matrix3d& op) {
        // Orientation-normalized so point-location sign tests are uniform.
        const auto& pts = pool.points();
        if (pts[v[0]].cross(pts[v[1]]).dot(pts[v[2]]) < 0) std::swap(v[1], v[2]);
        const int id = static_cast<int>(tiling.tiles.size());
        tiling.tiles.push_back({v, op, {-1, -1, -1}});
        tiling.group.push_back(op);
        tile_ids.emplace(sorted3(v), id);
        return id;
    };

    const std::array<int, 3> v0 = {pool.insert(fundamental.a), pool.insert(fundamental.b),
                                   pool.insert(fundamental.c)};
    add_tile(v0, Eigen::Matrix3d::Identity());

    std::deque<int> frontier = {0};
    while (!frontier.empty()) {
        const int id = frontier.front();
        frontier.pop_front();
        for (int e = 0; e < 3; ++e) {
            const std::array<int, 3> tv = tiling.tiles[id].v;
            const int i = tv[e], j = tv[(e + 1) % 3], k = tv[(e + 2) % 3];
            const Eigen::Vector3d n = pool.points()[i].cross(pool.points()[j]).normalized();
            const Eigen::Vector3d image = sph::reflect(pool.points()[k], n);
            std::array<int, 3> nv = {i, j, pool.insert(image)};
            auto it = tile_ids.find(sorted3(nv));
            int nid;
            if (it == tile_ids.end()) {
                if (static_cast<long>(tiling.tiles.size()) >= budget)
                    throw NonClosingError("tile budget " + std::to_string(budget) +
                                          " exceeded; reflections do not close");
                nid = add_tile(nv, sph::reflection_matrix(n) * tiling.tiles[id].op);
                frontier.push_back(nid);
            } else {
                nid = it->second;
            }
            tiling.tiles[id].nbr[e] = nid;
        }
    }

    tiling.vertices = pool.points();
    if (static_cast<long>(tiling.tiles.size()) != expected)
        throw NonClosingError("closure produced " + std::to_string(tiling.tiles.size()) +
                              " tiles, expected " + std::to_string(expected));
    return tiling;
}

SphericalTiling whole_sphere_tiling() {
    SphericalTiling t;
    t.kind = SphericalTiling::Kind::WholeSphere;
    t.case_id = 1;
    t.group = {Eigen::Matrix3d::Identity()};
    return t;
}

SphericalTiling hemisphere_pair_tiling() {
    SphericalTiling t;
    t.kind = SphericalTiling::Kind::HemispherePair;
    t.case_id = 8;
    t.group = {Eigen::Matrix3d::Identity(), Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix()};
    return t;
}

DoubledSpace doubled(const SphericalTriangle& fundamental) {
    DoubledSpace d;
    d.cone_angles = {fundamental.angles[0] * Rational(2), fundamental.angles[1] * Rational(2),
                     fundamental.angles[2] * Rational(2)};

    SphericalTiling pair;
    pair.kind = SphericalTiling::Kind::Triangles;
    pair.fundamental_triangle = fundamental;
    pair.vertices = {fundamental.a, fundamental.b, fundamental.c};
    const Eigen::Vector3d n = fundamental.a.cross(fundamental.b).normalized();
    pair.vertices.push_back(sph::reflect(fundamental.c, n));
    pair.tiles.push_back({{0, 1, 2}, Eigen::Matrix3d::Identity(), {1, 1, 1}});
    pair.tiles.push_back({{0, 1, 3}, sph::reflection_matrix(n), {0, 0, 0}});
    pair.group = {pair.tiles[0].op, pair.tiles[1].op};
    d.pair = pair;
    return d;
}

DoubledSpace doubled_hemisphere() {
    DoubledSpace d;
    d.pair = hemisphere_pair_tiling();
    return d;
}

SphericalTiling tiling_for_case(const OrbitSpaceCase& concrete_case, double budget_factor) {
    if (concrete_case.symbolic())
        throw std::invalid_argument("tiling_for_case: instantiate the family first");
    if (concrete_case.curvature == CurvatureClass::Flat)
        throw UnsupportedCaseError("flat cases tile the plane, not the sphere");
    if (!concrete_case.tiling)
        throw UnsupportedCaseError("case " + std::to_string(concrete_case.case_id) +
                                   " admits positive but not constant curvature: no tiling");

    const TilingDescriptor& desc = *concrete_case.tiling;
    SphericalTiling t;
    if (desc.tile_label == "S^2") {
        t = whole_sphere_tiling();
    } else if (desc.tile_label == "Hemisphere") {
        t = hemisphere_pair_tiling();
    } else {
        const SphericalTriangle tri =
            triangle_from_angles(desc.tile_angles.at(0).multiple_of_pi,
                                 desc.tile_angles.at(1).multiple_of_pi,
                                 desc.tile_angles.at(2).multiple_of_pi);
        t = generate_tiling(tri, budget_factor);
    }
    t.case_id = concrete_case.case_id;
    return t;
}

}  // namespace orbitile
