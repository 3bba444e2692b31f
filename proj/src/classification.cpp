#include "orbitile/classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitile {

namespace {

// Exhaustiveness window for the unbounded (2,2,r) cone family.
constexpr long kConeSearchBound = 30;

bool is_admissible(Rational r) {
    for (Rational a : admissible_boundary_angles())
        if (a == r) return true;
    return false;
}

std::string join_cells(const std::vector<AngleCell>& cells, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += sep;
        s += cells[i].str();
    }
    return s;
}

}  // namespace

std::string to_string(CurvatureClass c) {
    switch (c) {
        case CurvatureClass::ConstantPositive: return "constant-positive";
        case CurvatureClass::PositiveNonConstant: return "positive-non-constant";
        case CurvatureClass::Flat: return "flat";
    }
    return "";
}

std::string AngleCell::str() const {
    if (symbol == 'a') return "alpha";
    if (symbol == 'b') return "beta";
    if (symbol == 'p' || symbol == 'q') {
        const std::string head = coefficient == Rational(1) ? "pi" : coefficient.str() + "pi";
        return head + "/" + symbol;
    }
    return angle_str(multiple_of_pi);
}

AngleCell concrete_angle(Rational multiple_of_pi) { return {multiple_of_pi, 0, Rational(1)}; }
AngleCell boundary_parameter(char symbol) { return {Rational(0), symbol, Rational(1)}; }
AngleCell order_parameter(char symbol, Rational coeff) { return {Rational(0), symbol, coeff}; }

std::string TileCount::str() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::FourP: return "4p";
        case Kind::FourPiOverAlpha: return "4pi/alpha";
        case Kind::Infinite: return "infinite";
    }
    return "";
}

long TileCount::eval(long p) const {
    switch (kind) {
        case Kind::Finite: return value;
        case Kind::FourP:
        case Kind::FourPiOverAlpha: return 4 * p;
        case Kind::Infinite: break;
    }
    throw std::domain_error("TileCount: infinite tilings have no tile count");
}

std::string TilingDescriptor::tile_str() const {
    if (!tile_label.empty()) return tile_label;
    return "(" + join_cells(tile_angles, ",") + ")";
}

bool OrbitSpaceCase::symbolic() const {
    auto any = [](const std::vector<AngleCell>& cells) {
        return std::any_of(cells.begin(), cells.end(), [](const AngleCell& c) { return c.symbolic(); });
    };
    if (any(boundary_angles) || any(cone_angles)) return true;
    if (tiling && any(tiling->tile_angles)) return true;
    return false;
}

std::vector<int> OrbitSpaceCase::cone_orders() const {
    std::vector<int> orders;
    for (const AngleCell& cell : cone_angles) {
        if (cell.symbolic()) throw std::logic_error("cone_orders: symbolic family row");
        // angle 2*pi/p stored as the reduced rational 2/p
        const long p = 2 * cell.multiple_of_pi.den() / cell.multiple_of_pi.num();
        if (Rational(2, p) != cell.multiple_of_pi)
            throw std::logic_error("cone_orders: angle is not of the form 2pi/p");
        orders.push_back(static_cast<int>(p));
    }
    return orders;
}

void validate(const OrbitSpaceCase& c) {
    const bool positive = c.curvature != CurvatureClass::Flat;
    if (!c.boundary_angles.empty() && !c.cone_angles.empty())
        throw std::logic_error("case " + std::to_string(c.case_id) +
                               ": boundary implies no exceptional orbits");
    if (positive && c.boundary_angles.size() > 3)
        throw std::logic_error("positive case with more than 3 boundary arcs");
    if (!positive && (c.boundary_angles.size() < 3 || c.boundary_angles.size() > 4))
        throw std::logic_error("flat case must have 3 or 4 boundary arcs");
    if (positive && c.cone_angles.size() > 3)
        throw std::logic_error("positive case with more than 3 exceptional orbits");

    for (const AngleCell& cell : c.boundary_angles) {
        if (cell.symbolic()) {
            if (cell.symbol != 'a' && cell.symbol != 'b')
                throw std::logic_error("boundary cell with a non-boundary symbol");
            continue;
        }
        if (cell.multiple_of_pi == Rational(1)) {
            // vertex-free boundary marker, case 8 only
            if (c.boundary_angles.size() != 1 || !c.cone_angles.empty())
                throw std::logic_error("pi boundary marker outside the hemisphere row");
            continue;
        }
        if (!is_admissible(cell.multiple_of_pi))
            throw std::logic_error("boundary angle outside the admissible set");
    }
    for (const AngleCell& cell : c.cone_angles) {
        if (cell.symbolic()) continue;
        const Rational m = cell.multiple_of_pi;
        if (!(m > Rational(0)) || m > Rational(1) || Rational(2, 2 * m.den() / m.num()) != m)
            throw std::logic_error("cone angle is not 2pi/p with p >= 2");
    }
    if (c.tiling) {
        const TilingDescriptor& t = *c.tiling;
        if (t.count.kind == TileCount::Kind::Infinite && t.target != TilingTarget::Plane)
            throw std::logic_error("infinite tile count on the sphere");
        if (t.count.kind == TileCount::Kind::Finite) {
            if (t.target != TilingTarget::Sphere)
                throw std::logic_error("finite tile count off the sphere");
            const long v = t.count.value;
            const bool table_value = v == 1 || v == 2 || v == 24 || v == 48 || v == 120;
            const bool four_p = v >= 8 && v % 4 == 0;
            if (!table_value && !four_p) throw std::logic_error("tile count outside the table set");
        }
    }
}

std::vector<Rational> admissible_boundary_angles() {
    return {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)};
}

bool angle_sum_test(const std::array<Rational, 3>& angles, CurvatureClass curvature) {
    const Rational sum = angles[0] + angles[1] + angles[2];
    if (curvature == CurvatureClass::Flat) return sum == Rational(1);
    return sum > Rational(1);
}

Rational average_angle_argument(int k) {
    if (k < 3) throw std::domain_error("average_angle_argument: need at least 3 arcs");
    return Rational(k, 2L * (k - 2));
}

namespace {

TilingDescriptor triangle_tiling(const std::array<Rational, 3>& tile) {
    TilingDescriptor t;
    t.target = TilingTarget::Sphere;
    t.tile_angles = {concrete_angle(tile[0]), concrete_angle(tile[1]), concrete_angle(tile[2])};
    // Gauss-Bonnet: tile count = 4*pi / excess
    const Rational excess = tile[0] + tile[1] + tile[2] - Rational(1);
    const Rational count = Rational(4) / excess;
    if (count.den() != 1 || count.num() <= 0)
        throw std::logic_error("non-integral Gauss-Bonnet tile count");
    t.count = {TileCount::Kind::Finite, count.num()};
    return t;
}

}  // namespace

std::vector<OrbitSpaceCase> enumerate_positive_cases() {
    std::vector<OrbitSpaceCase> out;
    const std::vector<Rational> adm = admissible_boundary_angles();
    int id = 1;

    // ---- empty boundary ----
    {
        OrbitSpaceCase sphere;
        sphere.case_id = id++;
        sphere.curvature = CurvatureClass::ConstantPositive;
        sphere.tiling = TilingDescriptor{TilingTarget::Sphere, "S^2", {}, {TileCount::Kind::Finite, 1}};
        out.push_back(sphere);
    }
    {
        // One cone point: the teardrop family, positive but never constant.
        OrbitSpaceCase teardrop;
        teardrop.case_id = id++;
        teardrop.curvature = CurvatureClass::PositiveNonConstant;
        teardrop.cone_angles = {order_parameter('p', Rational(2))};
        out.push_back(teardrop);
    }
    {
        // Two cone points: the football family.
        OrbitSpaceCase football;
        football.case_id = id++;
        football.curvature = CurvatureClass::PositiveNonConstant;
        football.cone_angles = {order_parameter('p', Rational(2)), order_parameter('q', Rational(2))};
        out.push_back(football);
    }

    // Three cone points (2pi/p, 2pi/q, 2pi/r): admissible exactly when the
    // doubled triangle (pi/p, pi/q, pi/r) is spherical. Four or more cone
    // points fail the averaging argument (four triangles, total angle at most
    // 4*pi). Exhaust the search window and collapse the (2,2,r) ray.
    std::vector<std::array<long, 3>> sporadic;
    bool family_22r_complete = true;
    for (long p = 2; p <= kConeSearchBound; ++p)
        for (long q = p; q <= kConeSearchBound; ++q)
            for (long r = q; r <= kConeSearchBound; ++r) {
                const bool spherical = angle_sum_test(
                    {Rational(1, p), Rational(1, q), Rational(1, r)}, CurvatureClass::ConstantPositive);
                if (p == 2 && q == 2) {
                    if (!spherical) family_22r_complete = false;
                } else if (spherical) {
                    sporadic.push_back({p, q, r});
                }
            }
    if (!family_22r_complete) throw std::logic_error("(2,2,r) family unexpectedly truncated");
    const std::vector<std::array<long, 3>> expected_sporadic = {{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
    if (sporadic != expected_sporadic)
        throw std::logic_error("three-cone-point enumeration disagrees with the angle lattice");

    {
        OrbitSpaceCase fam;
        fam.case_id = id++;
        fam.curvature = CurvatureClass::ConstantPositive;
        fam.cone_angles = {concrete_angle(Rational(1)), concrete_angle(Rational(1)),
                           order_parameter('p', Rational(2))};
        TilingDescriptor t;
        t.target = TilingTarget::Sphere;
        t.tile_angles = {concrete_angle(Rational(1, 2)), concrete_angle(Rational(1, 2)),
                         order_parameter('p', Rational(1))};
        t.count = {TileCount::Kind::FourP, 0};
        fam.tiling = t;
        out.push_back(fam);
    }
    for (const auto& [p, q, r] : expected_sporadic) {
        OrbitSpaceCase c;
        c.case_id = id++;
        c.curvature = CurvatureClass::ConstantPositive;
        c.cone_angles = {concrete_angle(Rational(2, p)), concrete_angle(Rational(2, q)),
                         concrete_angle(Rational(2, r))};
        c.tiling = triangle_tiling({Rational(1, p), Rational(1, q), Rational(1, r)});
        out.push_back(c);
    }

    // ---- nonempty boundary ----
    {
        // One arc, no vertex: the hemisphere; the table marks the boundary
        // with a single angle pi.
        OrbitSpaceCase hemi;
        hemi.case_id = id++;
        hemi.curvature = CurvatureClass::ConstantPositive;
        hemi.boundary_angles = {concrete_angle(Rational(1))};
        hemi.tiling = TilingDescriptor{TilingTarget::Sphere, "Hemisphere", {}, {TileCount::Kind::Finite, 2}};
        out.push_back(hemi);
    }
    {
        // One arc, one vertex: doubles to a teardrop.
        OrbitSpaceCase c;
        c.case_id = id++;
        c.curvature = CurvatureClass::PositiveNonConstant;
        c.boundary_angles = {boundary_parameter('a')};
        out.push_back(c);
    }
    {
        // Two arcs: doubles to a football.
        OrbitSpaceCase c;
        c.case_id = id++;
        c.curvature = CurvatureClass::PositiveNonConstant;
        c.boundary_angles = {boundary_parameter('a'), boundary_parameter('b')};
        out.push_back(c);
    }

    // Three arcs: the triangle angle sum must exceed pi. Four or more arcs
    // are pruned by the averaging argument.
    for (int k = 4; k <= 12; ++k)
        if (average_angle_argument(k) > Rational(1))
            throw std::logic_error("averaging argument failed to prune k >= 4 arcs");

    std::vector<std::array<Rational, 3>> three_arc;
    for (std::size_t i = 0; i < adm.size(); ++i)
        for (std::size_t j = i; j < adm.size(); ++j)
            for (std::size_t k = j; k < adm.size(); ++k)
                if (angle_sum_test({adm[i], adm[j], adm[k]}, CurvatureClass::ConstantPositive))
                    three_arc.push_back({adm[i], adm[j], adm[k]});

    // The (pi/2, pi/2, alpha) ray collapses to one family row.
    std::vector<std::array<Rational, 3>> rest;
    std::size_t half_half = 0;
    for (const auto& t : three_arc) {
        if (t[0] == Rational(1, 2) && t[1] == Rational(1, 2)) ++half_half;
        else rest.push_back(t);
    }
    if (half_half != adm.size())
        throw std::logic_error("(pi/2, pi/2, alpha) family unexpectedly truncated");
    const std::vector<std::array<Rational, 3>> expected_rest = {
        {Rational(1, 2), Rational(1, 3), Rational(1, 3)},
        {Rational(1, 2), Rational(1, 3), Rational(1, 4)}};
    if (rest != expected_rest)
        throw std::logic_error("three-arc enumeration disagrees with the angle lattice");

    {
        OrbitSpaceCase fam;
        fam.case_id = id++;
        fam.curvature = CurvatureClass::ConstantPositive;
        fam.boundary_angles = {concrete_angle(Rational(1, 2)), concrete_angle(Rational(1, 2)),
                               boundary_parameter('a')};
        TilingDescriptor t;
        t.target = TilingTarget::Sphere;
        t.tile_angles = {concrete_angle(Rational(1, 2)), concrete_angle(Rational(1, 2)),
                         boundary_parameter('a')};
        t.count = {TileCount::Kind::FourPiOverAlpha, 0};
        fam.tiling = t;
        out.push_back(fam);
    }
    for (const auto& t : expected_rest) {
        OrbitSpaceCase c;
        c.case_id = id++;
        c.curvature = CurvatureClass::ConstantPositive;
        c.boundary_angles = {concrete_angle(t[0]), concrete_angle(t[1]), concrete_angle(t[2])};
        c.tiling = triangle_tiling(t);
        out.push_back(c);
    }

    for (const OrbitSpaceCase& c : out) validate(c);
    return out;
}

std::vector<OrbitSpaceCase> enumerate_flat_cases() {
    std::vector<OrbitSpaceCase> out;
    const std::vector<Rational> adm = admissible_boundary_angles();
    int id = 14;

    // Three arcs: exact angle sum pi.
    for (std::size_t i = 0; i < adm.size(); ++i)
        for (std::size_t j = i; j < adm.size(); ++j)
            for (std::size_t k = j; k < adm.size(); ++k) {
                if (!angle_sum_test({adm[i], adm[j], adm[k]}, CurvatureClass::Flat)) continue;
                OrbitSpaceCase c;
                c.case_id = id++;
                c.curvature = CurvatureClass::Flat;
                c.boundary_angles = {concrete_angle(adm[i]), concrete_angle(adm[j]),
                                     concrete_angle(adm[k])};
                TilingDescriptor t;
                t.target = TilingTarget::Plane;
                t.tile_angles = c.boundary_angles;
                t.count = {TileCount::Kind::Infinite, 0};
                c.tiling = t;
                out.push_back(c);
            }

    // Four arcs: the averaging bound is exactly pi, so both fan triangles
    // must be flat and every corner at most pi/2 forces all corners to pi/2.
    if (average_angle_argument(4) != Rational(1))
        throw std::logic_error("averaging bound at k = 4 must be exactly pi");
    {
        bool found_square = false;
        for (Rational a : adm)
            for (Rational b : adm)
                for (Rational c : adm)
                    for (Rational d : adm)
                        if (a + b + c + d == Rational(2)) {
                            if (a != Rational(1, 2) || b != a || c != a || d != a)
                                throw std::logic_error("non-square flat quadrilateral");
                            found_square = true;
                        }
        if (!found_square) throw std::logic_error("flat square not recovered");
        OrbitSpaceCase sq;
        sq.case_id = id++;
        sq.curvature = CurvatureClass::Flat;
        sq.boundary_angles.assign(4, concrete_angle(Rational(1, 2)));
        TilingDescriptor t;
        t.target = TilingTarget::Plane;
        t.tile_angles = sq.boundary_angles;
        t.count = {TileCount::Kind::Infinite, 0};
        sq.tiling = t;
        out.push_back(sq);
    }

    // Five or more arcs: average strictly below pi.
    for (int k = 5; k <= 12; ++k)
        if (!(average_angle_argument(k) < Rational(1)))
            throw std::logic_error("averaging argument failed to prune k > 4 arcs");

    if (out.size() != 4) throw std::logic_error("flat enumeration must yield 4 cases");
    for (const OrbitSpaceCase& c : out) validate(c);
    return out;
}

std::vector<OrbitSpaceCase> enumerate_all_cases() {
    std::vector<OrbitSpaceCase> all = enumerate_positive_cases();
    std::vector<OrbitSpaceCase> flat = enumerate_flat_cases();
    all.insert(all.end(), flat.begin(), flat.end());
    return all;
}

namespace {

AngleCell substitute(const AngleCell& cell, long p, long q) {
    if (!cell.symbolic()) return cell;
    long v = 0;
    switch (cell.symbol) {
        case 'p': case 'a': v = p; break;
        case 'q': case 'b': v = q; break;
        default: throw std::logic_error("unknown symbol");
    }
    if (v < 2) throw std::domain_error("family parameter must be at least 2");
    if ((cell.symbol == 'a' || cell.symbol == 'b') && v != 2 && v != 3 && v != 4 && v != 6)
        throw std::domain_error("boundary parameter must make pi/alpha one of 2, 3, 4, 6");
    if (cell.symbol == 'a' || cell.symbol == 'b') return concrete_angle(Rational(1, v));
    return concrete_angle(cell.coefficient * Rational(1, v));
}

}  // namespace

OrbitSpaceCase instantiate(const OrbitSpaceCase& family, long p, long q) {
    OrbitSpaceCase c = family;
    for (AngleCell& cell : c.boundary_angles) cell = substitute(cell, p, q);
    for (AngleCell& cell : c.cone_angles) cell = substitute(cell, p, q);
    if (c.tiling) {
        for (AngleCell& cell : c.tiling->tile_angles) cell = substitute(cell, p, q);
        if (c.tiling->count.kind == TileCount::Kind::FourP ||
            c.tiling->count.kind == TileCount::Kind::FourPiOverAlpha)
            c.tiling->count = {TileCount::Kind::Finite, c.tiling->count.eval(p)};
    }
    validate(c);
    return c;
}

std::vector<OrbitSpaceCase> concrete_instances(const OrbitSpaceCase& family) {
    bool has_p = false, has_q = false, has_a = false, has_b = false;
    auto scan = [&](const std::vector<AngleCell>& cells) {
        for (const AngleCell& c : cells) {
            if (c.symbol == 'p') has_p = true;
            if (c.symbol == 'q') has_q = true;
            if (c.symbol == 'a') has_a = true;
            if (c.symbol == 'b') has_b = true;
        }
    };
    scan(family.boundary_angles);
    scan(family.cone_angles);
    if (family.tiling) scan(family.tiling->tile_angles);

    if (!has_p && !has_q && !has_a && !has_b) return {family};

    const std::vector<long> ints = {2, 3, 4, 5, 6};
    const std::vector<long> alphas = {2, 3, 4, 6};  // pi/alpha over the admissible set
    const std::vector<long>& first = has_a ? alphas : ints;

    std::vector<OrbitSpaceCase> out;
    if (has_q || has_b) {
        const std::vector<long>& second = has_b ? alphas : ints;
        for (long p : first)
            for (long q : second)
                if (q >= p) out.push_back(instantiate(family, p, q));
    } else {
        for (long p : first) out.push_back(instantiate(family, p));
    }
    return out;
}

OrbitSpaceCase case_by_id(int case_id) {
    for (const OrbitSpaceCase& c : enumerate_all_cases())
        if (c.case_id == case_id) return c;
    throw std::out_of_range("case id must lie in 1..17");
}

}  // namespace orbitile
