#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace orbitile::sph {

// Householder reflection of a point across the great-circle plane with the
// given unit normal. An isometry of S^2; involutive.
template <typename D1, typename D2>
typename D1::PlainObject reflect(const Eigen::MatrixBase<D1>& point,
                                 const Eigen::MatrixBase<D2>& mirror_normal) {
    return point - 2.0 * point.dot(mirror_normal) * mirror_normal;
}

// Reflection matrix I - 2 n n^T for a unit normal n.
template <typename D>
Eigen::Matrix<typename D::Scalar, 3, 3> reflection_matrix(const Eigen::MatrixBase<D>& n) {
    using S = typename D::Scalar;
    return Eigen::Matrix<S, 3, 3>::Identity() - S(2) * (n * n.transpose());
}

// Geodesic (arc) distance between unit vectors, numerically stable near 0
// and pi.
template <typename D1, typename D2>
typename D1::Scalar arc_distance(const Eigen::MatrixBase<D1>& u, const Eigen::MatrixBase<D2>& v) {
    return std::atan2(u.cross(v).norm(), u.dot(v));
}

// Interior angle of a spherical triangle at `vertex`, between the arcs toward
// `toward_a` and `toward_b`, measured in the tangent plane.
template <typename D1, typename D2, typename D3>
typename D1::Scalar vertex_angle(const Eigen::MatrixBase<D1>& vertex,
                                 const Eigen::MatrixBase<D2>& toward_a,
                                 const Eigen::MatrixBase<D3>& toward_b) {
    using V = typename D1::PlainObject;
    const V ta = (toward_a - toward_a.dot(vertex) * vertex).normalized();
    const V tb = (toward_b - toward_b.dot(vertex) * vertex).normalized();
    return std::atan2(ta.cross(tb).norm(), ta.dot(tb));
}

// Unit tangent at `from` pointing along the arc toward `to`.
template <typename D1, typename D2>
typename D1::PlainObject initial_tangent(const Eigen::MatrixBase<D1>& from,
                                         const Eigen::MatrixBase<D2>& to) {
    return (to - to.dot(from) * from).normalized();
}

// Point at arc-length t from `from` in unit tangent direction `dir`.
template <typename D1, typename D2>
typename D1::PlainObject walk(const Eigen::MatrixBase<D1>& from, const Eigen::MatrixBase<D2>& dir,
                              double t) {
    return std::cos(t) * from + std::sin(t) * dir;
}

// Signed area (spherical excess) of the triangle with unit vertices a, b, c,
// computed from the measured vertex angles.
template <typename D>
typename D::Scalar triangle_excess(const Eigen::MatrixBase<D>& a, const Eigen::MatrixBase<D>& b,
                                   const Eigen::MatrixBase<D>& c) {
    return vertex_angle(a, b, c) + vertex_angle(b, c, a) + vertex_angle(c, a, b) -
           typename D::Scalar(3.14159265358979323846264338327950288);
}

}  // namespace orbitile::sph
