#include "berry/rotations.hpp"

#include <cmath>

namespace berry {

namespace {
const Complex kI(0.0, 1.0);
}

EulerPair::EulerPair(double theta_, double phi_) : theta(theta_), phi(phi_)
{
    if (!(theta >= 0.0 && theta <= M_PI))
        throw std::invalid_argument("EulerPair: theta must lie in [0, pi]");
}

Eigen::Matrix3d cartesian_r3(double phi)
{
    const double c = std::cos(phi), s = std::sin(phi);
    Eigen::Matrix3d r;
    r << c, s, 0.0,
        -s, c, 0.0,
         0.0, 0.0, 1.0;
    return r;
}

Eigen::Matrix3d cartesian_r2(double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::Matrix3d r;
    r << c, 0.0, -s,
         0.0, 1.0, 0.0,
         s, 0.0, c;
    return r;
}

Eigen::Matrix3d cartesian_r(double theta, double phi)
{
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    Eigen::Matrix3d r;
    r << ct * cp, ct * sp, -st,
        -sp, cp, 0.0,
         st * cp, st * sp, ct;
    return r;
}

Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle)
{
    const Eigen::Vector3d n = axis.normalized();
    Eigen::Matrix3d k;
    k << 0.0, -n.z(), n.y(),
         n.z(), 0.0, -n.x(),
        -n.y(), n.x(), 0.0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
           (1.0 - std::cos(angle)) * k * k;
}

double class_angle_defect(const Eigen::Matrix3d& g, const Eigen::Vector3d& axis,
                          double angle)
{
    const Eigen::Matrix3d lhs = axis_rotation(g * axis, angle);
    const Eigen::Matrix3d rhs = g * axis_rotation(axis, angle) * g.transpose();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

Eigen::Matrix3cd spherical_basis_change()
{
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd s;
    s << -inv_sqrt2, -kI * inv_sqrt2, 0.0,
          0.0, 0.0, 1.0,
          inv_sqrt2, -kI * inv_sqrt2, 0.0;
    return s;
}

Eigen::Matrix3cd spherical_r3(double phi)
{
    Eigen::Matrix3cd r = Eigen::Matrix3cd::Zero();
    r(0, 0) = std::exp(-kI * phi);
    r(1, 1) = 1.0;
    r(2, 2) = std::exp(kI * phi);
    return r;
}

Eigen::Matrix3cd spherical_r2(double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd r;
    r << 0.5 * (1.0 + c), inv_sqrt2 * s, 0.5 * (1.0 - c),
        -inv_sqrt2 * s, c, inv_sqrt2 * s,
         0.5 * (1.0 - c), -inv_sqrt2 * s, 0.5 * (1.0 + c);
    return r;
}

Eigen::Matrix3cd spherical_r(double theta, double phi)
{
    const double ct = std::cos(theta), st = std::sin(theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex ep = std::exp(kI * phi);
    const Complex em = std::exp(-kI * phi);
    Eigen::Matrix3cd r;
    r << 0.5 * (1.0 + ct) * ep, inv_sqrt2 * st, 0.5 * (1.0 - ct) * em,
        -inv_sqrt2 * st * ep, ct, inv_sqrt2 * st * em,
         0.5 * (1.0 - ct) * ep, -inv_sqrt2 * st, 0.5 * (1.0 + ct) * em;
    return r;
}

Eigen::Matrix3d wigner_d1(double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3d d;
    d << 0.5 * (1.0 + c), -inv_sqrt2 * s, 0.5 * (1.0 - c),
         inv_sqrt2 * s, c, -inv_sqrt2 * s,
         0.5 * (1.0 - c), inv_sqrt2 * s, 0.5 * (1.0 + c);
    return d;
}

Eigen::Matrix4cd extended_r_dagger(double theta, double phi)
{
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    r.topLeftCorner<3, 3>() = spherical_r(theta, phi).adjoint();
    r(3, 3) = 1.0;
    return r;
}

GeneratorSet spin1_generators()
{
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    GeneratorSet g;
    g.j1 << 0.0, inv_sqrt2, 0.0,
            inv_sqrt2, 0.0, inv_sqrt2,
            0.0, inv_sqrt2, 0.0;
    g.j2 << 0.0, -kI * inv_sqrt2, 0.0,
            kI * inv_sqrt2, 0.0, -kI * inv_sqrt2,
            0.0, kI * inv_sqrt2, 0.0;
    g.j3 << 1.0, 0.0, 0.0,
            0.0, 0.0, 0.0,
            0.0, 0.0, -1.0;
    return g;
}

Eigen::Matrix3cd conjugated_j3(double theta, const GeneratorSet& gens)
{
    return std::cos(theta) * gens.j3 - std::sin(theta) * gens.j1;
}

}  // namespace berry
