#ifndef BERRY_ROTATIONS_HPP
#define BERRY_ROTATIONS_HPP

#include <Eigen/Dense>

#include "berry/linalg.hpp"

namespace berry {

// Constant tilt plus azimuth. theta outside [0, pi] is rejected, not
// normalized: silent wrapping would flip the sign of the solid angle.
struct EulerPair {
    double theta;
    double phi;
    EulerPair(double theta_, double phi_);
};

// Passive rotation about e3 by phi (e1 rotates toward e2 in the active view).
Eigen::Matrix3d cartesian_r3(double phi);

// Passive rotation about e2 by theta.
Eigen::Matrix3d cartesian_r2(double theta);

// Composite passive rotation R2(theta) R3(phi), closed form.
Eigen::Matrix3d cartesian_r(double theta, double phi);

// Active rotation about an arbitrary unit axis (Rodrigues).
Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle);

// max-norm defect of R_{g.axis}(angle) - g R_axis(angle) g^T; a test
// utility for the class-angle relation.
double class_angle_defect(const Eigen::Matrix3d& g, const Eigen::Vector3d& axis,
                          double angle);

// Unitary change of basis from Cartesian components to spherical
// components (r_+1, r_0, r_-1).
Eigen::Matrix3cd spherical_basis_change();

// Spherical-basis counterparts of the passive rotations.
Eigen::Matrix3cd spherical_r3(double phi);
Eigen::Matrix3cd spherical_r2(double theta);

// R2(theta) R3*(phi) acting on conjugate spherical components; the matrix
// that maps lab-frame amplitudes of the |1,m> triplet to the rotating frame.
Eigen::Matrix3cd spherical_r(double theta, double phi);

// Spin-1 rotation matrix about e2 in the angular-momentum basis.
Eigen::Matrix3d wigner_d1(double theta);

// 4x4 inverse frame rotation: adjoint of spherical_r on the |1,m> block,
// identity on the rotation-invariant |0,0> slot.
Eigen::Matrix4cd extended_r_dagger(double theta, double phi);

// Spin-1 generators in the spherical basis, j3 = diag(1, 0, -1).
struct GeneratorSet {
    Eigen::Matrix3cd j1;
    Eigen::Matrix3cd j2;
    Eigen::Matrix3cd j3;
};

GeneratorSet spin1_generators();

// e^{i theta J2} J3 e^{-i theta J2} = J3 cos(theta) - J1 sin(theta).
Eigen::Matrix3cd conjugated_j3(double theta, const GeneratorSet& gens);

}  // namespace berry

#endif
