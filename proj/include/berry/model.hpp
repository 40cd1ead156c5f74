#ifndef BERRY_MODEL_HPP
#define BERRY_MODEL_HPP

#include <array>
#include <string>

#include "berry/linalg.hpp"
#include "berry/rotations.hpp"

namespace berry {

// Which instantaneous eigenstate a run follows. Basis order everywhere is
// (|1,1>, |1,0>, |1,-1>, |0,0>).
enum class StateLabel { plus1, zero, minus1, zero_zero };

// z-projection quantum number entering the geometric phase; 0 for both
// |0>-like states.
int winding_number(StateLabel n);

// Position of the label in the fixed basis order.
int state_index(StateLabel n);

StateLabel parse_state_label(const std::string& text);
std::string to_string(StateLabel n);

// Unperturbed level splitting and dipole coupling, atomic units (hbar = 1).
// The energy zero sits halfway between the unperturbed |1,0> and |0,0>
// levels, so they start at +e1 and -e1.
struct LevelParams {
    double e1;
    double d;
    LevelParams(double e1_, double d_);
};

// Rotating electric field: magnitude, constant tilt, uniform azimuthal
// angular velocity and initial azimuth, phi(t) = phi0 + omega t.
struct FieldConfig {
    double e_mag;
    double theta;
    double omega;
    double phi0;
    FieldConfig(double e_mag_, double theta_, double omega_, double phi0_);

    // One revolution of the field; falls back to 2*pi of unit time for a
    // static field (omega == 0) so finite-horizon runs stay well defined.
    double period() const;

    double phi_at(double t) const { return phi0 + omega * t; }
};

// Rotation angle diagonalizing the coupled (|1,0>, |0,0>) block; lies in
// (-pi/4, pi/4] with cos(2 alpha) > 0, non-positive for d*E >= 0.
struct MixingAngle {
    double alpha;
};

struct Spectrum {
    double e_plus1;
    double e_0;
    double e_minus1;
    double e_00;

    double energy_of(StateLabel n) const;
};

MixingAngle mixing_angle(const LevelParams& p, double e_mag);

Spectrum spectrum(const LevelParams& p, double e_mag);

// Eigenstates in the frame where the field is static and along z, ordered
// (phi_1, phi_0, phi_-1, phi_00).
std::array<State, 4> rotating_frame_eigenstates(MixingAngle a);

// Instantaneous eigenstates in the laboratory frame, extended_r_dagger
// applied to the rotating-frame columns.
std::array<State, 4> lab_frame_eigenstates(MixingAngle a, double theta, double phi);

// 4x4 Hamiltonian in the rotating frame: diagonal e1 on the |1,m> triplet,
// -e1 on |0,0>, off-diagonal -d*E coupling |1,0> and |0,0>.
Eigen::Matrix4cd rotating_frame_hamiltonian(const LevelParams& p, double e_mag);

// Laboratory-frame Hamiltonian, similarity transform R^+(t) H_rot R(t); its
// eigenvectors are the lab-frame eigenstates with the static spectrum.
Eigen::Matrix4cd lab_hamiltonian(const LevelParams& p, const FieldConfig& f, double t);

// Cartesian components of the rotating field at time t.
Eigen::Vector3d field_vector(const FieldConfig& f, double t);

}  // namespace berry

#endif
