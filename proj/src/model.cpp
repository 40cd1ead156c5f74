#include "berry/model.hpp"

#include <cmath>

namespace berry {

int winding_number(StateLabel n)
{
    switch (n) {
        case StateLabel::plus1: return 1;
        case StateLabel::minus1: return -1;
        default: return 0;
    }
}

int state_index(StateLabel n)
{
    switch (n) {
        case StateLabel::plus1: return 0;
        case StateLabel::zero: return 1;
        case StateLabel::minus1: return 2;
        default: return 3;
    }
}

StateLabel parse_state_label(const std::string& text)
{
    if (text == "+1" || text == "1") return StateLabel::plus1;
    if (text == "0") return StateLabel::zero;
    if (text == "-1") return StateLabel::minus1;
    if (text == "00") return StateLabel::zero_zero;
    throw std::invalid_argument("state label must be one of +1, 0, -1, 00 (got '" +
                                text + "')");
}

std::string to_string(StateLabel n)
{
    switch (n) {
        case StateLabel::plus1: return "+1";
        case StateLabel::zero: return "0";
        case StateLabel::minus1: return "-1";
        default: return "00";
    }
}

LevelParams::LevelParams(double e1_, double d_) : e1(e1_), d(d_)
{
    if (!(e1 > 0.0))
        throw std::invalid_argument("LevelParams: e1 must be positive");
    if (!std::isfinite(d))
        throw std::invalid_argument("LevelParams: d must be finite");
}

FieldConfig::FieldConfig(double e_mag_, double theta_, double omega_, double phi0_)
    : e_mag(e_mag_), theta(theta_), omega(omega_), phi0(phi0_)
{
    if (!(e_mag >= 0.0))
        throw std::invalid_argument("FieldConfig: field magnitude must be >= 0");
    if (!(theta >= 0.0 && theta <= M_PI))
        throw std::invalid_argument("FieldConfig: theta must lie in [0, pi]");
    if (!std::isfinite(omega) || !std::isfinite(phi0))
        throw std::invalid_argument("FieldConfig: omega and phi0 must be finite");
}

double FieldConfig::period() const
{
    return omega == 0.0 ? 2.0 * M_PI : 2.0 * M_PI / std::abs(omega);
}

double Spectrum::energy_of(StateLabel n) const
{
    switch (n) {
        case StateLabel::plus1: return e_plus1;
        case StateLabel::zero: return e_0;
        case StateLabel::minus1: return e_minus1;
        default: return e_00;
    }
}

MixingAngle mixing_angle(const LevelParams& p, double e_mag)
{
    // tan(2a) = -dE/E1 on the branch with cos(2a) > 0
    return MixingAngle{0.5 * std::atan2(-p.d * e_mag, p.e1)};
}

Spectrum spectrum(const LevelParams& p, double e_mag)
{
    const double e0 = std::hypot(p.e1, p.d * e_mag);
    return Spectrum{p.e1, e0, p.e1, -e0};
}

std::array<State, 4> rotating_frame_eigenstates(MixingAngle a)
{
    const double c = std::cos(a.alpha), s = std::sin(a.alpha);
    State phi1, phi0, phim1, phi00;
    phi1 << 1.0, 0.0, 0.0, 0.0;
    phi0 << 0.0, c, 0.0, s;
    phim1 << 0.0, 0.0, 1.0, 0.0;
    phi00 << 0.0, -s, 0.0, c;
    return {phi1, phi0, phim1, phi00};
}

std::array<State, 4> lab_frame_eigenstates(MixingAngle a, double theta, double phi)
{
    const Eigen::Matrix4cd rd = extended_r_dagger(theta, phi);
    auto rot = rotating_frame_eigenstates(a);
    std::array<State, 4> lab;
    for (int k = 0; k < 4; ++k) lab[k] = rd * rot[k];
    return lab;
}

Eigen::Matrix4cd rotating_frame_hamiltonian(const LevelParams& p, double e_mag)
{
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 0) = p.e1;
    h(1, 1) = p.e1;
    h(2, 2) = p.e1;
    h(3, 3) = -p.e1;
    h(1, 3) = -p.d * e_mag;
    h(3, 1) = -p.d * e_mag;
    return h;
}

Eigen::Matrix4cd lab_hamiltonian(const LevelParams& p, const FieldConfig& f, double t)
{
    const Eigen::Matrix4cd rd = extended_r_dagger(f.theta, f.phi_at(t));
    const Eigen::Matrix4cd h = rd * rotating_frame_hamiltonian(p, f.e_mag) * rd.adjoint();
    return 0.5 * (h + h.adjoint());  // scrub rounding off the Hermitian part
}

Eigen::Vector3d field_vector(const FieldConfig& f, double t)
{
    const double phi = f.phi_at(t);
    return f.e_mag * Eigen::Vector3d(std::sin(f.theta) * std::cos(phi),
                                     std::sin(f.theta) * std::sin(phi),
                                     std::cos(f.theta));
}

}  // namespace berry
