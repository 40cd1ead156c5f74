#include "berry/verify.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "berry/phase.hpp"
#include "berry/rotations.hpp"

namespace berry {

namespace {

const Complex kI(0.0, 1.0);

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double rotation_orthogonality(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double a = uniform(rng, -2.0 * M_PI, 2.0 * M_PI);
        for (const Eigen::Matrix3d& r : {cartesian_r2(a), cartesian_r3(a)}) {
            worst = std::max(worst, (r * r.transpose() - Eigen::Matrix3d::Identity())
                                        .cwiseAbs()
                                        .maxCoeff());
            worst = std::max(worst, std::abs(r.determinant() - 1.0));
        }
    }
    return worst;
}

double class_angle(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double theta = uniform(rng, 0.0, M_PI);
        const double phi = uniform(rng, -M_PI, M_PI);
        // tilting the e2 axis with an active rotation about e3
        const Eigen::Matrix3d g = cartesian_r3(phi).transpose();
        worst = std::max(worst, class_angle_defect(g, Eigen::Vector3d::UnitY(), theta));
    }
    return worst;
}

double composite_rotation(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double theta = uniform(rng, 0.0, M_PI);
        const double phi = uniform(rng, -M_PI, M_PI);
        const Matrix product = mat_mul(cartesian_r2(theta).cast<Complex>(),
                                       cartesian_r3(phi).cast<Complex>());
        worst = std::max(worst,
                         max_abs(product - cartesian_r(theta, phi).cast<Complex>()));
    }
    return worst;
}

double field_alignment()
{
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double theta = M_PI * i / 4.0;
            const double phi = 2.0 * M_PI * j / 5.0;
            const FieldConfig f(1.0, theta, 0.0, phi);
            const Eigen::Vector3d rotated = cartesian_r(theta, phi) * field_vector(f, 0.0);
            worst = std::max(worst,
                             (rotated - Eigen::Vector3d::UnitZ()).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double spherical_unitarity()
{
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double theta = M_PI * i / 19.0;
            const double phi = 2.0 * M_PI * j / 19.0;
            worst = std::max(worst, unitarity_defect(spherical_r(theta, phi)));
            worst = std::max(worst, unitarity_defect(extended_r_dagger(theta, phi)));
        }
    return worst;
}

double spherical_cartesian_conjugacy()
{
    const Eigen::Matrix3cd s = spherical_basis_change();
    double worst = std::max(unitarity_defect(s), 0.0);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double theta = M_PI * i / 19.0;
            const double phi = 2.0 * M_PI * j / 19.0;
            worst = std::max(
                worst, max_abs(Matrix(s * cartesian_r2(theta).cast<Complex>() * s.adjoint() -
                                      spherical_r2(theta))));
            worst = std::max(
                worst, max_abs(Matrix(s * cartesian_r3(phi).cast<Complex>() * s.adjoint() -
                                      spherical_r3(phi))));
        }
    return worst;
}

double spherical_vs_wigner(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double theta = uniform(rng, 0.0, M_PI);
        const double phi = uniform(rng, -M_PI, M_PI);
        const Eigen::Matrix3d d = wigner_d1(-theta);
        Eigen::Matrix3cd built;
        const double ns[3] = {1.0, 0.0, -1.0};
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
                built(m, n) = d(m, n) * std::exp(kI * (ns[n] * phi));
        worst = std::max(worst, max_abs(Matrix(built - spherical_r(theta, phi))));
    }
    return worst;
}

double generator_commutators(const GeneratorSet& g)
{
    const Eigen::Matrix3cd js[3] = {g.j1, g.j2, g.j3};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, hermiticity_defect(js[i]));
        for (int j = 0; j < 3; ++j) {
            Eigen::Matrix3cd expected = Eigen::Matrix3cd::Zero();
            const int k = 3 - i - j;
            if (i != j) {
                const double eps = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
                expected = kI * eps * js[k];
            }
            worst = std::max(worst, max_abs(Matrix(js[i] * js[j] - js[j] * js[i] - expected)));
        }
    }
    return worst;
}

double bch_conjugation(const GeneratorSet& g, Rng& rng)
{
    double worst = 0.0;
    std::vector<double> angles = {0.123, 1.234, 2.345};
    for (int k = 0; k < 10; ++k) angles.push_back(uniform(rng, 0.0, M_PI));
    const GeneratorSet reference = spin1_generators();
    for (const double theta : angles) {
        const Matrix u = expm_minus_i(reference.j2, -theta);  // e^{i theta J2}
        const Matrix conj = u * reference.j3 * u.adjoint();
        worst = std::max(worst, max_abs(conj - Matrix(conjugated_j3(theta, g))));
    }
    return worst;
}

double mixing_angle_relations(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const LevelParams p(uniform(rng, 0.1, 5.0), uniform(rng, -2.0, 2.0));
        const double e_mag = uniform(rng, 0.0, 3.0);
        const double a = mixing_angle(p, e_mag).alpha;
        const double de = p.d * e_mag;
        const double root = std::hypot(p.e1, de);
        worst = std::max(worst, std::abs(std::cos(2 * a) - p.e1 / root));
        worst = std::max(worst, std::abs(std::sin(2 * a) + de / root));
        worst = std::max(worst, std::abs(std::tan(2 * a) + de / p.e1) /
                                    std::max(1.0, std::abs(de / p.e1)));
        const Spectrum s = spectrum(p, e_mag);
        worst = std::max(worst,
                         std::abs(std::cos(2 * a) * p.e1 - std::sin(2 * a) * de - s.e_0));
        worst = std::max(worst, std::abs(s.e_0 + s.e_00));
    }
    return worst;
}

double eigen_relation(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
        const LevelParams p(uniform(rng, 0.2, 3.0), uniform(rng, -2.0, 2.0));
        const FieldConfig f(uniform(rng, 0.0, 2.0), uniform(rng, 0.0, M_PI),
                            uniform(rng, 0.0, 1.0), uniform(rng, -M_PI, M_PI));
        const double t = uniform(rng, 0.0, 10.0);
        const Eigen::Matrix4cd h = lab_hamiltonian(p, f, t);
        const Spectrum s = spectrum(p, f.e_mag);
        const auto states = lab_frame_eigenstates(mixing_angle(p, f.e_mag), f.theta,
                                                  f.phi_at(t));
        const double energies[4] = {s.e_plus1, s.e_0, s.e_minus1, s.e_00};
        for (int n = 0; n < 4; ++n)
            worst = std::max(worst,
                             (h * states[n] - energies[n] * states[n]).cwiseAbs().maxCoeff());
    }
    return worst;
}

double eigenstate_orthonormality(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const MixingAngle a{uniform(rng, -M_PI / 4, M_PI / 4)};
        const auto states = lab_frame_eigenstates(a, uniform(rng, 0.0, M_PI),
                                                  uniform(rng, -M_PI, M_PI));
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                worst = std::max(worst, std::abs(overlap(states[m], states[n]) -
                                                 (m == n ? 1.0 : 0.0)));
    }
    return worst;
}

double connection_values(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const LevelParams p(uniform(rng, 0.5, 2.0), uniform(rng, 0.1, 2.0));
        const FieldConfig f(uniform(rng, 0.1, 1.0), uniform(rng, 0.05, M_PI - 0.05),
                            uniform(rng, 1e-3, 1e-1), uniform(rng, -M_PI, M_PI));
        const MixingAngle a = mixing_angle(p, f.e_mag);
        const double h = 1e-5 / f.omega;
        for (const StateLabel n : {StateLabel::plus1, StateLabel::zero,
                                   StateLabel::minus1, StateLabel::zero_zero}) {
            const auto state_at = [&](double t) {
                return lab_frame_eigenstates(a, f.theta, f.phi_at(t))[state_index(n)];
            };
            const double t = uniform(rng, 0.0, f.period());
            const State deriv = (state_at(t + h) - state_at(t - h)) / (2.0 * h);
            const Complex fd = overlap(state_at(t), deriv);
            const Complex analytic = -kI * double(winding_number(n)) * f.omega *
                                     std::cos(f.theta);
            const Complex via_op = connection_via_operator(n, a, f.theta, f.omega);
            worst = std::max(worst, std::abs(fd - analytic) / f.omega);
            worst = std::max(worst, std::abs(via_op - analytic) / f.omega);
        }
    }
    return worst;
}

double degenerate_cross_terms(Rng& rng)
{
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const auto terms = degenerate_cross_term(uniform(rng, 0.0, M_PI),
                                                 uniform(rng, -M_PI, M_PI),
                                                 uniform(rng, 1e-3, 1e-1));
        worst = std::max(worst, std::abs(terms.plus_to_minus));
        worst = std::max(worst, std::abs(terms.minus_to_plus));
    }
    return worst;
}

double gauge_invariance(const RunConfig& cfg, Rng& rng)
{
    const LevelParams p = cfg.level_params();
    const FieldConfig f(cfg.efield, cfg.theta, 2.0 * M_PI / 200.0, cfg.phi0);
    SimulationConfig sim;
    sim.steps_per_period = 2000;
    sim.state = cfg.state;
    const Trajectory traj = propagate(p, f, sim);
    const Spectrum s = spectrum(p, f.e_mag);
    const PhaseReport base = extract_phases(traj, s, sim, f);
    const double period = f.period();

    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        std::array<double, 5> amp, ph;
        for (int j = 0; j < 5; ++j) {
            amp[j] = uniform(rng, -M_PI / 5, M_PI / 5);
            ph[j] = uniform(rng, -M_PI, M_PI);
        }
        const auto lambda = [&](double t) {
            double v = 0.0;
            for (int j = 0; j < 5; ++j)
                v += amp[j] * std::sin(2.0 * M_PI * (j + 1) * t / period + ph[j]) -
                     amp[j] * std::sin(ph[j]);
            return v;
        };
        const PhaseReport shifted =
            gauge_transform_and_reextract(traj, lambda, s, sim, f);
        worst = std::max(worst, angular_distance(shifted.geometric_phase,
                                                 base.geometric_phase));
    }
    return worst;
}

}  // namespace

std::vector<VerifyCheck> verify_suite(const RunConfig& cfg)
{
    Rng rng(cfg.seed);
    GeneratorSet gens = spin1_generators();
    if (cfg.inject == InjectedFault::j1_sign_flip) gens.j1 = -gens.j1;

    const double scale = cfg.tolerance_scale;
    std::vector<VerifyCheck> checks;
    const auto add = [&](const std::string& name, double tol, double defect) {
        checks.push_back({name, tol * scale, defect});
    };

    add("rotation-orthogonality", 1e-14, rotation_orthogonality(rng));
    add("class-angle", 1e-13, class_angle(rng));
    add("composite-rotation", 1e-14, composite_rotation(rng));
    add("field-alignment", 1e-13, field_alignment());
    add("spherical-unitarity", 1e-13, spherical_unitarity());
    add("spherical-cartesian-conjugacy", 1e-13, spherical_cartesian_conjugacy());
    add("spherical-vs-wigner", 1e-14, spherical_vs_wigner(rng));
    add("generator-commutators", 1e-14, generator_commutators(gens));
    add("bch-conjugation", 1e-12, bch_conjugation(gens, rng));
    add("mixing-angle-relations", 1e-13, mixing_angle_relations(rng));
    add("eigen-relation", 1e-12, eigen_relation(rng));
    add("eigenstate-orthonormality", 1e-13, eigenstate_orthonormality(rng));
    add("connection-values", 1e-8, connection_values(rng));
    add("degenerate-cross-terms", 1e-8, degenerate_cross_terms(rng));
    add("gauge-invariance", 1e-8, gauge_invariance(cfg, rng));
    return checks;
}

int run_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto checks = verify_suite(cfg);
    bool all_passed = true;
    out << std::left << std::setw(32) << "check" << std::setw(12) << "tolerance"
        << std::setw(14) << "defect"
        << "status\n";
    for (const auto& c : checks) {
        out << std::left << std::setw(32) << c.name << std::setw(12)
            << std::setprecision(3) << std::scientific << c.tolerance << std::setw(14)
            << c.defect << (c.passed() ? "PASS" : "FAIL") << "\n";
        all_passed = all_passed && c.passed();
    }
    out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    return all_passed ? 0 : 3;
}

}  // namespace berry
