#include <doctest.h>

#include <cmath>
#include <random>

#include "berry/model.hpp"

using namespace berry;

TEST_CASE("State labels: winding numbers, indices, parsing round-trip")
{
    CHECK(winding_number(StateLabel::plus1) == 1);
    CHECK(winding_number(StateLabel::zero) == 0);
    CHECK(winding_number(StateLabel::minus1) == -1);
    CHECK(winding_number(StateLabel::zero_zero) == 0);

    CHECK(state_index(StateLabel::plus1) == 0);
    CHECK(state_index(StateLabel::zero) == 1);
    CHECK(state_index(StateLabel::minus1) == 2);
    CHECK(state_index(StateLabel::zero_zero) == 3);

    for (const auto label : {StateLabel::plus1, StateLabel::zero, StateLabel::minus1,
                             StateLabel::zero_zero})
        CHECK(parse_state_label(to_string(label)) == label);
    CHECK(parse_state_label("+1") == StateLabel::plus1);
    CHECK(parse_state_label("00") == StateLabel::zero_zero);
    CHECK_THROWS_AS((void)parse_state_label("2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_state_label(""), std::invalid_argument);
}

TEST_CASE("Parameter structs validate their domains")
{
    CHECK_NOTHROW(LevelParams(1.0, -2.0));
    CHECK_THROWS_AS(LevelParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevelParams(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevelParams(1.0, std::nan("")), std::invalid_argument);

    CHECK_NOTHROW(FieldConfig(0.0, M_PI, -0.5, 3.0));
    CHECK_THROWS_AS(FieldConfig(-0.1, 1.0, 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FieldConfig(1.0, -0.1, 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FieldConfig(1.0, M_PI + 0.1, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("Field kinematics: period, azimuth, Cartesian components")
{
    const FieldConfig f(0.5, M_PI / 3.0, 2.0 * M_PI / 1000.0, 0.25);
    CHECK(f.period() == doctest::Approx(1000.0));
    CHECK(f.phi_at(0.0) == doctest::Approx(0.25));
    CHECK(f.phi_at(10.0) == doctest::Approx(0.25 + 2.0 * M_PI / 100.0));

    const Eigen::Vector3d v = field_vector(f, 0.0);
    CHECK(v.norm() == doctest::Approx(0.5));
    CHECK(v.z() == doctest::Approx(0.5 * std::cos(M_PI / 3.0)));
    CHECK(v.x() == doctest::Approx(0.5 * std::sin(M_PI / 3.0) * std::cos(0.25)));
    CHECK(v.y() == doctest::Approx(0.5 * std::sin(M_PI / 3.0) * std::sin(0.25)));

    // the frame rotation carries the tilted field onto +z
    const Eigen::Vector3d aligned = cartesian_r(f.theta, f.phi_at(7.0)) *
                                    field_vector(f, 7.0);
    CHECK((aligned - 0.5 * Eigen::Vector3d::UnitZ()).cwiseAbs().maxCoeff() < 1e-14);

    // static field: finite fallback period
    CHECK(FieldConfig(0.5, 1.0, 0.0, 0.0).period() == doctest::Approx(2.0 * M_PI));
}

TEST_CASE("Mixing angle diagonalizes the two-level block")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> e1s(0.1, 4.0), ds(-2.0, 2.0), es(0.0, 3.0);
    for (int k = 0; k < 300; ++k) {
        const LevelParams p(e1s(rng), ds(rng));
        const double e_mag = es(rng);
        const double a = mixing_angle(p, e_mag).alpha;
        CHECK(a > -M_PI / 4.0 - 1e-12);
        CHECK(a <= M_PI / 4.0 + 1e-12);
        // rotating the 2x2 block [[e1, -dE], [-dE, -e1]] by the mixing angle
        // kills the off-diagonal coupling
        const double de = p.d * e_mag;
        Eigen::Matrix2d block;
        block << p.e1, -de, -de, -p.e1;
        Eigen::Matrix2d rot;
        rot << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
        const Eigen::Matrix2d diag = rot * block * rot.transpose();
        CHECK(std::abs(diag(0, 1)) < 1e-12);
        const Spectrum s = spectrum(p, e_mag);
        CHECK(diag(0, 0) == doctest::Approx(s.e_0).epsilon(1e-12));
        CHECK(diag(1, 1) == doctest::Approx(s.e_00).epsilon(1e-12));
    }
    // no field, no mixing
    CHECK(mixing_angle(LevelParams(1.0, 1.0), 0.0).alpha == doctest::Approx(0.0));
}

TEST_CASE("Spectrum anchors and symmetry")
{
    const LevelParams p(1.0, 1.0);
    const Spectrum s = spectrum(p, 0.5);
    const double root = std::sqrt(1.25);
    CHECK(s.e_plus1 == doctest::Approx(1.0));
    CHECK(s.e_minus1 == doctest::Approx(1.0));
    CHECK(s.e_0 == doctest::Approx(root));
    CHECK(s.e_00 == doctest::Approx(-root));
    CHECK(s.energy_of(StateLabel::zero) == doctest::Approx(root));
    // the field-dressed pair stays symmetric about the energy zero
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int k = 0; k < 100; ++k) {
        const Spectrum r = spectrum(LevelParams(u(rng) + 0.1, u(rng) - 1.5), u(rng));
        CHECK(r.e_0 + r.e_00 == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(r.e_0 >= r.e_plus1);  // dressing only pushes the pair apart
    }
}

TEST_CASE("Rotating-frame Hamiltonian has the stated matrix elements")
{
    const LevelParams p(1.3, 0.7);
    const Eigen::Matrix4cd h = rotating_frame_hamiltonian(p, 0.9);
    CHECK(h(0, 0).real() == doctest::Approx(1.3));
    CHECK(h(1, 1).real() == doctest::Approx(1.3));
    CHECK(h(2, 2).real() == doctest::Approx(1.3));
    CHECK(h(3, 3).real() == doctest::Approx(-1.3));
    CHECK(h(1, 3).real() == doctest::Approx(-0.7 * 0.9));
    CHECK(h(3, 1).real() == doctest::Approx(-0.7 * 0.9));
    CHECK(hermiticity_defect(Matrix(h)) < 1e-15);
    // the |1,+-1> rows stay uncoupled
    for (const int m : {0, 2})
        for (int n = 0; n < 4; ++n)
            if (n != m) CHECK(std::abs(h(m, n)) == 0.0);
}

TEST_CASE("Rotating-frame eigenstates diagonalize the rotating-frame Hamiltonian")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.1, 3.0), ds(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const LevelParams p(u(rng), ds(rng));
        const double e_mag = u(rng);
        const auto states = rotating_frame_eigenstates(mixing_angle(p, e_mag));
        const Eigen::Matrix4cd h = rotating_frame_hamiltonian(p, e_mag);
        const Spectrum s = spectrum(p, e_mag);
        const double energies[4] = {s.e_plus1, s.e_0, s.e_minus1, s.e_00};
        for (int n = 0; n < 4; ++n)
            CHECK((h * states[n] - energies[n] * states[n]).cwiseAbs().maxCoeff() <
                  1e-13);
    }
}

TEST_CASE("Lab Hamiltonian: independent diagonalization oracle")
{
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(0.1, 3.0), th(0.0, M_PI), ph(-M_PI, M_PI);
    for (int k = 0; k < 50; ++k) {
        const LevelParams p(u(rng), u(rng) - 1.5);
        const FieldConfig f(u(rng), th(rng), u(rng) * 0.1, ph(rng));
        const double t = u(rng) * 3.0;
        const Eigen::Matrix4cd h = lab_hamiltonian(p, f, t);
        CHECK(hermiticity_defect(Matrix(h)) < 1e-14);

        // eigenvalues from a general solver must reproduce the static spectrum
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
        const Spectrum s = spectrum(p, f.e_mag);
        std::array<double, 4> expected = {s.e_00, s.e_plus1, s.e_minus1, s.e_0};
        std::sort(expected.begin(), expected.end());
        for (int n = 0; n < 4; ++n)
            CHECK(es.eigenvalues()(n) == doctest::Approx(expected[n]).epsilon(1e-12));

        // closed-form lab eigenstates are eigenvectors with the right labels
        const auto states = lab_frame_eigenstates(mixing_angle(p, f.e_mag), f.theta,
                                                  f.phi_at(t));
        const double energies[4] = {s.e_plus1, s.e_0, s.e_minus1, s.e_00};
        for (int n = 0; n < 4; ++n) {
            CHECK(std::abs(states[n].norm() - 1.0) < 1e-13);
            CHECK((h * states[n] - energies[n] * states[n]).cwiseAbs().maxCoeff() <
                  1e-12);
        }
        for (int m = 0; m < 4; ++m)
            for (int n = m + 1; n < 4; ++n)
                CHECK(std::abs(overlap(states[m], states[n])) < 1e-13);
    }
}

TEST_CASE("Lab Hamiltonian reduces to the rotating-frame one when the field is along z")
{
    const LevelParams p(1.0, 1.0);
    const FieldConfig f(0.5, 0.0, 0.1, 0.0);
    CHECK(max_abs(Matrix(lab_hamiltonian(p, f, 3.7) -
                         rotating_frame_hamiltonian(p, 0.5))) < 1e-13);
}
