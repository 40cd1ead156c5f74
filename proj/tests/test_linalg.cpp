#include <doctest.h>

#include <cmath>
#include <random>

#include "berry/linalg.hpp"

using namespace berry;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    return Matrix(0.5 * (m + m.adjoint().eval()));
}

// Truncated Taylor series of exp(-i h dt); independent oracle for the
// eigendecomposition-based exponential.
Matrix expm_series(const Matrix& h, double dt, int terms)
{
    const Matrix a = Complex(0.0, -1.0) * dt * h;
    Matrix result = Matrix::Identity(h.rows(), h.cols());
    Matrix power = result;
    double factorial = 1.0;
    for (int k = 1; k <= terms; ++k) {
        power = Matrix(power * a);
        factorial *= k;
        result += power / factorial;
    }
    return result;
}

}  // namespace

TEST_CASE("wrap_angle maps into (-pi, pi] with the boundary at +pi")
{
    CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
    CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_angle(2.0 * M_PI) == doctest::Approx(0.0));
    CHECK(wrap_angle(-0.1) == doctest::Approx(-0.1));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int k = 0; k < 1000; ++k) {
        const double x = u(rng);
        const double w = wrap_angle(x);
        CHECK(w > -M_PI);
        CHECK(w <= M_PI + 1e-15);
        // wrapping preserves the angle mod 2 pi
        CHECK(std::abs(std::remainder(w - x, 2.0 * M_PI)) < 1e-9);
    }
}

TEST_CASE("angular_distance is a circle metric")
{
    CHECK(angular_distance(0.1, 0.1) == doctest::Approx(0.0));
    CHECK(angular_distance(M_PI, -M_PI) == doctest::Approx(0.0));
    CHECK(angular_distance(3.0, -3.0) == doctest::Approx(2.0 * M_PI - 6.0));
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int k = 0; k < 500; ++k) {
        const double a = u(rng), b = u(rng);
        CHECK(angular_distance(a, b) == doctest::Approx(angular_distance(b, a)));
        CHECK(angular_distance(a, b) <= M_PI + 1e-12);
        CHECK(angular_distance(a + 2.0 * M_PI, b) ==
              doctest::Approx(angular_distance(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("defect helpers and adjoint")
{
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(0, 2), Complex(0, 0), Complex(3, 0);
    CHECK(max_abs(m) == doctest::Approx(3.0));
    CHECK(hermiticity_defect(m) == doctest::Approx(2.0));
    CHECK(adjoint(m)(1, 0) == Complex(0, -2));
    CHECK(unitarity_defect(Matrix::Identity(3, 3)) == doctest::Approx(0.0));
}

TEST_CASE("mat_mul checks conformability")
{
    const Matrix a = Matrix::Identity(2, 3);
    const Matrix b = Matrix::Identity(3, 3);
    CHECK(max_abs(Matrix(mat_mul(a, b) - a)) == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)mat_mul(b, a), std::invalid_argument);
}

TEST_CASE("expm_minus_i matches a Taylor-series oracle")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix h = random_hermitian(rng, 4);
        const double dt = 0.05;
        const Matrix u = expm_minus_i(h, dt);
        const Matrix ref = expm_series(h, dt, 30);
        CHECK(max_abs(Matrix(u - ref)) < 1e-12);
    }
}

TEST_CASE("expm_minus_i is unitary for 1000 random Hermitian inputs")
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> dts(0.0, 10.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix u = expm_minus_i(random_hermitian(rng, 4), dts(rng));
        worst = std::max(worst, unitarity_defect(u));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("expm_minus_i rejects non-Hermitian input")
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = Complex(1.0, 0.0);  // defect 1 against the zero transpose entry
    CHECK_THROWS_AS((void)expm_minus_i(m, 0.1), std::invalid_argument);
}

TEST_CASE("overlap is conjugate-symmetric and sesquilinear")
{
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        Vector a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a(i) = Complex(g(rng), g(rng));
            b(i) = Complex(g(rng), g(rng));
        }
        CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-12);
        const Complex c(0.3, -0.7);
        CHECK(std::abs(overlap(a, Vector(c * b)) - c * overlap(a, b)) < 1e-12);
        CHECK(std::abs(overlap(Vector(c * a), b) - std::conj(c) * overlap(a, b)) < 1e-12);
        CHECK(overlap(a, a).real() >= 0.0);
        CHECK(std::abs(overlap(a, a).imag()) < 1e-12);
    }
}

TEST_CASE("accumulate_phase unwraps a known spiral across many windings")
{
    // samples r(t) e^{i w t} with 3.5 total turns; the endpoint argument
    // alone cannot see the winding, the unwrapped value must.
    const double total = 3.5 * 2.0 * M_PI;
    const int n = 4000;
    std::vector<Complex> samples;
    for (int k = 0; k <= n; ++k) {
        const double phase = total * k / n;
        const double mag = 1.0 + 0.5 * std::sin(7.0 * phase / total);
        samples.push_back(mag * std::exp(Complex(0.0, phase)));
    }
    CHECK(accumulate_phase(samples) == doctest::Approx(total).epsilon(1e-10));
}

TEST_CASE("accumulate_phase is invariant under a global phase")
{
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    std::vector<Complex> samples;
    for (int k = 0; k <= 500; ++k)
        samples.push_back(std::exp(Complex(0.0, -2.3 * 2.0 * M_PI * k / 500.0)));
    const double base = accumulate_phase(samples);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex g = std::exp(Complex(0.0, u(rng)));
        std::vector<Complex> shifted = samples;
        for (auto& s : shifted) s *= g;
        CHECK(accumulate_phase(shifted) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("accumulate_phase guards against aliasing and vanishing samples")
{
    std::vector<Complex> jump = {Complex(1.0, 0.0), Complex(-1.0, 1e-12)};
    CHECK_THROWS_AS((void)accumulate_phase(jump), AliasingError);

    std::vector<Complex> coarse = {Complex(1.0, 0.0), std::exp(Complex(0.0, 2.0))};
    CHECK_THROWS_AS((void)accumulate_phase(coarse), AliasingError);

    std::vector<Complex> fine = {Complex(1.0, 0.0), std::exp(Complex(0.0, 1.0))};
    CHECK(accumulate_phase(fine) == doctest::Approx(1.0));

    std::vector<Complex> dead = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
    CHECK_THROWS_AS((void)accumulate_phase(dead), std::exception);
}
