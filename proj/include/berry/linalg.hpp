#ifndef BERRY_LINALG_HPP
#define BERRY_LINALG_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace berry {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using State = Eigen::Vector4cd;

// Thrown when consecutive phase samples are too sparse to unwrap.
class AliasingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a propagation guard (norm drift) trips.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Entrywise max modulus.
double max_abs(const Matrix& m);

// ||M - M^dagger||_max
double hermiticity_defect(const Matrix& m);

// ||M^dagger M - I||_max
double unitarity_defect(const Matrix& m);

// Plain product with an explicit conformability check.
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Conjugate transpose.
Matrix adjoint(const Matrix& m);

// exp(-i h dt) for Hermitian h, via eigendecomposition. The result is
// unitary to 1e-12. Rejects input whose hermiticity defect exceeds 1e-10.
Matrix expm_minus_i(const Matrix& h, double dt);

// sum_i conj(bra_i) ket_i
Complex overlap(const Vector& bra, const Vector& ket);

// Wrap an angle into (-pi, pi].
double wrap_angle(double x);

// |wrap(a - b)|: distance on the circle.
double angular_distance(double a, double b);

// Unwrapped cumulative argument of a densely sampled complex sequence,
// nearest-branch continuation. Throws AliasingError when a consecutive
// jump reaches pi/2 (half the pi ambiguity point of branch tracking).
double accumulate_phase(std::span<const Complex> samples);

}  // namespace berry

#endif
