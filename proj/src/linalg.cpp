#include "berry/linalg.hpp"

#include <cmath>

namespace berry {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermiticity_defect: matrix must be square");
    return max_abs(m - m.adjoint());
}

double unitarity_defect(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("unitarity_defect: matrix must be square");
    return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    return a * b;
}

Matrix adjoint(const Matrix& m) { return m.adjoint(); }

Matrix expm_minus_i(const Matrix& h, double dt)
{
    if (h.rows() != h.cols())
        throw std::invalid_argument("expm_minus_i: matrix must be square");
    if (hermiticity_defect(h) > 1e-10)
        throw std::invalid_argument("expm_minus_i: input is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("expm_minus_i: eigendecomposition failed");

    const auto& v = es.eigenvectors();
    Vector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k) * dt));
    return v * phases.asDiagonal() * v.adjoint();
}

Complex overlap(const Vector& bra, const Vector& ket)
{
    if (bra.size() != ket.size())
        throw std::invalid_argument("overlap: size mismatch");
    return bra.dot(ket);  // Eigen conjugates the left argument
}

double wrap_angle(double x)
{
    double r = std::fmod(x + M_PI, 2.0 * M_PI);
    if (r <= 0.0) r += 2.0 * M_PI;
    return r - M_PI;
}

double angular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

double accumulate_phase(std::span<const Complex> samples)
{
    if (samples.empty())
        throw std::invalid_argument("accumulate_phase: empty sample sequence");
    if (std::abs(samples[0]) == 0.0)
        throw std::invalid_argument("accumulate_phase: zero-magnitude sample");
    double total = 0.0;
    double prev = std::arg(samples[0]);
    for (std::size_t k = 1; k < samples.size(); ++k) {
        if (std::abs(samples[k]) == 0.0)
            throw std::invalid_argument("accumulate_phase: zero-magnitude sample");
        const double cur = std::arg(samples[k]);
        const double jump = wrap_angle(cur - prev);
        // Nearest-branch continuation is ambiguous once the true jump reaches
        // pi, and a wrapped jump cannot exceed pi, so the guard demands a 2x
        // safety margin below the ambiguity point.
        if (std::abs(jump) >= M_PI / 2.0)
            throw AliasingError("accumulate_phase: consecutive samples differ by >= pi; "
                                "sample the trajectory more densely");
        total += jump;
        prev = cur;
    }
    return total;
}

}  // namespace berry
