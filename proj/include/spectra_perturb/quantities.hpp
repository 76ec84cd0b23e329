#ifndef SPECTRA_PERTURB_QUANTITIES_HPP
#define SPECTRA_PERTURB_QUANTITIES_HPP

// Scalar functionals of a square matrix used by the perturbation bounds:
// the trace-adjusted Frobenius functional delta, triangular bandwidths
// W_L / W_U, and the majorants phi_1..phi_3 of ||L(M)||^2 + ||U(M)||^2.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

#include "spectra_perturb/matrix_core.hpp"

namespace spectra_perturb {

/// Relative zero threshold for W_L / W_U on computed (rounded) matrices.
inline constexpr double bandwidth_rounding_tol = 1e-13;

/// delta(M) = sqrt(||M||_F^2 - |tr M|^2 / n), radicand clamped at 0.
template <typename Derived>
typename Derived::RealScalar delta(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    detail::require_square(m, "delta");
    const Real n = static_cast<Real>(m.rows());
    const Real radicand = m.squaredNorm() - std::norm(m.trace()) / n;
    return std::sqrt(std::max(Real(0), radicand));
}

namespace detail {

// Largest offset |i - j| over entries strictly on one side of the diagonal
// whose modulus exceeds rel_tol * ||M||_F (rel_tol == 0: exactly nonzero).
template <typename Derived>
Eigen::Index bandwidth(const Eigen::MatrixBase<Derived>& m, double rel_tol, bool lower)
{
    using Real = typename Derived::RealScalar;
    const Eigen::Index n = m.rows();
    const Real threshold = static_cast<Real>(rel_tol) * m.norm();
    for (Eigen::Index offset = n - 1; offset >= 1; --offset) {
        for (Eigen::Index k = 0; k + offset < n; ++k) {
            const auto z = lower ? m(k + offset, k) : m(k, k + offset);
            const bool nonzero = rel_tol == 0.0 ? z != typename Derived::Scalar(0) : std::abs(z) > threshold;
            if (nonzero) {
                return offset;
            }
        }
    }
    return 0;
}

}  // namespace detail

/// W_L(M) = max{i - j : m_ij != 0, i > j}, 0 if the strict lower part vanishes.
template <typename Derived>
Eigen::Index w_lower(const Eigen::MatrixBase<Derived>& m, double rel_tol = 0.0)
{
    detail::require_square(m, "w_lower");
    return detail::bandwidth(m, rel_tol, true);
}

/// W_U(M) = max{j - i : m_ij != 0, i < j}, 0 if the strict upper part vanishes.
template <typename Derived>
Eigen::Index w_upper(const Eigen::MatrixBase<Derived>& m, double rel_tol = 0.0)
{
    detail::require_square(m, "w_upper");
    return detail::bandwidth(m, rel_tol, false);
}

/// ||M||_F^2 - |tr(M o M)|
template <typename Derived>
typename Derived::RealScalar phi1(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "phi1");
    return m.squaredNorm() - std::abs(m.cwiseProduct(m).trace());
}

/// ||M||_F^2 - tr(|M| o |M|)
template <typename Derived>
typename Derived::RealScalar phi2(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "phi2");
    const auto a = entrywise_abs(m);
    return m.squaredNorm() - a.cwiseProduct(a).trace();
}

/// ||M||_F^2 - (tr |M|)^2 / n
template <typename Derived>
typename Derived::RealScalar phi3(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    detail::require_square(m, "phi3");
    const Real tr = entrywise_abs(m).trace();
    return m.squaredNorm() - tr * tr / static_cast<Real>(m.rows());
}

/// delta of a normal matrix written in terms of its spectrum:
/// sqrt(|l_R|^2 sin^2 t1 + |l_I|^2 sin^2 t2), where t1 (t2) is the angle
/// between the real (imaginary) parts and the all-ones vector. A vanishing
/// component contributes zero.
template <typename Real>
Real delta_spectral_form(const ComplexVector<Real>& spectrum)
{
    const Eigen::Index n = spectrum.size();
    if (n == 0) {
        throw DimensionError("delta_spectral_form: empty spectrum");
    }
    const Eigen::Matrix<Real, Eigen::Dynamic, 1> re = spectrum.real();
    const Eigen::Matrix<Real, Eigen::Dynamic, 1> im = spectrum.imag();
    const Real ones_norm = std::sqrt(static_cast<Real>(n));
    auto contribution = [&](const Eigen::Matrix<Real, Eigen::Dynamic, 1>& part) {
        const Real len = part.norm();
        if (len == Real(0)) {
            return Real(0);
        }
        const Real cos_theta = std::clamp(part.sum() / (len * ones_norm), Real(-1), Real(1));
        return len * len * (Real(1) - cos_theta * cos_theta);
    };
    return std::sqrt(std::max(Real(0), contribution(re) + contribution(im)));
}

/// The two sides of the band-weighted identity satisfied by normal matrices:
/// upper = sum_{i<j} (j-i)|a_ij|^2, lower = sum_{i>j} (i-j)|a_ij|^2.
template <typename Real>
struct WeightedTriangularMass {
    Real upper = 0;
    Real lower = 0;
};

template <typename Derived>
WeightedTriangularMass<typename Derived::RealScalar> weighted_triangular_mass(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    detail::require_square(m, "weighted_triangular_mass");
    WeightedTriangularMass<Real> w;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Real mass = std::norm(m(i, j));
            if (i < j) {
                w.upper += static_cast<Real>(j - i) * mass;
            } else if (i > j) {
                w.lower += static_cast<Real>(i - j) * mass;
            }
        }
    }
    return w;
}

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_QUANTITIES_HPP
