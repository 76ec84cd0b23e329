#ifndef SPECTRA_PERTURB_MATRIX_CORE_HPP
#define SPECTRA_PERTURB_MATRIX_CORE_HPP

// Dense complex matrix vocabulary: triangular parts, traces, norms and the
// normality tests that every perturbation formula is written in.
//
// All functions are free templates over Eigen::MatrixBase so that they take
// expressions as well as plain matrices. Results are returned as plain
// (evaluated) objects.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>

#include "spectra_perturb/errors.hpp"

namespace spectra_perturb {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = std::complex<double>;
using Matrix = ComplexMatrix<double>;
using Spectrum = ComplexVector<double>;

/// Tolerances for the structural predicates. Both are relative: normality is
/// judged against max(1, ||M||_F^2), hermiticity against max(1, ||M||_F).
struct StructureTolerance {
    double normal = 1e-10;
    double hermitian = 1e-10;
};

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what)
{
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

template <typename A, typename B>
void require_same_shape(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace detail

/// Throws NonFiniteError if any entry has a NaN or infinite component.
template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const auto z = m(i, j);
            if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) {
                throw NonFiniteError("non-finite entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
}

/// Builds an n x n matrix from row-major entries, rejecting wrong lengths and
/// non-finite values.
inline Matrix matrix_from_row_major(Eigen::Index n, std::span<const Complex> entries)
{
    if (n < 1) {
        throw DimensionError("matrix dimension must be positive");
    }
    if (static_cast<Eigen::Index>(entries.size()) != n * n) {
        throw DimensionError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
    }
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = entries[static_cast<std::size_t>(i * n + j)];
        }
    }
    require_finite(m);
    return m;
}

template <typename Derived>
typename Derived::PlainObject conjugate_transpose(const Eigen::MatrixBase<Derived>& m)
{
    return m.adjoint();
}

template <typename A, typename B>
typename A::PlainObject matmul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + ")");
    }
    return a * b;
}

template <typename A, typename B>
typename A::PlainObject add(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    detail::require_same_shape(a, b, "add");
    return a + b;
}

template <typename A, typename B>
typename A::PlainObject sub(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    detail::require_same_shape(a, b, "sub");
    return a - b;
}

template <typename Derived>
typename Derived::PlainObject scale(const typename Derived::Scalar& alpha, const Eigen::MatrixBase<Derived>& m)
{
    return alpha * m;
}

template <typename Derived>
typename Derived::RealScalar frobenius_norm(const Eigen::MatrixBase<Derived>& m)
{
    return m.norm();
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "trace");
    return m.trace();
}

template <typename Derived>
typename Derived::PlainObject diagonal_part(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "diagonal_part");
    typename Derived::PlainObject d = Derived::PlainObject::Zero(m.rows(), m.cols());
    d.diagonal() = m.diagonal();
    return d;
}

template <typename Derived>
typename Derived::PlainObject strict_lower(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "strict_lower");
    return m.template triangularView<Eigen::StrictlyLower>();
}

template <typename Derived>
typename Derived::PlainObject strict_upper(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "strict_upper");
    return m.template triangularView<Eigen::StrictlyUpper>();
}

template <typename A, typename B>
typename A::PlainObject hadamard_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    detail::require_same_shape(a, b, "hadamard_product");
    return a.cwiseProduct(b);
}

/// Entrywise modulus |M|; real and non-negative.
template <typename Derived>
RealMatrix<typename Derived::RealScalar> entrywise_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.cwiseAbs();
}

/// ||M M* - M* M||_F.
template <typename Derived>
typename Derived::RealScalar commutator_defect(const Eigen::MatrixBase<Derived>& m)
{
    detail::require_square(m, "commutator_defect");
    const typename Derived::PlainObject mm = m;
    return (mm * mm.adjoint() - mm.adjoint() * mm).norm();
}

template <typename Derived>
bool is_normal(const Eigen::MatrixBase<Derived>& m, double tol = StructureTolerance{}.normal)
{
    detail::require_square(m, "is_normal");
    const double fro = static_cast<double>(m.norm());
    return static_cast<double>(commutator_defect(m)) <= tol * std::max(1.0, fro * fro);
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = StructureTolerance{}.hermitian)
{
    detail::require_square(m, "is_hermitian");
    const double fro = static_cast<double>(m.norm());
    return static_cast<double>((m - m.adjoint()).norm()) <= tol * std::max(1.0, fro);
}

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_MATRIX_CORE_HPP
