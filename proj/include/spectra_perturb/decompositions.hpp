#ifndef SPECTRA_PERTURB_DECOMPOSITIONS_HPP
#define SPECTRA_PERTURB_DECOMPOSITIONS_HPP

// Complex Schur decomposition M = Q T Q* by Householder reduction to upper
// Hessenberg form followed by single-shift (Wilkinson) QR sweeps, plus the
// quantities that are read off it: eigenvalues, departure from normality,
// block structure. Singular-value based helpers reuse the same QR path on
// Hermitian matrices.

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "spectra_perturb/errors.hpp"
#include "spectra_perturb/matrix_core.hpp"

namespace spectra_perturb {

/// A Schur factorisation M = q * t * q^*, q unitary, t upper triangular.
/// `eigenvalues` mirrors the diagonal of t.
template <typename Real>
struct SchurForm {
    ComplexMatrix<Real> q;
    ComplexMatrix<Real> t;
    ComplexVector<Real> eigenvalues;

    Eigen::Index size() const { return t.rows(); }
};

template <typename Real>
struct HessenbergForm {
    ComplexMatrix<Real> q;
    ComplexMatrix<Real> h;
};

/// Sizes n_1, ..., n_s of the diagonal blocks of a block-diagonal,
/// blockwise upper-triangular matrix.
struct BlockStructure {
    std::vector<Eigen::Index> sizes;

    Eigen::Index count() const { return static_cast<Eigen::Index>(sizes.size()); }
};

enum class SchurOrdering { descending_modulus };

/// Residuals used to validate a SchurForm against its source matrix.
struct SchurResiduals {
    double unitarity = 0.0;       // ||q^* q - I||_F
    double lower = 0.0;           // ||strict_lower(t)||_F
    double reconstruction = 0.0;  // ||q t q^* - M||_F
};

/// Sweep budget used when none is given: 40 QR sweeps per row.
inline constexpr int default_sweeps_per_row = 40;
/// Smallest accepted budget, per row.
inline constexpr int min_sweeps_per_row = 30;

namespace detail {

template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> to_complex(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    return m.template cast<std::complex<Real>>();
}

template <typename Real>
bool is_upper_triangular_exact(const ComplexMatrix<Real>& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
            if (m(i, j) != std::complex<Real>(0)) {
                return false;
            }
        }
    }
    return true;
}

// Eigenvalue of the trailing 2x2 block of the active window closest to its
// last diagonal entry.
template <typename Real>
std::complex<Real> wilkinson_shift(const ComplexMatrix<Real>& t, Eigen::Index iu)
{
    using C = std::complex<Real>;
    const C a = t(iu - 1, iu - 1);
    const C b = t(iu - 1, iu);
    const C c = t(iu, iu - 1);
    const C d = t(iu, iu);
    const C p = (a - d) / Real(2);
    const C bc = b * c;
    const C disc = std::sqrt(p * p + bc);
    const C plus = p + disc;
    const C minus = p - disc;
    const C denom = std::abs(plus) >= std::abs(minus) ? plus : minus;
    if (denom == C(0)) {
        return d;
    }
    return d - bc / denom;
}

// One explicitly shifted QR sweep on rows/columns il..iu of the Hessenberg
// matrix t, applied to the full matrix so that q^* M q = t is maintained.
template <typename Real>
void shifted_qr_sweep(ComplexMatrix<Real>& t, ComplexMatrix<Real>& q, Eigen::Index il, Eigen::Index iu,
                      std::complex<Real> shift)
{
    using C = std::complex<Real>;
    for (Eigen::Index i = il; i <= iu; ++i) {
        t(i, i) -= shift;
    }
    std::vector<Eigen::JacobiRotation<C>> rotations(static_cast<std::size_t>(iu - il));
    for (Eigen::Index k = il; k < iu; ++k) {
        auto& g = rotations[static_cast<std::size_t>(k - il)];
        g.makeGivens(t(k, k), t(k + 1, k));
        t.applyOnTheLeft(k, k + 1, g.adjoint());
        t(k + 1, k) = C(0);
    }
    for (Eigen::Index k = il; k < iu; ++k) {
        const auto& g = rotations[static_cast<std::size_t>(k - il)];
        t.applyOnTheRight(k, k + 1, g);
        q.applyOnTheRight(k, k + 1, g);
    }
    for (Eigen::Index i = il; i <= iu; ++i) {
        t(i, i) += shift;
    }
}

template <typename Real>
bool precedes_descending_modulus(const std::complex<Real>& x, const std::complex<Real>& y)
{
    const Real ax = std::abs(x);
    const Real ay = std::abs(y);
    if (ax != ay) {
        return ax > ay;
    }
    if (x.real() != y.real()) {
        return x.real() > y.real();
    }
    return x.imag() > y.imag();
}

// Exchanges the adjacent diagonal entries t(k,k) and t(k+1,k+1) by a unitary
// rotation of the plane (k, k+1).
template <typename Real>
void swap_adjacent(ComplexMatrix<Real>& t, ComplexMatrix<Real>& q, Eigen::Index k)
{
    using C = std::complex<Real>;
    const C a = t(k, k);
    const C b = t(k + 1, k + 1);
    // (t(k,k+1), b - a) spans the eigenvector of b in the 2x2 block.
    Eigen::JacobiRotation<C> g;
    g.makeGivens(t(k, k + 1), b - a);
    t.applyOnTheLeft(k, k + 1, g.adjoint());
    t.applyOnTheRight(k, k + 1, g);
    q.applyOnTheRight(k, k + 1, g);
    t(k + 1, k) = C(0);
    t(k, k) = b;
    t(k + 1, k + 1) = a;
}

}  // namespace detail

/// Householder reduction M = q h q^*, h upper Hessenberg.
template <typename Derived>
HessenbergForm<typename Derived::RealScalar> hessenberg_reduce(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    using C = std::complex<Real>;
    detail::require_square(m, "hessenberg_reduce");

    ComplexMatrix<Real> h = detail::to_complex(m);
    const Eigen::Index n = h.rows();
    ComplexMatrix<Real> q = ComplexMatrix<Real>::Identity(n, n);

    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        ComplexVector<Real> v = h.col(k).tail(len);
        if (v.tail(len - 1).norm() == Real(0)) {
            continue;
        }
        const Real xnorm = v.norm();
        const Real x0abs = std::abs(v(0));
        const C phase = x0abs == Real(0) ? C(1) : v(0) / x0abs;
        const C alpha = -phase * xnorm;
        v(0) -= alpha;
        v /= v.norm();

        // Reflector P = I - 2 v v^*, applied as h <- P h P and q <- q P.
        auto rows = h.bottomRows(len);
        const Eigen::Matrix<C, 1, Eigen::Dynamic> row_proj = v.adjoint() * rows;
        rows.noalias() -= (Real(2) * v) * row_proj;
        auto cols = h.rightCols(len);
        const ComplexVector<Real> col_proj = cols * v;
        cols.noalias() -= (Real(2) * col_proj) * v.adjoint();
        auto qcols = q.rightCols(len);
        const ComplexVector<Real> q_proj = qcols * v;
        qcols.noalias() -= (Real(2) * q_proj) * v.adjoint();

        h(k + 1, k) = alpha;
        h.col(k).tail(len - 1).setZero();
    }
    return {std::move(q), std::move(h)};
}

/// Complex Schur decomposition. `max_sweeps` < 0 selects the default budget
/// of 40 sweeps per row; an explicit budget must be at least 30 per row.
/// Throws ConvergenceError when the budget is exhausted.
template <typename Derived>
SchurForm<typename Derived::RealScalar> schur_decompose(const Eigen::MatrixBase<Derived>& m, int max_sweeps = -1)
{
    using Real = typename Derived::RealScalar;
    using C = std::complex<Real>;
    detail::require_square(m, "schur_decompose");
    require_finite(m);
    const Eigen::Index n = m.rows();
    if (n < 1) {
        throw DimensionError("schur_decompose: empty matrix");
    }
    if (max_sweeps < 0) {
        max_sweeps = default_sweeps_per_row * static_cast<int>(n);
    } else if (max_sweeps < min_sweeps_per_row * static_cast<int>(n)) {
        throw std::invalid_argument("schur_decompose: max_sweeps must be at least " +
                                    std::to_string(min_sweeps_per_row * n));
    }

    ComplexMatrix<Real> t = detail::to_complex(m);
    if (detail::is_upper_triangular_exact(t)) {
        ComplexVector<Real> ev = t.diagonal();
        return {ComplexMatrix<Real>::Identity(n, n), std::move(t), std::move(ev)};
    }

    auto hess = hessenberg_reduce(t);
    ComplexMatrix<Real> q = std::move(hess.q);
    t = std::move(hess.h);

    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real floor = eps * t.norm();
    auto negligible = [&](Eigen::Index k) {
        const Real sub = std::abs(t(k, k - 1));
        return sub <= eps * (std::abs(t(k - 1, k - 1)) + std::abs(t(k, k))) || sub <= floor;
    };

    Eigen::Index iu = n - 1;
    int iter = 0;
    int total = 0;
    while (iu > 0) {
        Eigen::Index il = iu;
        while (il > 0 && !negligible(il)) {
            --il;
        }
        if (il > 0) {
            t(il, il - 1) = C(0);
        }
        if (il == iu) {
            --iu;
            iter = 0;
            continue;
        }
        if (++total > max_sweeps) {
            throw ConvergenceError("schur_decompose: no convergence after " + std::to_string(max_sweeps) +
                                   " QR sweeps (n = " + std::to_string(n) + ")");
        }
        ++iter;
        C shift;
        if (iter == 10 || iter == 30) {
            // exceptional shift
            shift = std::abs(t(iu, iu - 1).real());
            if (iu >= 2) {
                shift += std::abs(t(iu - 1, iu - 2).real());
            }
        } else {
            shift = detail::wilkinson_shift(t, iu);
        }
        detail::shifted_qr_sweep(t, q, il, iu, shift);
    }

    t.template triangularView<Eigen::StrictlyLower>().setZero();
    ComplexVector<Real> ev = t.diagonal();
    return {std::move(q), std::move(t), std::move(ev)};
}

/// Reorders a Schur form by adjacent unitary swaps so that the diagonal is
/// sorted by descending modulus; ties are ordered by descending real part,
/// then descending imaginary part.
template <typename Real>
SchurForm<Real> reorder_schur(SchurForm<Real> f, SchurOrdering key = SchurOrdering::descending_modulus)
{
    (void)key;  // only one ordering is defined
    const Eigen::Index n = f.t.rows();
    bool swapped = true;
    for (Eigen::Index pass = 0; swapped && pass < n; ++pass) {
        swapped = false;
        for (Eigen::Index k = 0; k + 1 < n - pass; ++k) {
            if (detail::precedes_descending_modulus(f.t(k + 1, k + 1), f.t(k, k))) {
                detail::swap_adjacent(f.t, f.q, k);
                swapped = true;
            }
        }
    }
    f.eigenvalues = f.t.diagonal();
    return f;
}

template <typename Real, typename Derived>
SchurResiduals schur_residuals(const SchurForm<Real>& f, const Eigen::MatrixBase<Derived>& m)
{
    const Eigen::Index n = f.t.rows();
    SchurResiduals r;
    r.unitarity = static_cast<double>((f.q.adjoint() * f.q - ComplexMatrix<Real>::Identity(n, n)).norm());
    r.lower = static_cast<double>(strict_lower(f.t).norm());
    r.reconstruction = static_cast<double>((f.q * f.t * f.q.adjoint() - detail::to_complex(m)).norm());
    return r;
}

template <typename Derived>
ComplexVector<typename Derived::RealScalar> eigenvalues(const Eigen::MatrixBase<Derived>& m)
{
    return schur_decompose(m).eigenvalues;
}

/// Largest singular value, as the square root of the largest eigenvalue of
/// M^* M.
template <typename Derived>
typename Derived::RealScalar spectral_norm(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    const ComplexMatrix<Real> c = detail::to_complex(m);
    const ComplexMatrix<Real> gram = c.adjoint() * c;
    const ComplexVector<Real> ev = schur_decompose(gram).eigenvalues;
    Real top = Real(0);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        top = std::max(top, ev(i).real());
    }
    return std::sqrt(top);
}

/// Singular values (descending) from the Hermitian eigenproblem of the
/// augmented matrix [0 M; M^* 0], whose eigenvalues are +-sigma_i. This keeps
/// the absolute accuracy at eps * sigma_max instead of sqrt(eps) * sigma_max.
template <typename Derived>
std::vector<typename Derived::RealScalar> singular_values(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    const ComplexMatrix<Real> c = detail::to_complex(m);
    const Eigen::Index r = c.rows();
    const Eigen::Index k = c.cols();
    ComplexMatrix<Real> aug = ComplexMatrix<Real>::Zero(r + k, r + k);
    aug.topRightCorner(r, k) = c;
    aug.bottomLeftCorner(k, r) = c.adjoint();
    const ComplexVector<Real> ev = schur_decompose(aug).eigenvalues;
    std::vector<Real> all(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        all[static_cast<std::size_t>(i)] = ev(i).real();
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    all.resize(static_cast<std::size_t>(std::min(r, k)));
    for (auto& s : all) {
        s = std::max(s, Real(0));
    }
    return all;
}

/// Number of singular values above rtol * sigma_max. rtol <= 0 selects
/// 64 * n * eps.
template <typename Derived>
Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived>& m, double rtol = 0.0)
{
    using Real = typename Derived::RealScalar;
    const Eigen::Index n = std::max(m.rows(), m.cols());
    if (rtol <= 0.0) {
        rtol = 64.0 * static_cast<double>(n) * std::numeric_limits<Real>::epsilon();
    }
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == Real(0)) {
        return 0;
    }
    const Real threshold = static_cast<Real>(rtol) * sv.front();
    return static_cast<Eigen::Index>(std::count_if(sv.begin(), sv.end(), [&](Real s) { return s > threshold; }));
}

/// ||strict_upper(t)||_F of a Schur form.
template <typename Real>
Real departure_from_schur(const SchurForm<Real>& f)
{
    return f.t.template triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm();
}

/// Departure from normality sqrt(max(0, ||M||_F^2 - sum |lambda_i|^2)).
template <typename Derived>
typename Derived::RealScalar departure_from_normality(const Eigen::MatrixBase<Derived>& m)
{
    using Real = typename Derived::RealScalar;
    detail::require_square(m, "departure_from_normality");
    const ComplexVector<Real> ev = eigenvalues(m);
    const Real fro2 = m.squaredNorm();
    return std::sqrt(std::max(Real(0), fro2 - ev.squaredNorm()));
}

/// Splits an upper-triangular t into the finest block-diagonal partition:
/// a split after index k exists when every t(i, j) with i <= k < j is below
/// tol * ||t||_F in modulus.
template <typename Derived>
BlockStructure detect_block_structure(const Eigen::MatrixBase<Derived>& t, double tol = 1e-13)
{
    using Real = typename Derived::RealScalar;
    detail::require_square(t, "detect_block_structure");
    const Eigen::Index n = t.rows();
    const Real threshold = static_cast<Real>(tol) * t.norm();

    // first_row[j]: smallest i < j with a non-negligible t(i, j), or j.
    std::vector<Eigen::Index> first_row(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index fr = j;
        for (Eigen::Index i = 0; i < j; ++i) {
            if (std::abs(t(i, j)) > threshold) {
                fr = i;
                break;
            }
        }
        first_row[static_cast<std::size_t>(j)] = fr;
    }

    BlockStructure blocks;
    Eigen::Index start = 0;
    Eigen::Index suffix_min = n;
    std::vector<Eigen::Index> min_from(static_cast<std::size_t>(n + 1), n);
    for (Eigen::Index j = n - 1; j >= 0; --j) {
        suffix_min = std::min(suffix_min, first_row[static_cast<std::size_t>(j)]);
        min_from[static_cast<std::size_t>(j)] = suffix_min;
    }
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (min_from[static_cast<std::size_t>(k + 1)] > k) {
            blocks.sizes.push_back(k + 1 - start);
            start = k + 1;
        }
    }
    blocks.sizes.push_back(n - start);
    return blocks;
}

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_DECOMPOSITIONS_HPP
