#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "spectra_perturb/decompositions.hpp"
#include "spectra_perturb/ensembles.hpp"
#include "spectra_perturb/quantities.hpp"
#include "test_support.hpp"

namespace sp = spectra_perturb;
using sp::Complex;
using sp::Matrix;
using sp::Spectrum;
using namespace std::complex_literals;

namespace {

Matrix rotated(const Matrix& m, std::uint64_t seed)
{
    const Matrix u = sp::random_unitary(m.rows(), seed);
    return u.adjoint() * m * u;
}

}  // namespace

TEST(Delta, KnownValues)
{
    Matrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    EXPECT_DOUBLE_EQ(sp::delta(swap), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(sp::delta(swap), swap.norm());

    Matrix d = Matrix::Zero(2, 2);
    d(1, 1) = 3.0;
    EXPECT_NEAR(sp::delta(d), 3.0 / std::sqrt(2.0), 1e-15);

    EXPECT_EQ(sp::delta(Matrix::Identity(5, 5) * Complex(2.0, -1.0)), 0.0);
    EXPECT_THROW(sp::delta(Matrix(2, 3)), sp::DimensionError);
}

TEST(Delta, LowerBidiagonalFixtureClosedForms)
{
    for (Eigen::Index n = 3; n <= 20; ++n) {
        const auto f = sp::fixture_matrices("example_4_4", n);
        const double m = static_cast<double>(n);
        EXPECT_NEAR(sp::delta(f.e), std::sqrt(3.0 - 4.0 / m), 1e-14);
        EXPECT_NEAR(sp::delta(f.a), 2.0 * std::sqrt(1.0 - 1.0 / m), 1e-14);
    }
}

TEST(Delta, NeverExceedsFrobeniusAndIsUnitarilyInvariant)
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 12);
        const Matrix m = test_support::random_matrix(n, seed);
        EXPECT_LE(sp::delta(m), m.norm() * (1.0 + 1e-15));
        EXPECT_NEAR(sp::delta(rotated(m, seed + 9999)), sp::delta(m), 1e-11 * std::max(1.0, m.norm()));
    }
}

TEST(Bandwidth, ExactZeroTests)
{
    Matrix upper = Matrix::Zero(4, 4);
    upper(0, 3) = 1.0;
    upper(1, 2) = 2.0;
    EXPECT_EQ(sp::w_lower(upper), 0);
    EXPECT_EQ(sp::w_upper(upper), 3);

    Matrix tri = Matrix::Zero(5, 5);
    for (Eigen::Index i = 0; i + 1 < 5; ++i) {
        tri(i, i + 1) = 1.0;
        tri(i + 1, i) = -1.0i;
    }
    EXPECT_EQ(sp::w_lower(tri), 1);
    EXPECT_EQ(sp::w_upper(tri), 1);

    const auto ex = sp::fixture_matrices("example_4_4", 6);
    EXPECT_EQ(sp::w_lower(ex.e), 1);
    EXPECT_EQ(sp::w_upper(ex.e), 0);

    EXPECT_EQ(sp::w_lower(Matrix::Identity(3, 3)), 0);
    EXPECT_EQ(sp::w_lower(Matrix(1, 1)), 0);
}

TEST(Bandwidth, ThresholdIgnoresRoundOff)
{
    Matrix m = Matrix::Identity(4, 4);
    m(3, 0) = 1e-17;
    m(2, 1) = 0.5;
    EXPECT_EQ(sp::w_lower(m), 3);
    EXPECT_EQ(sp::w_lower(m, sp::bandwidth_rounding_tol), 1);
}

TEST(Phi, WorkedExampleMatchesOracle)
{
    const auto p = sp::phi_example();
    const Matrix r = p.u.adjoint() * p.m * p.u;
    EXPECT_NEAR(sp::phi1(p.m), oracle::phi.at("phi1_m"), 1e-12);
    EXPECT_NEAR(sp::phi2(p.m), oracle::phi.at("phi2_m"), 1e-12);
    EXPECT_NEAR(sp::phi3(p.m), oracle::phi.at("phi3_m"), 1e-12);
    EXPECT_NEAR(sp::phi1(r), oracle::phi.at("phi1_rotated"), 1e-12);
    EXPECT_NEAR(sp::phi2(r), oracle::phi.at("phi2_rotated"), 1e-12);
    EXPECT_NEAR(sp::phi3(r), oracle::phi.at("phi3_rotated"), 1e-12);

    // Closed forms.
    EXPECT_NEAR(sp::phi1(p.m), 6.0 - 2.0 * std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(sp::phi3(p.m), 3.0 - 2.0 * std::sqrt(2.0), 1e-12);
    // Directions of change under the similarity.
    EXPECT_GT(sp::phi1(p.m), sp::phi1(r));
    EXPECT_LT(sp::phi2(p.m), sp::phi2(r));
    EXPECT_LT(sp::phi3(p.m), sp::phi3(r));
}

TEST(Phi, RotatedMatrixEntries)
{
    const auto p = sp::phi_example();
    const Matrix r = p.u.adjoint() * p.m * p.u;
    Matrix expected(2, 2);
    expected << 3.0 + 1.0i, -1.0 - 1.0i, 1.0 + 1.0i, 3.0 + 1.0i;
    expected *= 0.5;
    EXPECT_LE(test_support::max_abs_diff(r, expected), 1e-15);
}

TEST(Phi, ZeroMatrix)
{
    const Matrix z = Matrix::Zero(3, 3);
    EXPECT_EQ(sp::phi1(z), 0.0);
    EXPECT_EQ(sp::phi2(z), 0.0);
    EXPECT_EQ(sp::phi3(z), 0.0);
}

TEST(PhiProperty, MajoriseOffDiagonalMass)
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 10);
        const Matrix m = test_support::random_matrix(n, 300 + seed);
        const double off = sp::strict_lower(m).squaredNorm() + sp::strict_upper(m).squaredNorm();
        const double slack = 1e-12 * m.squaredNorm();
        EXPECT_GE(sp::phi1(m), off - slack);
        EXPECT_NEAR(sp::phi2(m), off, slack);
        EXPECT_GE(sp::phi3(m), off - slack);
        EXPECT_LE(sp::phi3(m), sp::delta(m) * sp::delta(m) + slack);
    }
}

TEST(DeltaSpectralForm, KnownSpectra)
{
    Spectrum s(2);
    s << 3.0, 0.0;
    EXPECT_NEAR(sp::delta_spectral_form(s), 3.0 / std::sqrt(2.0), 1e-15);

    Spectrum centred(3);
    centred << 1.0, -3.0, 2.0;
    EXPECT_NEAR(sp::delta_spectral_form(centred), std::sqrt(14.0), 1e-14);

    const Spectrum constant = Spectrum::Constant(4, Complex(2.0, -1.0));
    EXPECT_NEAR(sp::delta_spectral_form(constant), 0.0, 1e-7);
    EXPECT_THROW(sp::delta_spectral_form(Spectrum(0)), sp::DimensionError);
}

TEST(DeltaSpectralForm, MatchesDeltaOfNormalMatrix)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        sp::EnsembleSpec spec;
        spec.n = 2 + static_cast<Eigen::Index>(seed % 12);
        spec.seed = seed;
        spec.kind = seed % 3 == 0 ? sp::EnsembleKind::hermitian : sp::EnsembleKind::normal;
        const auto sample = spec.kind == sp::EnsembleKind::hermitian ? sp::sample_hermitian(spec) : sp::sample_normal(spec);
        EXPECT_NEAR(sp::delta_spectral_form(sample.spectrum), sp::delta(sample.matrix),
                    1e-10 * (1.0 + sample.spectrum.norm()));
    }
}

// --- structural identities for normal matrices --------------------------------

class NormalStructure : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(NormalStructure, TriangularPartInequalities)
{
    const std::uint64_t seed = GetParam();
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed % 11);
    const Matrix a = rotated(test_support::random_normal(n, seed), seed + 1);
    const double fro = a.norm();
    const Matrix up = sp::strict_upper(a);
    const Matrix lo = sp::strict_lower(a);
    const double tol = 1e-9 * fro;

    const auto w = sp::weighted_triangular_mass(a);
    EXPECT_NEAR(w.upper, w.lower, 1e-9 * fro * fro);

    const double wl = static_cast<double>(sp::w_lower(a, sp::bandwidth_rounding_tol));
    const double wu = static_cast<double>(sp::w_upper(a, sp::bandwidth_rounding_tol));
    EXPECT_LE(up.norm(), std::sqrt(wl) * lo.norm() + tol);
    EXPECT_LE(lo.norm(), std::sqrt(wu) * up.norm() + tol);
    const double nm1 = static_cast<double>(n - 1);
    EXPECT_LE(up.norm(), std::sqrt(nm1) * lo.norm() + tol);
    EXPECT_LE(lo.norm(), std::sqrt(nm1) * up.norm() + tol);

    for (Eigen::Index i = 0; i < n; ++i) {
        EXPECT_LE(up.row(i).norm(), lo.norm() + tol);
        EXPECT_LE(lo.row(i).norm(), up.norm() + tol);
    }

    const double d = sp::delta(a);
    EXPECT_LE(up.norm(), std::sqrt(wl / (1.0 + wl)) * d + tol);
    EXPECT_LE(lo.norm(), std::sqrt(wu / (1.0 + wu)) * d + tol);
    const double bound = std::sqrt(nm1 / static_cast<double>(n)) * d;
    EXPECT_LE(std::max(up.norm(), lo.norm()), bound + tol);
}

INSTANTIATE_TEST_SUITE_P(Seeds, NormalStructure, ::testing::Range<std::uint64_t>(1, 101));

TEST(BandedNormal, TridiagonalShiftedHermitian)
{
    // Hermitian tridiagonal plus i I is normal with W_L = W_U = 1, so the
    // bandwidth inequality reads ||U(A)|| <= ||L(A)||.
    const Eigen::Index n = 7;
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = Complex(static_cast<double>(i), 1.0);
        if (i + 1 < n) {
            a(i, i + 1) = Complex(1.0, static_cast<double>(i));
            a(i + 1, i) = std::conj(a(i, i + 1));
        }
    }
    ASSERT_TRUE(sp::is_normal(a));
    EXPECT_EQ(sp::w_lower(a), 1);
    EXPECT_LE(sp::strict_upper(a).norm(), sp::strict_lower(a).norm() + 1e-12);
}

TEST(QuantitiesProperty, OffDiagonalMassBelowDeltaSquared)
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        sp::Rng rng(seed * 31);
        const Eigen::Index n = rng.uniform_index(1, 16);
        const Matrix m = test_support::random_matrix(n, n, rng);
        const double off = sp::strict_lower(m).squaredNorm() + sp::strict_upper(m).squaredNorm();
        EXPECT_LE(off, sp::delta(m) * sp::delta(m) + 1e-12 * m.squaredNorm()) << seed;
    }
}
