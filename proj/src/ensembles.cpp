#include "spectra_perturb/ensembles.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectra_perturb {

namespace {

constexpr std::uint64_t kStreamA = 0;
constexpr std::uint64_t kStreamE = 1;
constexpr std::uint64_t kStreamBlocks = 2;

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng)
{
    Matrix z(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            z(i, j) = rng.complex_normal();
        }
    }
    return z;
}

Matrix rescale_to(Matrix m, double target)
{
    const double norm = m.norm();
    if (norm == 0.0) {
        throw std::runtime_error("rescale_to: drew an exactly zero matrix");
    }
    return m * Complex(target / norm);
}

void remove_trace(Matrix& m)
{
    const Complex shift = m.trace() / static_cast<double>(m.rows());
    m.diagonal().array() -= shift;
}

// Random composition of n: each of the n-1 gaps is a split with probability 1/2.
std::vector<Eigen::Index> random_block_sizes(Eigen::Index n, Rng& rng)
{
    std::vector<Eigen::Index> sizes;
    Eigen::Index current = 1;
    for (Eigen::Index k = 1; k < n; ++k) {
        if (rng.uniform() < 0.5) {
            sizes.push_back(current);
            current = 1;
        } else {
            ++current;
        }
    }
    sizes.push_back(current);
    return sizes;
}

}  // namespace

std::string_view to_string(EnsembleKind kind)
{
    switch (kind) {
    case EnsembleKind::normal: return "normal";
    case EnsembleKind::hermitian: return "hermitian";
    case EnsembleKind::normal_blocked: return "normal-blocked";
    }
    return "unknown";
}

std::string_view to_string(TraceMode mode)
{
    return mode == TraceMode::zero ? "zero" : "generic";
}

EnsembleKind parse_ensemble_kind(std::string_view text)
{
    if (text == "normal") return EnsembleKind::normal;
    if (text == "hermitian") return EnsembleKind::hermitian;
    if (text == "normal-blocked") return EnsembleKind::normal_blocked;
    throw std::invalid_argument("unknown ensemble kind '" + std::string(text) + "'");
}

TraceMode parse_trace_mode(std::string_view text)
{
    if (text == "zero") return TraceMode::zero;
    if (text == "generic") return TraceMode::generic;
    throw std::invalid_argument("unknown trace mode '" + std::string(text) + "'");
}

void EnsembleSpec::validate() const
{
    if (n < 2) {
        throw std::invalid_argument("ensemble size n must be at least 2");
    }
    if (!std::isfinite(perturbation_scale) || perturbation_scale <= 0.0) {
        throw std::invalid_argument("perturbation scale must be finite and positive");
    }
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed)
{
    std::uint64_t state = seed;
    engine_.seed(splitmix64(state));
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::standard_normal()
{
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

Complex Rng::complex_normal()
{
    const double re = standard_normal();
    const double im = standard_normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Eigen::Index Rng::uniform_index(Eigen::Index lo, Eigen::Index hi)
{
    if (hi < lo) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Eigen::Index>(static_cast<std::uint64_t>(uniform() * static_cast<double>(span)) % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    return splitmix64(state);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    return seed ^ trial;
}

Matrix random_unitary(Eigen::Index n, Rng& rng)
{
    if (n < 1) {
        throw std::invalid_argument("random_unitary: n must be positive");
    }
    const Matrix z = ginibre(n, n, rng);
    const Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

Matrix random_unitary(Eigen::Index n, std::uint64_t seed)
{
    Rng rng(seed);
    return random_unitary(n, rng);
}

NormalSample sample_normal(const EnsembleSpec& spec)
{
    spec.validate();
    Rng rng(derive_seed(spec.seed, kStreamA));
    NormalSample s;
    s.spectrum.resize(spec.n);
    for (Eigen::Index i = 0; i < spec.n; ++i) {
        s.spectrum(i) = rng.complex_normal();
    }
    s.unitary = random_unitary(spec.n, rng);
    s.matrix = s.unitary * s.spectrum.asDiagonal() * s.unitary.adjoint();
    return s;
}

NormalSample sample_hermitian(const EnsembleSpec& spec)
{
    spec.validate();
    Rng rng(derive_seed(spec.seed, kStreamA));
    NormalSample s;
    s.spectrum.resize(spec.n);
    for (Eigen::Index i = 0; i < spec.n; ++i) {
        s.spectrum(i) = Complex(rng.standard_normal(), 0.0);
    }
    s.unitary = random_unitary(spec.n, rng);
    const Matrix raw = s.unitary * s.spectrum.asDiagonal() * s.unitary.adjoint();
    s.matrix = (raw + raw.adjoint()) * Complex(0.5);
    return s;
}

Matrix random_normal_matrix(const EnsembleSpec& spec)
{
    return sample_normal(spec).matrix;
}

Matrix random_hermitian_matrix(const EnsembleSpec& spec)
{
    return sample_hermitian(spec).matrix;
}

Matrix random_perturbation(const EnsembleSpec& spec)
{
    spec.validate();
    Rng rng(derive_seed(spec.seed, kStreamE));
    Matrix e = ginibre(spec.n, spec.n, rng);
    if (spec.trace_mode == TraceMode::zero) {
        remove_trace(e);
    }
    return rescale_to(std::move(e), spec.perturbation_scale);
}

GeneratedCase generate(const EnsembleSpec& spec)
{
    spec.validate();
    GeneratedCase g;
    switch (spec.kind) {
    case EnsembleKind::normal:
        g.a = random_normal_matrix(spec);
        g.e = random_perturbation(spec);
        break;
    case EnsembleKind::hermitian:
        g.a = random_hermitian_matrix(spec);
        g.e = random_perturbation(spec);
        break;
    case EnsembleKind::normal_blocked: {
        const NormalSample base = sample_normal(spec);
        Rng layout_rng(derive_seed(spec.seed, kStreamBlocks));
        const auto sizes = random_block_sizes(spec.n, layout_rng);

        Rng noise_rng(derive_seed(spec.seed, kStreamE));
        Matrix noise = Matrix::Zero(spec.n, spec.n);
        Eigen::Index start = 0;
        for (const Eigen::Index size : sizes) {
            for (Eigen::Index j = 0; j < size; ++j) {
                for (Eigen::Index i = 0; i <= j; ++i) {
                    noise(start + i, start + j) = noise_rng.complex_normal();
                }
            }
            start += size;
        }
        if (spec.trace_mode == TraceMode::zero) {
            remove_trace(noise);
        }
        noise = rescale_to(std::move(noise), spec.perturbation_scale);

        // A~ = U (Lambda + N) U^* shares the unitary of A, so E = U N U^*.
        SchurForm<double> form;
        form.q = base.unitary;
        form.t = Matrix(base.spectrum.asDiagonal()) + noise;
        form.eigenvalues = form.t.diagonal();
        const Matrix a_tilde = form.q * form.t * form.q.adjoint();
        g.a = base.matrix;
        g.e = a_tilde - g.a;
        g.block_form = std::move(form);
        break;
    }
    }
    return g;
}

PerturbationCase generate_case(const EnsembleSpec& spec, const CaseOptions& options)
{
    GeneratedCase g = generate(spec);
    if (g.block_form) {
        return make_case_with_block_form(g.a, g.e, std::move(*g.block_form), options);
    }
    return make_case(g.a, g.e, options);
}

// --- fixtures ------------------------------------------------------------------

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = {"intro_2x2", "phi_example", "example_4_4"};
    return names;
}

PhiExample phi_example()
{
    using namespace std::complex_literals;
    PhiExample p;
    p.m = Matrix::Zero(2, 2);
    p.m(0, 0) = 1.0 + 1.0i;
    p.m(1, 1) = 2.0;
    p.u.resize(2, 2);
    p.u << 1.0, 1.0i, 1.0i, 1.0;
    p.u *= Complex(1.0 / std::numbers::sqrt2);
    return p;
}

FixtureMatrices fixture_matrices(std::string_view name, Eigen::Index n)
{
    FixtureMatrices f;
    f.name = std::string(name);
    if (name == "intro_2x2") {
        f.n = 2;
        f.a = Matrix::Zero(2, 2);
        f.a(1, 1) = 3.0;
        Matrix a_tilde(2, 2);
        a_tilde << -1.0, -1.0, 1.0, 1.0;
        f.e = a_tilde - f.a;
    } else if (name == "phi_example") {
        // A = M, A~ = U^* M U: a normal perturbation with the same spectrum.
        const PhiExample p = phi_example();
        f.n = 2;
        f.a = p.m;
        f.e = p.u.adjoint() * p.m * p.u - p.m;
    } else if (name == "example_4_4") {
        if (n < 3) {
            throw std::invalid_argument("fixture example_4_4 requires n >= 3");
        }
        f.n = n;
        f.a = Matrix::Identity(n, n);
        f.a(0, 0) = 0.0;
        f.a(1, 1) = 0.0;
        f.a(0, 1) = 1.0;
        f.a(1, 0) = 1.0;
        f.e = -Matrix::Identity(n, n);
        f.e(0, 0) = 0.0;
        f.e(1, 1) = 0.0;
        f.e(1, 0) = -1.0;
    } else {
        throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
    }
    return f;
}

PerturbationCase fixture(std::string_view name, Eigen::Index n, const CaseOptions& options)
{
    const FixtureMatrices f = fixture_matrices(name, n);
    return make_case(f.a, f.e, options);
}

std::vector<ExpectedValue> fixture_expected(std::string_view name, Eigen::Index n)
{
    const FixtureMatrices f = fixture_matrices(name, n);
    std::vector<ExpectedValue> out;
    if (name == "intro_2x2") {
        out = {
            {"d2", 3.0, "published"},
            {"e_fro", std::sqrt(7.0), "published"},
            {"departure", 2.0, "derived"},
            {"eq_1_4", std::sqrt(14.0), "derived"},
            {"eq_1_6", std::sqrt(14.0), "derived"},
        };
    } else if (name == "phi_example") {
        out = {
            {"phi1_m", 6.0 - 2.0 * std::sqrt(5.0), "published"},
            {"phi2_m", 0.0, "published"},
            {"phi3_m", 3.0 - 2.0 * std::sqrt(2.0), "published"},
            {"phi1_rotated", 1.0, "published"},
            {"phi2_rotated", 1.0, "published"},
            {"phi3_rotated", 1.0, "published"},
            {"d2", 0.0, "derived"},
        };
    } else {
        const double m = static_cast<double>(f.n);
        out = {
            {"d2", std::sqrt(m), "published"},
            {"e_fro_squared", m - 1.0, "published"},
            {"delta_e", std::sqrt(3.0 - 4.0 / m), "published"},
            {"delta_a", 2.0 * std::sqrt(1.0 - 1.0 / m), "published"},
            {"departure", 1.0, "published"},
            {"eq_4_6a", std::sqrt(m - 4.0 / m + 2.0), "published"},
            {"eq_4_6b", std::sqrt(m + std::sqrt(6.0 - 8.0 / m) - 1.0), "published"},
            {"eq_4_6c", std::sqrt(m + 2.0 * std::sqrt(3.0 - 4.0 / m) - 2.0), "published"},
            {"eq_4_6d", std::sqrt(m - 2.0 / m + 1.0), "published"},
            {"eq_4_6e", std::sqrt(m + 2.0 * std::sqrt(2.0 - 2.0 / m) - 2.0), "published"},
            {"thm_4_3_a", 1.0, "derived"},
        };
    }
    return out;
}

}  // namespace spectra_perturb
