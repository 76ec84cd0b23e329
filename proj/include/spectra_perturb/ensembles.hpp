#ifndef SPECTRA_PERTURB_ENSEMBLES_HPP
#define SPECTRA_PERTURB_ENSEMBLES_HPP

// Seeded random matrix ensembles and the worked-example fixtures.
//
// Random streams: a 64-bit seed is expanded with SplitMix64 and feeds a
// std::mt19937_64 engine (whose output sequence is fixed by the C++
// standard). Normal deviates use the Box-Muller transform on 53-bit uniforms
// instead of std::normal_distribution, whose algorithm is unspecified, so a
// given seed yields the same matrices on every conforming platform.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spectra_perturb/bounds.hpp"
#include "spectra_perturb/decompositions.hpp"
#include "spectra_perturb/matrix_core.hpp"

namespace spectra_perturb {

enum class EnsembleKind { normal, hermitian, normal_blocked };
enum class TraceMode { zero, generic };

std::string_view to_string(EnsembleKind kind);
std::string_view to_string(TraceMode mode);
EnsembleKind parse_ensemble_kind(std::string_view text);
TraceMode parse_trace_mode(std::string_view text);

struct EnsembleSpec {
    Eigen::Index n = 2;
    EnsembleKind kind = EnsembleKind::normal;
    double perturbation_scale = 1.0;
    TraceMode trace_mode = TraceMode::generic;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless n >= 2 and the scale is finite and positive.
    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t& state);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double standard_normal();
    /// Complex normal with E|z|^2 = 1.
    Complex complex_normal();
    /// Uniform integer in [lo, hi].
    Eigen::Index uniform_index(Eigen::Index lo, Eigen::Index hi);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Independent sub-stream of a seed (stream 0: A, 1: E, 2: block layout ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
/// Per-trial seed of a campaign: seed XOR trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) moved into Q.
Matrix random_unitary(Eigen::Index n, std::uint64_t seed);
Matrix random_unitary(Eigen::Index n, Rng& rng);

struct NormalSample {
    Matrix matrix;
    Matrix unitary;
    Spectrum spectrum;
};

/// U diag(lambda) U^* with Haar U and complex standard normal lambda.
NormalSample sample_normal(const EnsembleSpec& spec);
/// U diag(lambda) U^* with real standard normal lambda, symmetrised so the
/// result is exactly Hermitian.
NormalSample sample_hermitian(const EnsembleSpec& spec);

Matrix random_normal_matrix(const EnsembleSpec& spec);
Matrix random_hermitian_matrix(const EnsembleSpec& spec);

/// I.i.d. complex Gaussian entries scaled to ||E||_F = perturbation_scale;
/// TraceMode::zero removes (tr E / n) I before rescaling.
Matrix random_perturbation(const EnsembleSpec& spec);

/// Inputs for one randomized case. For EnsembleKind::normal_blocked the
/// perturbed matrix is built as U (Lambda + N) U^* with N block-diagonal and
/// blockwise upper triangular; that factorisation is returned as block_form.
struct GeneratedCase {
    Matrix a;
    Matrix e;
    std::optional<SchurForm<double>> block_form;
};

GeneratedCase generate(const EnsembleSpec& spec);
PerturbationCase generate_case(const EnsembleSpec& spec, const CaseOptions& options = {});

// --- worked examples ---------------------------------------------------------

/// Names accepted by fixture(): "intro_2x2", "phi_example", "example_4_4".
const std::vector<std::string>& fixture_names();

struct FixtureMatrices {
    std::string name;
    Eigen::Index n = 0;
    Matrix a;
    Matrix e;
};

/// Exact fixture matrices. example_4_4 requires n >= 3; n is ignored for
/// the 2x2 fixtures. Throws std::invalid_argument for unknown names.
FixtureMatrices fixture_matrices(std::string_view name, Eigen::Index n = 0);
PerturbationCase fixture(std::string_view name, Eigen::Index n = 0, const CaseOptions& options = {});

/// The 2x2 pair M = diag(1+i, 2), U = (1/sqrt 2)[[1, i], [i, 1]] on which
/// phi_1..phi_3 change under unitary similarity.
struct PhiExample {
    Matrix m;
    Matrix u;
};
PhiExample phi_example();

/// Closed-form expected values of a fixture, keyed by quantity name.
struct ExpectedValue {
    std::string key;
    double value = 0.0;
    std::string source;  // "published" or "derived"
};
std::vector<ExpectedValue> fixture_expected(std::string_view name, Eigen::Index n = 0);

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_ENSEMBLES_HPP
