#ifndef SPECTRA_PERTURB_BOUNDS_HPP
#define SPECTRA_PERTURB_BOUNDS_HPP

// Upper bounds on the optimal l2 spectral distance D2 between a normal A and
// an arbitrary A~ = A + E, and two-sided estimates of the departure from
// normality ||Delta||_F of A~. Every bound is evaluated against an immutable
// PerturbationCase, which owns the Schur data of A~ that the bounds share.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra_perturb/decompositions.hpp"
#include "spectra_perturb/matrix_core.hpp"
#include "spectra_perturb/spectral_distance.hpp"

namespace spectra_perturb {

struct CaseOptions {
    StructureTolerance structure;
    /// Relative zero threshold when scanning the Schur factor for blocks.
    double block_tol = 1e-13;
    /// Relative zero threshold for W_L of the rotated perturbation.
    double bandwidth_tol = 1e-13;
};

/// Scalars every bound is built from.
struct CaseQuantities {
    Eigen::Index n = 0;
    Eigen::Index s = 1;             // number of diagonal blocks
    Eigen::Index w = 0;             // W_L(U~^* E U~), thresholded
    double e_fro = 0.0;             // ||E||_F
    double delta_e = 0.0;           // delta(E)
    double delta_a = 0.0;           // delta(A)
    double a_fro = 0.0;             // ||A||_F
    double a_spectral = 0.0;        // ||A||_2
    double a_tilde_fro = 0.0;       // ||A~||_F
    double departure = 0.0;         // ||Delta||_F from the Schur factor
    double departure_formula = 0.0; // sqrt(||A~||_F^2 - sum |lambda~|^2)
    double commutator = 0.0;        // ||A~ A~^* - A~^* A~||_F
    double schur_residual = 0.0;    // ||U~^* E U~ - Delta||_F
};

/// A validated triple (A, E, A~ = A + E) with the Schur data of A~.
struct PerturbationCase {
    Matrix a;
    Matrix e;
    Matrix a_tilde;
    /// Schur form of A~ ordered by descending eigenvalue modulus.
    SchurForm<double> schur_tilde;
    /// Block partition of the Schur form of A~ before reordering (either the
    /// computed one or the one supplied to make_case_with_block_form).
    BlockStructure block;
    Spectrum spectrum_a;
    bool a_is_normal = false;
    bool a_is_hermitian = false;
    bool a_tilde_is_normal = false;
    CaseOptions options;
    /// Filled once by make_case; all bounds read from here.
    CaseQuantities quantities;

    Eigen::Index n() const { return a.rows(); }
};

/// Builds a case from A and E; the Schur form of A~ is computed.
PerturbationCase make_case(const Matrix& a, const Matrix& e, const CaseOptions& options = {});

/// Builds a case from A and E with a known Schur form of A~ (typically one
/// with block-diagonal triangular factor). The form is validated against
/// A + E before use.
PerturbationCase make_case_with_block_form(const Matrix& a, const Matrix& e, SchurForm<double> block_form,
                                           const CaseOptions& options = {});

enum class BoundFamily { baseline, lemma_3_4, lemma_3_5, theorem_3_6, theorem_3_10, theorem_4_2, delta_estimate };

/// What a catalog value bounds: D2 from above, or ||Delta||_F from either side.
enum class BoundTarget { d2, departure_upper, departure_lower };

std::string_view to_string(BoundFamily family);
std::string_view to_string(BoundTarget target);

struct BoundValue {
    std::string id;
    std::optional<double> value;  // empty when not applicable
    BoundFamily family = BoundFamily::baseline;
    BoundTarget target = BoundTarget::d2;
    bool requires_hermitian = false;
    bool depends_on_schur_choice = false;

    bool applicable() const { return value.has_value(); }
};

struct BoundReport {
    double d2 = 0.0;
    double d_inf = 0.0;
    SpectrumMatch match;
    CaseQuantities quantities;
    std::vector<BoundValue> bounds;
    std::vector<std::string> violations;
    double tol_violation = 0.0;

    const BoundValue* find(std::string_view id) const;
    /// Value of an applicable bound; throws std::out_of_range otherwise.
    double value(std::string_view id) const;
};

/// Default domination slack 1e-8 * (1 + ||A||_F + ||E||_F).
double default_violation_tolerance(const PerturbationCase& c, double rel = 1e-8);

// Individual bounds. Every bound is std::nullopt (not applicable) when A is
// not normal; Hermitian-only bounds also when A is not Hermitian, and the
// Hoffman-Wielandt bound when A~ is not normal.
std::optional<double> bound_hoffman_wielandt(const PerturbationCase& c);
std::optional<double> bound_sun_sqrt_n(const PerturbationCase& c);
std::optional<double> bound_li_sun(const PerturbationCase& c);
std::optional<double> bound_kahan(const PerturbationCase& c);
std::optional<double> bound_sun_departure(const PerturbationCase& c);
std::optional<double> bound_li_vong_a(const PerturbationCase& c);
std::optional<double> bound_li_vong_b(const PerturbationCase& c);
std::vector<BoundValue> bounds_lemma_3_4(const PerturbationCase& c);
std::vector<BoundValue> bounds_lemma_3_5(const PerturbationCase& c);
std::vector<BoundValue> bounds_theorem_3_6(const PerturbationCase& c);
std::vector<BoundValue> bounds_theorem_3_10(const PerturbationCase& c);
std::vector<BoundValue> bounds_theorem_4_2(const PerturbationCase& c);

/// Henrici's upper estimate of ||Delta||_F; needs no hypothesis on A.
double delta_upper_henrici(const PerturbationCase& c);
/// Sun's lower estimate of ||Delta||_F; needs no hypothesis on A.
double delta_lower_sun(const PerturbationCase& c);

/// U~^* M U~ in the (reordered) Schur basis of A~.
Matrix to_schur_basis(const PerturbationCase& c, const Matrix& m);

struct DepartureEstimates {
    double from_a_tilde = 0.0;  // uses A~ - A~^*
    double from_e = 0.0;        // uses E - E^*
};
/// Upper estimates of ||Delta||_F for Hermitian A; nullopt if A is not
/// Hermitian or A~ has numerical rank 0.
std::optional<DepartureEstimates> delta_bounds_theorem_4_3(const PerturbationCase& c);

/// Catalog ids in report order.
const std::vector<std::string>& bound_catalog_ids();

/// Evaluates the whole catalog. Throws HypothesisError if A is not normal.
/// tol_violation < 0 selects default_violation_tolerance(c).
BoundReport evaluate_all(const PerturbationCase& c, bool include_hermitian = true, double tol_violation = -1.0);

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_BOUNDS_HPP
