#include "spectra_perturb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra_perturb/quantities.hpp"

namespace spectra_perturb {

namespace {

constexpr double kRadicandSlack = 1e-9;

// sqrt of a radicand that is non-negative in exact arithmetic.
double checked_sqrt(double radicand, const CaseQuantities& q, std::string_view id)
{
    const double scale = (1.0 + q.a_fro + q.e_fro) * (1.0 + q.a_fro + q.e_fro);
    if (radicand < -kRadicandSlack * scale) {
        throw ConsistencyError(std::string(id) + ": radicand " + std::to_string(radicand) +
                               " is negative beyond round-off");
    }
    return std::sqrt(std::max(0.0, radicand));
}

double nd(Eigen::Index v) { return static_cast<double>(v); }

BoundValue make_value(std::string id, std::optional<double> value, BoundFamily family, bool hermitian = false,
                      bool schur_choice = false, BoundTarget target = BoundTarget::d2)
{
    BoundValue b;
    b.id = std::move(id);
    b.value = value;
    b.family = family;
    b.target = target;
    b.requires_hermitian = hermitian;
    b.depends_on_schur_choice = schur_choice;
    return b;
}

CaseQuantities compute_quantities(const PerturbationCase& c)
{
    CaseQuantities q;
    q.n = c.n();
    q.s = c.block.count();
    q.e_fro = c.e.norm();
    q.delta_e = delta(c.e);
    q.delta_a = delta(c.a);
    q.a_fro = c.a.norm();
    q.a_spectral = spectral_norm(c.a);
    q.a_tilde_fro = c.a_tilde.norm();
    q.departure = departure_from_schur(c.schur_tilde);
    q.departure_formula =
        std::sqrt(std::max(0.0, c.a_tilde.squaredNorm() - c.schur_tilde.eigenvalues.squaredNorm()));
    q.commutator = commutator_defect(c.a_tilde);

    const Matrix rotated_e = to_schur_basis(c, c.e);
    q.w = w_lower(rotated_e, c.options.bandwidth_tol);
    const Matrix delta_part = strict_upper(c.schur_tilde.t);
    q.schur_residual = (rotated_e - delta_part).norm();
    return q;
}

PerturbationCase finish_case(const Matrix& a, const Matrix& e, SchurForm<double> native, const CaseOptions& options)
{
    PerturbationCase c;
    c.a = a;
    c.e = e;
    c.a_tilde = a + e;
    c.options = options;
    c.a_is_hermitian = is_hermitian(a, options.structure.hermitian);
    c.a_is_normal = c.a_is_hermitian || is_normal(a, options.structure.normal);
    c.a_tilde_is_normal = is_normal(c.a_tilde, options.structure.normal);
    c.block = detect_block_structure(native.t, options.block_tol);
    c.schur_tilde = reorder_schur(std::move(native));
    c.spectrum_a = eigenvalues(a);
    c.quantities = compute_quantities(c);
    return c;
}

void validate_inputs(const Matrix& a, const Matrix& e)
{
    detail::require_square(a, "make_case");
    detail::require_same_shape(a, e, "make_case");
    if (a.rows() < 1) {
        throw DimensionError("make_case: empty matrix");
    }
    require_finite(a);
    require_finite(e);
}

}  // namespace

Matrix to_schur_basis(const PerturbationCase& c, const Matrix& m)
{
    const Matrix& u = c.schur_tilde.q;
    return u.adjoint() * m * u;
}

PerturbationCase make_case(const Matrix& a, const Matrix& e, const CaseOptions& options)
{
    validate_inputs(a, e);
    return finish_case(a, e, schur_decompose(Matrix(a + e)), options);
}

PerturbationCase make_case_with_block_form(const Matrix& a, const Matrix& e, SchurForm<double> block_form,
                                           const CaseOptions& options)
{
    validate_inputs(a, e);
    const Eigen::Index n = a.rows();
    if (block_form.t.rows() != n || block_form.t.cols() != n || block_form.q.rows() != n || block_form.q.cols() != n) {
        throw DimensionError("make_case_with_block_form: Schur factors do not match the matrix size");
    }
    const Matrix a_tilde = a + e;
    const auto r = schur_residuals(block_form, a_tilde);
    const double tol = 1e-10 * nd(n) * std::max(1.0, static_cast<double>(a_tilde.norm()));
    if (r.unitarity > 1e-10 * nd(n) || r.lower != 0.0 || r.reconstruction > tol) {
        throw std::invalid_argument("make_case_with_block_form: supplied form is not a Schur form of A + E");
    }
    block_form.eigenvalues = block_form.t.diagonal();
    return finish_case(a, e, std::move(block_form), options);
}

std::string_view to_string(BoundFamily family)
{
    switch (family) {
    case BoundFamily::baseline: return "baseline";
    case BoundFamily::lemma_3_4: return "lemma_3_4";
    case BoundFamily::lemma_3_5: return "lemma_3_5";
    case BoundFamily::theorem_3_6: return "theorem_3_6";
    case BoundFamily::theorem_3_10: return "theorem_3_10";
    case BoundFamily::theorem_4_2: return "theorem_4_2";
    case BoundFamily::delta_estimate: return "delta_estimate";
    }
    return "unknown";
}

std::string_view to_string(BoundTarget target)
{
    switch (target) {
    case BoundTarget::d2: return "d2";
    case BoundTarget::departure_upper: return "departure_upper";
    case BoundTarget::departure_lower: return "departure_lower";
    }
    return "unknown";
}

const BoundValue* BoundReport::find(std::string_view id) const
{
    const auto it = std::find_if(bounds.begin(), bounds.end(), [&](const BoundValue& b) { return b.id == id; });
    return it == bounds.end() ? nullptr : &*it;
}

double BoundReport::value(std::string_view id) const
{
    const BoundValue* b = find(id);
    if (b == nullptr || !b->applicable()) {
        throw std::out_of_range("bound " + std::string(id) + " is not applicable in this report");
    }
    return *b->value;
}

double default_violation_tolerance(const PerturbationCase& c, double rel)
{
    return rel * (1.0 + c.quantities.a_fro + c.quantities.e_fro);
}

// --- baselines -------------------------------------------------------------

std::optional<double> bound_hoffman_wielandt(const PerturbationCase& c)
{
    if (!c.a_is_normal || !c.a_tilde_is_normal) {
        return std::nullopt;
    }
    return c.quantities.e_fro;
}

std::optional<double> bound_sun_sqrt_n(const PerturbationCase& c)
{
    if (!c.a_is_normal) {
        return std::nullopt;
    }
    return std::sqrt(nd(c.quantities.n)) * c.quantities.e_fro;
}

std::optional<double> bound_li_sun(const PerturbationCase& c)
{
    if (!c.a_is_normal) {
        return std::nullopt;
    }
    const auto& q = c.quantities;
    return std::sqrt(nd(q.n - q.s + 1)) * q.e_fro;
}

std::optional<double> bound_kahan(const PerturbationCase& c)
{
    if (!c.a_is_hermitian) {
        return std::nullopt;
    }
    return std::sqrt(2.0) * c.quantities.e_fro;
}

std::optional<double> bound_sun_departure(const PerturbationCase& c)
{
    if (!c.a_is_normal) {
        return std::nullopt;
    }
    const auto& q = c.quantities;
    const double m = std::min(q.a_fro, std::sqrt(nd(q.n - 1)) * q.a_spectral);
    const double dep = q.departure;
    return checked_sqrt(q.e_fro * q.e_fro + 2.0 * m * dep - dep * dep, q, "eq_1_7");
}

std::optional<double> bound_li_vong_a(const PerturbationCase& c)
{
    if (!c.a_is_hermitian) {
        return std::nullopt;
    }
    const auto& q = c.quantities;
    return checked_sqrt(q.e_fro * q.e_fro + std::sqrt(2.0) * q.e_fro * q.departure, q, "eq_1_8");
}

std::optional<double> bound_li_vong_b(const PerturbationCase& c)
{
    if (!c.a_is_hermitian) {
        return std::nullopt;
    }
    const auto& q = c.quantities;
    const double dep = q.departure;
    return checked_sqrt(q.e_fro * q.e_fro + 2.0 * q.e_fro * dep - dep * dep, q, "eq_1_9");
}

// --- Schur-basis families ----------------------------------------------------

namespace {

// (3.3a-d) with a given bandwidth; W = n - 1 gives (3.5a-d).
std::vector<double> lemma_3_4_values(const CaseQuantities& q, double w, const char* prefix)
{
    const double e2 = q.e_fro * q.e_fro;
    const double de = q.delta_e;
    const double dep = q.departure;
    const std::string p(prefix);
    return {
        checked_sqrt(e2 + w * de * de, q, p + "a"),
        checked_sqrt(e2 + std::sqrt(1.0 + w) * de * dep, q, p + "b"),
        checked_sqrt(e2 + 2.0 * de * dep + dep * dep, q, p + "c"),
        checked_sqrt(e2 + 2.0 * std::sqrt(w) * de * dep - dep * dep, q, p + "d"),
    };
}

// (3.4a-b) with weight ratio = W / (1 + W); ratio = (n-1)/n gives (3.5e-f).
std::vector<double> lemma_3_5_values(const CaseQuantities& q, double ratio, const char* id_a, const char* id_b)
{
    const double e2 = q.e_fro * q.e_fro;
    const double da = q.delta_a;
    const double dep = q.departure;
    return {
        checked_sqrt(e2 + ratio * da * da, q, id_a),
        checked_sqrt(e2 + 2.0 * std::sqrt(ratio) * da * dep - dep * dep, q, id_b),
    };
}

}  // namespace

std::vector<BoundValue> bounds_lemma_3_4(const PerturbationCase& c)
{
    static const char* ids[] = {"eq_3_3a", "eq_3_3b", "eq_3_3c", "eq_3_3d"};
    std::vector<BoundValue> out;
    std::vector<double> v;
    if (c.a_is_normal) {
        v = lemma_3_4_values(c.quantities, nd(c.quantities.w), "eq_3_3");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        // eq_3_3c does not involve W, the others do.
        out.push_back(make_value(ids[i], v.empty() ? std::nullopt : std::optional<double>(v[i]),
                                 BoundFamily::lemma_3_4, false, i != 2));
    }
    return out;
}

std::vector<BoundValue> bounds_lemma_3_5(const PerturbationCase& c)
{
    static const char* ids[] = {"eq_3_4a", "eq_3_4b"};
    std::vector<BoundValue> out;
    std::vector<double> v;
    if (c.a_is_normal) {
        const double w = nd(c.quantities.w);
        v = lemma_3_5_values(c.quantities, w / (1.0 + w), "eq_3_4a", "eq_3_4b");
    }
    for (std::size_t i = 0; i < 2; ++i) {
        out.push_back(make_value(ids[i], v.empty() ? std::nullopt : std::optional<double>(v[i]),
                                 BoundFamily::lemma_3_5, false, true));
    }
    return out;
}

std::vector<BoundValue> bounds_theorem_3_6(const PerturbationCase& c)
{
    static const char* ids[] = {"eq_3_5a", "eq_3_5b", "eq_3_5c", "eq_3_5d", "eq_3_5e", "eq_3_5f"};
    std::vector<double> v;
    if (c.a_is_normal) {
        const auto& q = c.quantities;
        const double n = nd(q.n);
        v = lemma_3_4_values(q, n - 1.0, "eq_3_5");
        const auto ef = lemma_3_5_values(q, (n - 1.0) / n, "eq_3_5e", "eq_3_5f");
        v.insert(v.end(), ef.begin(), ef.end());
    }
    std::vector<BoundValue> out;
    for (std::size_t i = 0; i < 6; ++i) {
        out.push_back(make_value(ids[i], v.empty() ? std::nullopt : std::optional<double>(v[i]),
                                 BoundFamily::theorem_3_6));
    }
    return out;
}

std::vector<BoundValue> bounds_theorem_3_10(const PerturbationCase& c)
{
    static const char* ids[] = {"eq_3_11a", "eq_3_11b", "eq_3_11c"};
    std::vector<double> v;
    if (c.a_is_normal) {
        const auto& q = c.quantities;
        const double e2 = q.e_fro * q.e_fro;
        const double de = q.delta_e;
        const double dep = q.departure;
        const double ns = nd(q.n - q.s);
        v = {
            checked_sqrt(e2 + ns * de * de, q, "eq_3_11a"),
            checked_sqrt(e2 + std::sqrt(ns + 1.0) * de * dep, q, "eq_3_11b"),
            checked_sqrt(e2 + 2.0 * std::sqrt(ns) * de * dep - dep * dep, q, "eq_3_11c"),
        };
    }
    std::vector<BoundValue> out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.push_back(make_value(ids[i], v.empty() ? std::nullopt : std::optional<double>(v[i]),
                                 BoundFamily::theorem_3_10));
    }
    return out;
}

std::vector<BoundValue> bounds_theorem_4_2(const PerturbationCase& c)
{
    static const char* ids[] = {"eq_4_6a", "eq_4_6b", "eq_4_6c", "eq_4_6d", "eq_4_6e"};
    std::vector<double> v;
    if (c.a_is_hermitian) {
        const auto& q = c.quantities;
        const double e2 = q.e_fro * q.e_fro;
        const double de = q.delta_e;
        const double da = q.delta_a;
        const double dep = q.departure;
        const double r2 = std::sqrt(2.0);
        v = {
            checked_sqrt(e2 + de * de, q, "eq_4_6a"),
            checked_sqrt(e2 + r2 * de * dep, q, "eq_4_6b"),
            checked_sqrt(e2 + 2.0 * de * dep - dep * dep, q, "eq_4_6c"),
            checked_sqrt(e2 + 0.5 * da * da, q, "eq_4_6d"),
            checked_sqrt(e2 + r2 * da * dep - dep * dep, q, "eq_4_6e"),
        };
    }
    std::vector<BoundValue> out;
    for (std::size_t i = 0; i < 5; ++i) {
        out.push_back(make_value(ids[i], v.empty() ? std::nullopt : std::optional<double>(v[i]),
                                 BoundFamily::theorem_4_2, true));
    }
    return out;
}

// --- departure estimates -----------------------------------------------------

double delta_upper_henrici(const PerturbationCase& c)
{
    const double n = nd(c.n());
    return std::pow((n * n * n - n) / 12.0, 0.25) * std::sqrt(c.quantities.commutator);
}

double delta_lower_sun(const PerturbationCase& c)
{
    const double f2 = c.quantities.a_tilde_fro * c.quantities.a_tilde_fro;
    const double comm = c.quantities.commutator;
    const double inner = std::sqrt(std::max(0.0, f2 * f2 - 0.5 * comm * comm));
    return std::sqrt(std::max(0.0, f2 - inner));
}

std::optional<DepartureEstimates> delta_bounds_theorem_4_3(const PerturbationCase& c)
{
    if (!c.a_is_hermitian) {
        return std::nullopt;
    }
    const Eigen::Index rank = numerical_rank(c.a_tilde);
    if (rank == 0) {
        return std::nullopt;
    }
    auto estimate = [&](const Matrix& m) {
        const Matrix skew = m - m.adjoint();
        const double radicand = skew.squaredNorm() - std::norm(skew.trace()) / nd(rank);
        return std::sqrt(std::max(0.0, radicand)) / std::sqrt(2.0);
    };
    return DepartureEstimates{estimate(c.a_tilde), estimate(c.e)};
}

// --- catalog -------------------------------------------------------------------

const std::vector<std::string>& bound_catalog_ids()
{
    static const std::vector<std::string> ids = {
        "hoffman_wielandt", "eq_1_4",   "eq_1_5",   "eq_1_6",   "eq_1_7",   "eq_1_8",      "eq_1_9",
        "eq_3_3a",          "eq_3_3b",  "eq_3_3c",  "eq_3_3d",  "eq_3_4a",  "eq_3_4b",     "eq_3_5a",
        "eq_3_5b",          "eq_3_5c",  "eq_3_5d",  "eq_3_5e",  "eq_3_5f",  "eq_3_11a",    "eq_3_11b",
        "eq_3_11c",         "eq_4_6a",  "eq_4_6b",  "eq_4_6c",  "eq_4_6d",  "eq_4_6e",     "henrici_3_6",
        "sun_3_7",          "thm_4_3_a", "thm_4_3_b",
    };
    return ids;
}

BoundReport evaluate_all(const PerturbationCase& c, bool include_hermitian, double tol_violation)
{
    if (!c.a_is_normal) {
        throw HypothesisError("evaluate_all: A is not normal (commutator defect " +
                              std::to_string(commutator_defect(c.a)) + ")");
    }
    BoundReport report;
    report.quantities = c.quantities;
    report.tol_violation = tol_violation < 0.0 ? default_violation_tolerance(c) : tol_violation;
    report.match = optimal_match(c.spectrum_a, c.schur_tilde.eigenvalues);
    report.d2 = report.match.d2;
    report.d_inf = report.match.d_inf;

    const bool herm = include_hermitian && c.a_is_hermitian;
    auto herm_only = [&](std::optional<double> v) { return herm ? v : std::nullopt; };

    auto& b = report.bounds;
    b.push_back(make_value("hoffman_wielandt", bound_hoffman_wielandt(c), BoundFamily::baseline));
    b.push_back(make_value("eq_1_4", bound_sun_sqrt_n(c), BoundFamily::baseline));
    b.push_back(make_value("eq_1_5", bound_li_sun(c), BoundFamily::baseline));
    b.push_back(make_value("eq_1_6", herm_only(bound_kahan(c)), BoundFamily::baseline, true));
    b.push_back(make_value("eq_1_7", bound_sun_departure(c), BoundFamily::baseline));
    b.push_back(make_value("eq_1_8", herm_only(bound_li_vong_a(c)), BoundFamily::baseline, true));
    b.push_back(make_value("eq_1_9", herm_only(bound_li_vong_b(c)), BoundFamily::baseline, true));
    for (auto&& family : {bounds_lemma_3_4(c), bounds_lemma_3_5(c), bounds_theorem_3_6(c), bounds_theorem_3_10(c)}) {
        b.insert(b.end(), family.begin(), family.end());
    }
    for (auto v : bounds_theorem_4_2(c)) {
        v.value = herm_only(v.value);
        b.push_back(std::move(v));
    }
    b.push_back(make_value("henrici_3_6", delta_upper_henrici(c), BoundFamily::delta_estimate, false, false,
                           BoundTarget::departure_upper));
    b.push_back(make_value("sun_3_7", delta_lower_sun(c), BoundFamily::delta_estimate, false, false,
                           BoundTarget::departure_lower));
    const auto thm43 = herm ? delta_bounds_theorem_4_3(c) : std::nullopt;
    b.push_back(make_value("thm_4_3_a", thm43 ? std::optional<double>(thm43->from_a_tilde) : std::nullopt,
                           BoundFamily::delta_estimate, true, false, BoundTarget::departure_upper));
    b.push_back(make_value("thm_4_3_b", thm43 ? std::optional<double>(thm43->from_e) : std::nullopt,
                           BoundFamily::delta_estimate, true, false, BoundTarget::departure_upper));

    const double dep_tol = std::max(report.tol_violation, 1e-9 * std::max(1.0, c.quantities.a_tilde_fro));
    const double dep = c.quantities.departure;
    for (const auto& v : b) {
        if (!v.applicable()) {
            continue;
        }
        bool violated = false;
        switch (v.target) {
        case BoundTarget::d2: violated = *v.value < report.d2 - report.tol_violation; break;
        case BoundTarget::departure_upper: violated = *v.value < dep - dep_tol; break;
        case BoundTarget::departure_lower: violated = *v.value > dep + dep_tol; break;
        }
        if (violated) {
            report.violations.push_back(v.id);
        }
    }
    return report;
}

}  // namespace spectra_perturb
