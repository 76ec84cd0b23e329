#include "spectra_perturb/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spectra_perturb {

namespace {

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, std::size_t index)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("entry " + std::to_string(index) + " is not a [re, im] pair of numbers");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw NonFiniteError("entry " + std::to_string(index) + " is not finite");
    }
    return {re, im};
}

}  // namespace

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ParseError("matrix JSON must be an object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("matrix JSON needs an integer field \"n\"");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix JSON needs an array field \"entries\"");
    }
    const auto n = j["n"].get<long long>();
    if (n < 1) {
        throw DimensionError("matrix dimension must be positive");
    }
    const Json& entries = j["entries"];
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        values.push_back(complex_from_json(entries[k], k));
    }
    return matrix_from_row_major(static_cast<Eigen::Index>(n), values);
}

Json matrix_to_json(const Matrix& m)
{
    detail::require_square(m, "matrix_to_json");
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(complex_to_json(m(i, j)));
        }
    }
    return Json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

Matrix read_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        // Includes number overflow such as 1e999, reported as out_of_range.
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(path.string() + ": " + e.what());
    } catch (const NonFiniteError& e) {
        throw NonFiniteError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

Json schur_to_json(const SchurForm<double>& f)
{
    Json eig = Json::array();
    for (Eigen::Index i = 0; i < f.eigenvalues.size(); ++i) {
        eig.push_back(complex_to_json(f.eigenvalues(i)));
    }
    return Json{{"q", matrix_to_json(f.q)}, {"t", matrix_to_json(f.t)}, {"eigenvalues", std::move(eig)}};
}

SchurForm<double> schur_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("q") || !j.contains("t") || !j.contains("eigenvalues") ||
        !j["eigenvalues"].is_array()) {
        throw ParseError("Schur JSON needs fields \"q\", \"t\" and \"eigenvalues\"");
    }
    SchurForm<double> f;
    f.q = matrix_from_json(j["q"]);
    f.t = matrix_from_json(j["t"]);
    const Json& eig = j["eigenvalues"];
    if (f.q.rows() != f.t.rows() || static_cast<Eigen::Index>(eig.size()) != f.t.rows()) {
        throw DimensionError("Schur JSON: factor sizes disagree");
    }
    f.eigenvalues.resize(f.t.rows());
    for (std::size_t k = 0; k < eig.size(); ++k) {
        f.eigenvalues(static_cast<Eigen::Index>(k)) = complex_from_json(eig[k], k);
    }
    return f;
}

Json report_to_json(const BoundReport& report, const PerturbationCase& c, const ReportMeta& meta)
{
    const CaseQuantities& q = report.quantities;
    Json out;
    out["case"] = Json{
        {"n", c.n()},
        {"source", meta.source},
        {"hermitian_requested", meta.hermitian_requested},
        {"a_is_normal", c.a_is_normal},
        {"a_is_hermitian", c.a_is_hermitian},
        {"a_tilde_is_normal", c.a_tilde_is_normal},
    };
    out["d2"] = report.d2;
    out["d_inf"] = report.d_inf;
    Json perm = Json::array();
    for (const auto p : report.match.permutation) {
        perm.push_back(p);
    }
    out["permutation"] = std::move(perm);
    out["quantities"] = Json{
        {"e_fro", q.e_fro},
        {"delta_e", q.delta_e},
        {"delta_a", q.delta_a},
        {"departure", q.departure},
        {"w_lower", q.w},
        {"blocks", q.s},
        {"schur_residual", q.schur_residual},
    };
    Json bounds = Json::array();
    for (const auto& b : report.bounds) {
        bounds.push_back(Json{
            {"id", b.id},
            {"value", b.value ? Json(*b.value) : Json(nullptr)},
            {"applicable", b.applicable()},
            {"family", std::string(to_string(b.family))},
            {"target", std::string(to_string(b.target))},
            {"depends_on_schur_choice", b.depends_on_schur_choice},
        });
    }
    out["bounds"] = std::move(bounds);
    out["tol_violation"] = report.tol_violation;
    out["violations"] = report.violations;
    Json timing = Json::object();
    for (const auto& [phase, ms] : meta.timing_ms) {
        timing[phase] = ms;
    }
    out["timing_ms"] = std::move(timing);
    return out;
}

std::string csv_header()
{
    std::string h = "trial,n,kind,d2";
    for (const auto& id : bound_catalog_ids()) {
        h += ',';
        h += id;
    }
    h += ",violation";
    return h;
}

std::string csv_row(std::size_t trial, Eigen::Index n, std::string_view kind, const BoundReport& report,
                    bool violation)
{
    std::string row = std::to_string(trial) + ',' + std::to_string(n) + ',' + std::string(kind) + ',' +
                      fmt_double(report.d2);
    for (const auto& id : bound_catalog_ids()) {
        row += ',';
        const BoundValue* b = report.find(id);
        if (b && b->applicable()) {
            row += fmt_double(*b->value);
        }
    }
    row += violation ? ",1" : ",0";
    return row;
}

}  // namespace spectra_perturb
