#ifndef SPECTRA_PERTURB_REPORT_IO_HPP
#define SPECTRA_PERTURB_REPORT_IO_HPP

// JSON and CSV serialization of matrices, Schur forms and bound reports.
//
// Matrix JSON: {"n": int, "entries": [[re, im], ...]} with n*n entries in
// row-major order.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "spectra_perturb/bounds.hpp"
#include "spectra_perturb/decompositions.hpp"
#include "spectra_perturb/matrix_core.hpp"

namespace spectra_perturb {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed structure, DimensionError on a wrong entry
/// count and NonFiniteError on NaN or infinite components.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// Reads a matrix JSON file; all failures surface as std::invalid_argument
/// subclasses with the path in the message.
Matrix read_matrix_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

Json schur_to_json(const SchurForm<double>& f);
SchurForm<double> schur_from_json(const Json& j);

/// Case metadata carried into a report.
struct ReportMeta {
    std::string source;  // file paths, fixture id or "trial <k> seed <s>"
    bool hermitian_requested = false;
    std::vector<std::pair<std::string, double>> timing_ms;
};

Json report_to_json(const BoundReport& report, const PerturbationCase& c, const ReportMeta& meta);

/// CSV with columns trial, n, kind, d2, <catalog ids...>, violation.
std::string csv_header();
std::string csv_row(std::size_t trial, Eigen::Index n, std::string_view kind, const BoundReport& report,
                    bool violation);

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_REPORT_IO_HPP
