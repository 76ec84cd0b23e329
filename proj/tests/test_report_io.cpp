#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spectra_perturb/ensembles.hpp"
#include "spectra_perturb/report_io.hpp"
#include "test_support.hpp"

namespace sp = spectra_perturb;
using sp::Json;
using sp::Matrix;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / ("spectra_perturb_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact)
{
    const Matrix m = test_support::random_matrix(5, 42);
    const Json j = sp::matrix_to_json(m);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["entries"].size(), 25u);
    EXPECT_EQ(test_support::max_abs_diff(sp::matrix_from_json(j), m), 0.0);

    // Through text, too.
    const Json parsed = Json::parse(j.dump());
    EXPECT_EQ(test_support::max_abs_diff(sp::matrix_from_json(parsed), m), 0.0);
}

TEST(MatrixJson, RowMajorLayout)
{
    const Json j = Json::parse(R"({"n": 2, "entries": [[1, 0], [2, 0], [3, 0], [0, 4]]})");
    const Matrix m = sp::matrix_from_json(j);
    EXPECT_EQ(m(0, 1), sp::Complex(2.0));
    EXPECT_EQ(m(1, 0), sp::Complex(3.0));
    EXPECT_EQ(m(1, 1), sp::Complex(0.0, 4.0));
}

TEST(MatrixJson, RejectsMalformedInput)
{
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"([1, 2])")), sp::ParseError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"entries": []})")), sp::ParseError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"n": "2", "entries": []})")), sp::ParseError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"n": 1, "entries": [[1]]})")), sp::ParseError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"n": 1, "entries": [["a", 0]]})")), sp::ParseError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1, 0]]})")), sp::DimensionError);
    EXPECT_THROW(sp::matrix_from_json(Json::parse(R"({"n": 0, "entries": []})")), sp::DimensionError);
}

TEST(MatrixFile, ErrorsCarryThePath)
{
    const auto corrupt = temp_file("corrupt.json", R"({"n": 2, "entries": [[1, 0], )");
    try {
        sp::read_matrix_file(corrupt);
        FAIL() << "expected ParseError";
    } catch (const sp::ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(corrupt.string()), std::string::npos);
    }
    const auto overflow = temp_file("overflow.json", R"({"n": 1, "entries": [[1e999, 0]]})");
    EXPECT_THROW(sp::read_matrix_file(overflow), std::invalid_argument);
    EXPECT_THROW(sp::read_matrix_file("/nonexistent/path/m.json"), std::invalid_argument);

    const auto good = temp_file("good.json", R"({"n": 1, "entries": [[1.5, -2]]})");
    EXPECT_EQ(sp::read_matrix_file(good)(0, 0), sp::Complex(1.5, -2.0));
    std::filesystem::remove(corrupt);
    std::filesystem::remove(overflow);
    std::filesystem::remove(good);
}

TEST(SchurJson, RoundTrip)
{
    const auto c = sp::fixture("example_4_4", 4);
    const Json j = sp::schur_to_json(c.schur_tilde);
    const auto back = sp::schur_from_json(Json::parse(j.dump()));
    EXPECT_EQ(test_support::max_abs_diff(back.q, c.schur_tilde.q), 0.0);
    EXPECT_EQ(test_support::max_abs_diff(back.t, c.schur_tilde.t), 0.0);
    EXPECT_EQ(back.eigenvalues.size(), 4);
}

TEST(ReportJson, FieldsAndNulls)
{
    const auto c = sp::fixture("intro_2x2");
    const auto r = sp::evaluate_all(c);
    sp::ReportMeta meta;
    meta.source = "fixture intro_2x2";
    meta.hermitian_requested = true;
    meta.timing_ms = {{"total", 1.0}};
    const Json j = Json::parse(sp::report_to_json(r, c, meta).dump());

    EXPECT_EQ(j["case"]["n"], 2);
    EXPECT_EQ(j["case"]["source"], "fixture intro_2x2");
    EXPECT_TRUE(j["case"]["a_is_hermitian"].get<bool>());
    EXPECT_FALSE(j["case"]["a_tilde_is_normal"].get<bool>());
    EXPECT_DOUBLE_EQ(j["d2"].get<double>(), 3.0);
    EXPECT_EQ(j["permutation"].size(), 2u);
    EXPECT_EQ(j["quantities"]["w_lower"], 1);
    EXPECT_EQ(j["quantities"]["blocks"], 1);
    ASSERT_EQ(j["bounds"].size(), sp::bound_catalog_ids().size());

    bool saw_null = false;
    for (const auto& b : j["bounds"]) {
        ASSERT_TRUE(b.contains("id"));
        ASSERT_TRUE(b.contains("family"));
        ASSERT_TRUE(b.contains("target"));
        if (b["id"] == "hoffman_wielandt") {
            EXPECT_TRUE(b["value"].is_null());
            EXPECT_FALSE(b["applicable"].get<bool>());
            saw_null = true;
        }
        if (b["id"] == "eq_1_4") {
            EXPECT_NEAR(b["value"].get<double>(), std::sqrt(14.0), 1e-14);
            EXPECT_EQ(b["target"], "d2");
        }
    }
    EXPECT_TRUE(saw_null);
    EXPECT_TRUE(j["violations"].empty());
    EXPECT_DOUBLE_EQ(j["timing_ms"]["total"].get<double>(), 1.0);
}

TEST(ReportCsv, HeaderAndRowAgree)
{
    const std::string header = sp::csv_header();
    EXPECT_EQ(header.rfind("trial,n,kind,d2,hoffman_wielandt,", 0), 0u);
    EXPECT_NE(header.find(",violation"), std::string::npos);

    const auto c = sp::fixture("intro_2x2");
    const auto r = sp::evaluate_all(c);
    const std::string row = sp::csv_row(7, 2, "fixture", r, false);
    EXPECT_EQ(row.rfind("7,2,fixture,3,", 0), 0u);

    auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
    EXPECT_EQ(count(header), count(row));
    // Not-applicable values are empty cells.
    EXPECT_NE(row.find("3,,"), std::string::npos);
}
