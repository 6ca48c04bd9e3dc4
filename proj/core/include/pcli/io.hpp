#ifndef PCLI_IO_HPP
#define PCLI_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pcli/cases.hpp"
#include "pcli/matrix.hpp"
#include "pcli/scheme.hpp"
#include "pcli/schemes.hpp"

namespace pcli {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Row-major CSV, no header; blank lines and lines starting with '#' are
/// skipped. Throws ParseError.
DenseMatrix parse_matrix_csv(std::string_view text);
std::string format_matrix_csv(const DenseMatrix& m);
/// A single row or a single column.
Vector parse_vector_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
DenseMatrix read_matrix_csv(const std::filesystem::path& path);
Vector read_vector_csv(const std::filesystem::path& path);

/// Scheme file (JSON). Unknown keys are rejected with ParseError; "a_poly"
/// and "b_poly" are accepted and ignored.
Scheme parse_scheme_json(std::string_view text);
Scheme read_scheme_file(const std::filesystem::path& path);
std::string scheme_to_json(const Scheme& s);
/// The scheme JSON plus "a_poly" and "b_poly".
std::string synthesis_to_json(const LinearSynthesisResult& r);

/// Header `eta,rho`.
std::string rho_curve_csv(const RhoCurve& c);
/// Header `scheme,iterations,final_error`.
std::string experiment_table_csv(const ExperimentTable& t);
/// Header `k,error`.
std::string trajectory_csv(const std::vector<double>& errors);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma-separated table whose first line is a header. Throws ParseError on
/// ragged rows.
CsvTable parse_csv_table(std::string_view text);
/// Parses a field as a double; throws ParseError.
double parse_double(std::string_view field);

} // namespace pcli

#endif
