#include "pcli/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "pcli/error.hpp"

namespace pcli {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find('\n', start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double json_number(const json& j, const char* what) {
    if (!j.is_number()) parse_error(std::string(what) + " must be a number");
    return j.get<double>();
}

DenseMatrix json_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) parse_error(std::string(what) + " must be a nonempty array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) parse_error(std::string(what) + " rows must be arrays");
        std::vector<double> row;
        for (const auto& v : r) row.push_back(json_number(v, what));
        rows.push_back(std::move(row));
    }
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) parse_error(std::string(what) + " has ragged rows");
    try {
        return DenseMatrix::from_rows(rows);
    } catch (const Error& e) {
        parse_error(std::string(what) + ": " + e.what());
    }
}

json matrix_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return rows;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const char* where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) parse_error(fmt::format("unknown key '{}' in {}", key, where));
    }
}

const json& required(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end()) parse_error(fmt::format("missing key '{}' in {}", key, where));
    return *it;
}

json scheme_json(const Scheme& s) {
    json j;
    j["p"] = s.p;
    if (s.d)
        j["d"] = *s.d;
    else
        j["d"] = "any";
    j["name"] = s.name;
    if (const auto* sc = std::get_if<ScalarInversion>(&s.inversion)) {
        j["inversion"] = {{"kind", "scalar"}, {"nu", sc->nu}};
    } else if (const auto* dg = std::get_if<DiagonalInversion>(&s.inversion)) {
        j["inversion"] = {{"kind", "diagonal"}, {"values", dg->values}};
    } else {
        j["inversion"] = {{"kind", "explicit"}, {"matrix", matrix_json(std::get<ExplicitInversion>(s.inversion).matrix)}};
    }
    j["coeffs"] = json::array();
    for (const auto& c : s.coeffs) {
        if (const auto* lin = std::get_if<LinearCoeff>(&c)) {
            j["coeffs"].push_back({{"kind", "linear"}, {"alpha", lin->alpha}, {"beta", lin->beta}});
        } else {
            const auto& ex = std::get<ExplicitCoeff>(c);
            json e{{"kind", "explicit"}, {"matrix", matrix_json(ex.matrix)}};
            if (ex.eigenbasis) e["eigenbasis"] = matrix_json(*ex.eigenbasis);
            j["coeffs"].push_back(std::move(e));
        }
    }
    return j;
}

std::size_t json_count(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) parse_error(std::string(what) + " must be a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

} // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

DenseMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    for (auto line : lines_of(text)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        std::vector<double> row;
        for (auto field : split(line, ',')) row.push_back(parse_double(field));
        if (!rows.empty() && row.size() != rows.front().size()) parse_error("matrix CSV has ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_error("matrix CSV has no rows");
    try {
        return DenseMatrix::from_rows(rows);
    } catch (const Error& e) {
        parse_error(e.what());
    }
}

std::string format_matrix_csv(const DenseMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Vector parse_vector_csv(std::string_view text) {
    const DenseMatrix m = parse_matrix_csv(text);
    if (m.rows() != 1 && m.cols() != 1) parse_error("vector CSV must be a single row or column");
    return Vector(m.entries().begin(), m.entries().end());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DenseMatrix read_matrix_csv(const std::filesystem::path& path) { return parse_matrix_csv(read_text_file(path)); }
Vector read_vector_csv(const std::filesystem::path& path) { return parse_vector_csv(read_text_file(path)); }

Scheme parse_scheme_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) parse_error("scheme must be a JSON object");
    reject_unknown(j, {"p", "d", "name", "inversion", "coeffs", "a_poly", "b_poly"}, "scheme");
    Scheme s;
    s.p = json_count(required(j, "p", "scheme"), "p");
    const json& d = required(j, "d", "scheme");
    if (d.is_string()) {
        if (d.get<std::string>() != "any") parse_error("d must be a positive integer or \"any\"");
    } else {
        s.d = json_count(d, "d");
    }
    const json& name = required(j, "name", "scheme");
    if (!name.is_string()) parse_error("name must be a string");
    s.name = name.get<std::string>();

    const json& inv = required(j, "inversion", "scheme");
    if (!inv.is_object()) parse_error("inversion must be an object");
    const json& kind = required(inv, "kind", "inversion");
    if (!kind.is_string()) parse_error("inversion kind must be a string");
    if (kind == "scalar") {
        reject_unknown(inv, {"kind", "nu"}, "inversion");
        s.inversion = ScalarInversion{json_number(required(inv, "nu", "inversion"), "nu")};
    } else if (kind == "diagonal") {
        reject_unknown(inv, {"kind", "values"}, "inversion");
        const json& vals = required(inv, "values", "inversion");
        if (!vals.is_array()) parse_error("values must be an array");
        Vector v;
        for (const auto& x : vals) v.push_back(json_number(x, "values"));
        s.inversion = DiagonalInversion{std::move(v)};
    } else if (kind == "explicit") {
        reject_unknown(inv, {"kind", "matrix"}, "inversion");
        s.inversion = ExplicitInversion{json_matrix(required(inv, "matrix", "inversion"), "inversion matrix")};
    } else {
        parse_error("inversion kind must be scalar, diagonal or explicit");
    }

    const json& coeffs = required(j, "coeffs", "scheme");
    if (!coeffs.is_array()) parse_error("coeffs must be an array");
    for (const auto& c : coeffs) {
        if (!c.is_object()) parse_error("each coefficient must be an object");
        const json& ck = required(c, "kind", "coefficient");
        if (ck == "linear") {
            reject_unknown(c, {"kind", "alpha", "beta"}, "coefficient");
            s.coeffs.push_back(LinearCoeff{json_number(required(c, "alpha", "coefficient"), "alpha"),
                                           json_number(required(c, "beta", "coefficient"), "beta")});
        } else if (ck == "explicit") {
            reject_unknown(c, {"kind", "matrix", "eigenbasis"}, "coefficient");
            ExplicitCoeff ex{json_matrix(required(c, "matrix", "coefficient"), "coefficient matrix"), std::nullopt};
            if (c.contains("eigenbasis")) ex.eigenbasis = json_matrix(c["eigenbasis"], "eigenbasis");
            s.coeffs.push_back(std::move(ex));
        } else {
            parse_error("coefficient kind must be linear or explicit");
        }
    }
    try {
        s.validate();
    } catch (const Error& e) {
        parse_error(e.what());
    }
    return s;
}

Scheme read_scheme_file(const std::filesystem::path& path) { return parse_scheme_json(read_text_file(path)); }

std::string scheme_to_json(const Scheme& s) { return scheme_json(s).dump(2) + "\n"; }

std::string synthesis_to_json(const LinearSynthesisResult& r) {
    json j = scheme_json(r.scheme);
    j["a_poly"] = std::vector<double>(r.a_poly.coeffs().begin(), r.a_poly.coeffs().end());
    j["b_poly"] = std::vector<double>(r.b_poly.coeffs().begin(), r.b_poly.coeffs().end());
    return j.dump(2) + "\n";
}

std::string rho_curve_csv(const RhoCurve& c) {
    std::string out = "eta,rho\n";
    for (std::size_t i = 0; i < c.etas.size(); ++i)
        out += format_double(c.etas[i]) + "," + format_double(c.rhos[i]) + "\n";
    return out;
}

std::string experiment_table_csv(const ExperimentTable& t) {
    std::string out = "scheme,iterations,final_error\n";
    for (const auto& r : t.rows) out += fmt::format("{},{},{}\n", r.scheme, r.iterations, format_double(r.final_error));
    return out;
}

std::string trajectory_csv(const std::vector<double>& errors) {
    std::string out = "k,error\n";
    for (std::size_t k = 0; k < errors.size(); ++k) out += fmt::format("{},{}\n", k, format_double(errors[k]));
    return out;
}

CsvTable parse_csv_table(std::string_view text) {
    CsvTable t;
    bool first = true;
    for (auto line : lines_of(text)) {
        line = trim(line);
        if (line.empty()) continue;
        auto fields = split(line, ',');
        std::vector<std::string> row(fields.begin(), fields.end());
        if (first) {
            t.header = std::move(row);
            first = false;
            continue;
        }
        if (row.size() != t.header.size()) parse_error("CSV row width differs from the header");
        t.rows.push_back(std::move(row));
    }
    if (first) parse_error("CSV has no header");
    return t;
}

double parse_double(std::string_view field) {
    field = trim(field);
    double v = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end || field.empty()) parse_error(fmt::format("not a number: '{}'", field));
    return v;
}

} // namespace pcli
