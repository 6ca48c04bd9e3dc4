#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "pcli/bounds.hpp"
#include "pcli/cases.hpp"
#include "pcli/error.hpp"
#include "pcli/framework.hpp"
#include "pcli/io.hpp"
#include "pcli/schemes.hpp"

namespace pcli::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double resolve_nu(const std::string& text, int p, double mu, double L) {
    if (text == "optimal") return nu_optimal(p, mu, L);
    if (text == "invlip") return -1.0 / L;
    try {
        return parse_double(text);
    } catch (const Error&) {
        throw UsageError("--nu must be a number, \"optimal\" or \"invlip\"");
    }
}

void check_nu_with_message(int p, double nu, double L) {
    try {
        check_nu_range(p, nu, L);
    } catch (const Error&) {
        throw Error(ErrorKind::NuOutOfRange,
                    fmt::format("nu = {} lies outside the convergent range (-2^p/L, 0) = ({}, 0); "
                                "a scalar inversion there forces a spectral radius of at least 1",
                                format_double(nu), format_double(-std::pow(2.0, p) / L)));
    }
}

QuadraticObjective load_objective(const std::string& matrix, const std::string& b, std::optional<double> mu,
                                  std::optional<double> L) {
    if (matrix.empty()) throw UsageError("--matrix is required");
    DenseMatrix a = read_matrix_csv(matrix);
    Vector rhs;
    if (b.empty()) {
        const Vector ones(a.cols(), 1.0);
        rhs = scaled(-1.0, a * ones);
    } else {
        rhs = read_vector_csv(b);
    }
    if (mu && L) return QuadraticObjective(std::move(a), std::move(rhs), *mu, *L);
    QuadraticObjective q = QuadraticObjective::from_spectrum(a, rhs);
    return QuadraticObjective(std::move(a), std::move(rhs), mu.value_or(q.mu()), L.value_or(q.L()));
}

InitialLift parse_lift(const std::string& s) {
    if (s == "stacked") return InitialLift::Stacked;
    if (s == "last") return InitialLift::LastBlock;
    throw UsageError("--lift must be \"stacked\" or \"last\"");
}

json coeffs_json(const Polynomial& p) { return std::vector<double>(p.coeffs().begin(), p.coeffs().end()); }

json complex_list(const std::vector<Complex>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back({z.real(), z.imag()});
    return out;
}

} // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) return 2;
    const auto* err = dynamic_cast<const Error*>(&e);
    if (!err) return 5;
    switch (err->kind()) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::DomainError:
    case ErrorKind::NuOutOfRange:
    case ErrorKind::BadName:
    case ErrorKind::MissingMatrix:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotMonic:
    case ErrorKind::NotLinear:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NotSquare:
    case ErrorKind::SingularFit: return 3;
    case ErrorKind::NotConvergent: return 4;
    default: return 5;
    }
}

int cmd_synth(const GlobalOptions&, const SynthOptions& o, std::ostream& out, std::ostream& log) {
    const double nu = resolve_nu(o.nu, o.p, o.mu, o.L);
    check_nu_with_message(o.p, nu, o.L);
    double worst = 0.0;
    if (o.mode == "linear") {
        const LinearSynthesisResult r = synth_linear(o.p, nu, o.mu, o.L);
        worst = max_rho_over_interval(r.a_poly, r.b_poly, o.p, o.mu, o.L).rho_star;
        out << synthesis_to_json(r);
    } else if (o.mode == "optimal-scalar") {
        if (o.matrix.empty()) throw UsageError("--mode optimal-scalar requires --matrix");
        const QuadraticObjective q = load_objective(o.matrix, "", o.mu, o.L);
        const Scheme s = synth_optimal_scalar(o.p, nu, q);
        worst = scheme_spectral_radius(s, q).spectral_radius;
        out << scheme_to_json(s);
    } else {
        throw UsageError("--mode must be \"linear\" or \"optimal-scalar\"");
    }
    fmt::print(log, "nu = {}\nworst-case rho = {}\n", format_double(nu), format_double(worst));
    return 0;
}

int cmd_analyze(const GlobalOptions&, const AnalyzeOptions& o, std::ostream& out, std::ostream& log) {
    if (o.scheme.empty()) throw UsageError("--scheme is required");
    const Scheme s = read_scheme_file(o.scheme);
    const QuadraticObjective q = load_objective(o.matrix, o.b, o.mu, o.L);
    json j;
    j["name"] = s.name;
    j["p"] = s.p;
    j["d"] = q.dim();
    j["mu"] = q.mu();
    j["L"] = q.L();
    j["consistency_residual"] = consistency_residual(s, q);
    const SpectralReport rep = scheme_spectral_radius(s, q);
    j["spectral_radius"] = rep.spectral_radius;
    j["max_index"] = rep.max_index;
    j["eigenvalues"] = complex_list(rep.eigenvalues);
    try {
        json factors = json::array();
        for (const auto& f : char_factors(s, q)) factors.push_back(coeffs_json(f));
        j["char_factors"] = std::move(factors);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTriangularizable) throw;
        j["char_factors"] = nullptr;
    }
    const double lb = lower_bound_rho(q.Q(), static_cast<int>(s.p));
    j["lower_bound_rho"] = lb;
    j["rho_minus_lower_bound"] = rep.spectral_radius - lb;
    int code = 0;
    try {
        j["fixed_point"] = fixed_point(s, q);
        j["convergent"] = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotConvergent && e.kind() != ErrorKind::SingularSystem) throw;
        j["fixed_point"] = nullptr;
        j["convergent"] = false;
        if (o.require_fixed_point) {
            fmt::print(log, "error: {}\n", e.what());
            code = exit_code_for(e);
        }
    }
    out << j.dump(2) << "\n";
    return code;
}

int cmd_run(const GlobalOptions& g, const RunOptions& o, std::ostream& out, std::ostream& log) {
    if (o.scheme.empty()) throw UsageError("--scheme is required");
    const Scheme s = read_scheme_file(o.scheme);
    const QuadraticObjective q = load_objective(o.matrix, o.b, std::nullopt, std::nullopt);
    const Vector x0 = o.x0.empty() ? Vector(q.dim(), 0.0) : read_vector_csv(o.x0);
    const Trajectory t = run(s, q, x0, o.K, pcli::RunOptions{parse_lift(o.lift), false});
    std::optional<double> rate;
    try {
        rate = estimate_rate(t);
    } catch (const Error&) {
    }
    if (g.format == Format::Json) {
        json j;
        j["errors"] = t.errors;
        j["convergent"] = t.convergent;
        j["rate"] = rate ? json(*rate) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << trajectory_csv(t.errors);
    }
    if (rate) fmt::print(log, "estimated rate = {}\n", format_double(*rate));
    return 0;
}

int cmd_curve(const GlobalOptions& g, const CurveOptions& o, std::ostream& out, std::ostream& log) {
    Polynomial a, b;
    int p = o.p;
    if (!o.scheme.empty()) {
        const Scheme s = read_scheme_file(o.scheme);
        std::tie(a, b) = linear_polys(s);
        p = static_cast<int>(s.p);
    } else {
        const double nu = resolve_nu(o.nu, o.p, o.mu, o.L);
        check_nu_with_message(o.p, nu, o.L);
        const LinearSynthesisResult r = synth_linear(o.p, nu, o.mu, o.L);
        a = r.a_poly;
        b = r.b_poly;
    }
    const RhoCurve c = rho_curve(a, b, p, o.mu, o.L, o.samples);
    if (g.format == Format::Json) {
        out << json{{"etas", c.etas}, {"rhos", c.rhos}}.dump(2) << "\n";
    } else {
        out << rho_curve_csv(c);
    }
    fmt::print(log, "max rho on grid = {}\n", format_double(*std::max_element(c.rhos.begin(), c.rhos.end())));
    return 0;
}

int cmd_sdca(const GlobalOptions& g, const SdcaOptions& o, std::ostream& out, std::ostream&) {
    const double bound = sdca_lower_bound_iters(o.n, o.lambda, o.eps);
    const double bulk = sdca_bulk_eigenvalue(o.n, o.lambda);
    const double ones = sdca_ones_eigenvalue(o.n, o.lambda);
    std::optional<SdcaSimulation> sim;
    if (o.K > 0) sim = sdca_simulate(o.n, o.lambda, o.K, o.reps, g.seed);
    if (sim && !o.trajectory_out.empty()) {
        std::ofstream f(o.trajectory_out);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + o.trajectory_out);
        const auto exact = sim->exact_norms(), mean = sim->mean_norms();
        f << "k,exact_norm,mean_norm\n";
        for (std::size_t k = 0; k < exact.size(); ++k)
            f << k << ',' << format_double(exact[k]) << ',' << format_double(mean[k]) << '\n';
    }
    if (g.format == Format::Json) {
        json j{{"n", o.n}, {"lambda", o.lambda}, {"eps", o.eps}, {"lower_bound_iters", bound},
               {"bulk_eigenvalue", bulk}, {"ones_eigenvalue", ones}};
        if (sim) {
            j["K"] = o.K;
            j["reps"] = o.reps;
            j["seed"] = g.seed;
            j["exact_norms"] = sim->exact_norms();
            j["mean_norms"] = sim->mean_norms();
        }
        out << j.dump(2) << "\n";
    } else {
        out << "quantity,value\n";
        out << "lower_bound_iters," << format_double(bound) << "\n";
        out << "bulk_eigenvalue," << format_double(bulk) << "\n";
        out << "ones_eigenvalue," << format_double(ones) << "\n";
        if (sim) {
            out << "exact_norm_K," << format_double(sim->exact_norms().back()) << "\n";
            out << "mean_norm_K," << format_double(sim->mean_norms().back()) << "\n";
        }
    }
    return 0;
}

int cmd_conjecture(const GlobalOptions& g, const ConjectureOptions& o, std::ostream& out, std::ostream&) {
    const ConjectureReport r = conjecture_probe(o.p, o.mu, o.L, o.trials, g.seed, o.threads);
    if (g.format == Format::Json) {
        out << r.to_json() << "\n";
        return 0;
    }
    auto list = [](const Polynomial& p) {
        std::string s;
        for (double c : p.coeffs()) s += (s.empty() ? "" : ",") + format_double(c);
        return "[" + s + "]";
    };
    if (r.counterexamples.empty())
        fmt::print(out, "no counterexamples: min max rho = {} >= threshold {} - 1e-9 (p={}, trials={}, seed={})\n",
                   format_double(r.min_max_rho), format_double(r.threshold), r.p, r.trials, r.seed);
    else
        fmt::print(out, "{} counterexamples below threshold {} (p={}, trials={}, seed={})\n", r.counterexamples.size(),
                   format_double(r.threshold), r.p, r.trials, r.seed);
    fmt::print(out, "argmin trial: {}\nargmin a: {}\nargmin b: {}\n", r.argmin_trial, list(r.argmin_a), list(r.argmin_b));
    return 0;
}

int cmd_nesterov(const GlobalOptions& g, const NesterovOptions& o, std::ostream& out, std::ostream& log) {
    const NesterovInstance inst = nesterov_worst_case(o.d);
    const auto numeric = symmetric_eigen(inst.A).eigenvalues;
    double diff = 0.0;
    for (std::size_t k = 0; k < numeric.size(); ++k) diff = std::max(diff, std::abs(numeric[k] - inst.spectrum[k]));
    const double gap = max_consecutive_gap(inst.spectrum);
    if (g.format == Format::Json) {
        out << json{{"d", o.d}, {"closed_form", inst.spectrum}, {"numeric", numeric}, {"max_abs_difference", diff},
                    {"max_gap", gap}}
                   .dump(2)
            << "\n";
    } else {
        out << "k,closed_form,numeric\n";
        for (std::size_t k = 0; k < numeric.size(); ++k)
            out << k + 1 << ',' << format_double(inst.spectrum[k]) << ',' << format_double(numeric[k]) << '\n';
    }
    fmt::print(log, "max gap = {}\nmax |closed form - numeric| = {}\n", format_double(gap), format_double(diff));
    return 0;
}

int cmd_a3(const GlobalOptions& g, const A3Options& o, std::ostream& out, std::ostream&) {
    const ExperimentTable t = a3_experiment(o.target, parse_lift(o.lift));
    if (!o.trajectory_dir.empty()) {
        std::filesystem::create_directories(o.trajectory_dir);
        for (const auto& row : t.rows) {
            std::ofstream f(std::filesystem::path(o.trajectory_dir) / (row.scheme + ".csv"));
            if (!f) throw Error(ErrorKind::ParseError, "cannot write into " + o.trajectory_dir);
            f << trajectory_csv(row.errors);
        }
    }
    if (g.format == Format::Json) {
        json rows = json::array();
        for (const auto& r : t.rows)
            rows.push_back({{"scheme", r.scheme}, {"iterations", r.iterations}, {"final_error", r.final_error},
                            {"reached", r.reached}});
        out << json{{"target", t.target}, {"rows", rows}}.dump(2) << "\n";
    } else {
        out << experiment_table_csv(t);
    }
    return 0;
}

} // namespace pcli::cli
