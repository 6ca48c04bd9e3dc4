#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace pcli::cli;
    CLI::App app{"p-step linear iterative methods on quadratics: synthesis, analysis and case studies", "pcli"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string format = "csv";
    app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", g.out, "Output file (default: standard output)");

    SynthOptions synth;
    auto* s = app.add_subcommand("synth", "Synthesize a scheme and write it as JSON");
    s->add_option("--p", synth.p, "Lifting factor")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--mu", synth.mu, "Strong convexity constant")->capture_default_str();
    s->add_option("--L", synth.L, "Smoothness constant")->capture_default_str();
    s->add_option("--nu", synth.nu, "Inversion scalar: number, optimal or invlip")->capture_default_str();
    s->add_option("--mode", synth.mode, "linear or optimal-scalar")->capture_default_str();
    s->add_option("--matrix", synth.matrix, "Matrix CSV (optimal-scalar mode)");

    AnalyzeOptions analyze;
    auto* an = app.add_subcommand("analyze", "Spectral report for a scheme on a matrix");
    an->add_option("--scheme", analyze.scheme, "Scheme JSON")->required();
    an->add_option("--matrix", analyze.matrix, "Matrix CSV")->required();
    an->add_option("--b", analyze.b, "Right-hand vector CSV (default -A*1)");
    an->add_option("--mu", analyze.mu, "Lower spectral bound (default: smallest eigenvalue)");
    an->add_option("--L", analyze.L, "Upper spectral bound (default: largest eigenvalue)");
    an->add_flag("--require-fixed-point", analyze.require_fixed_point, "Exit 4 when the scheme does not converge");

    RunOptions runo;
    auto* r = app.add_subcommand("run", "Run a scheme and write its error trajectory");
    r->add_option("--scheme", runo.scheme, "Scheme JSON")->required();
    r->add_option("--matrix", runo.matrix, "Matrix CSV")->required();
    r->add_option("--b", runo.b, "Right-hand vector CSV (default -A*1)");
    r->add_option("--x0", runo.x0, "Initial point CSV (default 0)");
    r->add_option("--K", runo.K, "Iterations")->capture_default_str();
    r->add_option("--lift", runo.lift, "stacked or last")->capture_default_str();

    CurveOptions curve;
    auto* c = app.add_subcommand("curve", "Spectral radius of z^p - (eta a(z) + b(z)) over [mu, L]");
    c->add_option("--scheme", curve.scheme, "Linear scheme JSON (default: synthesize)");
    c->add_option("--p", curve.p, "Lifting factor when synthesizing")->capture_default_str();
    c->add_option("--mu", curve.mu, "Interval start")->capture_default_str();
    c->add_option("--L", curve.L, "Interval end")->capture_default_str();
    c->add_option("--nu", curve.nu, "Inversion scalar when synthesizing")->capture_default_str();
    c->add_option("--samples", curve.samples, "Grid size")->capture_default_str();

    SdcaOptions sdca;
    auto* sd = app.add_subcommand("sdca", "SDCA tightness instance");
    sd->add_option("--n", sdca.n, "Sample count")->capture_default_str();
    sd->add_option("--lambda", sdca.lambda, "Regularization")->capture_default_str();
    sd->add_option("--eps", sdca.eps, "Target accuracy")->capture_default_str();
    sd->add_option("--K", sdca.K, "Simulated steps (0: no simulation)")->capture_default_str();
    sd->add_option("--reps", sdca.reps, "Simulation repetitions")->capture_default_str();
    sd->add_option("--trajectory-out", sdca.trajectory_out, "CSV for k,exact_norm,mean_norm");

    ConjectureOptions conj;
    auto* cj = app.add_subcommand("conjecture", "Randomized probe of the linear-coefficient lower bound");
    cj->add_option("--p", conj.p, "Lifting factor")->capture_default_str();
    cj->add_option("--mu", conj.mu, "Interval start")->capture_default_str();
    cj->add_option("--L", conj.L, "Interval end")->capture_default_str();
    cj->add_option("--trials", conj.trials, "Number of draws")->capture_default_str();
    cj->add_option("--threads", conj.threads, "Worker threads (0: hardware)")->capture_default_str();

    NesterovOptions nest;
    auto* ne = app.add_subcommand("nesterov", "Spectrum of the tridiagonal worst-case matrix");
    ne->add_option("--d", nest.d, "Dimension")->capture_default_str();

    A3Options a3;
    auto* a3c = app.add_subcommand("a3", "3-step scheme vs Heavy Ball vs AGD on the rotated 2x2 instance");
    a3c->add_option("--target", a3.target, "Error level")->capture_default_str();
    a3c->add_option("--lift", a3.lift, "stacked or last")->capture_default_str();
    a3c->add_option("--trajectory-dir", a3.trajectory_dir, "Directory for one k,error CSV per scheme");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.format = format == "json" ? Format::Json : Format::Csv;

    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) {
            std::cerr << "error: cannot open " << g.out << "\n";
            return 2;
        }
    }
    std::ostream& out = g.out.empty() ? std::cout : file;
    try {
        if (*s) return cmd_synth(g, synth, out, std::cerr);
        if (*an) return cmd_analyze(g, analyze, out, std::cerr);
        if (*r) return cmd_run(g, runo, out, std::cerr);
        if (*c) return cmd_curve(g, curve, out, std::cerr);
        if (*sd) return cmd_sdca(g, sdca, out, std::cerr);
        if (*cj) return cmd_conjecture(g, conj, out, std::cerr);
        if (*ne) return cmd_nesterov(g, nest, out, std::cerr);
        if (*a3c) return cmd_a3(g, a3, out, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
