#ifndef PCLI_TOOLS_COMMANDS_HPP
#define PCLI_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pcli::cli {

enum class Format { Csv, Json };

struct GlobalOptions {
    std::uint64_t seed = 0;
    Format format = Format::Csv;
    std::string out;  // empty: standard output
};

struct SynthOptions {
    int p = 2;
    double mu = 1.0;
    double L = 4.0;
    std::string nu = "optimal";
    std::string mode = "linear";
    std::string matrix;
};

struct AnalyzeOptions {
    std::string scheme;
    std::string matrix;
    std::string b;
    std::optional<double> mu;
    std::optional<double> L;
    bool require_fixed_point = false;
};

struct RunOptions {
    std::string scheme;
    std::string matrix;
    std::string b;
    std::string x0;
    std::size_t K = 100;
    std::string lift = "stacked";
};

struct CurveOptions {
    std::string scheme;
    int p = 2;
    double mu = 1.0;
    double L = 4.0;
    std::string nu = "optimal";
    std::size_t samples = 201;
};

struct SdcaOptions {
    std::size_t n = 3;
    double lambda = 1.0;
    double eps = 1e-6;
    std::size_t K = 0;
    std::size_t reps = 10000;
    std::string trajectory_out;
};

struct ConjectureOptions {
    int p = 3;
    double mu = 1.0;
    double L = 100.0;
    std::size_t trials = 1000;
    unsigned threads = 0;
};

struct NesterovOptions {
    std::size_t d = 16;
};

struct A3Options {
    double target = 1e-6;
    std::string lift = "last";
    std::string trajectory_dir;
};

// Each command writes its primary artifact to `out` and diagnostics to `log`.
int cmd_synth(const GlobalOptions& g, const SynthOptions& o, std::ostream& out, std::ostream& log);
int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o, std::ostream& out, std::ostream& log);
int cmd_run(const GlobalOptions& g, const RunOptions& o, std::ostream& out, std::ostream& log);
int cmd_curve(const GlobalOptions& g, const CurveOptions& o, std::ostream& out, std::ostream& log);
int cmd_sdca(const GlobalOptions& g, const SdcaOptions& o, std::ostream& out, std::ostream& log);
int cmd_conjecture(const GlobalOptions& g, const ConjectureOptions& o, std::ostream& out, std::ostream& log);
int cmd_nesterov(const GlobalOptions& g, const NesterovOptions& o, std::ostream& out, std::ostream& log);
int cmd_a3(const GlobalOptions& g, const A3Options& o, std::ostream& out, std::ostream& log);

/// Process exit code for a library error kind.
int exit_code_for(const std::exception& e);

} // namespace pcli::cli

#endif
