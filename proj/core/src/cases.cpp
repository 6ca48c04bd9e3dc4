#include "pcli/cases.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "pcli/error.hpp"
#include "pcli/schemes.hpp"

namespace pcli {

double SdcaInstance::c() const noexcept { return 2.0 / (2.0 + lambda * static_cast<double>(n)); }

Vector SdcaInstance::u(std::size_t i) const {
    Vector v(n, c());
    v.at(i) = 1.0;
    return v;
}

SdcaInstance sdca_instance(std::size_t n, double lambda) {
    if (n < 2 || !(lambda > 0.0)) throw Error(ErrorKind::DomainError, "need n >= 2 and lambda > 0");
    SdcaInstance s;
    s.n = n;
    s.lambda = lambda;
    const double dn = static_cast<double>(n);
    s.dual_matrix = DenseMatrix(n, n, 1.0 / (lambda * dn * dn));
    for (std::size_t i = 0; i < n; ++i) s.dual_matrix(i, i) += 1.0 / (2.0 * dn);
    s.expected_matrix = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        DenseMatrix step = DenseMatrix::identity(n);
        const Vector ui = s.u(i);
        for (std::size_t j = 0; j < n; ++j) step(i, j) -= ui[j];
        s.expected_matrix += step;
    }
    s.expected_matrix *= 1.0 / dn;
    return s;
}

double sdca_bulk_eigenvalue(std::size_t n, double lambda) {
    return 1.0 - 1.0 / (2.0 / lambda + static_cast<double>(n));
}

double sdca_ones_eigenvalue(std::size_t n, double lambda) {
    const double dn = static_cast<double>(n);
    return lambda * (dn - 1.0) / (2.0 + lambda * dn);
}

Vector sdca_bulk_vector(std::size_t n) {
    Vector v(n, 0.0);
    v.at(0) = 1.0 / std::numbers::sqrt2;
    v.at(1) = -1.0 / std::numbers::sqrt2;
    return v;
}

double sdca_lower_bound_iters(std::size_t n, double lambda, double eps) {
    if (!(eps > 0.0 && eps <= 1.0) || !(lambda > 0.0)) throw Error(ErrorKind::DomainError, "need 0 < eps <= 1 and lambda > 0");
    return (2.0 / lambda + static_cast<double>(n) - 1.0) * std::log(1.0 / eps);
}

std::vector<double> SdcaSimulation::exact_norms() const {
    std::vector<double> out;
    for (const auto& v : exact) out.push_back(norm2(v));
    return out;
}

std::vector<double> SdcaSimulation::mean_norms() const {
    std::vector<double> out;
    for (const auto& v : mean) out.push_back(norm2(v));
    return out;
}

SdcaSimulation sdca_simulate(std::size_t n, double lambda, std::size_t K, std::size_t reps, std::uint64_t seed,
                             unsigned threads) {
    if (reps < 1) throw Error(ErrorKind::DomainError, "need at least one repetition");
    const SdcaInstance inst = sdca_instance(n, lambda);
    const double c = inst.c();
    const Vector alpha0 = sdca_bulk_vector(n);
    SdcaSimulation out;
    out.exact.push_back(alpha0);
    for (std::size_t k = 0; k < K; ++k) out.exact.push_back(inst.expected_matrix * out.exact.back());

    // Reps are split into a fixed number of contiguous blocks; each block's
    // sums are combined in block order afterwards. Sums are of deviations from
    // the exact expectation, so a step every replica shares is reproduced
    // exactly instead of through accumulated rounding.
    const std::size_t blocks = std::min<std::size_t>(16, reps);
    const std::size_t width = (K + 1) * n;
    std::vector<std::vector<double>> sum(blocks, std::vector<double>(width, 0.0));
    std::vector<std::vector<double>> sumsq(blocks, std::vector<double>(width, 0.0));
    auto run_block = [&](std::size_t blk) {
        const std::size_t begin = reps * blk / blocks, end = reps * (blk + 1) / blocks;
        auto& s = sum[blk];
        auto& s2 = sumsq[blk];
        Vector alpha(n);
        for (std::size_t r = begin; r < end; ++r) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) >> 32)};
            std::mt19937_64 gen(seq);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            alpha = alpha0;
            double total = 0.0;
            for (std::size_t k = 0;; ++k) {
                total = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double dev = alpha[i] - out.exact[k][i];
                    s[k * n + i] += dev;
                    s2[k * n + i] += dev * dev;
                    total += alpha[i];
                }
                if (k == K) break;
                const std::size_t z = pick(gen);
                // alpha_z <- alpha_z - u_z^T alpha = -c * sum_{j != z} alpha_j.
                alpha[z] = -c * (total - alpha[z]);
            }
        }
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) run_block(b);
    };
    unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, blocks));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const double dr = static_cast<double>(reps);
    out.mean.assign(K + 1, Vector(n, 0.0));
    out.std_error.assign(K + 1, Vector(n, 0.0));
    for (std::size_t k = 0; k <= K; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0, s2 = 0.0;
            for (std::size_t b = 0; b < blocks; ++b) {
                s += sum[b][k * n + i];
                s2 += sumsq[b][k * n + i];
            }
            const double m = s / dr;
            const double var = reps > 1 ? std::max(0.0, (s2 - dr * m * m) / (dr - 1.0)) : 0.0;
            out.mean[k][i] = out.exact[k][i] + m;
            out.std_error[k][i] = std::sqrt(var / dr);
        }
    return out;
}

NesterovInstance nesterov_worst_case(std::size_t d) {
    if (d < 2) throw Error(ErrorKind::DomainError, "need d >= 2");
    NesterovInstance inst;
    inst.A = DenseMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        inst.A(i, i) = 0.5;
        if (i + 1 < d) inst.A(i, i + 1) = inst.A(i + 1, i) = -0.25;
    }
    inst.b.assign(d, 0.0);
    inst.b[0] = -1.0;
    for (std::size_t k = 1; k <= d; ++k)
        inst.spectrum.push_back(0.25 * (2.0 - 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(d + 1))));
    return inst;
}

double max_consecutive_gap(std::span<const double> sorted) {
    double g = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) g = std::max(g, sorted[i] - sorted[i - 1]);
    return g;
}

QuadraticObjective a3_objective() {
    constexpr double mu = 2.0, L = 100.0;
    DenseMatrix a{{(mu + L) / 2.0, (mu - L) / 2.0}, {(mu - L) / 2.0, (mu + L) / 2.0}};
    Vector b = scaled(-1.0, a * Vector{100.0, 100.0});
    return QuadraticObjective(std::move(a), std::move(b), mu, L);
}

ExperimentTable a3_experiment(double target, InitialLift lift, std::size_t max_iterations) {
    if (!(target > 0.0 && target <= 1.0)) throw Error(ErrorKind::DomainError, "target must lie in (0, 1]");
    const QuadraticObjective q = a3_objective();
    Scheme a3 = synth_linear(3, nu_optimal(3, q.mu(), q.L()), q.mu(), q.L()).scheme;
    a3.name = "A3";
    const std::vector<Scheme> schemes{a3, classic_scheme("HeavyBall", q.mu(), q.L()), classic_scheme("AGD", q.mu(), q.L())};
    ExperimentTable table;
    table.target = target;
    const Vector x0(q.dim(), 0.0);
    for (const auto& s : schemes) {
        const Trajectory t = run(s, q, x0, max_iterations, RunOptions{lift, false});
        ExperimentRow row;
        row.scheme = s.name;
        const auto hit = std::find_if(t.errors.begin(), t.errors.end(), [&](double e) { return e < target; });
        row.reached = hit != t.errors.end();
        row.iterations = row.reached ? static_cast<std::size_t>(hit - t.errors.begin()) : t.errors.size() - 1;
        row.final_error = t.errors[row.iterations];
        row.errors.assign(t.errors.begin(), t.errors.begin() + static_cast<std::ptrdiff_t>(row.iterations) + 1);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::pair<DenseMatrix, SpectralReport> sag_expected_matrix(std::span<const DenseMatrix> a_list, double alpha) {
    if (a_list.empty()) throw Error(ErrorKind::DomainError, "need at least one matrix");
    const std::size_t n = a_list.size();
    const std::size_t d = a_list.front().rows();
    for (const auto& a : a_list)
        if (a.rows() != d || a.cols() != d) throw Error(ErrorKind::DimensionMismatch, "all matrices must be d x d");
    const double dn = static_cast<double>(n);
    DenseMatrix e((n + 1) * d, (n + 1) * d);
    DenseMatrix eye = DenseMatrix::identity(d);
    DenseMatrix corner = eye;
    for (std::size_t i = 0; i < n; ++i) {
        e.set_block(i * d, i * d, (1.0 - 1.0 / dn) * eye);
        e.set_block(i * d, n * d, (1.0 / dn) * a_list[i]);
        e.set_block(n * d, i * d, (-alpha / dn * (1.0 - 1.0 / dn)) * eye);
        corner -= (alpha / (dn * dn)) * a_list[i];
    }
    e.set_block(n * d, n * d, corner);
    SpectralReport rep = dense_spectrum(e);
    return {std::move(e), std::move(rep)};
}

} // namespace pcli
