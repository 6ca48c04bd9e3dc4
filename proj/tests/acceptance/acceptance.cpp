// Runs the ten acceptance checks and prints one PASS/FAIL line for each.
// Exit status is the number of failed checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "pcli/bounds.hpp"
#include "pcli/cases.hpp"
#include "pcli/economic.hpp"
#include "pcli/framework.hpp"
#include "pcli/roots.hpp"
#include "pcli/schemes.hpp"
#include "support/oracles.hpp"
#include "support/random_schemes.hpp"

using namespace pcli;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.pass) o.detail = what;
    o.pass = o.pass && ok;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double max_coeff_diff(const Scheme& a, const Scheme& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.p; ++k) {
        const auto& x = std::get<LinearCoeff>(a.coeffs[k]);
        const auto& y = std::get<LinearCoeff>(b.coeffs[k]);
        d = std::max({d, std::abs(x.alpha - y.alpha), std::abs(x.beta - y.beta)});
    }
    return d;
}

Outcome agd_hb_recovery() {
    Outcome o;
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> um(0.01, 100.0), lq(std::log(1.5), std::log(1e4));
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double mu = um(rng), L = mu * std::exp(lq(rng));
        worst = std::max(worst, max_coeff_diff(synth_linear(2, -1.0 / L, mu, L).scheme, classic_scheme("AGD", mu, L)));
        worst = std::max(worst, max_coeff_diff(synth_linear(2, nu_optimal(2, mu, L), mu, L).scheme,
                                               classic_scheme("HeavyBall", mu, L)));
    }
    require(o, worst <= 1e-12, "coefficient gap " + fmt(worst));
    o.detail = o.pass ? "max coefficient gap " + fmt(worst) : o.detail;
    return o;
}

Outcome a3_regression() {
    Outcome o;
    const auto r = synth_linear(3, nu_optimal(3, 2.0, 100.0), 2.0, 100.0);
    const double got[] = {r.b_poly[0], r.a_poly[0], r.b_poly[1], r.b_poly[2], r.a_poly[2], r.nu};
    const double want[] = {0.1958, -0.0038, -0.9850, 1.7892, -0.0351, -0.0389};
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    require(o, worst <= 5e-3, "max deviation " + fmt(worst));
    require(o, std::abs(r.a_poly[1]) <= 5e-3, "a_1 = " + fmt(r.a_poly[1]));
    if (o.pass) o.detail = "max deviation from rounded values " + fmt(worst);
    return o;
}

Outcome a3_reproduction() {
    Outcome o;
    const auto t = a3_experiment(1e-6);
    const std::size_t lo[] = {32, 64, 112}, hi[] = {48, 96, 168};
    std::string counts;
    for (int i = 0; i < 3; ++i) {
        const auto& row = t.rows[i];
        counts += row.scheme + "=" + std::to_string(row.iterations) + " ";
        require(o, row.reached && row.iterations >= lo[i] && row.iterations <= hi[i], row.scheme + " out of band");
    }
    if (o.pass) o.detail = counts;
    return o;
}

Outcome lower_bound_suite() {
    Outcome o;
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> lq(std::log(1.5), std::log(1e4)), frac(0.01, 1.2);
    double min_slack = 1e300, worst_tight = 0.0;
    std::size_t schemes = 0;
    for (int p = 1; p <= 4; ++p) {
        for (int trial = 0; trial < 200; ++trial) {
            const double mu = 1.0, L = std::exp(lq(rng));
            const double bound = lower_bound_rho(L / mu, p);
            const QuadraticObjective q(witness_matrix(mu, L), {0.0, 0.0}, mu, L);
            std::vector<Scheme> batch;
            if (trial % 2 == 0) {
                batch.push_back(testgen::random_linear_scheme(p, -frac(rng) * std::pow(2.0, p) / L, rng));
            } else {
                std::uniform_real_distribution<double> u(-1.2 * std::pow(2.0, p) / L, 0.0);
                batch.push_back(testgen::random_diagonal_scheme(p, u(rng), u(rng), q.A(), rng));
            }
            if (trial < 10)
                for (auto name : {"FGD", "HeavyBall", "AGD", "SCDExpected"}) {
                    Scheme s = classic_scheme(name, mu, L, 2, &q.A());
                    if (static_cast<int>(s.p) == p) batch.push_back(std::move(s));
                }
            for (const auto& s : batch) {
                min_slack = std::min(min_slack, scheme_spectral_radius(s, q).spectral_radius - bound);
                ++schemes;
            }
            const Scheme opt = synth_optimal_scalar(p, nu_optimal(p, mu, L), q);
            worst_tight = std::max(worst_tight, std::abs(scheme_spectral_radius(opt, q).spectral_radius - bound));
        }
    }
    require(o, min_slack >= -1e-9, "rho below bound by " + fmt(-min_slack));
    require(o, worst_tight <= 1e-9, "optimal pairing misses bound by " + fmt(worst_tight));
    if (o.pass)
        o.detail = std::to_string(schemes) + " schemes, min slack " + fmt(min_slack) + ", tightness gap " + fmt(worst_tight);
    return o;
}

Outcome economic_suite() {
    Outcome o;
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::normal_distribution<double> g;
    std::size_t checked = 0;
    for (int p = 1; p <= 5; ++p) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> c(p + 1);
            for (auto& v : c) v = u(rng);
            c[p] = 1.0;
            const Polynomial q(c);
            const double r = q(1.0), rho = spectral_radius_poly(q);
            if (r >= 0.0) {
                const double bound = std::abs(std::pow(r, 1.0 / p) - 1.0);
                require(o, rho >= bound - 1e-9, "bound violated at p=" + std::to_string(p));
                if (rho <= bound + 1e-9)
                    require(o, coeff_distance(q, economic_poly(r, p)) <= 1e-9, "equality away from economic poly");
            } else {
                require(o, rho > 1.0 - 1e-9, "negative value with radius below 1");
            }
            // Equality case and its uniqueness under value-preserving perturbation.
            const double rr = std::abs(r);
            const Polynomial e = economic_poly(rr, p);
            require(o, std::abs(spectral_radius_poly(e) - std::abs(std::pow(rr, 1.0 / p) - 1.0)) <= 1e-9,
                    "economic polynomial misses its radius");
            if (p >= 2) {
                std::vector<double> ec(e.coeffs().begin(), e.coeffs().end());
                const double eps = 1e-3 * g(rng);
                ec[0] += eps;
                ec[1] -= eps;
                require(o, spectral_radius_poly(Polynomial(ec)) > std::abs(std::pow(rr, 1.0 / p) - 1.0) + 1e-9,
                        "perturbed economic polynomial attains the bound");
            }
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " polynomials";
    return o;
}

Outcome spectrum_oracle() {
    Outcome o;
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> ul(2.0, 100.0), frac(0.05, 0.95);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + trial % 6;
        const int p = 1 + (trial / 6) % 4;
        const double L = ul(rng);
        const QuadraticObjective q(oracle::random_spd(d, 1.0, L, rng), Vector(d, 0.0), 1.0, L);
        const Scheme s = trial % 2 ? testgen::random_triangular_scheme(p, q, rng)
                                   : testgen::random_linear_scheme(p, -frac(rng) * std::pow(2.0, p) / L, rng);
        std::vector<Complex> roots;
        for (const auto& f : char_factors(s, q))
            for (const auto& z : poly_roots(f)) roots.push_back(z);
        const auto dense = dense_spectrum(assemble_iteration_matrix(s, q)).eigenvalues;
        worst = std::max(worst, oracle::multiset_distance(roots, dense));
    }
    require(o, worst <= 1e-7, "max distance " + fmt(worst));
    if (o.pass) o.detail = "max multiset distance " + fmt(worst);
    return o;
}

Outcome sdca_tightness() {
    Outcome o;
    double worst_eig = 0.0;
    for (std::size_t n : {2u, 3u, 10u, 50u}) {
        for (double lambda : {0.01, 1.0, 100.0}) {
            const auto inst = sdca_instance(n, lambda);
            std::vector<Complex> expected(n - 1, sdca_bulk_eigenvalue(n, lambda));
            expected.emplace_back(sdca_ones_eigenvalue(n, lambda));
            worst_eig = std::max(worst_eig, oracle::multiset_distance(dense_spectrum(inst.expected_matrix).eigenvalues,
                                                                      expected));
            const auto sim = sdca_simulate(n, lambda, 1000, 1, 0, 1);
            const auto exact = sim.exact_norms();
            for (std::size_t k = 0; k <= 1000; ++k)
                require(o, exact[k] >= std::exp(-static_cast<double>(k) / (2.0 / lambda + n - 1.0)) * (1.0 - 1e-12),
                        "decay bound fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    require(o, worst_eig <= 1e-10, "eigenvalue gap " + fmt(worst_eig));
    const auto sim = sdca_simulate(3, 1.0, 40, 10000, 42);
    double worst_z = 0.0;
    for (std::size_t k = 1; k <= 40; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            worst_z = std::max(worst_z, std::abs(sim.mean[k][i] - sim.exact[k][i]) / sim.std_error[k][i]);
    require(o, worst_z <= 5.0, "sample mean " + fmt(worst_z) + " sigma from exact");
    if (o.pass) o.detail = "eigen gap " + fmt(worst_eig) + ", worst mean deviation " + fmt(worst_z) + " sigma";
    return o;
}

Outcome rate_fidelity() {
    Outcome o;
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> ul(10.0, 200.0);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 5;
        const double L = ul(rng);
        const DenseMatrix a = oracle::random_spd(d, 1.0, L, rng);
        Vector b(d), x0(d);
        for (auto& v : b) v = g(rng);
        for (auto& v : x0) v = g(rng);
        // Tuning constants strictly outside spec(A): no Jordan blocks at the top.
        const QuadraticObjective q(a, b, 0.9, 1.1 * L);
        for (auto name : {"FGD", "AGD", "HeavyBall"}) {
            const Scheme s = classic_scheme(name, q.mu(), q.L());
            const double est = estimate_rate(run(s, q, x0, 400));
            worst = std::max(worst, std::abs(est - scheme_spectral_radius(s, q).spectral_radius));
        }
    }
    require(o, worst <= 0.01, "rate gap " + fmt(worst));
    if (o.pass) o.detail = "max |estimate - rho| " + fmt(worst);
    return o;
}

Outcome conjecture() {
    Outcome o;
    const auto one = conjecture_probe(3, 1.0, 100.0, 10000, 42, 1);
    const auto many = conjecture_probe(3, 1.0, 100.0, 10000, 42, 4);
    require(o, one.counterexamples.empty(), std::to_string(one.counterexamples.size()) + " counterexamples");
    require(o, one.min_max_rho >= one.threshold - 1e-9, "minimum below threshold");
    require(o, one.to_json() == many.to_json(), "report differs between 1 and 4 threads");
    if (o.pass) o.detail = "min max rho " + fmt(one.min_max_rho) + " vs threshold " + fmt(one.threshold);
    return o;
}

Outcome nesterov_spectrum() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t d = 2; d <= 128; ++d) {
        const auto inst = nesterov_worst_case(d);
        const auto numeric = symmetric_eigen(inst.A).eigenvalues;
        for (std::size_t k = 0; k < d; ++k) worst = std::max(worst, std::abs(numeric[k] - inst.spectrum[k]));
    }
    require(o, worst <= 1e-10, "spectrum gap " + fmt(worst));
    double prev = 1e300;
    std::string gaps;
    for (std::size_t d : {4u, 8u, 16u, 32u, 64u, 128u}) {
        const double gap = max_consecutive_gap(nesterov_worst_case(d).spectrum);
        require(o, gap < prev, "gap does not shrink at d=" + std::to_string(d));
        prev = gap;
        gaps += fmt(gap) + " ";
    }
    if (o.pass) o.detail = "spectrum gap " + fmt(worst) + ", max gaps " + gaps;
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; 0 means none
    std::function<Outcome()> check;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "AGD/HB recovery", 1.0, agd_hb_recovery},
        {2, "A3 coefficient regression", 0.0, a3_regression},
        {3, "A3 vs HB vs AGD iteration counts", 1.0, a3_reproduction},
        {4, "lower-bound suite", 10.0, lower_bound_suite},
        {5, "economic-polynomial properties", 5.0, economic_suite},
        {6, "spectrum oracle equivalence", 0.0, spectrum_oracle},
        {7, "SDCA tightness", 10.0, sdca_tightness},
        {8, "rate-estimation fidelity", 0.0, rate_fidelity},
        {9, "conjecture probe", 0.0, conjecture},
        {10, "Nesterov spectrum", 0.0, nesterov_spectrum},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0.0 && secs >= c.time_limit) {
            o.pass = false;
            o.detail = "took " + fmt(secs) + " s, limit " + fmt(c.time_limit) + " s; " + o.detail;
        }
        std::printf("%s  %2d  %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed;
}
