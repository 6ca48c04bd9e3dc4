#include "pcli/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

#include <json.hpp>

#include "pcli/economic.hpp"
#include "pcli/error.hpp"
#include "pcli/roots.hpp"
#include "pcli/schemes.hpp"

namespace pcli {

double lower_bound_rho(double Q, int p) {
    if (!(Q >= 1.0) || p < 1) throw Error(ErrorKind::DomainError, "need Q >= 1 and p >= 1");
    const double r = std::pow(Q, 1.0 / p);
    return (r - 1.0) / (r + 1.0);
}

double scalar_inversion_lb(double nu, double mu, double L, int p) {
    if (!(L > mu && mu > 0.0) || p < 1) throw Error(ErrorKind::DomainError, "need 0 < mu < L and p >= 1");
    const double inv = 1.0 / p;
    if (nu >= 0.0) return 1.0;
    if (nu <= -std::pow(2.0, p) / L) return 1.0;
    const double low = 1.0 - std::pow(-nu * mu, inv);
    const double high = std::pow(-nu * L, inv) - 1.0;
    if (nu >= -1.0 / L) return low;
    if (nu > -1.0 / mu) return std::max(high, low);
    return high;
}

DenseMatrix witness_matrix(double mu, double L) {
    const double s = (L + mu) / 2.0, t = (L - mu) / 2.0;
    return DenseMatrix{{s, t}, {t, s}};
}

DenseMatrix embed_witness(double mu, double L, std::size_t d) {
    if (d < 2) throw Error(ErrorKind::DomainError, "the witness needs d >= 2");
    DenseMatrix b = DenseMatrix::identity(d);
    b *= (mu + L) / 2.0;
    b.set_block(0, 0, witness_matrix(mu, L));
    return b;
}

DiagEigPair diag_inversion_eigs(double alpha, double beta, double mu, double L) {
    const double m = -(alpha + beta) * (L + mu) / 4.0;
    const double s = std::sqrt((alpha + beta) * (alpha + beta) * (L - mu) * (L - mu) / 16.0 +
                               (alpha - beta) * (alpha - beta) * L * mu / 4.0);
    const double big = m >= 0.0 ? m + s : m - s;
    // The smaller root from the product alpha*beta*L*mu avoids cancellation.
    const double other = big != 0.0 ? alpha * beta * L * mu / big : 0.0;
    return {std::max(big, other), std::min(big, other)};
}

double economic_pair_bound(const DiagEigPair& eigs, int p) {
    auto g = [p](double r) { return r >= 0.0 ? std::abs(std::pow(r, 1.0 / p) - 1.0) : 1.0; };
    return std::max(g(eigs.lambda1), g(eigs.lambda2));
}

bool economic_optimality_check(const Polynomial& q, int p) {
    if (p < 1 || q.degree() != static_cast<std::size_t>(p) || !q.is_monic())
        throw Error(ErrorKind::NotMonic, "expected a monic polynomial of degree p");
    const double r = std::abs(q(1.0));
    const double bound = std::abs(std::pow(r, 1.0 / p) - 1.0);
    if (spectral_radius_poly(q) > bound + 1e-9) return false;
    return coeff_distance(q, economic_poly(r, p)) <= 1e-7;
}

namespace {

constexpr double kCounterexampleTol = 1e-9;

// Max of rho over the grid with refinement, or nothing once some grid value
// exceeds `prune` (then the trial can neither be the minimum nor a counterexample).
std::optional<RhoMax> bounded_max(const Polynomial& a, const Polynomial& b, int p, double mu, double L, double prune) {
    auto rho = [&](double eta) { return spectral_radius_poly(q_eta(a, b, p, eta)); };
    if (rho(mu) > prune || rho(L) > prune) return std::nullopt;
    constexpr std::size_t grid = 2001;
    std::vector<Complex> roots;
    for (std::size_t i = 1; i + 1 < grid; ++i) {
        const double eta = mu + (L - mu) * static_cast<double>(i) / static_cast<double>(grid - 1);
        const Polynomial poly = q_eta(a, b, p, eta);
        roots = roots.empty() ? poly_roots(poly) : detail::poly_roots_warm(poly, roots);
        double r = 0.0;
        for (const auto& z : roots) r = std::max(r, std::abs(z));
        if (r > prune) return std::nullopt;
    }
    return max_rho_over_interval(a, b, p, mu, L, grid);
}

void normalize_b(std::vector<double>& b) {
    double sum = 0.0;
    for (double v : b) sum += v;
    const double shift = (sum - 1.0) / static_cast<double>(b.size());
    for (double& v : b) v -= shift;
}

struct Draw {
    Polynomial a;
    Polynomial b;
};

// Trials 0 and 1 are the endpoint fits at nu_optimal and -1/L; later trials
// cycle through a uniform draw and Gaussian perturbations of the nu_optimal
// fit at three noise levels.
Draw draw_trial(std::size_t i, int p, double mu, double L, std::uint64_t seed, const LinearSynthesisResult& opt) {
    if (i == 0) return {opt.a_poly, opt.b_poly};
    if (i == 1) {
        const auto fit = synth_linear(p, -1.0 / L, mu, L);
        return {fit.a_poly, fit.b_poly};
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
    std::mt19937_64 gen(seq);
    const std::size_t n = static_cast<std::size_t>(p);
    std::vector<double> a(n), b(n);
    const std::size_t kind = (i - 2) % 4;
    if (kind == 0) {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (auto& v : a) v = u(gen);
        for (auto& v : b) v = u(gen);
    } else {
        const double sigma = std::pow(10.0, -static_cast<double>(4 - kind));
        std::normal_distribution<double> g(0.0, 1.0);
        // a(z) is scaled by eta ~ L, so its noise is scaled by 1/L.
        for (std::size_t k = 0; k < n; ++k) a[k] = opt.a_poly[k] + sigma / L * g(gen);
        for (std::size_t k = 0; k < n; ++k) b[k] = opt.b_poly[k] + sigma * g(gen);
    }
    normalize_b(b);
    return {Polynomial(a), Polynomial(b)};
}

nlohmann::json coeffs_json(const Polynomial& poly) {
    return nlohmann::json(std::vector<double>(poly.coeffs().begin(), poly.coeffs().end()));
}

} // namespace

ConjectureReport conjecture_probe(int p, double mu, double L, std::size_t trials, std::uint64_t seed, unsigned threads) {
    if (p < 2) throw Error(ErrorKind::DomainError, "the conjecture concerns p >= 2");
    if (!(L > mu && mu > 0.0)) throw Error(ErrorKind::DomainError, "need 0 < mu < L");
    if (trials < 1) throw Error(ErrorKind::DomainError, "need at least one trial");
    ConjectureReport rep;
    rep.p = p;
    rep.mu = mu;
    rep.L = L;
    rep.trials = trials;
    rep.seed = seed;
    const double sq = std::sqrt(L / mu);
    rep.threshold = (sq - 1.0) / (sq + 1.0);

    const auto opt = synth_linear(p, nu_optimal(p, mu, L), mu, L);
    std::vector<Draw> draws(trials);
    std::vector<std::optional<RhoMax>> results(trials);
    draws[0] = draw_trial(0, p, mu, L, seed, opt);
    results[0] = max_rho_over_interval(draws[0].a, draws[0].b, p, mu, L);
    const double prune = std::max(results[0]->rho_star, rep.threshold);

    std::atomic<std::size_t> next{1};
    auto worker = [&] {
        for (std::size_t i = next++; i < trials; i = next++) {
            draws[i] = draw_trial(i, p, mu, L, seed, opt);
            results[i] = bounded_max(draws[i].a, draws[i].b, p, mu, L, prune);
        }
    };
    unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, trials));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    rep.argmin_trial = 0;
    for (std::size_t i = 1; i < trials; ++i)
        if (results[i] && results[i]->rho_star < results[rep.argmin_trial]->rho_star) rep.argmin_trial = i;
    const RhoMax& best = *results[rep.argmin_trial];
    rep.min_max_rho = best.rho_star;
    rep.argmin_eta = best.eta_star;
    rep.argmin_a = draws[rep.argmin_trial].a;
    rep.argmin_b = draws[rep.argmin_trial].b;
    for (std::size_t i = 0; i < trials; ++i) {
        if (!results[i] || results[i]->rho_star >= rep.threshold - kCounterexampleTol) continue;
        const RhoMax fine = max_rho_over_interval(draws[i].a, draws[i].b, p, mu, L, 20001);
        if (fine.rho_star < rep.threshold - kCounterexampleTol)
            rep.counterexamples.push_back({i, draws[i].a, draws[i].b, fine.eta_star, fine.rho_star});
    }
    return rep;
}

std::string ConjectureReport::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["mu"] = mu;
    j["L"] = L;
    j["trials"] = trials;
    j["seed"] = seed;
    j["threshold"] = threshold;
    j["min_max_rho"] = min_max_rho;
    j["argmin_trial"] = argmin_trial;
    j["argmin_eta"] = argmin_eta;
    j["argmin_a"] = coeffs_json(argmin_a);
    j["argmin_b"] = coeffs_json(argmin_b);
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : counterexamples)
        j["counterexamples"].push_back({{"trial", c.trial},
                                        {"a", coeffs_json(c.a)},
                                        {"b", coeffs_json(c.b)},
                                        {"eta", c.eta},
                                        {"max_rho", c.max_rho}});
    return j.dump(2);
}

} // namespace pcli
