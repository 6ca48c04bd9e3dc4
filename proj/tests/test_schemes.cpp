#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pcli/economic.hpp"
#include "pcli/error.hpp"
#include "pcli/framework.hpp"
#include "pcli/roots.hpp"
#include "pcli/schemes.hpp"
#include "support/oracles.hpp"

using namespace pcli;

namespace {

// Independent route for the endpoint fit: the full 2p x 2p system in
// (a_0..a_{p-1}, b_0..b_{p-1}) solved by LU.
std::pair<std::vector<double>, std::vector<double>> fit_by_lu(int p, double nu, double mu, double L) {
    const std::size_t n = static_cast<std::size_t>(p);
    pcli::DenseMatrix m(2 * n, 2 * n);
    std::vector<double> rhs(2 * n);
    const auto emu = oracle::power_of_linear(1.0 - std::pow(-nu * mu, 1.0 / p), p);
    const auto eL = oracle::power_of_linear(1.0 - std::pow(-nu * L, 1.0 / p), p);
    for (std::size_t k = 0; k < n; ++k) {
        // z^p - (eta a(z) + b(z)) has coefficient -(eta a_k + b_k) at z^k.
        m(k, k) = mu;
        m(k, n + k) = 1.0;
        rhs[k] = -emu[k];
        m(n + k, k) = L;
        m(n + k, n + k) = 1.0;
        rhs[n + k] = -eL[k];
    }
    const auto x = oracle::lu_solve(m, rhs);
    return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

std::vector<double> coeff_vec(const Polynomial& p, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p[k];
    return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

std::vector<double> alphas(const Scheme& s) {
    std::vector<double> out;
    for (const auto& c : s.coeffs) out.push_back(std::get<LinearCoeff>(c).alpha);
    return out;
}

std::vector<double> betas(const Scheme& s) {
    std::vector<double> out;
    for (const auto& c : s.coeffs) out.push_back(std::get<LinearCoeff>(c).beta);
    return out;
}

} // namespace

TEST(Catalog, HeavyBallCoefficients) {
    const Scheme s = classic_scheme("HeavyBall", 1.0, 4.0);
    EXPECT_LE(max_diff(alphas(s), {0.0, -4.0 / 9.0}), 1e-15);
    EXPECT_LE(max_diff(betas(s), {-1.0 / 9.0, 10.0 / 9.0}), 1e-15);
    EXPECT_NEAR(std::get<ScalarInversion>(s.inversion).nu, -4.0 / 9.0, 1e-15);
}

TEST(Catalog, AgdCoefficients) {
    const Scheme s = classic_scheme("AGD", 1.0, 4.0);
    EXPECT_LE(max_diff(alphas(s), {1.0 / 12.0, -1.0 / 3.0}), 1e-15);
    EXPECT_LE(max_diff(betas(s), {-1.0 / 3.0, 4.0 / 3.0}), 1e-15);
    EXPECT_NEAR(std::get<ScalarInversion>(s.inversion).nu, -0.25, 1e-15);
}

TEST(Catalog, FgdCoefficients) {
    const Scheme s = classic_scheme("FGD", 1.0, 3.0);
    EXPECT_EQ(s.p, 1u);
    EXPECT_NEAR(std::get<LinearCoeff>(s.coeffs[0]).alpha, -0.5, 1e-15);
    EXPECT_EQ(std::get<LinearCoeff>(s.coeffs[0]).beta, 1.0);
    EXPECT_NEAR(std::get<ScalarInversion>(s.inversion).nu, -0.5, 1e-15);
}

TEST(Catalog, Errors) {
    try {
        classic_scheme("CG", 1.0, 2.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadName);
    }
    for (auto name : {"Newton", "SCDExpected"}) {
        try {
            classic_scheme(name, 1.0, 2.0);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::MissingMatrix);
        }
    }
    EXPECT_THROW(classic_scheme("FGD", 2.0, 1.0), Error);
}

TEST(Catalog, ScdExpectedIsJacobiAverage) {
    const DenseMatrix a{{4.0, 1.0}, {1.0, 2.0}};
    const Scheme s = classic_scheme("SCDExpected", 1.0, 5.0, 2, &a);
    const QuadraticObjective q(a, {1.0, 1.0}, 1.0, 5.0);
    const DenseMatrix expected{{1.0 - 0.5, -1.0 / 8.0}, {-1.0 / 4.0, 1.0 - 0.5}};
    EXPECT_LE(max_abs(assemble_iteration_matrix(s, q) - expected), 1e-15);
    EXPECT_LE(consistency_residual(s, q), 1e-15);
}

TEST(NuOptimal, Examples) {
    EXPECT_NEAR(nu_optimal(1, 1.0, 3.0), -0.5, 1e-15);
    EXPECT_NEAR(nu_optimal(2, 1.0, 4.0), -4.0 / 9.0, 1e-15);
    EXPECT_NEAR(nu_optimal(3, 2.0, 100.0), -0.038922485956317317, 1e-15);
    EXPECT_NEAR(nu_optimal(3, 2.0, 100.0), -0.0389, 5e-5);
    EXPECT_THROW(nu_optimal(0, 1.0, 2.0), Error);
}

TEST(NuRange, Guard) {
    EXPECT_NO_THROW(check_nu_range(2, -0.1, 4.0));
    for (double nu : {0.0, 0.1, -1.0, -2.0}) {
        try {
            check_nu_range(2, nu, 4.0);
            FAIL() << nu;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NuOutOfRange);
        }
    }
}

TEST(SynthOptimalScalar, HeavyBallRadius) {
    const QuadraticObjective q(DenseMatrix::diagonal(std::vector<double>{1.0, 4.0}), {0.0, 0.0}, 1.0, 4.0);
    const Scheme s = synth_optimal_scalar(2, nu_optimal(2, 1.0, 4.0), q);
    EXPECT_NEAR(scheme_spectral_radius(s, q).spectral_radius, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(oracle::spectral_radius(assemble_iteration_matrix(s, q)), 1.0 / 3.0, 1e-7);
}

TEST(SynthOptimalScalar, OneStepIsFgd) {
    const DenseMatrix a{{2.0, 0.5}, {0.5, 2.5}};
    const QuadraticObjective q = QuadraticObjective::from_spectrum(a, {1.0, 1.0});
    const double nu = -2.0 / (q.mu() + q.L());
    const Scheme s = synth_optimal_scalar(1, nu, q);
    EXPECT_LE(max_abs(assemble_iteration_matrix(s, q) - (DenseMatrix::identity(2) + nu * a)), 1e-14);
}

TEST(SynthOptimalScalar, ThreeStepRadius) {
    const QuadraticObjective q(DenseMatrix::diagonal(std::vector<double>{2.0, 100.0}), {0.0, 0.0}, 2.0, 100.0);
    const Scheme s = synth_optimal_scalar(3, nu_optimal(3, 2.0, 100.0), q);
    const auto rep = scheme_spectral_radius(s, q);
    const double c = std::cbrt(50.0);
    EXPECT_NEAR(rep.spectral_radius, (c - 1.0) / (c + 1.0), 1e-9);
    EXPECT_NEAR(rep.spectral_radius, 0.57301738884964132, 1e-9);
    EXPECT_NEAR(dense_spectrum(assemble_iteration_matrix(s, q)).spectral_radius, 0.57301738884964132, 1e-7);
}

TEST(SynthOptimalScalar, RejectsOutOfRangeNu) {
    const QuadraticObjective q(DenseMatrix::diagonal(std::vector<double>{1.0, 4.0}), {0.0, 0.0}, 1.0, 4.0);
    EXPECT_THROW(synth_optimal_scalar(2, 0.1, q), Error);
}

TEST(SynthOptimalScalar, RadiusFormulaMatchesDenseOracle) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ul(2.0, 80.0), frac(0.1, 0.9);
    for (int trial = 0; trial < 60; ++trial) {
        const int p = 1 + trial % 4;
        const std::size_t d = 1 + trial % 6;
        const double L = ul(rng);
        const DenseMatrix a = oracle::random_spd(d, 1.0, L, rng);
        const QuadraticObjective q(a, Vector(d, 0.0), 1.0, L);
        const double nu = -frac(rng) * std::pow(2.0, p) / L;
        const Scheme s = synth_optimal_scalar(p, nu, q);
        double formula = 0.0;
        for (double eta : oracle::symmetric_eigenvalues(a))
            formula = std::max(formula, std::abs(std::pow(-nu * eta, 1.0 / p) - 1.0));
        EXPECT_NEAR(scheme_spectral_radius(s, q).spectral_radius, formula, 1e-8);
        // The dense route sees an m-fold root as scattered by ~eps^(1/m).
        EXPECT_NEAR(dense_spectrum(assemble_iteration_matrix(s, q)).spectral_radius, formula, 1e-8);
        for (const auto& f : char_factors(s, q)) EXPECT_LE(coeff_distance(f, economic_poly(f(1.0), p)), 1e-10);
    }
}

TEST(SynthLinear, RecoversAgd) {
    const auto r = synth_linear(2, -0.25, 1.0, 4.0);
    EXPECT_LE(max_diff(coeff_vec(r.a_poly, 2), {1.0 / 12.0, -1.0 / 3.0}), 1e-14);
    EXPECT_LE(max_diff(coeff_vec(r.b_poly, 2), {-1.0 / 3.0, 4.0 / 3.0}), 1e-14);
}

TEST(SynthLinear, RecoversHeavyBall) {
    const auto r = synth_linear(2, nu_optimal(2, 1.0, 4.0), 1.0, 4.0);
    EXPECT_LE(max_diff(coeff_vec(r.a_poly, 2), {0.0, -4.0 / 9.0}), 1e-14);
    EXPECT_LE(max_diff(coeff_vec(r.b_poly, 2), {-1.0 / 9.0, 10.0 / 9.0}), 1e-14);
}

TEST(SynthLinear, ThreeStepCoefficients) {
    const auto r = synth_linear(3, nu_optimal(3, 2.0, 100.0), 2.0, 100.0);
    // High-precision reference values.
    EXPECT_NEAR(r.a_poly[0], -0.0038397886798086641, 1e-14);
    EXPECT_NEAR(r.a_poly[1], 0.0, 1e-14);
    EXPECT_NEAR(r.a_poly[2], -0.035082697276508652, 1e-14);
    EXPECT_NEAR(r.b_poly[0], 0.19582922267024187, 1e-13);
    EXPECT_NEAR(r.b_poly[1], -0.98504678377218315, 1e-13);
    EXPECT_NEAR(r.b_poly[2], 1.7892175611019413, 1e-13);
    // Four-decimal rounded values.
    EXPECT_NEAR(r.b_poly[0], 0.1958, 5e-3);
    EXPECT_NEAR(r.a_poly[0], -0.0038, 5e-3);
    EXPECT_NEAR(r.b_poly[1], -0.9850, 5e-3);
    EXPECT_NEAR(r.b_poly[2], 1.7892, 5e-3);
    EXPECT_NEAR(r.a_poly[2], -0.0351, 5e-3);
    EXPECT_NEAR(r.nu, -0.0389, 5e-3);
}

TEST(SynthLinear, MatchesFullLuSolve) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> um(0.1, 10.0), uq(1.5, 1e3), frac(0.05, 0.95);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 1 + trial % 6;
        const double mu = um(rng), L = mu * uq(rng);
        const double nu = -frac(rng) * std::pow(2.0, p) / L;
        const auto r = synth_linear(p, nu, mu, L);
        const auto [a_ref, b_ref] = fit_by_lu(p, nu, mu, L);
        const std::size_t n = static_cast<std::size_t>(p);
        EXPECT_LE(max_diff(coeff_vec(r.a_poly, n), a_ref), 1e-10 / mu) << "trial " << trial;
        EXPECT_LE(max_diff(coeff_vec(r.b_poly, n), b_ref), 1e-10 * std::pow(2.0, p)) << "trial " << trial;
    }
}

TEST(SynthLinear, ResultInvariants) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> um(0.1, 10.0), uq(1.5, 1e3), frac(0.05, 0.95);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 1 + trial % 5;
        const double mu = um(rng), L = mu * uq(rng);
        const double nu = -frac(rng) * std::pow(2.0, p) / L;
        const auto r = synth_linear(p, nu, mu, L);
        EXPECT_NEAR(r.b_poly(1.0), 1.0, 1e-12);
        EXPECT_NEAR(r.a_poly(1.0), nu, 1e-12);
        EXPECT_FALSE(r.degenerate);
        EXPECT_TRUE(r.scheme.all_linear());
        const Polynomial qmu = q_eta(r.a_poly, r.b_poly, p, mu), qL = q_eta(r.a_poly, r.b_poly, p, L);
        EXPECT_LE(coeff_distance(qmu, economic_poly(-nu * mu, p)), 1e-10 * std::pow(2.0, p));
        EXPECT_LE(coeff_distance(qL, economic_poly(-nu * L, p)), 1e-10 * std::pow(2.0, p));
        EXPECT_NEAR(spectral_radius_poly(qmu), std::abs(std::pow(-nu * mu, 1.0 / p) - 1.0), 1e-9);
        EXPECT_NEAR(spectral_radius_poly(qL), std::abs(std::pow(-nu * L, 1.0 / p) - 1.0), 1e-9);
        // q(z, eta) is the convex combination of its endpoint fits.
        const double eta = mu + (L - mu) * frac(rng);
        const double theta = (L - eta) / (L - mu);
        const Polynomial mix = theta * qmu + (1.0 - theta) * qL;
        EXPECT_LE(coeff_distance(q_eta(r.a_poly, r.b_poly, p, eta), mix), 1e-12 * std::max(1.0, mix.max_abs_coeff()));
    }
}

TEST(SynthLinear, DegenerateInterval) {
    const auto r = synth_linear(3, -0.5, 2.0, 2.0);
    EXPECT_TRUE(r.degenerate);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(r.a_poly[k], -0.5 / 3.0, 1e-15);
    EXPECT_LE(coeff_distance(q_eta(r.a_poly, r.b_poly, 3, 2.0), economic_poly(1.0, 3)), 1e-14);
    try {
        synth_linear(3, -0.5, 2.0, 2.0, DegeneratePolicy::Reject);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularFit);
    }
}

TEST(SynthLinear, RejectsOutOfRangeNu) {
    try {
        synth_linear(2, -1.5, 1.0, 4.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NuOutOfRange);
    }
}

TEST(SynthLinear, ClassicRoundTrip) {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> um(0.01, 10.0), uq(1.5, 1e4);
    for (int trial = 0; trial < 50; ++trial) {
        const double mu = um(rng), L = mu * uq(rng);
        const auto agd = synth_linear(2, -1.0 / L, mu, L);
        const Scheme ca = classic_scheme("AGD", mu, L);
        EXPECT_LE(max_diff(alphas(agd.scheme), alphas(ca)), 1e-12);
        EXPECT_LE(max_diff(betas(agd.scheme), betas(ca)), 1e-12);
        const auto hb = synth_linear(2, nu_optimal(2, mu, L), mu, L);
        const Scheme ch = classic_scheme("HeavyBall", mu, L);
        EXPECT_LE(max_diff(alphas(hb.scheme), alphas(ch)), 1e-12);
        EXPECT_LE(max_diff(betas(hb.scheme), betas(ch)), 1e-12);
    }
}

TEST(LinearPolys, RejectsExplicit) {
    const DenseMatrix a{{2.0, 0.0}, {0.0, 3.0}};
    try {
        linear_polys(classic_scheme("SCDExpected", 1.0, 3.0, 2, &a));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotLinear);
    }
}

TEST(RhoCurve, Fgd) {
    const auto c = rho_curve(classic_scheme("FGD", 1.0, 3.0), 1.0, 3.0, 201);
    ASSERT_EQ(c.etas.size(), 201u);
    EXPECT_EQ(c.etas.front(), 1.0);
    EXPECT_EQ(c.etas.back(), 3.0);
    for (std::size_t i = 0; i < c.etas.size(); ++i) {
        EXPECT_NEAR(c.rhos[i], std::abs(1.0 - 0.5 * c.etas[i]), 1e-15);
        if (i) {
            EXPECT_GT(c.etas[i], c.etas[i - 1]);
        }
    }
    EXPECT_NEAR(c.rhos[100], 0.0, 1e-15);
}

TEST(RhoCurve, AgdEndpoints) {
    const auto c = rho_curve(classic_scheme("AGD", 1.0, 4.0), 1.0, 4.0, 101);
    EXPECT_NEAR(c.rhos.front(), 0.5, 1e-12);
    EXPECT_NEAR(c.rhos.back(), 0.0, 1e-12);
}

TEST(RhoCurve, HeavyBallFlat) {
    const auto c = rho_curve(classic_scheme("HeavyBall", 1.0, 4.0), 1.0, 4.0, 101);
    EXPECT_NEAR(c.rhos.front(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(c.rhos.back(), 1.0 / 3.0, 1e-12);
    for (double r : c.rhos) EXPECT_LE(r, 1.0 / 3.0 + 1e-9);
}

TEST(RhoCurve, WarmStartAgreesWithColdRoots) {
    const auto r = synth_linear(3, nu_optimal(3, 2.0, 100.0), 2.0, 100.0);
    const auto c = rho_curve(r.a_poly, r.b_poly, 3, 2.0, 100.0, 301);
    // The endpoints are triple roots, which the companion oracle only resolves
    // to ~eps^(1/3); there the closed form is the reference.
    const double nu = nu_optimal(3, 2.0, 100.0);
    EXPECT_NEAR(c.rhos.front(), std::abs(std::cbrt(-nu * 2.0) - 1.0), 1e-12);
    EXPECT_NEAR(c.rhos.back(), std::abs(std::cbrt(-nu * 100.0) - 1.0), 1e-12);
    for (std::size_t i = 7; i + 1 < c.etas.size(); i += 7) {
        const Polynomial q = q_eta(r.a_poly, r.b_poly, 3, c.etas[i]);
        const auto coeffs = q.coeffs();
        double ref = 0.0;
        for (const auto& z : oracle::roots(std::vector<double>(coeffs.begin(), coeffs.end())))
            ref = std::max(ref, std::abs(z));
        EXPECT_NEAR(c.rhos[i], ref, 1e-6) << c.etas[i];
    }
}

TEST(RhoCurve, RejectsBadInput) {
    EXPECT_THROW(rho_curve(classic_scheme("FGD", 1.0, 3.0), 1.0, 3.0, 1), Error);
}

TEST(MaxRho, Examples) {
    const auto hb = classic_scheme("HeavyBall", 1.0, 4.0);
    const auto [ah, bh] = linear_polys(hb);
    EXPECT_NEAR(max_rho_over_interval(ah, bh, 2, 1.0, 4.0).rho_star, 1.0 / 3.0, 1e-6);

    const auto [af, bf] = linear_polys(classic_scheme("FGD", 1.0, 3.0));
    const auto m = max_rho_over_interval(af, bf, 1, 1.0, 3.0);
    EXPECT_NEAR(m.rho_star, 0.5, 1e-12);
    EXPECT_EQ(m.eta_star, 1.0);

    // b(1) = 1.6 breaks consistency: q(1, mu) = 1 + 4/9 - 1.6 < 0, so some
    // root lies beyond 1.
    const Polynomial b_broken({-1.0 / 9.0, 10.0 / 9.0 + 0.6});
    EXPECT_GE(max_rho_over_interval(ah, b_broken, 2, 1.0, 4.0).rho_star, 1.0);
}

TEST(MaxRho, AgreesWithDenseGridMaximum) {
    const auto r = synth_linear(3, nu_optimal(3, 2.0, 100.0), 2.0, 100.0);
    const auto m = max_rho_over_interval(r.a_poly, r.b_poly, 3, 2.0, 100.0);
    double grid_max = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double eta = 2.0 + 98.0 * i / 20000.0;
        grid_max = std::max(grid_max, spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, eta)));
    }
    EXPECT_GE(m.rho_star, grid_max - 1e-9);
    EXPECT_LE(m.rho_star, grid_max + 1e-6);
    EXPECT_NEAR(m.rho_star, spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, m.eta_star)), 1e-12);
}

TEST(MaxRho, TwoStepInteriorBounds) {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> um(0.1, 10.0), uq(1.5, 1e4);
    for (int trial = 0; trial < 50; ++trial) {
        const double mu = um(rng), L = mu * uq(rng);
        const double sq = std::sqrt(L / mu);
        const auto [aa, ba] = linear_polys(classic_scheme("AGD", mu, L));
        EXPECT_LE(max_rho_over_interval(aa, ba, 2, mu, L).rho_star, 1.0 - std::sqrt(mu / L) + 1e-9);
        const auto [ah, bh] = linear_polys(classic_scheme("HeavyBall", mu, L));
        EXPECT_LE(max_rho_over_interval(ah, bh, 2, mu, L).rho_star, (sq - 1.0) / (sq + 1.0) + 1e-9);
    }
}

TEST(ValidityBand, ThreeStepScheme) {
    const double mu = 2.0, L = 100.0;
    const auto r = synth_linear(3, nu_optimal(3, mu, L), mu, L);
    const double c = std::cbrt(L / mu);
    const double bound = (c - 1.0) / (c + 1.0);
    // The cube-root level holds only at the endpoints themselves: the radius
    // rises immediately inside [mu, L].
    EXPECT_GT(spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, mu + 0.01)), bound + 1e-3);
    EXPECT_GT(spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, L - 0.01)), bound + 1e-3);
    EXPECT_LT(validity_band(r.a_poly, r.b_poly, 3, mu, L, bound + 1e-6), 0.01);
    // Against the two-step optimum the band is a few units wide.
    const double s = std::sqrt(L / mu);
    const double band = validity_band(r.a_poly, r.b_poly, 3, mu, L, (s - 1.0) / (s + 1.0));
    EXPECT_GT(band, 1.5);
    EXPECT_LT(band, 3.5);
    for (double eps : {0.0, band * 0.5, band * 0.999}) {
        EXPECT_LE(spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, mu + eps)), (s - 1.0) / (s + 1.0) + 1e-9);
        EXPECT_LE(spectral_radius_poly(q_eta(r.a_poly, r.b_poly, 3, L - eps)), (s - 1.0) / (s + 1.0) + 1e-9);
    }
}

TEST(FirstOrderExtension, MatchesRunOnQuadratics) {
    const DenseMatrix a = DenseMatrix::diagonal(std::vector<double>{1.0, 4.0});
    const QuadraticObjective q(a, {-1.0, -4.0}, 1.0, 4.0);
    const Gradient grad = [&](std::span<const double> x) { return axpy(1.0, a * x, q.b()); };
    const Vector x0{3.0, -2.0};
    for (auto name : {"AGD", "HeavyBall", "FGD"}) {
        const Scheme s = classic_scheme(name, 1.0, 4.0);
        for (auto lift : {InitialLift::Stacked, InitialLift::LastBlock}) {
            const auto traj = run(s, q, x0, 40, pcli::RunOptions{lift, true});
            const auto xs = first_order_extension(s).run(grad, x0, 40, lift);
            ASSERT_EQ(xs.size(), traj.iterates.size());
            for (std::size_t k = 0; k < xs.size(); ++k)
                EXPECT_LE(norm2(subtract(xs[k], traj.iterates[k])), 1e-10) << name << " k=" << k;
        }
    }
}

TEST(FirstOrderExtension, FgdIsGradientStep) {
    const FirstOrderRule rule = first_order_extension(classic_scheme("FGD", 1.0, 3.0));
    ASSERT_EQ(rule.a.size(), 1u);
    EXPECT_NEAR(rule.a[0], -0.5, 1e-15);
    EXPECT_EQ(rule.b[0], 1.0);
    const Gradient grad = [](std::span<const double> x) { return Vector{2.0 * x[0]}; };
    const auto xs = rule.run(grad, Vector{1.0}, 2);
    EXPECT_NEAR(xs[1][0], 1.0 - 0.5 * 2.0, 1e-15);
}

TEST(FirstOrderExtension, SynthesisResultOverload) {
    const auto r = synth_linear(3, -0.03, 2.0, 100.0);
    const FirstOrderRule rule = first_order_extension(r);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(rule.a[k], r.a_poly[k]);
        EXPECT_EQ(rule.b[k], r.b_poly[k]);
    }
}
