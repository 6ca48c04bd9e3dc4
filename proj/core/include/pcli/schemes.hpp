#ifndef PCLI_SCHEMES_HPP
#define PCLI_SCHEMES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pcli/framework.hpp"
#include "pcli/objective.hpp"
#include "pcli/polynomial.hpp"
#include "pcli/scheme.hpp"

namespace pcli {

/// FGD, HeavyBall and AGD are dimension-free linear specs. Newton and
/// SCDExpected are built from `a` and throw MissingMatrix without it.
/// Throws BadName for any other name and DomainError unless 0 < mu <= L.
Scheme classic_scheme(std::string_view name, double mu, double L, std::optional<std::size_t> d = std::nullopt,
                      const DenseMatrix* a = nullptr);

/// Names accepted by classic_scheme.
std::span<const std::string_view> classic_names() noexcept;

/// -(2 / (L^{1/p} + mu^{1/p}))^p.
double nu_optimal(int p, double mu, double L);

/// Throws NuOutOfRange unless -2^p/L < nu < 0.
void check_nu_range(int p, double nu, double L);

/// C_k = O D_k O^T in the eigenbasis of A, each eigenvalue getting the
/// economic polynomial for r = -nu * eta_j.
Scheme synth_optimal_scalar(int p, double nu, const QuadraticObjective& q);

enum class DegeneratePolicy { Flag, Reject };

struct LinearSynthesisResult {
    Scheme scheme;
    Polynomial a_poly;
    Polynomial b_poly;
    double nu = 0.0;
    /// mu == L: only the single endpoint was fitted and a(z) = nu/p per degree.
    bool degenerate = false;
};

/// Linear coefficients C_k(A) = a_k A + b_k I with q(z, eta) = z^p - (eta a(z) + b(z))
/// equal to the economic polynomial for r = -nu * eta at eta = mu and eta = L.
LinearSynthesisResult synth_linear(int p, double nu, double mu, double L,
                                   DegeneratePolicy policy = DegeneratePolicy::Flag);

/// z^p - (eta a(z) + b(z)).
Polynomial q_eta(const Polynomial& a, const Polynomial& b, int p, double eta);

/// a(z) and b(z) of an all-linear scheme. Throws NotLinear.
std::pair<Polynomial, Polynomial> linear_polys(const Scheme& s);

struct RhoCurve {
    std::vector<double> etas;
    std::vector<double> rhos;
};

RhoCurve rho_curve(const Polynomial& a, const Polynomial& b, int p, double mu, double L, std::size_t samples);
RhoCurve rho_curve(const Scheme& s, double mu, double L, std::size_t samples);

struct RhoMax {
    double eta_star = 0.0;
    double rho_star = 0.0;
};

/// Grid scan plus golden-section refinement around the best cell; the first
/// (smallest) eta wins ties.
RhoMax max_rho_over_interval(const Polynomial& a, const Polynomial& b, int p, double mu, double L,
                             std::size_t grid = 2001);

/// Largest eps <= (L - mu)/2 with rho(q(z, eta)) <= level for every eta in
/// [mu, mu + eps] and [L - eps, L]: a grid scan from the endpoints inward,
/// then bisection on the first violating step. 0 when an endpoint violates.
double validity_band(const Polynomial& a, const Polynomial& b, int p, double mu, double L, double level,
                     std::size_t grid = 2001);

using Gradient = std::function<Vector(std::span<const double>)>;

/// x^t = sum_k b_k x^{t-p+k} + sum_k a_k grad f(x^{t-p+k}).
struct FirstOrderRule {
    std::vector<double> a;
    std::vector<double> b;

    /// Iterates x^0..x^K from a history filled per `lift`.
    std::vector<Vector> run(const Gradient& grad, std::span<const double> x0, std::size_t iterations,
                            InitialLift lift = InitialLift::Stacked) const;
};

FirstOrderRule first_order_extension(const LinearSynthesisResult& r);
FirstOrderRule first_order_extension(const Scheme& s);

} // namespace pcli

#endif
