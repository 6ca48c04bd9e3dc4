#include <algorithm>
#include <cmath>
#include <string>

#include "pcli/economic.hpp"
#include "pcli/eigen.hpp"
#include "pcli/error.hpp"
#include "pcli/roots.hpp"
#include "pcli/schemes.hpp"

namespace pcli {
namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double radius_of(const std::vector<Complex>& roots) {
    double r = 0.0;
    for (const auto& z : roots) r = std::max(r, std::abs(z));
    return r;
}

} // namespace

Scheme synth_optimal_scalar(int p, double nu, const QuadraticObjective& q) {
    if (p < 1) throw Error(ErrorKind::DomainError, "p must be positive");
    check_nu_range(p, nu, q.L());
    const auto& eig = q.eigen();
    const std::size_t d = q.dim();
    const DenseMatrix& o = eig.eigenvectors;
    const DenseMatrix ot = o.transpose();
    Scheme s;
    s.p = static_cast<std::size_t>(p);
    s.d = d;
    s.name = "OptimalScalar";
    s.inversion = ScalarInversion{nu};
    for (int k = 0; k < p; ++k) {
        Vector diag(d);
        for (std::size_t j = 0; j < d; ++j) {
            const double t = std::pow(-nu * eig.eigenvalues[j], 1.0 / p) - 1.0;
            diag[j] = -binomial(p, k) * std::pow(t, p - k);
        }
        s.coeffs.push_back(ExplicitCoeff{o * DenseMatrix::diagonal(diag) * ot, o});
    }
    return s;
}

LinearSynthesisResult synth_linear(int p, double nu, double mu, double L, DegeneratePolicy policy) {
    if (p < 1) throw Error(ErrorKind::DomainError, "p must be positive");
    if (!(mu > 0.0) || !(L >= mu)) throw Error(ErrorKind::DomainError, "need 0 < mu <= L");
    check_nu_range(p, nu, L);
    const bool degenerate = L == mu;
    if (degenerate && policy == DegeneratePolicy::Reject)
        throw Error(ErrorKind::SingularFit, "mu == L leaves the endpoint fit underdetermined");
    const Polynomial em = economic_poly(-nu * mu, p);
    const Polynomial el = economic_poly(-nu * L, p);
    std::vector<double> a(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < a.size(); ++k) {
        // eta * a_k + b_k = -e_k(eta) at both endpoints.
        a[k] = degenerate ? nu / p : -(el[k] - em[k]) / (L - mu);
        b[k] = -em[k] - mu * a[k];
    }
    LinearSynthesisResult r;
    r.nu = nu;
    r.degenerate = degenerate;
    r.scheme.p = static_cast<std::size_t>(p);
    r.scheme.name = "Linear" + std::to_string(p);
    r.scheme.inversion = ScalarInversion{nu};
    for (std::size_t k = 0; k < a.size(); ++k) r.scheme.coeffs.push_back(LinearCoeff{a[k], b[k]});
    r.a_poly = Polynomial(a);
    r.b_poly = Polynomial(b);
    return r;
}

Polynomial q_eta(const Polynomial& a, const Polynomial& b, int p, double eta) {
    std::vector<double> c(static_cast<std::size_t>(p) + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -(eta * a[k] + b[k]);
    c.back() += 1.0;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> linear_polys(const Scheme& s) {
    if (!s.all_linear()) throw Error(ErrorKind::NotLinear, "scheme has non-linear coefficient specs");
    std::vector<double> a, b;
    for (const auto& c : s.coeffs) {
        a.push_back(std::get<LinearCoeff>(c).alpha);
        b.push_back(std::get<LinearCoeff>(c).beta);
    }
    return {Polynomial(std::move(a)), Polynomial(std::move(b))};
}

RhoCurve rho_curve(const Polynomial& a, const Polynomial& b, int p, double mu, double L, std::size_t samples) {
    if (samples < 2) throw Error(ErrorKind::DomainError, "need at least 2 samples");
    if (!(L > mu)) throw Error(ErrorKind::DomainError, "need mu < L");
    RhoCurve c;
    c.etas.resize(samples);
    c.rhos.resize(samples);
    std::vector<Complex> roots;
    for (std::size_t i = 0; i < samples; ++i) {
        const double eta = i + 1 == samples ? L : mu + (L - mu) * static_cast<double>(i) / static_cast<double>(samples - 1);
        const Polynomial poly = q_eta(a, b, p, eta);
        roots = roots.empty() ? poly_roots(poly) : detail::poly_roots_warm(poly, roots);
        c.etas[i] = eta;
        c.rhos[i] = radius_of(roots);
    }
    return c;
}

RhoCurve rho_curve(const Scheme& s, double mu, double L, std::size_t samples) {
    const auto [a, b] = linear_polys(s);
    return rho_curve(a, b, static_cast<int>(s.p), mu, L, samples);
}

RhoMax max_rho_over_interval(const Polynomial& a, const Polynomial& b, int p, double mu, double L, std::size_t grid) {
    if (!(L > mu)) {
        return {mu, spectral_radius_poly(q_eta(a, b, p, mu))};
    }
    const RhoCurve c = rho_curve(a, b, p, mu, L, std::max<std::size_t>(grid, 2));
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.rhos.size(); ++i)
        if (c.rhos[i] > c.rhos[best]) best = i;
    RhoMax out{c.etas[best], c.rhos[best]};
    double lo = c.etas[best == 0 ? 0 : best - 1];
    double hi = c.etas[std::min(best + 1, c.etas.size() - 1)];
    auto f = [&](double eta) { return spectral_radius_poly(q_eta(a, b, p, eta)); };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-13 * std::max(1.0, L); ++it) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    const double xm = f1 >= f2 ? x1 : x2;
    const double fm = std::max(f1, f2);
    if (fm > out.rho_star) out = {xm, fm};
    return out;
}

double validity_band(const Polynomial& a, const Polynomial& b, int p, double mu, double L, double level,
                     std::size_t grid) {
    if (!(L > mu) || grid < 2) throw Error(ErrorKind::DomainError, "need mu < L and grid >= 2");
    const double half = (L - mu) / 2.0;
    auto ok = [&](double eps) {
        return spectral_radius_poly(q_eta(a, b, p, mu + eps)) <= level &&
               spectral_radius_poly(q_eta(a, b, p, L - eps)) <= level;
    };
    if (!ok(0.0)) return 0.0;
    const double h = half / static_cast<double>(grid - 1);
    for (std::size_t i = 1; i < grid; ++i) {
        const double eps = i + 1 == grid ? half : h * static_cast<double>(i);
        if (ok(eps)) continue;
        double lo = h * static_cast<double>(i - 1), hi = eps;
        for (int it = 0; it < 60 && hi - lo > 1e-14 * L; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? lo : hi) = mid;
        }
        return lo;
    }
    return half;
}

std::vector<Vector> FirstOrderRule::run(const Gradient& grad, std::span<const double> x0, std::size_t iterations,
                                        InitialLift lift) const {
    const std::size_t p = b.size();
    std::vector<Vector> hist(p, Vector(x0.size(), 0.0));
    for (std::size_t k = 0; k < p; ++k)
        if (lift == InitialLift::Stacked || k + 1 == p) hist[k].assign(x0.begin(), x0.end());
    std::vector<Vector> grads(p);
    for (std::size_t k = 0; k < p; ++k) grads[k] = grad(hist[k]);
    std::vector<Vector> out{hist.back()};
    for (std::size_t t = 0; t < iterations; ++t) {
        Vector x(x0.size(), 0.0);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += b[k] * hist[k][i] + a[k] * grads[k][i];
        hist.erase(hist.begin());
        grads.erase(grads.begin());
        grads.push_back(grad(x));
        hist.push_back(std::move(x));
        out.push_back(hist.back());
    }
    return out;
}

FirstOrderRule first_order_extension(const Scheme& s) {
    if (!s.all_linear()) throw Error(ErrorKind::NotLinear, "scheme has non-linear coefficient specs");
    FirstOrderRule r;
    for (const auto& c : s.coeffs) {
        r.a.push_back(std::get<LinearCoeff>(c).alpha);
        r.b.push_back(std::get<LinearCoeff>(c).beta);
    }
    return r;
}

FirstOrderRule first_order_extension(const LinearSynthesisResult& r) { return first_order_extension(r.scheme); }

} // namespace pcli
