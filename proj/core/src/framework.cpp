#include "pcli/framework.hpp"

#include <algorithm>
#include <cmath>

#include "pcli/error.hpp"
#include "pcli/roots.hpp"

namespace pcli {
namespace {

void check_dimensions(const Scheme& s, const QuadraticObjective& q) {
    s.validate();
    if (s.d && *s.d != q.dim()) throw Error(ErrorKind::DimensionMismatch, "scheme dimension differs from the objective's");
    for (const auto& c : s.coeffs)
        if (const auto* ex = std::get_if<ExplicitCoeff>(&c); ex && ex->matrix.rows() != q.dim())
            throw Error(ErrorKind::DimensionMismatch, "explicit coefficient size differs from the objective's");
    if (const auto* dg = std::get_if<DiagonalInversion>(&s.inversion); dg && dg->values.size() != q.dim())
        throw Error(ErrorKind::DimensionMismatch, "diagonal inversion length differs from the objective's");
    if (const auto* ex = std::get_if<ExplicitInversion>(&s.inversion); ex && ex->matrix.rows() != q.dim())
        throw Error(ErrorKind::DimensionMismatch, "explicit inversion size differs from the objective's");
}

// Per-eigenvalue diagonal entries of each C_k in a shared triangularizing basis.
std::vector<std::vector<double>> coefficient_eigenvalues(const Scheme& s, const QuadraticObjective& q) {
    const std::size_t d = q.dim();
    std::vector<std::vector<double>> eig(s.p, std::vector<double>(d));
    if (s.all_linear()) {
        const auto& eta = q.eigen().eigenvalues;
        for (std::size_t k = 0; k < s.p; ++k) {
            const auto& lin = std::get<LinearCoeff>(s.coeffs[k]);
            for (std::size_t j = 0; j < d; ++j) eig[k][j] = lin.alpha * eta[j] + lin.beta;
        }
        return eig;
    }
    const DenseMatrix* basis = nullptr;
    for (const auto& c : s.coeffs) {
        const auto* ex = std::get_if<ExplicitCoeff>(&c);
        if (!ex) continue;
        if (!ex->eigenbasis) throw Error(ErrorKind::NotTriangularizable, "explicit coefficient without a declared eigenbasis");
        if (!basis)
            basis = &*ex->eigenbasis;
        else if (max_abs(*basis - *ex->eigenbasis) > 1e-12)
            throw Error(ErrorKind::NotTriangularizable, "explicit coefficients declare different eigenbases");
    }
    const DenseMatrix ot = basis->transpose();
    for (std::size_t k = 0; k < s.p; ++k) {
        const DenseMatrix c = coefficient_matrix(s.coeffs[k], q);
        const DenseMatrix t = ot * c * *basis;
        const double tol = 1e-8 * std::max(1.0, max_abs(c));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (std::abs(t(i, j)) > tol)
                    throw Error(ErrorKind::NotTriangularizable, "declared eigenbasis does not triangularize a coefficient");
            eig[k][i] = t(i, i);
        }
    }
    return eig;
}

} // namespace

DenseMatrix coefficient_matrix(const CoefficientSpec& spec, const QuadraticObjective& q) {
    if (const auto* lin = std::get_if<LinearCoeff>(&spec)) {
        DenseMatrix c = lin->alpha * q.A();
        for (std::size_t i = 0; i < q.dim(); ++i) c(i, i) += lin->beta;
        return c;
    }
    return std::get<ExplicitCoeff>(spec).matrix;
}

DenseMatrix inversion_matrix(const InversionSpec& spec, const QuadraticObjective& q) {
    if (const auto* s = std::get_if<ScalarInversion>(&spec)) {
        DenseMatrix n = DenseMatrix::identity(q.dim());
        n *= s->nu;
        return n;
    }
    if (const auto* dg = std::get_if<DiagonalInversion>(&spec)) return DenseMatrix::diagonal(dg->values);
    return std::get<ExplicitInversion>(spec).matrix;
}

DenseMatrix assemble_iteration_matrix(const Scheme& s, const QuadraticObjective& q) {
    check_dimensions(s, q);
    const std::size_t d = q.dim();
    const std::size_t p = s.p;
    DenseMatrix m(p * d, p * d);
    const DenseMatrix eye = DenseMatrix::identity(d);
    for (std::size_t i = 0; i + 1 < p; ++i) m.set_block(i * d, (i + 1) * d, eye);
    for (std::size_t k = 0; k < p; ++k) m.set_block((p - 1) * d, k * d, coefficient_matrix(s.coeffs[k], q));
    return m;
}

Vector free_summand(const Scheme& s, const QuadraticObjective& q) {
    check_dimensions(s, q);
    const std::size_t d = q.dim();
    Vector v(s.p * d, 0.0);
    const Vector nb = inversion_matrix(s.inversion, q) * q.b();
    std::copy(nb.begin(), nb.end(), v.begin() + static_cast<std::ptrdiff_t>((s.p - 1) * d));
    return v;
}

double consistency_residual(const Scheme& s, const QuadraticObjective& q) {
    check_dimensions(s, q);
    const std::size_t d = q.dim();
    DenseMatrix sum(d, d);
    for (const auto& c : s.coeffs) sum += coefficient_matrix(c, q);
    const DenseMatrix target = DenseMatrix::identity(d) + inversion_matrix(s.inversion, q) * q.A();
    return max_abs(sum - target);
}

Vector fixed_point(const Scheme& s, const QuadraticObjective& q) {
    const SpectralReport rep = scheme_spectral_radius(s, q);
    if (rep.spectral_radius >= 1.0 - 1e-12)
        throw Error(ErrorKind::NotConvergent, "spectral radius of the iteration matrix is not below 1");
    const DenseMatrix m = assemble_iteration_matrix(s, q);
    const Vector z = solve(DenseMatrix::identity(m.rows()) - m, free_summand(s, q));
    const std::size_t d = q.dim();
    return Vector(z.end() - static_cast<std::ptrdiff_t>(d), z.end());
}

std::vector<Polynomial> char_factors(const Scheme& s, const QuadraticObjective& q) {
    check_dimensions(s, q);
    const auto eig = coefficient_eigenvalues(s, q);
    std::vector<Polynomial> out;
    out.reserve(q.dim());
    for (std::size_t j = 0; j < q.dim(); ++j) {
        std::vector<double> c(s.p + 1);
        for (std::size_t k = 0; k < s.p; ++k) c[k] = -eig[k][j];
        c[s.p] = 1.0;
        out.emplace_back(std::move(c));
    }
    return out;
}

SpectralReport scheme_spectral_radius(const Scheme& s, const QuadraticObjective& q) {
    std::vector<Polynomial> factors;
    try {
        factors = char_factors(s, q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTriangularizable) throw;
        return dense_spectrum(assemble_iteration_matrix(s, q));
    }
    std::vector<std::vector<Complex>> roots;
    roots.reserve(factors.size());
    double rho = 0.0;
    for (const auto& f : factors) {
        roots.push_back(poly_roots(f));
        for (const auto& z : roots.back()) rho = std::max(rho, std::abs(z));
    }
    // Distinct factors sharing a root contribute separate Jordan blocks, so
    // the index proxy is taken per factor.
    std::size_t index = 1;
    const double scale = std::max(1.0, rho);
    for (const auto& r : roots) {
        std::vector<Complex> top;
        for (const auto& z : r)
            if (std::abs(z) >= rho - 1e-6 * scale) top.push_back(z);
        if (!top.empty()) index = std::max(index, max_index_of(top));
    }
    SpectralReport rep;
    for (auto& r : roots) rep.eigenvalues.insert(rep.eigenvalues.end(), r.begin(), r.end());
    rep.spectral_radius = rho;
    rep.max_index = index;
    return rep;
}

Trajectory run(const Scheme& s, const QuadraticObjective& q, std::span<const double> x0, std::size_t iterations,
               const RunOptions& options) {
    const std::size_t d = q.dim();
    if (x0.size() != d) throw Error(ErrorKind::DimensionMismatch, "x0 length differs from the objective's dimension");
    const DenseMatrix m = assemble_iteration_matrix(s, q);
    const Vector v = free_summand(s, q);
    Trajectory t;
    Vector target;
    try {
        target = fixed_point(s, q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotConvergent && e.kind() != ErrorKind::SingularSystem) throw;
        t.convergent = false;
        target = q.minimizer();
    }
    Vector z(s.p * d, 0.0);
    for (std::size_t blk = 0; blk < s.p; ++blk)
        if (options.lift == InitialLift::Stacked || blk + 1 == s.p)
            std::copy(x0.begin(), x0.end(), z.begin() + static_cast<std::ptrdiff_t>(blk * d));
    auto record = [&] {
        const std::span<const double> x(z.data() + (s.p - 1) * d, d);
        const double err = norm2(subtract(x, target));
        if (!std::isfinite(err)) return false;
        t.errors.push_back(err);
        if (options.keep_iterates) t.iterates.emplace_back(x.begin(), x.end());
        return true;
    };
    record();
    for (std::size_t k = 0; k < iterations; ++k) {
        Vector next = m * z;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += v[i];
        z = std::move(next);
        if (!record()) break;  // overflow on a divergent run ends the trajectory
    }
    return t;
}

double estimate_rate(std::span<const double> errors) {
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < errors.size(); ++k)
        if (std::isfinite(errors[k]) && errors[k] >= 1e-13) kept.push_back(k);
    if (kept.empty()) throw Error(ErrorKind::AllBelowFloor, "every error is below 1e-13");
    kept.erase(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(kept.size() / 4));
    if (kept.size() < 10) throw Error(ErrorKind::InsufficientData, "fewer than 10 usable errors");
    double sx = 0.0, sy = 0.0;
    for (std::size_t k : kept) {
        sx += static_cast<double>(k);
        sy += std::log(errors[k]);
    }
    const double n = static_cast<double>(kept.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k : kept) {
        const double dx = static_cast<double>(k) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(errors[k]) - my);
    }
    return std::exp(sxy / sxx);
}

std::size_t reachability_rank(const Scheme& s, const QuadraticObjective& q) {
    const DenseMatrix m = assemble_iteration_matrix(s, q);
    const std::size_t d = q.dim();
    const std::size_t n = s.p * d;
    DenseMatrix k(n, n);
    for (std::size_t i = 0; i < d; ++i) {
        Vector col(n, 0.0);
        col[(s.p - 1) * d + i] = 1.0;
        for (std::size_t pow = 0; pow < s.p; ++pow) {
            for (std::size_t r = 0; r < n; ++r) k(r, pow * d + i) = col[r];
            col = m * col;
        }
    }
    return numerical_rank(k, 1e-10);
}

ComplexityBounds iteration_complexity_bounds(double rho, double eps) {
    if (!(rho > 0.0 && rho < 1.0) || !(eps > 0.0 && eps < 1.0))
        throw Error(ErrorKind::DomainError, "need 0 < rho < 1 and 0 < eps < 1");
    const double log_term = std::log(1.0 / eps);
    return {rho / (1.0 - rho) * log_term, log_term / (1.0 - rho)};
}

} // namespace pcli
