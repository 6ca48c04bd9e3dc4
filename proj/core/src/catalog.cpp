#include <array>
#include <cmath>

#include "pcli/error.hpp"
#include "pcli/schemes.hpp"

namespace pcli {
namespace {

constexpr std::array<std::string_view, 5> kNames{"FGD", "Newton", "HeavyBall", "AGD", "SCDExpected"};

const DenseMatrix& require_matrix(const DenseMatrix* a, std::string_view name) {
    if (!a) throw Error(ErrorKind::MissingMatrix, std::string(name) + " needs the matrix A");
    if (!a->square() || a->empty()) throw Error(ErrorKind::NotSquare, "A must be a nonempty square matrix");
    return *a;
}

} // namespace

std::span<const std::string_view> classic_names() noexcept { return kNames; }

Scheme classic_scheme(std::string_view name, double mu, double L, std::optional<std::size_t> d, const DenseMatrix* a) {
    if (!(mu > 0.0) || !(L >= mu) || !std::isfinite(L)) throw Error(ErrorKind::DomainError, "need 0 < mu <= L");
    Scheme s;
    s.name = std::string(name);
    s.d = d;
    const double sl = std::sqrt(L), sm = std::sqrt(mu);
    if (name == "FGD") {
        const double beta = 2.0 / (mu + L);
        s.p = 1;
        s.coeffs = {LinearCoeff{-beta, 1.0}};
        s.inversion = ScalarInversion{-beta};
    } else if (name == "HeavyBall") {
        const double alpha = 4.0 / ((sl + sm) * (sl + sm));
        const double r = (sl - sm) / (sl + sm);
        const double beta = r * r;
        s.p = 2;
        s.coeffs = {LinearCoeff{0.0, -beta}, LinearCoeff{-alpha, 1.0 + beta}};
        s.inversion = ScalarInversion{-alpha};
    } else if (name == "AGD") {
        const double alpha = (sl - sm) / (sl + sm);
        s.p = 2;
        s.coeffs = {LinearCoeff{alpha / L, -alpha}, LinearCoeff{-(1.0 + alpha) / L, 1.0 + alpha}};
        s.inversion = ScalarInversion{-1.0 / L};
    } else if (name == "Newton") {
        const DenseMatrix& m = require_matrix(a, name);
        s.p = 1;
        s.d = m.rows();
        s.coeffs = {LinearCoeff{0.0, 0.0}};
        s.inversion = ExplicitInversion{-1.0 * inverse(m)};
    } else if (name == "SCDExpected") {
        const DenseMatrix& m = require_matrix(a, name);
        const std::size_t n = m.rows();
        const double dn = static_cast<double>(n);
        DenseMatrix c = DenseMatrix::identity(n);
        Vector nu(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(m(i, i) > 0.0)) throw Error(ErrorKind::DomainError, "SCDExpected needs a positive diagonal");
            nu[i] = -1.0 / (dn * m(i, i));
            for (std::size_t j = 0; j < n; ++j) c(i, j) -= m(i, j) / (dn * m(i, i));
        }
        s.p = 1;
        s.d = n;
        s.coeffs = {ExplicitCoeff{std::move(c), std::nullopt}};
        s.inversion = DiagonalInversion{std::move(nu)};
    } else {
        throw Error(ErrorKind::BadName, "unknown scheme '" + std::string(name) + "'");
    }
    return s;
}

double nu_optimal(int p, double mu, double L) {
    if (p < 1 || !(mu > 0.0) || !(L >= mu)) throw Error(ErrorKind::DomainError, "need p >= 1 and 0 < mu <= L");
    const double inv = 1.0 / p;
    return -std::pow(2.0 / (std::pow(L, inv) + std::pow(mu, inv)), p);
}

void check_nu_range(int p, double nu, double L) {
    if (!(nu < 0.0))
        throw Error(ErrorKind::NuOutOfRange, "nu must be negative; nu >= 0 forces a spectral radius of at least 1");
    if (!(nu > -std::pow(2.0, p) / L))
        throw Error(ErrorKind::NuOutOfRange, "nu must exceed -2^p/L; below it the spectral radius is at least 1");
}

} // namespace pcli
