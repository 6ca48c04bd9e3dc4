#include "pcli/objective.hpp"

#include <cmath>

#include "pcli/error.hpp"

namespace pcli {

QuadraticObjective::QuadraticObjective(DenseMatrix a, Vector b, double mu, double L)
    : a_(std::move(a)), b_(std::move(b)), mu_(mu), l_(L) {
    if (!a_.square() || a_.empty()) throw Error(ErrorKind::NotSquare, "A must be a nonempty square matrix");
    if (b_.size() != a_.rows()) throw Error(ErrorKind::DimensionMismatch, "b must have one entry per row of A");
    if (!(mu_ > 0.0) || !(l_ >= mu_) || !std::isfinite(l_))
        throw Error(ErrorKind::DomainError, "need 0 < mu <= L");
    eig_ = symmetric_eigen(a_);
    const double slack = 1e-9 * std::max(1.0, l_);
    if (eig_.eigenvalues.front() < mu_ - slack || eig_.eigenvalues.back() > l_ + slack)
        throw Error(ErrorKind::DomainError, "spectrum of A leaves [mu, L]");
}

QuadraticObjective QuadraticObjective::from_spectrum(DenseMatrix a, Vector b) {
    const SymmetricEigen e = symmetric_eigen(a);
    return QuadraticObjective(std::move(a), std::move(b), e.eigenvalues.front(), e.eigenvalues.back());
}

QuadraticObjective QuadraticObjective::with_default_rhs(DenseMatrix a, double mu, double L) {
    const Vector ones(a.cols(), 1.0);
    Vector b = scaled(-1.0, a * ones);
    return QuadraticObjective(std::move(a), std::move(b), mu, L);
}

Vector QuadraticObjective::minimizer() const { return scaled(-1.0, solve(a_, b_)); }

} // namespace pcli
