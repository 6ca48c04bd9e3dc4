#ifndef PCLI_OBJECTIVE_HPP
#define PCLI_OBJECTIVE_HPP

#include <cstddef>

#include "pcli/eigen.hpp"
#include "pcli/matrix.hpp"

namespace pcli {

/// f(x) = 1/2 x^T A x + b^T x with A symmetric and spec(A) within [mu, L].
class QuadraticObjective {
public:
    /// Throws NotSquare, NotSymmetric, DimensionMismatch, or DomainError when
    /// 0 < mu <= L fails or the spectrum leaves [mu, L] by more than 1e-9.
    QuadraticObjective(DenseMatrix a, Vector b, double mu, double L);

    /// mu and L taken as the extreme eigenvalues of A.
    static QuadraticObjective from_spectrum(DenseMatrix a, Vector b);
    /// b = -A 1, so the minimizer is the all-ones vector.
    static QuadraticObjective with_default_rhs(DenseMatrix a, double mu, double L);

    const DenseMatrix& A() const noexcept { return a_; }
    const Vector& b() const noexcept { return b_; }
    double mu() const noexcept { return mu_; }
    double L() const noexcept { return l_; }
    double Q() const noexcept { return l_ / mu_; }
    std::size_t dim() const noexcept { return a_.rows(); }
    const SymmetricEigen& eigen() const noexcept { return eig_; }

    /// -A^{-1} b.
    Vector minimizer() const;

private:
    DenseMatrix a_;
    Vector b_;
    double mu_;
    double l_;
    SymmetricEigen eig_;
};

} // namespace pcli

#endif
