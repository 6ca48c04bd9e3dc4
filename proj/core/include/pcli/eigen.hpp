#ifndef PCLI_EIGEN_HPP
#define PCLI_EIGEN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pcli/matrix.hpp"
#include "pcli/polynomial.hpp"

namespace pcli {

/// A = O diag(eigenvalues) O^T with eigenvalues ascending and O orthogonal.
struct SymmetricEigen {
    std::vector<double> eigenvalues;
    DenseMatrix eigenvectors;
};

struct SpectralReport {
    std::vector<Complex> eigenvalues;
    double spectral_radius = 0.0;
    /// Size of the largest group of coincident max-modulus eigenvalues; a
    /// proxy for the Jordan index of the dominant eigenvalue.
    std::size_t max_index = 1;
};

/// Cyclic Jacobi. Throws NotSquare, NotSymmetric, DidNotConverge.
SymmetricEigen symmetric_eigen(const DenseMatrix& a);

/// Eigenvalues of a general real matrix: balancing, Hessenberg reduction,
/// Francis double-shift QR. Throws NotSquare, DidNotConverge.
SpectralReport dense_spectrum(const DenseMatrix& m);

/// Builds a report (radius and index proxy) from an eigenvalue multiset.
SpectralReport make_report(std::vector<Complex> eigenvalues);

/// Largest number of eigenvalues among those of modulus within `rel_tol` of
/// the radius that lie within `rel_tol * max(1, radius)` of one another.
std::size_t max_index_of(std::span<const Complex> eigenvalues, double rel_tol = 1e-6);

} // namespace pcli

#endif
