#ifndef PCLI_FRAMEWORK_HPP
#define PCLI_FRAMEWORK_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pcli/eigen.hpp"
#include "pcli/objective.hpp"
#include "pcli/polynomial.hpp"
#include "pcli/scheme.hpp"

namespace pcli {

DenseMatrix coefficient_matrix(const CoefficientSpec& spec, const QuadraticObjective& q);
DenseMatrix inversion_matrix(const InversionSpec& spec, const QuadraticObjective& q);

/// pd x pd block companion matrix. Throws DimensionMismatch.
DenseMatrix assemble_iteration_matrix(const Scheme& s, const QuadraticObjective& q);
/// E_p N(A) b.
Vector free_summand(const Scheme& s, const QuadraticObjective& q);
/// max_abs(sum_k C_k(A) - I - N(A) A).
double consistency_residual(const Scheme& s, const QuadraticObjective& q);

/// Last block of (I - M)^{-1} v. Throws NotConvergent when rho(M) >= 1 - 1e-12.
Vector fixed_point(const Scheme& s, const QuadraticObjective& q);

/// One monic degree-p factor per eigenvalue of A; their roots are spec(M).
/// Throws NotTriangularizable when explicit specs lack a shared eigenbasis.
std::vector<Polynomial> char_factors(const Scheme& s, const QuadraticObjective& q);

/// Spectrum of M through char_factors, or through the dense oracle when the
/// scheme is not triangularizable in a declared basis.
SpectralReport scheme_spectral_radius(const Scheme& s, const QuadraticObjective& q);

enum class InitialLift {
    Stacked,  // z^0 = (x0, ..., x0)
    LastBlock // z^0 = (0, ..., 0, x0)
};

struct RunOptions {
    InitialLift lift = InitialLift::Stacked;
    bool keep_iterates = false;
};

struct Trajectory {
    /// errors[k] = ||x^k - x*||_2 for k = 0..K.
    std::vector<double> errors;
    std::vector<Vector> iterates;
    /// False when rho(M) >= 1; x* is then -A^{-1} b.
    bool convergent = true;
};

Trajectory run(const Scheme& s, const QuadraticObjective& q, std::span<const double> x0, std::size_t iterations,
               const RunOptions& options = {});

/// exp of the least-squares slope of ln(errors[k]) against k after dropping
/// errors below 1e-13 and then the first quarter of what remains.
/// Throws AllBelowFloor or InsufficientData (< 10 points).
double estimate_rate(std::span<const double> errors);
inline double estimate_rate(const Trajectory& t) { return estimate_rate(t.errors); }

/// Rank of [M^k E_p e_i] over k < p, i < d.
std::size_t reachability_rank(const Scheme& s, const QuadraticObjective& q);

struct ComplexityBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// (rho/(1-rho)) ln(1/eps) and (1/(1-rho)) ln(1/eps). Throws DomainError.
ComplexityBounds iteration_complexity_bounds(double rho, double eps);

} // namespace pcli

#endif
