#ifndef PCLI_CASES_HPP
#define PCLI_CASES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcli/eigen.hpp"
#include "pcli/framework.hpp"
#include "pcli/matrix.hpp"

namespace pcli {

/// Ridge instance with phi_i(y) = y^2 and x_i = 1/sqrt(n) * ones, for which
/// SDCA's expected update is alpha <- E alpha.
struct SdcaInstance {
    std::size_t n = 0;
    double lambda = 0.0;
    /// (1/(2n)) I + (1/(lambda n^2)) 11^T.
    DenseMatrix dual_matrix;
    /// (1/n) sum_i (I - e_i u_i^T).
    DenseMatrix expected_matrix;

    /// 2/(2 + lambda n): the off-position entries of u_i.
    double c() const noexcept;
    /// u_i: 1 at position i, c() elsewhere.
    Vector u(std::size_t i) const;
};

SdcaInstance sdca_instance(std::size_t n, double lambda);

/// 1 - 1/(2/lambda + n), multiplicity n - 1.
double sdca_bulk_eigenvalue(std::size_t n, double lambda);
/// lambda (n - 1)/(2 + lambda n), eigenvector 1.
double sdca_ones_eigenvalue(std::size_t n, double lambda);
/// (e_1 - e_2)/sqrt(2), a unit eigenvector for the bulk eigenvalue.
Vector sdca_bulk_vector(std::size_t n);

/// (2/lambda + n - 1) ln(1/eps). Throws DomainError unless 0 < eps <= 1.
double sdca_lower_bound_iters(std::size_t n, double lambda, double eps);

struct SdcaSimulation {
    /// E^k alpha^0 for k = 0..K.
    std::vector<Vector> exact;
    /// Sample mean of alpha^k over reps.
    std::vector<Vector> mean;
    /// Standard error of each mean coordinate.
    std::vector<Vector> std_error;

    std::vector<double> exact_norms() const;
    std::vector<double> mean_norms() const;
};

/// Samples coordinate sequences from alpha^0 = sdca_bulk_vector(n). Rep r
/// draws from a generator seeded by (seed, r); sums are formed in fixed
/// blocks so the result does not depend on `threads`.
SdcaSimulation sdca_simulate(std::size_t n, double lambda, std::size_t K, std::size_t reps, std::uint64_t seed,
                             unsigned threads = 0);

struct NesterovInstance {
    DenseMatrix A;  // (1/4) tridiag(-1, 2, -1)
    Vector b;       // -e_1
    Vector spectrum;  // (1/4)(2 - 2 cos(k pi/(d+1))), ascending
};

NesterovInstance nesterov_worst_case(std::size_t d);

/// Largest gap between consecutive entries of an ascending list.
double max_consecutive_gap(std::span<const double> sorted);

struct ExperimentRow {
    std::string scheme;
    /// First k with error < target (the run length when never reached).
    std::size_t iterations = 0;
    double final_error = 0.0;
    bool reached = false;
    std::vector<double> errors;
};

struct ExperimentTable {
    double target = 0.0;
    std::vector<ExperimentRow> rows;
};

/// mu = 2, L = 100, A = [[51, -49], [-49, 51]], b = -A (100, 100), x^0 = 0.
QuadraticObjective a3_objective();

/// Runs the synthesized 3-step scheme, Heavy Ball and AGD until the error
/// falls below `target` or `max_iterations` pass.
ExperimentTable a3_experiment(double target, InitialLift lift = InitialLift::LastBlock,
                              std::size_t max_iterations = 5000);

/// (n+1)d square expected SAG update matrix and its spectrum.
std::pair<DenseMatrix, SpectralReport> sag_expected_matrix(std::span<const DenseMatrix> a_list, double alpha);

} // namespace pcli

#endif
