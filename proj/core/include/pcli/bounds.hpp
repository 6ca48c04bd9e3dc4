#ifndef PCLI_BOUNDS_HPP
#define PCLI_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pcli/matrix.hpp"
#include "pcli/polynomial.hpp"

namespace pcli {

/// (Q^{1/p} - 1) / (Q^{1/p} + 1).
double lower_bound_rho(double Q, int p);

/// Least spectral radius reachable with N(A) = nu I on a matrix whose
/// spectrum contains mu and L.
double scalar_inversion_lb(double nu, double mu, double L, int p);

/// [[(L+mu)/2, (L-mu)/2], [(L-mu)/2, (L+mu)/2]], spectrum {mu, L}.
DenseMatrix witness_matrix(double mu, double L);
/// The witness as the leading 2x2 block of a d x d matrix, padded with
/// eigenvalues (mu+L)/2 on the diagonal.
DenseMatrix embed_witness(double mu, double L, std::size_t d);

struct DiagEigPair {
    double lambda1 = 0.0;  // lambda1 >= lambda2
    double lambda2 = 0.0;
};

/// Eigenvalues of -diag(alpha, beta) * witness_matrix(mu, L), closed form.
DiagEigPair diag_inversion_eigs(double alpha, double beta, double mu, double L);

/// Largest economic bound over the eigenvalues r of -NA: |r^{1/p} - 1| for
/// r >= 0 and 1 for r < 0.
double economic_pair_bound(const DiagEigPair& eigs, int p);

/// True iff rho(q) <= | |q(1)|^{1/p} - 1 | + 1e-9 and q matches
/// economic_poly(|q(1)|, p) within 1e-7. Throws NotMonic, DomainError.
bool economic_optimality_check(const Polynomial& q, int p);

struct Counterexample {
    std::size_t trial = 0;
    Polynomial a;
    Polynomial b;
    double eta = 0.0;
    double max_rho = 0.0;
};

struct ConjectureReport {
    int p = 0;
    double mu = 0.0;
    double L = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double threshold = 0.0;
    double min_max_rho = 0.0;
    std::size_t argmin_trial = 0;
    double argmin_eta = 0.0;
    Polynomial argmin_a;
    Polynomial argmin_b;
    std::vector<Counterexample> counterexamples;  // sorted by trial

    std::string to_json() const;
};

/// Samples (a, b) with b(1) = 1 and records min over trials of
/// max_{eta in [mu, L]} rho(z^p - (eta a(z) + b(z))). Trial i draws from a
/// generator seeded by (seed, i) only, so the report does not depend on
/// `threads` (0 picks the hardware concurrency).
ConjectureReport conjecture_probe(int p, double mu, double L, std::size_t trials, std::uint64_t seed,
                                  unsigned threads = 0);

} // namespace pcli

#endif
