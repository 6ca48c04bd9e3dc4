#ifndef PCLI_TESTS_ORACLES_HPP
#define PCLI_TESTS_ORACLES_HPP

// Independent reference routes built on Eigen. Nothing here calls into the
// library's numerics, so comparing against these keeps two routes apart.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pcli/matrix.hpp"
#include "pcli/polynomial.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Eigen::MatrixXd to_eigen(const pcli::DenseMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

inline pcli::DenseMatrix from_eigen(const Eigen::MatrixXd& m) {
    pcli::DenseMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

inline std::vector<Complex> eigenvalues(const pcli::DenseMatrix& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
    std::vector<Complex> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

inline std::vector<double> symmetric_eigenvalues(const pcli::DenseMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m), Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

inline double spectral_radius(const pcli::DenseMatrix& m) {
    double r = 0.0;
    for (const auto& z : eigenvalues(m)) r = std::max(r, std::abs(z));
    return r;
}

/// Roots through Eigen's eigensolver on the companion matrix. Multiple roots
/// come back scattered by ~eps^(1/m), so callers compare simple roots only.
inline std::vector<Complex> roots(const std::vector<double>& ascending) {
    const std::size_t n = ascending.size() - 1;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -ascending[i] / ascending[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<Complex> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

/// Expands prod (z - r_i) in complex arithmetic; ascending coefficients.
inline std::vector<Complex> expand(const std::vector<Complex>& rs) {
    std::vector<Complex> c{1.0};
    for (const auto& r : rs) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

/// Largest distance in a closest-pairs-first matching of two equal-size
/// multisets.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<char> used(b.size(), 0);
    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) pairs.push_back({std::abs(a[i] - b[j]), i, j});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.d < y.d; });
    std::vector<char> used_a(a.size(), 0);
    std::size_t matched = 0;
    for (const auto& p : pairs) {
        if (used_a[p.i] || used[p.j]) continue;
        used_a[p.i] = used[p.j] = 1;
        worst = std::max(worst, p.d);
        if (++matched == a.size()) break;
    }
    return worst;
}

inline std::vector<double> lu_solve(const pcli::DenseMatrix& a, const std::vector<double>& b) {
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd x = to_eigen(a).fullPivLu().solve(rhs);
    return {x.data(), x.data() + x.size()};
}

inline Eigen::MatrixXd random_orthogonal(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ();
}

/// Symmetric matrix with eigenvalues mu, L and d - 2 uniform draws between.
inline pcli::DenseMatrix random_spd(std::size_t d, double mu, double L, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(mu, L);
    Eigen::VectorXd lam(d);
    for (std::size_t i = 0; i < d; ++i) lam(i) = i == 0 ? mu : (i == 1 ? L : u(rng));
    const Eigen::MatrixXd o = random_orthogonal(d, rng);
    Eigen::MatrixXd a = o * lam.asDiagonal() * o.transpose();
    a = 0.5 * (a + a.transpose());
    return from_eigen(a);
}

/// Binomial-free expansion of (z - c)^p, ascending.
inline std::vector<double> power_of_linear(double c, int p) {
    std::vector<double> out{1.0};
    for (int k = 0; k < p; ++k) {
        std::vector<double> next(out.size() + 1, 0.0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i + 1] += out[i];
            next[i] -= c * out[i];
        }
        out = std::move(next);
    }
    return out;
}

} // namespace oracle

#endif
