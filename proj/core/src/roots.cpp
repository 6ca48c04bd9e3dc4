#include "pcli/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "pcli/eigen.hpp"
#include "pcli/error.hpp"

namespace pcli {
namespace {

constexpr int kMaxIterations = 500;
constexpr double kStepTol = 1e-13;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative size of the Taylor coefficients below which a cluster of m roots
// is accepted as one root of multiplicity m.
constexpr double kClusterAcceptTol = 1e-11;

struct Horner {
    Complex value;
    Complex slope;
    double bound;  // rounding-error bound on value
};

Horner horner(std::span<const Complex> c, Complex z) {
    const double az = std::abs(z);
    Complex v = c.back();
    Complex d(0.0);
    double b = std::abs(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        d = d * z + v;
        v = v * z + c[k];
        b = b * az + std::abs(c[k]);
    }
    return {v, d, 4.0 * static_cast<double>(c.size()) * kEps * b};
}

std::vector<Complex> circle_guesses(std::span<const Complex> c) {
    const std::size_t n = c.size() - 1;
    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k] / c[n]));
    const double radius = 1.0 + bound;
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7);
    return z;
}

// Spreads coincident starting points; Aberth divides by pairwise differences.
void separate(std::vector<Complex>& z) {
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(z[i] - z[j]) <= 1e-9 * (1.0 + std::abs(z[i])))
                z[i] += std::polar(1e-6 * (1.0 + std::abs(z[i])), 2.0 + static_cast<double>(i));
}

// Aberth–Ehrlich iteration on coefficients with c.back() != 0 and c[0] != 0.
bool aberth(std::span<const Complex> c, std::vector<Complex>& z) {
    const std::size_t n = z.size();
    std::vector<char> done(n, 0);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const Horner h = horner(c, z[i]);
            if (std::abs(h.value) <= h.bound) {
                done[i] = 1;
                continue;
            }
            Complex w;
            if (h.slope == Complex(0.0)) {
                w = std::polar(1e-4 * (1.0 + std::abs(z[i])), 1.0 + static_cast<double>(i));
            } else {
                const Complex ratio = h.value / h.slope;
                Complex s(0.0);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) s += 1.0 / (z[i] - z[j]);
                w = ratio / (1.0 - ratio * s);
            }
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
            z[i] -= w;
            if (std::abs(w) < kStepTol * (1.0 + std::abs(z[i])))
                done[i] = 1;
            else
                all_done = false;
        }
        if (all_done) return true;
    }
    return false;
}

// Coefficients of p(c + t) in ascending powers of t, up to t^{m-1}.
std::vector<Complex> taylor_at(std::span<const Complex> coeffs, Complex c, std::size_t m) {
    std::vector<Complex> work(coeffs.begin(), coeffs.end());
    std::vector<Complex> out;
    for (std::size_t j = 0; j < m && !work.empty(); ++j) {
        const std::size_t n = work.size() - 1;
        for (std::size_t k = n; k-- > 0;) work[k] += c * work[k + 1];
        out.push_back(work[0]);
        work.erase(work.begin());
    }
    return out;
}

// sum_k binom(k, j) |a_k| x^{k-j}: scale of the j-th Taylor coefficient.
double taylor_scale(std::span<const Complex> coeffs, double x, std::size_t j) {
    double s = 0.0;
    for (std::size_t k = j; k < coeffs.size(); ++k) {
        double binom = 1.0;
        for (std::size_t i = 0; i < j; ++i) binom = binom * static_cast<double>(k - i) / static_cast<double>(i + 1);
        s += binom * std::abs(coeffs[k]) * std::pow(x, static_cast<double>(k - j));
    }
    return s;
}

// A multiple root of order m comes out of the iteration as m scattered points
// within ~eps^{1/m} of it. It is a simple root of p^{(m-1)}, so Newton on that
// derivative from the cluster mean recovers it to ~eps; accept the result when
// p and its first m-1 derivatives vanish there to rounding level.
void polish_clusters_at(std::span<const Complex> coeffs, std::vector<Complex>& z, bool real, double radius,
                        std::vector<char>& fixed) {
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!fixed[i] && !fixed[j] && std::abs(z[i] - z[j]) <= radius * std::max({1.0, std::abs(z[i]), std::abs(z[j])}))
                parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (const auto& g : groups) {
        const std::size_t m = g.size();
        if (m < 2) continue;
        bool spread = false;
        for (std::size_t i : g) spread = spread || z[i] != z[g.front()];
        if (!spread) continue;
        Complex c(0.0);
        for (std::size_t i : g) c += z[i];
        c /= static_cast<double>(m);
        if (real && std::abs(c.imag()) <= 1e-3 * std::max(1.0, std::abs(c))) c.imag(0.0);
        for (int it = 0; it < 20; ++it) {
            const auto t = taylor_at(coeffs, c, m + 1);
            if (t.size() <= m || t[m] == Complex(0.0)) break;
            const Complex step = t[m - 1] / (static_cast<double>(m) * t[m]);
            c -= step;
            if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(c))) break;
        }
        const auto t = taylor_at(coeffs, c, m);
        // Mixed scale: coefficients that are themselves results of cancellation
        // carry rounding relative to the largest coefficient, not to their own size.
        double norm = 0.0;
        for (const auto& a : coeffs) norm = std::max(norm, std::abs(a));
        bool accept = true;
        for (std::size_t j = 0; j < t.size() && accept; ++j)
            accept = std::abs(t[j]) <= kClusterAcceptTol * std::max(norm, taylor_scale(coeffs, std::abs(c), j));
        if (accept)
            for (std::size_t i : g) {
                z[i] = c;
                fixed[i] = 1;
            }
    }
}

// Order-m scatter is ~eps^{1/m}, about 2e-3 for m = 6. The wide pass runs
// first: the Taylor test rejects an over-merged group (some t_j with j < m is
// far from zero) but cannot see an under-count, since a partial ring of a
// higher multiplicity also has small leading coefficients.
void polish_clusters(std::span<const Complex> coeffs, std::vector<Complex>& z, bool real) {
    std::vector<char> fixed(z.size(), 0);
    for (double radius : {1e-2, 1e-3}) polish_clusters_at(coeffs, z, real, radius, fixed);
}

// Conjugate roots of a real polynomial are paired and made exact mirrors;
// unpaired roots with a rounding-level imaginary part become real.
void symmetrize_conjugates(std::vector<Complex>& z) {
    std::vector<char> used(z.size(), 0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i] || z[i].imag() <= 0.0) continue;
        std::size_t best = z.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (used[j] || j == i || z[j].imag() >= 0.0) continue;
            const double dist = std::abs(z[i] - std::conj(z[j]));
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best < z.size() && best_dist <= 1e-6 * (1.0 + std::abs(z[i]))) {
            const Complex avg = 0.5 * (z[i] + std::conj(z[best]));
            z[i] = avg;
            z[best] = std::conj(avg);
            used[i] = used[best] = 1;
        }
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!used[i] && std::abs(z[i].imag()) <= 1e-8 * (1.0 + std::abs(z[i]))) z[i].imag(0.0);
}

void sort_roots(std::vector<Complex>& z) {
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
}

std::vector<Complex> companion_eigenvalues(std::span<const Complex> c) {
    const std::size_t n = c.size() - 1;
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i].real() / c[n].real();
    return dense_spectrum(m).eigenvalues;
}

struct Stripped {
    std::vector<Complex> coeffs;  // trailing constant nonzero
    std::size_t zeros = 0;
};

Stripped strip_zero_roots(std::span<const Complex> c) {
    Stripped s;
    while (s.zeros + 1 < c.size() && c[s.zeros] == Complex(0.0)) ++s.zeros;
    s.coeffs.assign(c.begin() + static_cast<std::ptrdiff_t>(s.zeros), c.end());
    return s;
}

std::vector<Complex> solve(std::span<const Complex> raw, const std::vector<Complex>* guesses, bool real) {
    std::size_t top = raw.size();
    while (top > 0 && raw[top - 1] == Complex(0.0)) --top;
    if (top == 0) throw Error(ErrorKind::ZeroPolynomial, "polynomial has no nonzero coefficient");
    if (top == 1) throw Error(ErrorKind::DomainError, "constant polynomial has no roots");
    const Stripped s = strip_zero_roots(raw.first(top));
    std::vector<Complex> roots(s.zeros, Complex(0.0));
    const std::size_t n = s.coeffs.size() - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-s.coeffs[0] / s.coeffs[1]);
        if (real) roots.back().imag(0.0);
        sort_roots(roots);
        return roots;
    }
    std::vector<Complex> z;
    if (guesses) {
        std::vector<Complex> g(*guesses);
        std::sort(g.begin(), g.end(), [](const Complex& a, const Complex& b) { return std::abs(a) > std::abs(b); });
        if (g.size() >= n) {
            g.resize(n);
            z = std::move(g);
            for (auto& v : z)
                if (v == Complex(0.0)) v = Complex(1e-3, 1e-3);
            separate(z);
        }
    }
    if (z.empty()) z = circle_guesses(s.coeffs);
    std::vector<Complex> found;
    if (aberth(s.coeffs, z)) {
        polish_clusters(s.coeffs, z, real);
        found = std::move(z);
    } else if (real) {
        found = companion_eigenvalues(s.coeffs);
    } else {
        throw Error(ErrorKind::DidNotConverge, "root iteration reached its cap");
    }
    if (real) symmetrize_conjugates(found);
    roots.insert(roots.end(), found.begin(), found.end());
    sort_roots(roots);
    return roots;
}

std::vector<Complex> as_complex(const Polynomial& p) {
    std::vector<Complex> c(p.coeffs().size());
    std::transform(p.coeffs().begin(), p.coeffs().end(), c.begin(), [](double v) { return Complex(v); });
    return c;
}

} // namespace

std::vector<Complex> poly_roots(const Polynomial& p) { return solve(as_complex(p), nullptr, true); }

double spectral_radius_poly(const Polynomial& p) {
    double r = 0.0;
    for (const Complex& z : poly_roots(p)) r = std::max(r, std::abs(z));
    return r;
}

namespace detail {

std::vector<Complex> poly_roots_complex(std::span<const Complex> coeffs) { return solve(coeffs, nullptr, false); }

std::vector<Complex> poly_roots_warm(const Polynomial& p, std::span<const Complex> guesses) {
    const std::vector<Complex> g(guesses.begin(), guesses.end());
    return solve(as_complex(p), &g, true);
}

} // namespace detail

} // namespace pcli
