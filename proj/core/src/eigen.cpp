#include "pcli/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pcli/error.hpp"

namespace pcli {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

void balance(DenseMatrix& a) {
    const std::size_t n = a.rows();
    const double radix = 2.0;
    const double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Similarity reduction to upper Hessenberg form by stabilized elimination.
void hessenberg(DenseMatrix& a) {
    const std::size_t n = a.rows();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        double x = 0.0;
        std::size_t piv = m;
        for (std::size_t j = m; j < n; ++j)
            if (std::abs(a(j, m - 1)) > std::abs(x)) {
                x = a(j, m - 1);
                piv = j;
            }
        if (piv != m) {
            for (std::size_t j = m - 1; j < n; ++j) std::swap(a(piv, j), a(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(a(j, piv), a(j, m));
        }
        if (x == 0.0) continue;
        for (std::size_t i = m + 1; i < n; ++i) {
            double y = a(i, m - 1);
            if (y == 0.0) continue;
            y /= x;
            a(i, m - 1) = 0.0;
            for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
            for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
        }
    }
}

// Francis double-shift QR on an upper Hessenberg matrix.
std::vector<Complex> hqr(DenseMatrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<Complex> w(a.rows());
    const int cap = 30 * std::max(n, 1);
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    int nn = n - 1;
    double t = 0.0;
    double p = 0, q = 0, r = 0, s = 0, x = 0, y = 0, z = 0, ww = 0;
    while (nn >= 0) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l > 0; --l) {
                s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= kEps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            x = a(nn, nn);
            if (l == nn) {
                w[nn--] = x + t;
            } else {
                y = a(nn - 1, nn - 1);
                ww = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + ww;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        w[nn - 1] = w[nn] = x + z;
                        if (z != 0.0) w[nn] = x - ww / z;
                    } else {
                        w[nn] = Complex(x + p, -z);
                        w[nn - 1] = std::conj(w[nn]);
                    }
                    nn -= 2;
                } else {
                    if (its == cap) throw Error(ErrorKind::DidNotConverge, "QR iteration reached its cap");
                    if (its > 0 && its % 10 == 0) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        ww = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u <= kEps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        a(i + 2, i) = 0.0;
                        if (i != m) a(i + 2, i - 1) = 0.0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = a(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = a(k, j) + q * a(k + 1, j);
                                if (k + 1 != nn) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k + 1 != nn) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return w;
}

// Upper bound on sigma_min(M - cI) from a few steps of inverse iteration.
double sigma_min_estimate(const DenseMatrix& m, Complex c) {
    const std::size_t n = m.rows();
    std::vector<Complex> lu(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lu[i * n + j] = m(i, j) - (i == j ? c : Complex(0.0));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu[i * n + k]) > std::abs(lu[piv * n + k])) piv = i;
        if (lu[piv * n + k] == Complex(0.0)) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[piv * n + j]);
            std::swap(perm[k], perm[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu[i * n + k] / lu[k * n + k];
            lu[i * n + k] = f;
            for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
        }
    }
    std::vector<Complex> x(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    for (std::size_t i = 0; i < n; ++i) x[i] *= Complex(1.0, 0.1 * static_cast<double>(i % 7));
    double sigma = std::numeric_limits<double>::infinity();
    for (int step = 0; step < 3; ++step) {
        double xn = 0.0;
        for (const auto& v : x) xn += std::norm(v);
        xn = std::sqrt(xn);
        std::vector<Complex> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[perm[i]] / xn;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) y[i] -= lu[i * n + j] * y[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) y[i] -= lu[i * n + j] * y[j];
            y[i] /= lu[i * n + i];
        }
        double yn = 0.0;
        for (const auto& v : y) yn += std::norm(v);
        yn = std::sqrt(yn);
        if (!std::isfinite(yn)) return 0.0;
        sigma = std::min(sigma, 1.0 / yn);
        x = std::move(y);
    }
    return sigma;
}

// A defective eigenvalue of multiplicity m is perturbed into a near-regular
// m-gon around it, whose centred power sums of order 1..m-1 vanish. Part of a
// larger ring, or two merged rings, fails this; sigma_min alone does not
// separate those cases since it is ~dist^m.
bool regular_ring(std::span<const Complex> w, std::span<const std::size_t> g, Complex mean) {
    const std::size_t m = g.size();
    double r = 0.0;
    for (std::size_t i : g) r = std::max(r, std::abs(w[i] - mean));
    for (std::size_t j = 2; j < m; ++j) {
        Complex s(0.0);
        for (std::size_t i : g) s += std::pow(w[i] - mean, static_cast<int>(j));
        if (std::abs(s) > 0.25 * static_cast<double>(m) * std::pow(r, static_cast<double>(j))) return false;
    }
    return true;
}

// Defective eigenvalues come out of QR as rings of radius ~eps^{1/m}; replace
// a ring by its mean when M - mean*I is numerically singular.
void polish_clusters_at(const DenseMatrix& m, std::vector<Complex>& w, double radius, std::vector<char>& fixed) {
    const std::size_t n = w.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!fixed[i] && !fixed[j] && std::abs(w[i] - w[j]) <= radius * std::max({1.0, std::abs(w[i]), std::abs(w[j])}))
                parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    const double tol = 1e-10 * std::max(1.0, frobenius_norm(m));
    for (const auto& g : groups) {
        if (g.size() < 2) continue;
        Complex mean(0.0);
        for (std::size_t i : g) mean += w[i];
        mean /= static_cast<double>(g.size());
        bool spread = false;
        for (std::size_t i : g) spread = spread || w[i] != mean;
        if (!spread) continue;
        if (regular_ring(w, g, mean) && sigma_min_estimate(m, mean) <= tol)
            for (std::size_t i : g) {
                w[i] = mean;
                fixed[i] = 1;
            }
    }
}

// Wide pass first, as in the root finder.
void polish_clusters(const DenseMatrix& m, std::vector<Complex>& w) {
    std::vector<char> fixed(w.size(), 0);
    for (double radius : {1e-2, 1e-3}) polish_clusters_at(m, w, radius, fixed);
}

} // namespace

SymmetricEigen symmetric_eigen(const DenseMatrix& a) {
    if (!a.square()) throw Error(ErrorKind::NotSquare, "matrix must be square");
    if (!is_symmetric(a)) throw Error(ErrorKind::NotSymmetric, "matrix must be symmetric");
    const std::size_t n = a.rows();
    DenseMatrix s = a;
    DenseMatrix v = DenseMatrix::identity(n);
    const double threshold = 1e-13 * frobenius_norm(a);
    auto off = [&] {
        double o = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) o += s(i, j) * s(i, j);
        return std::sqrt(o);
    };
    int sweep = 0;
    while (off() > threshold) {
        if (++sweep > 100) throw Error(ErrorKind::DidNotConverge, "Jacobi sweeps reached their cap");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (apq == 0.0) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = sign_of(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return s(i, i) < s(j, j); });
    SymmetricEigen out{std::vector<double>(n), DenseMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = s(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::size_t max_index_of(std::span<const Complex> eigenvalues, double rel_tol) {
    double rho = 0.0;
    for (const auto& e : eigenvalues) rho = std::max(rho, std::abs(e));
    const double scale = std::max(1.0, rho);
    std::vector<Complex> top;
    for (const auto& e : eigenvalues)
        if (std::abs(e) >= rho - rel_tol * scale) top.push_back(e);
    std::size_t best = top.empty() ? 1 : 0;
    for (const auto& e : top) {
        std::size_t count = 0;
        for (const auto& f : top) count += std::abs(e - f) <= rel_tol * scale ? 1 : 0;
        best = std::max(best, count);
    }
    return best;
}

SpectralReport make_report(std::vector<Complex> eigenvalues) {
    SpectralReport r;
    for (const auto& e : eigenvalues) r.spectral_radius = std::max(r.spectral_radius, std::abs(e));
    r.max_index = max_index_of(eigenvalues);
    r.eigenvalues = std::move(eigenvalues);
    return r;
}

SpectralReport dense_spectrum(const DenseMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "matrix must be square");
    if (m.empty()) return make_report({});
    DenseMatrix h = m;
    balance(h);
    hessenberg(h);
    std::vector<Complex> w = hqr(h);
    polish_clusters(m, w);
    std::sort(w.begin(), w.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return make_report(std::move(w));
}

} // namespace pcli
