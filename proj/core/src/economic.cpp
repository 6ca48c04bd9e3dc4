#include "pcli/economic.hpp"

#include <cmath>
#include <vector>

#include "pcli/error.hpp"

namespace pcli {

Polynomial economic_poly(double r, int p) {
    if (!(r >= 0.0) || p < 1) throw Error(ErrorKind::DomainError, "economic_poly needs r >= 0 and p >= 1");
    const double root = 1.0 - std::pow(r, 1.0 / p);
    std::vector<double> c(static_cast<std::size_t>(p) + 1);
    double binom = 1.0;
    for (int k = p; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = binom * std::pow(-root, p - k);
        binom = binom * k / (p - k + 1);
    }
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

RhoBound min_rho_given_value_at_one(double r, int p, bool real_coeffs) {
    if (p < 1) throw Error(ErrorKind::DomainError, "p must be positive");
    if (r >= 0.0) return {std::abs(std::pow(r, 1.0 / p) - 1.0), true};
    if (real_coeffs) return {1.0, true};
    return {0.0, false};
}

} // namespace pcli
