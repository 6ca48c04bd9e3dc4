#ifndef PCLI_ECONOMIC_HPP
#define PCLI_ECONOMIC_HPP

#include "pcli/polynomial.hpp"

namespace pcli {

/// (z - (1 - r^{1/p}))^p expanded; the unique monic degree-p polynomial of
/// least root radius among those taking the value r >= 0 at z = 1.
Polynomial economic_poly(double r, int p);

struct RhoBound {
    double value = 0.0;
    /// False when no bound holds (q(1) < 0 with complex coefficients allowed).
    bool applicable = true;
};

/// Least root radius of a monic degree-p polynomial q with q(1) = r.
RhoBound min_rho_given_value_at_one(double r, int p, bool real_coeffs = true);

} // namespace pcli

#endif
