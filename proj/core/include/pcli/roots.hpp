#ifndef PCLI_ROOTS_HPP
#define PCLI_ROOTS_HPP

#include <span>
#include <vector>

#include "pcli/polynomial.hpp"

namespace pcli {

/// All roots with multiplicity, sorted by (real, imag). Complex roots come in
/// exact conjugate pairs. Throws ZeroPolynomial for the zero polynomial and
/// DomainError for constants.
std::vector<Complex> poly_roots(const Polynomial& p);

/// Max modulus over poly_roots(p).
double spectral_radius_poly(const Polynomial& p);

namespace detail {

/// Roots of a polynomial with complex coefficients (ascending degree).
std::vector<Complex> poly_roots_complex(std::span<const Complex> coeffs);

/// Roots of `p` starting from `guesses` (e.g. the roots of a nearby polynomial).
/// Falls back to the cold start when the guesses do not fit.
std::vector<Complex> poly_roots_warm(const Polynomial& p, std::span<const Complex> guesses);

} // namespace detail

} // namespace pcli

#endif
