#ifndef PCLI_POLYNOMIAL_HPP
#define PCLI_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcli {

using Complex = std::complex<double>;

/// Real univariate polynomial, coefficients in ascending degree
/// (coeffs()[k] multiplies z^k). Trailing zero coefficients are trimmed so
/// the leading coefficient is nonzero; the zero polynomial stores `{0}`.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

    /// prod_i (z - root_i); the roots must be closed under conjugation.
    static Polynomial from_roots(std::span<const Complex> roots);
    static Polynomial monomial(std::size_t degree, double coeff = 1.0);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    double leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    bool is_monic() const noexcept { return coeffs_.back() == 1.0; }
    double max_abs_coeff() const noexcept;

    double operator()(double z) const;
    Complex operator()(Complex z) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> coeffs_;
};

/// Largest coefficientwise difference, padding the shorter with zeros.
double coeff_distance(const Polynomial& a, const Polynomial& b);

} // namespace pcli

#endif
