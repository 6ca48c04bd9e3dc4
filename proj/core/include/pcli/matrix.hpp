#ifndef PCLI_MATRIX_HPP
#define PCLI_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcli {

using Vector = std::vector<double>;

/// Dense row-major real matrix. Small sizes only (a few hundred rows at most).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> values);
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const double> entries() const noexcept { return entries_; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    DenseMatrix transpose() const;
    Vector column(std::size_t j) const;
    Vector diag() const;

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& block);
    DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator-=(const DenseMatrix& other);
    DenseMatrix& operator*=(double s);

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double s, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
Vector operator*(const DenseMatrix& a, std::span<const double> x);

/// Largest absolute entry.
double max_abs(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);
/// Maximum absolute row sum.
double inf_norm(const DenseMatrix& a);
bool is_symmetric(const DenseMatrix& a, double rel_tol = 1e-12);

double norm2(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
Vector axpy(double alpha, std::span<const double> x, std::span<const double> y);
Vector subtract(std::span<const double> x, std::span<const double> y);
Vector scaled(double alpha, std::span<const double> x);

/// Solves A x = b by LU with partial pivoting. Throws SingularSystem when a
/// pivot falls below `rel_tol * max_abs(A)`.
Vector solve(const DenseMatrix& a, std::span<const double> b, double rel_tol = 1e-14);
DenseMatrix inverse(const DenseMatrix& a, double rel_tol = 1e-14);

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const DenseMatrix& a);
/// Number of singular values above `rel_tol * sigma_max`.
std::size_t numerical_rank(const DenseMatrix& a, double rel_tol = 1e-10);

} // namespace pcli

#endif
