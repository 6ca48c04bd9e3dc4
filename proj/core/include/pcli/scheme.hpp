#ifndef PCLI_SCHEME_HPP
#define PCLI_SCHEME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcli/matrix.hpp"

namespace pcli {

/// C(A) = alpha * A + beta * I.
struct LinearCoeff {
    double alpha = 0.0;
    double beta = 0.0;
};

/// A fixed d x d matrix. `eigenbasis`, when present, is an orthogonal O with
/// O^T C O upper triangular; all explicit specs of a scheme must share it.
struct ExplicitCoeff {
    DenseMatrix matrix;
    std::optional<DenseMatrix> eigenbasis;
};

using CoefficientSpec = std::variant<LinearCoeff, ExplicitCoeff>;

/// N(A) = nu * I.
struct ScalarInversion {
    double nu = 0.0;
};
/// N(A) = diag(values).
struct DiagonalInversion {
    Vector values;
};
struct ExplicitInversion {
    DenseMatrix matrix;
};

using InversionSpec = std::variant<ScalarInversion, DiagonalInversion, ExplicitInversion>;

/// A p-step method: z^{k+1} = M z^k + E_p N(A) b where M is block companion
/// with bottom block row C_0(A), ..., C_{p-1}(A). coeffs[0] multiplies the
/// oldest iterate.
struct Scheme {
    std::size_t p = 1;
    /// Unset when every spec is dimension-free (Linear and Scalar).
    std::optional<std::size_t> d;
    std::vector<CoefficientSpec> coeffs;
    InversionSpec inversion;
    std::string name;

    bool all_linear() const noexcept;
    /// Throws DomainError when coeffs.size() != p or a spec has a bad shape.
    void validate() const;
};

} // namespace pcli

#endif
