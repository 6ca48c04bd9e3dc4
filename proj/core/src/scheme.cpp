#include "pcli/scheme.hpp"

#include <cmath>

#include "pcli/error.hpp"

namespace pcli {

bool Scheme::all_linear() const noexcept {
    for (const auto& c : coeffs)
        if (!std::holds_alternative<LinearCoeff>(c)) return false;
    return true;
}

void Scheme::validate() const {
    if (p == 0) throw Error(ErrorKind::DomainError, "p must be positive");
    if (coeffs.size() != p) throw Error(ErrorKind::DomainError, "scheme needs exactly p coefficient specs");
    for (const auto& c : coeffs) {
        if (const auto* lin = std::get_if<LinearCoeff>(&c)) {
            if (!std::isfinite(lin->alpha) || !std::isfinite(lin->beta))
                throw Error(ErrorKind::DomainError, "linear coefficients must be finite");
        } else {
            const auto& ex = std::get<ExplicitCoeff>(c);
            if (!ex.matrix.square()) throw Error(ErrorKind::DimensionMismatch, "explicit coefficient must be square");
            if (d && ex.matrix.rows() != *d) throw Error(ErrorKind::DimensionMismatch, "explicit coefficient size differs from d");
            if (ex.eigenbasis && (ex.eigenbasis->rows() != ex.matrix.rows() || !ex.eigenbasis->square()))
                throw Error(ErrorKind::DimensionMismatch, "eigenbasis size differs from its matrix");
        }
    }
    if (const auto* s = std::get_if<ScalarInversion>(&inversion)) {
        if (!std::isfinite(s->nu)) throw Error(ErrorKind::DomainError, "nu must be finite");
    } else if (const auto* dg = std::get_if<DiagonalInversion>(&inversion)) {
        if (d && dg->values.size() != *d) throw Error(ErrorKind::DimensionMismatch, "diagonal inversion length differs from d");
    } else {
        const auto& ex = std::get<ExplicitInversion>(inversion);
        if (!ex.matrix.square()) throw Error(ErrorKind::DimensionMismatch, "explicit inversion must be square");
        if (d && ex.matrix.rows() != *d) throw Error(ErrorKind::DimensionMismatch, "explicit inversion size differs from d");
    }
}

} // namespace pcli
