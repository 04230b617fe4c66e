#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

enum class Errc {
    InvalidArgument,
    NotPrime,
    ModulusMismatch,
    DivisionByZero,
    DimensionMismatch,
    ZeroPolynomial,
    NotInvariant,
    NotMultihomogeneous,
    NotInDomain,
    DegreeMismatch,
    UnmatchedY,
    RelationFailed,
    InfeasibleSize,
    BudgetExceeded,
    Parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace modinv
