#pragma once

// A multidegree component F[mV_2]_lambda as a coordinate space.
//
// A monomial of multidegree lambda is determined by a_i = exp(x_i).  Its
// coordinate index is sum a_i * stride_i with stride_1 = 1 and
// stride_{i+1} = stride_i * (lambda_i + 1).  Increasing index is exactly
// decreasing grevlex order, so index 0 is the all-y monomial and the first
// nonzero coordinate of a vector is its lead monomial.

#include <cstddef>
#include <span>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

class Component {
public:
    explicit Component(MultiDegree lambda);

    const MultiDegree& lambda() const noexcept { return lambda_; }
    std::size_t blocks() const noexcept { return lambda_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t stride(std::size_t block) const { return strides_[block - 1]; }

    Monomial monomial(std::size_t index) const;
    /// Throws Errc::NotMultihomogeneous if mon is not of multidegree lambda.
    std::size_t index(const Monomial& mon) const;
    /// x-exponent of `block` in the monomial at `index`.
    std::uint32_t x_exponent(std::size_t index, std::size_t block) const
    {
        return static_cast<std::uint32_t>((index / strides_[block - 1]) % (lambda_[block - 1] + 1));
    }

    /// Throws Errc::NotMultihomogeneous unless every term has multidegree lambda.
    std::vector<Coeff> to_dense(const Polynomial& f) const;
    Polynomial from_dense(std::span<const Coeff> v, const PrimeField& field) const;

private:
    MultiDegree lambda_;
    std::vector<std::size_t> strides_;
    std::size_t dim_;
};

/// component_basis(lambda): monomials of multidegree lambda, grevlex-descending.
std::vector<Monomial> component_basis(const MultiDegree& lambda);

/// Matrix of f -> g.f on the component (column j = image of basis monomial j),
/// with the same 2x2 substitution applied in every block.
FpMatrix block_linear_matrix(const Component& comp, const BlockLinearMap& g, const PrimeField& field);

/// Matrix of the substitution on the degree-k forms of one block,
/// indexed by the x-exponent.
FpMatrix single_block_matrix(std::uint32_t k, const BlockLinearMap& g, const PrimeField& field);

/// Product of a vector in component `a` with a vector in component `b`,
/// landing in component `ab` (whose multidegree is the sum).
std::vector<Coeff> multiply_dense(const Component& a, std::span<const Coeff> va, const Component& b,
                                  std::span<const Coeff> vb, const Component& ab, const PrimeField& field);

}  // namespace modinv
