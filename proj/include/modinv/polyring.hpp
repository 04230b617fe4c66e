#pragma once

// Sparse polynomials over F_p in x_1, y_1, ..., x_m, y_m.
//
// Variable order is y_1 > x_1 > y_2 > x_2 > ... > y_m > x_m and monomials
// are compared in graded reverse lexicographic order.  Exponent vectors are
// laid out in that order: index 2(b-1) holds y_b and 2(b-1)+1 holds x_b.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/ffield.hpp"

namespace modinv {

enum class VarKind { X, Y };

struct VarRef {
    std::size_t block;  // 1-based
    VarKind kind;
};

inline std::size_t var_index(VarRef v) noexcept
{
    return 2 * (v.block - 1) + (v.kind == VarKind::X ? 1 : 0);
}

using MultiDegree = std::vector<std::uint32_t>;

std::uint64_t total_degree(const MultiDegree& lambda) noexcept;
/// Product of (lambda_i + 1): the dimension of the multidegree component.
std::uint64_t component_dimension(const MultiDegree& lambda) noexcept;
std::string to_string(const MultiDegree& lambda);
/// Parses "1,1,1,2". Throws Errc::Parse.
MultiDegree parse_multidegree(std::string_view text);

class Monomial {
public:
    explicit Monomial(std::size_t blocks = 0) : exps_(2 * blocks, 0) {}
    /// Exponents in variable order (y_1, x_1, y_2, x_2, ...). Size must be even.
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t blocks, VarRef v, std::uint32_t e = 1);

    std::size_t blocks() const noexcept { return exps_.size() / 2; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
    std::uint32_t operator[](std::size_t idx) const { return exps_[idx]; }
    std::uint32_t x(std::size_t block) const { return exps_[2 * (block - 1) + 1]; }
    std::uint32_t y(std::size_t block) const { return exps_[2 * (block - 1)]; }
    std::uint32_t degree() const noexcept { return degree_; }
    MultiDegree multidegree() const;
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t idx, std::uint32_t e);
    bool divides(const Monomial& other) const;
    /// other / *this. Requires divides(other).
    Monomial cofactor(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.exps_ == b.exps_;
    }

    std::string to_string() const;

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Throws Errc::DimensionMismatch for monomials with different block counts.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return grevlex_cmp(a, b) == std::strong_ordering::greater;
    }
};

struct Term {
    Monomial monomial;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    Polynomial(std::size_t blocks, const PrimeField& field) : blocks_(blocks), field_(field) {}

    static Polynomial constant(std::size_t blocks, const PrimeField& field, std::int64_t c);
    static Polynomial variable(std::size_t blocks, const PrimeField& field, VarRef v);
    static Polynomial x(std::size_t blocks, const PrimeField& field, std::size_t block);
    static Polynomial y(std::size_t blocks, const PrimeField& field, std::size_t block);
    static Polynomial monomial(const Monomial& mon, const PrimeField& field, Coeff c = 1);
    /// u_ij = x_i y_j - x_j y_i.
    static Polynomial u(std::size_t blocks, const PrimeField& field, std::size_t i, std::size_t j);
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(std::size_t blocks, const PrimeField& field, std::vector<Term> terms);

    std::size_t blocks() const noexcept { return blocks_; }
    const PrimeField& field() const noexcept { return field_; }
    /// Terms in grevlex-descending order, no zero coefficients.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Throws Errc::ZeroPolynomial.
    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().monomial; }
    Coeff coefficient(const Monomial& mon) const;

    bool is_multihomogeneous() const;
    /// Throws Errc::NotMultihomogeneous (also for the zero polynomial).
    MultiDegree multidegree() const;
    /// All terms of multidegree lambda.
    Polynomial project(const MultiDegree& lambda) const;

    Polynomial operator-() const;
    Polynomial scaled(Coeff c) const;
    Polynomial monic() const;
    Polynomial pow(std::uint64_t e) const;
    Polynomial times_monomial(const Monomial& mon, Coeff c = 1) const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
    friend bool operator==(const Polynomial& f, const Polynomial& g);

    /// Canonical text: grevlex-descending terms, coefficients printed in the
    /// symmetric range (-p/2, p/2], e.g. "x1*y2 - x2*y1"; "0" for zero.
    std::string to_string() const;
    /// Inverse of to_string; also accepts "+", "-", "^", integer coefficients
    /// and any factor order. Throws Errc::Parse.
    static Polynomial parse(std::string_view text, std::size_t blocks, const PrimeField& field);

private:
    void check_compatible(const Polynomial& g) const;

    std::size_t blocks_;
    PrimeField field_;
    std::vector<Term> terms_;
};

/// Algebra homomorphism F[x_1..y_m] -> F[target ring] given by the images of
/// the variables. `image(v)` must return polynomials in `target_blocks` blocks.
Polynomial substitute(const Polynomial& f, std::size_t target_blocks,
                      const std::function<Polynomial(VarRef)>& image);

/// 2x2 matrix over F_p acting on every block by (x, y) -> (x, y) g, i.e.
/// x -> g11 x + g21 y and y -> g12 x + g22 y.
struct BlockLinearMap {
    Coeff g11, g12, g21, g22;
};

Polynomial apply_block_linear(const Polynomial& f, const BlockLinearMap& g);

}  // namespace modinv
