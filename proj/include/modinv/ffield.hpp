#pragma once

// Prime-field arithmetic and dense linear algebra over F_p.
//
// The modulus is a runtime value carried by every object.  Internally the
// heavy code paths work on raw residues (Coeff) through a PrimeField, while
// Fp is the checked scalar type used at API boundaries.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modinv/error.hpp"

namespace modinv {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
public:
    static constexpr std::uint32_t kMaxModulus = 2147483647u;  // 2^31 - 1

    /// Throws Errc::NotPrime unless 2 <= p <= 2^31-1 and p is prime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Coeff reduce(std::int64_t v) const noexcept
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept
    {
        Coeff s = a + b;  // < 2^32 since a, b < 2^31
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept
    {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Coeff pow(Coeff base, std::uint64_t exp) const noexcept;
    /// Throws Errc::DivisionByZero for a == 0.
    Coeff inv(Coeff a) const;
    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// Checked element of F_p.
class Fp {
public:
    Fp(std::int64_t value, std::uint32_t p);
    Fp(Coeff value, const PrimeField& field) : field_(field), value_(value % field.p()) {}

    Coeff value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return field_.p(); }
    const PrimeField& field() const noexcept { return field_; }

    Fp pow(std::uint64_t exp) const { return Fp(field_.pow(value_, exp), field_); }
    Fp inverse() const { return Fp(field_.inv(value_), field_); }

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    friend bool operator==(const Fp& a, const Fp& b) = default;

private:
    PrimeField field_;
    Coeff value_;
};

enum class FpOp { Add, Sub, Mul, Div, Pow };

/// For Pow, b's residue is used as the (non-negative) exponent.
Fp fp_ops(const Fp& a, const Fp& b, FpOp op);

class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& field);

    static FpMatrix identity(std::size_t n, const PrimeField& field);
    static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                              const PrimeField& field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    std::vector<Coeff> apply(std::span<const Coeff> v) const;
    FpMatrix transposed() const;
    /// Rows of `top` followed by rows of `bottom`.
    static FpMatrix stack(const FpMatrix& top, const FpMatrix& bottom);
    FpMatrix select_columns(std::span<const std::size_t> columns) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<Coeff> data_;
};

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Pivot search scans each column top to bottom.
RrefResult rref(FpMatrix m);
std::size_t rank(const FpMatrix& m);
/// Right null space. One vector per free column, with a 1 in that column.
std::vector<std::vector<Coeff>> kernel_basis(const FpMatrix& m);

/// Incrementally maintained, fully reduced row-echelon basis of a subspace
/// of F_p^dim.  Every stored row is monic at its pivot (its first nonzero
/// entry) and vanishes at the pivots of all other rows.
class EchelonBasis {
public:
    EchelonBasis(std::size_t dim, const PrimeField& field);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const PrimeField& field() const noexcept { return field_; }

    /// Returns true when v was independent of the current span.
    bool insert(std::vector<Coeff> v);
    bool contains(std::vector<Coeff> v) const;
    void reduce(std::vector<Coeff>& v) const;

    /// Rows sorted by pivot.
    const std::vector<std::vector<Coeff>>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

private:
    std::size_t dim_;
    PrimeField field_;
    std::vector<std::vector<Coeff>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace modinv
