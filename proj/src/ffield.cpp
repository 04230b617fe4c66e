#include "modinv/ffield.hpp"

#include <algorithm>
#include <string>

namespace modinv {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotMultihomogeneous: return "NotMultihomogeneous";
    case Errc::NotInDomain: return "NotInDomain";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::UnmatchedY: return "UnmatchedY";
    case Errc::RelationFailed: return "RelationFailed";
    case Errc::InfeasibleSize: return "InfeasibleSize";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p > kMaxModulus || !is_prime(p))
        throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
}

Coeff PrimeField::pow(Coeff base, std::uint64_t exp) const noexcept
{
    Coeff result = 1 % p_;
    base %= p_;
    while (exp) {
        if (exp & 1)
            result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

Coeff PrimeField::inv(Coeff a) const
{
    if (a % p_ == 0)
        throw Error(Errc::DivisionByZero, "division by zero in F_" + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    return reduce(t);
}

Fp::Fp(std::int64_t value, std::uint32_t p) : field_(p), value_(field_.reduce(value)) {}

namespace {

void require_same_modulus(const Fp& a, const Fp& b)
{
    if (a.modulus() != b.modulus())
        throw Error(Errc::ModulusMismatch, "operands live in F_" + std::to_string(a.modulus()) +
                                               " and F_" + std::to_string(b.modulus()));
}

}  // namespace

Fp operator+(const Fp& a, const Fp& b)
{
    require_same_modulus(a, b);
    return Fp(a.field_.add(a.value_, b.value_), a.field_);
}

Fp operator-(const Fp& a, const Fp& b)
{
    require_same_modulus(a, b);
    return Fp(a.field_.sub(a.value_, b.value_), a.field_);
}

Fp operator*(const Fp& a, const Fp& b)
{
    require_same_modulus(a, b);
    return Fp(a.field_.mul(a.value_, b.value_), a.field_);
}

Fp operator/(const Fp& a, const Fp& b)
{
    require_same_modulus(a, b);
    return Fp(a.field_.div(a.value_, b.value_), a.field_);
}

Fp fp_ops(const Fp& a, const Fp& b, FpOp op)
{
    switch (op) {
    case FpOp::Add: return a + b;
    case FpOp::Sub: return a - b;
    case FpOp::Mul: return a * b;
    case FpOp::Div: return a / b;
    case FpOp::Pow:
        require_same_modulus(a, b);
        return a.pow(b.value());
    }
    throw Error(Errc::InvalidArgument, "unknown field operation");
}

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(std::size_t n, const PrimeField& field)
{
    FpMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, const PrimeField& field)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(Errc::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    FpMatrix out(rows_, rhs.cols_, field_);
    const std::uint64_t p = field_.p();
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0)
                continue;
            auto r = rhs.row(k);
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                acc[j] = (acc[j] + a * r[j]) % p;
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out(i, j) = static_cast<Coeff>(acc[j]);
    }
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw Error(Errc::DimensionMismatch, "matrix difference shape mismatch");
    FpMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
    FpMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

std::vector<Coeff> FpMatrix::apply(std::span<const Coeff> v) const
{
    if (v.size() != cols_)
        throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<Coeff> out(rows_, 0);
    const std::uint64_t p = field_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        auto r = row(i);
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j])
                acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
        out[i] = static_cast<Coeff>(acc);
    }
    return out;
}

FpMatrix FpMatrix::transposed() const
{
    FpMatrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

FpMatrix FpMatrix::stack(const FpMatrix& top, const FpMatrix& bottom)
{
    if (top.cols_ != bottom.cols_ || top.field_ != bottom.field_)
        throw Error(Errc::DimensionMismatch, "cannot stack matrices with different widths");
    FpMatrix out(top.rows_ + bottom.rows_, top.cols_, top.field_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
    return out;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> columns) const
{
    FpMatrix out(rows_, columns.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out(i, j) = (*this)(i, columns[j]);
    return out;
}

RrefResult rref(FpMatrix m)
{
    const PrimeField& f = m.field();
    const std::uint64_t p = f.p();
    RrefResult result{m, {}, 0};
    FpMatrix& a = result.reduced;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < a.rows() && a(pivot, col) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != lead_row)
            std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(lead_row).begin());
        auto prow = a.row(lead_row);
        Coeff inv = f.inv(prow[col]);
        for (std::size_t j = col; j < a.cols(); ++j)
            prow[j] = f.mul(prow[j], inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || a(r, col) == 0)
                continue;
            auto row = a.row(r);
            std::uint64_t factor = p - row[col];
            for (std::size_t j = col; j < a.cols(); ++j)
                if (prow[j])
                    row[j] = static_cast<Coeff>((row[j] + factor * prow[j]) % p);
        }
        result.pivots.push_back(col);
        ++lead_row;
    }
    result.rank = result.pivots.size();
    return result;
}

std::size_t rank(const FpMatrix& m)
{
    // Row-reduce whichever orientation is narrower.
    if (m.rows() > m.cols()) {
        EchelonBasis basis(m.rows(), m.field());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::vector<Coeff> col(m.rows());
            for (std::size_t r = 0; r < m.rows(); ++r)
                col[r] = m(r, c);
            basis.insert(std::move(col));
        }
        return basis.size();
    }
    EchelonBasis basis(m.cols(), m.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(std::vector<Coeff>(m.row(r).begin(), m.row(r).end()));
    return basis.size();
}

std::vector<std::vector<Coeff>> kernel_basis(const FpMatrix& m)
{
    const PrimeField& f = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Coeff> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t dim, const PrimeField& field) : dim_(dim), field_(field) {}

void EchelonBasis::reduce(std::vector<Coeff>& v) const
{
    if (v.size() != dim_)
        throw Error(Errc::DimensionMismatch, "vector length does not match subspace dimension");
    const std::uint64_t p = field_.p();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Coeff c = v[pivots_[i]];
        if (c == 0)
            continue;
        const auto& row = rows_[i];
        std::uint64_t factor = p - c;
        for (std::size_t j = pivots_[i]; j < dim_; ++j)
            if (row[j])
                v[j] = static_cast<Coeff>((v[j] + factor * row[j]) % p);
    }
}

bool EchelonBasis::contains(std::vector<Coeff> v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

bool EchelonBasis::insert(std::vector<Coeff> v)
{
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
    if (it == v.end())
        return false;
    std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    Coeff inv = field_.inv(v[pivot]);
    for (std::size_t j = pivot; j < dim_; ++j)
        v[j] = field_.mul(v[j], inv);
    const std::uint64_t p = field_.p();
    for (auto& row : rows_) {
        Coeff c = row[pivot];
        if (c == 0)
            continue;
        std::uint64_t factor = p - c;
        for (std::size_t j = pivot; j < dim_; ++j)
            if (v[j])
                row[j] = static_cast<Coeff>((row[j] + factor * v[j]) % p);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

}  // namespace modinv
