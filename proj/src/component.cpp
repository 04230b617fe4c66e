#include "modinv/component.hpp"

namespace modinv {

Component::Component(MultiDegree lambda) : lambda_(std::move(lambda)), strides_(lambda_.size())
{
    std::size_t stride = 1;
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        strides_[i] = stride;
        stride *= lambda_[i] + 1;
    }
    dim_ = stride;
}

Monomial Component::monomial(std::size_t index) const
{
    if (index >= dim_)
        throw Error(Errc::InvalidArgument, "component index out of range");
    Monomial mon(blocks());
    for (std::size_t b = 1; b <= blocks(); ++b) {
        std::uint32_t a = x_exponent(index, b);
        mon.set(var_index({b, VarKind::X}), a);
        mon.set(var_index({b, VarKind::Y}), lambda_[b - 1] - a);
    }
    return mon;
}

std::size_t Component::index(const Monomial& mon) const
{
    if (mon.blocks() != blocks())
        throw Error(Errc::DimensionMismatch, "monomial has the wrong number of blocks");
    std::size_t idx = 0;
    for (std::size_t b = 1; b <= blocks(); ++b) {
        if (mon.x(b) + mon.y(b) != lambda_[b - 1])
            throw Error(Errc::NotMultihomogeneous,
                        "monomial " + mon.to_string() + " is not of multidegree (" + to_string(lambda_) + ")");
        idx += mon.x(b) * strides_[b - 1];
    }
    return idx;
}

std::vector<Coeff> Component::to_dense(const Polynomial& f) const
{
    std::vector<Coeff> v(dim_, 0);
    for (const auto& t : f.terms())
        v[index(t.monomial)] = t.coeff;
    return v;
}

Polynomial Component::from_dense(std::span<const Coeff> v, const PrimeField& field) const
{
    if (v.size() != dim_)
        throw Error(Errc::DimensionMismatch, "vector length does not match the component");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dim_; ++i)
        if (v[i])
            terms.push_back({monomial(i), v[i]});
    // Index order is grevlex-descending already.
    return Polynomial::from_terms(blocks(), field, std::move(terms));
}

std::vector<Monomial> component_basis(const MultiDegree& lambda)
{
    Component comp(lambda);
    std::vector<Monomial> out;
    out.reserve(comp.dim());
    for (std::size_t i = 0; i < comp.dim(); ++i)
        out.push_back(comp.monomial(i));
    return out;
}

FpMatrix single_block_matrix(std::uint32_t k, const BlockLinearMap& g, const PrimeField& field)
{
    // Column s holds the image of x^s y^(k-s) expanded as sum over t of coeff * x^t y^(k-t).
    const std::size_t n = k + 1;
    // Binomial coefficients mod p.
    std::vector<std::vector<Coeff>> binom(n, std::vector<Coeff>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        binom[i][0] = 1 % field.p();
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = field.add(binom[i - 1][j - 1], j < i ? binom[i - 1][j] : 0);
    }
    // (g11 x + g21 y)^s = sum_i C(s,i) g11^i g21^(s-i) x^i y^(s-i)
    // (g12 x + g22 y)^(k-s) = sum_j C(k-s,j) g12^j g22^(k-s-j) x^j y^(k-s-j)
    FpMatrix out(n, n, field);
    for (std::uint32_t s = 0; s <= k; ++s) {
        const std::uint32_t r = k - s;
        for (std::uint32_t i = 0; i <= s; ++i) {
            Coeff a = field.mul(binom[s][i], field.mul(field.pow(g.g11, i), field.pow(g.g21, s - i)));
            if (a == 0)
                continue;
            for (std::uint32_t j = 0; j <= r; ++j) {
                Coeff b = field.mul(binom[r][j], field.mul(field.pow(g.g12, j), field.pow(g.g22, r - j)));
                if (b == 0)
                    continue;
                out(i + j, s) = field.add(out(i + j, s), field.mul(a, b));
            }
        }
    }
    return out;
}

FpMatrix block_linear_matrix(const Component& comp, const BlockLinearMap& g, const PrimeField& field)
{
    const std::size_t n = comp.dim();
    std::vector<FpMatrix> factors;
    for (std::size_t b = 1; b <= comp.blocks(); ++b)
        factors.push_back(single_block_matrix(comp.lambda()[b - 1], g, field));
    // Kronecker product, block m most significant.
    FpMatrix out(n, n, field);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            Coeff v = 1 % field.p();
            for (std::size_t b = 1; b <= comp.blocks() && v; ++b)
                v = field.mul(v, factors[b - 1](comp.x_exponent(row, b), comp.x_exponent(col, b)));
            out(row, col) = v;
        }
    }
    return out;
}

std::vector<Coeff> multiply_dense(const Component& a, std::span<const Coeff> va, const Component& b,
                                  std::span<const Coeff> vb, const Component& ab, const PrimeField& field)
{
    if (va.size() != a.dim() || vb.size() != b.dim() || a.blocks() != b.blocks() ||
        ab.blocks() != a.blocks())
        throw Error(Errc::DimensionMismatch, "dense product shape mismatch");
    for (std::size_t k = 0; k < a.blocks(); ++k)
        if (a.lambda()[k] + b.lambda()[k] != ab.lambda()[k])
            throw Error(Errc::DimensionMismatch, "product lands in the wrong component");
    const std::size_t m = a.blocks();
    // Index of a monomial in ab is sum over blocks of (a_i + b_i) * stride_ab_i,
    // which is linear, so precompute the ab-offsets of every a-index and b-index.
    auto offsets = [&](const Component& c) {
        std::vector<std::size_t> off(c.dim(), 0);
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t blk = 1; blk <= m; ++blk)
                off[i] += c.x_exponent(i, blk) * ab.stride(blk);
        return off;
    };
    std::vector<std::size_t> oa = offsets(a), ob = offsets(b);
    std::vector<std::uint64_t> acc(ab.dim(), 0);
    const std::uint64_t p = field.p();
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (!va[i])
            continue;
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (!vb[j])
                continue;
            std::uint64_t& slot = acc[oa[i] + ob[j]];
            slot = (slot + static_cast<std::uint64_t>(va[i]) * vb[j]) % p;
        }
    }
    return std::vector<Coeff>(acc.begin(), acc.end());
}

}  // namespace modinv
