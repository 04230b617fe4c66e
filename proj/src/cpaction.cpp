#include "modinv/cpaction.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "modinv/fault.hpp"

namespace modinv {

namespace fault {
namespace {
std::atomic<Kind> g_active{Kind::None};
}

void set(std::string_view name)
{
    if (name == "transfer-sign")
        g_active = Kind::TransferSign;
    else if (name == "none" || name.empty())
        g_active = Kind::None;
    else
        throw Error(Errc::InvalidArgument, "unknown fault '" + std::string(name) + "'");
}

Kind active() noexcept
{
    return g_active.load();
}
}  // namespace fault

Polynomial apply_sigma(const Polynomial& f, std::uint32_t k)
{
    const PrimeField& F = f.field();
    return apply_block_linear(f, {1, F.reduce(k), 0, 1});
}

Polynomial transfer(const Polynomial& f)
{
    const PrimeField& F = f.field();
    Polynomial out = f;
    for (std::uint32_t k = 1; k < F.p(); ++k)
        out += apply_sigma(f, k);
    if (fault::active() == fault::Kind::TransferSign)
        return -out;
    return out;
}

Polynomial norm(std::size_t blocks, const PrimeField& field, std::size_t i)
{
    if (i < 1 || i > blocks)
        throw Error(Errc::InvalidArgument, "norm block index out of range");
    Polynomial x = Polynomial::x(blocks, field, i);
    Polynomial y = Polynomial::y(blocks, field, i);
    return y.pow(field.p()) - x.pow(field.p() - 1) * y;
}

Coeff power_sum(std::uint64_t t, const PrimeField& field)
{
    if (t == 0)
        throw Error(Errc::InvalidArgument, "power_sum needs a positive exponent");
    return t % (field.p() - 1) == 0 ? field.neg(1 % field.p()) : 0;
}

bool is_invariant(const Polynomial& f)
{
    return apply_sigma(f) == f;
}

FpMatrix sigma_matrix(const Component& comp, const PrimeField& field, std::uint32_t k)
{
    return block_linear_matrix(comp, {1, field.reduce(k), 0, 1}, field);
}

FpMatrix sigma_minus_one(const Component& comp, const PrimeField& field)
{
    return sigma_matrix(comp, field) - FpMatrix::identity(comp.dim(), field);
}

std::vector<Polynomial> invariant_basis(const MultiDegree& lambda, const PrimeField& field)
{
    Component comp(lambda);
    EchelonBasis basis(comp.dim(), field);
    for (auto& v : kernel_basis(sigma_minus_one(comp, field)))
        basis.insert(std::move(v));
    std::vector<Polynomial> out;
    for (const auto& row : basis.rows())
        out.push_back(comp.from_dense(row, field));
    return out;
}

// ---------------------------------------------------------------------------

SigmaFiltration::SigmaFiltration(const MultiDegree& lambda, const PrimeField& field)
    : comp_(lambda), field_(field), a_(sigma_minus_one(comp_, field))
{
    const std::size_t n = comp_.dim();
    // im A is spanned by the columns of A.
    FpMatrix at = a_.transposed();
    EchelonBasis current(n, field);
    for (std::size_t c = 0; c < n; ++c)
        current.insert(std::vector<Coeff>(at.row(c).begin(), at.row(c).end()));
    images_.push_back(current);
    for (std::uint32_t r = 2; r < field.p() && images_.back().size() > 0; ++r) {
        EchelonBasis next(n, field);
        for (const auto& row : images_.back().rows())
            next.insert(a_.apply(row));
        images_.push_back(std::move(next));
    }
}

std::vector<std::uint64_t> SigmaFiltration::rank_profile() const
{
    const std::uint32_t p = field_.p();
    std::vector<std::uint64_t> d(p + 2, 0);
    d[0] = comp_.dim();
    for (std::size_t r = 1; r <= images_.size() && r < p; ++r)
        d[r] = images_[r - 1].size();
    return d;
}

bool SigmaFiltration::in_image(const std::vector<Coeff>& v, std::uint32_t r) const
{
    if (r == 0)
        return true;
    if (r > images_.size())
        return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
    return images_[r - 1].contains(v);
}

std::uint32_t SigmaFiltration::length(const std::vector<Coeff>& v) const
{
    std::uint32_t r = 0;
    while (r < images_.size() && images_[r].contains(v))
        ++r;
    return r + 1;
}

std::map<std::size_t, std::uint32_t> SigmaFiltration::lead_lengths() const
{
    const std::size_t n = comp_.dim();
    std::map<std::size_t, std::uint32_t> out;
    // r = 0: the whole kernel.
    EchelonBasis kernel(n, field_);
    for (auto& v : kernel_basis(a_))
        kernel.insert(std::move(v));
    for (auto pivot : kernel.pivots())
        out[pivot] = 1;
    for (std::size_t r = 1; r <= images_.size(); ++r) {
        const auto& rows = images_[r - 1].rows();
        if (rows.empty())
            break;
        // Solve A (sum c_k b_k) = 0 for the coefficients c.
        FpMatrix images(n, rows.size(), field_);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            auto col = a_.apply(rows[k]);
            for (std::size_t i = 0; i < n; ++i)
                images(i, k) = col[i];
        }
        EchelonBasis socle(n, field_);
        for (const auto& c : kernel_basis(images)) {
            std::vector<std::uint64_t> acc(n, 0);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (c[k])
                    for (std::size_t i = 0; i < n; ++i)
                        acc[i] = (acc[i] + static_cast<std::uint64_t>(c[k]) * rows[k][i]) % field_.p();
            socle.insert(std::vector<Coeff>(acc.begin(), acc.end()));
        }
        for (auto pivot : socle.pivots())
            out[pivot] = static_cast<std::uint32_t>(r + 1);
    }
    return out;
}

std::uint32_t length(const Polynomial& f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "length of the zero polynomial is undefined");
    MultiDegree lambda = f.multidegree();
    if (!is_invariant(f))
        throw Error(Errc::NotInvariant, "length is only defined for invariants");
    SigmaFiltration filt(lambda, f.field());
    return filt.length(filt.component().to_dense(f));
}

// ---------------------------------------------------------------------------

std::uint64_t ModuleDecomposition::dimension() const
{
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        n += (i + 1) * multiplicities[i];
    return n;
}

std::uint64_t ModuleDecomposition::summand_count() const
{
    std::uint64_t n = 0;
    for (auto m : multiplicities)
        n += m;
    return n;
}

std::map<std::uint32_t, std::uint64_t> ModuleDecomposition::nonzero() const
{
    std::map<std::uint32_t, std::uint64_t> out;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        if (multiplicities[i])
            out[static_cast<std::uint32_t>(i + 1)] = multiplicities[i];
    return out;
}

namespace {

std::vector<std::int64_t> padded_ranks(const std::vector<std::uint64_t>& ranks, std::uint32_t p)
{
    std::vector<std::int64_t> d(p + 2, 0);
    for (std::size_t j = 0; j < ranks.size() && j < p; ++j)
        d[j] = static_cast<std::int64_t>(ranks[j]);
    return d;
}

ModuleDecomposition from_signed(const std::vector<std::int64_t>& m, std::uint32_t p)
{
    ModuleDecomposition out{p, std::vector<std::uint64_t>(p, 0)};
    for (std::uint32_t i = 0; i < p; ++i) {
        if (m[i] < 0)
            throw Error(Errc::InvalidArgument, "rank profile is not that of a C_p-module");
        out.multiplicities[i] = static_cast<std::uint64_t>(m[i]);
    }
    return out;
}

}  // namespace

ModuleDecomposition decompose_from_ranks(const std::vector<std::uint64_t>& ranks, std::uint32_t p)
{
    auto d = padded_ranks(ranks, p);
    std::vector<std::int64_t> m(p);
    for (std::uint32_t i = 1; i <= p; ++i)
        m[i - 1] = d[i - 1] - 2 * d[i] + d[i + 1];
    return from_signed(m, p);
}

ModuleDecomposition solve_rank_system(const std::vector<std::uint64_t>& ranks, std::uint32_t p)
{
    auto d = padded_ranks(ranks, p);
    // Equation j involves m_i for i > j with coefficient (i - j); equation
    // j = p-1 determines m_p, then j = p-2 determines m_{p-1}, and so on.
    std::vector<std::int64_t> m(p + 1, 0);
    for (std::int64_t j = static_cast<std::int64_t>(p) - 1; j >= 0; --j) {
        std::int64_t rest = d[j];
        for (std::int64_t i = j + 2; i <= static_cast<std::int64_t>(p); ++i)
            rest -= (i - j) * m[i];
        m[j + 1] = rest;  // coefficient of m_{j+1} is 1
    }
    return from_signed(std::vector<std::int64_t>(m.begin() + 1, m.end()), p);
}

ModuleDecomposition decompose_component(const MultiDegree& lambda, const PrimeField& field)
{
    SigmaFiltration filt(lambda, field);
    return decompose_from_ranks(filt.rank_profile(), field.p());
}

PeriodicityResult periodicity_reduce(const MultiDegree& lambda, std::uint32_t p)
{
    if (p < 2)
        throw Error(Errc::NotPrime, "periodicity needs a prime modulus");
    PeriodicityResult out;
    out.reduced.reserve(lambda.size());
    for (auto l : lambda)
        out.reduced.push_back(l % p);
    out.projective_count = (component_dimension(lambda) - component_dimension(out.reduced)) / p;
    return out;
}

}  // namespace modinv
