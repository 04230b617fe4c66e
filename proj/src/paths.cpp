#include "modinv/paths.hpp"

#include <algorithm>
#include <bit>

#include "modinv/cpaction.hpp"

namespace modinv {

LatticePath::LatticePath(std::uint64_t bits, std::uint32_t length) : bits_(bits), length_(length)
{
    if (length > 63)
        throw Error(Errc::InvalidArgument, "lattice paths are limited to 63 steps");
    if (length < 64 && (bits >> length) != 0)
        throw Error(Errc::InvalidArgument, "path bits beyond its length");
}

LatticePath LatticePath::parse(std::string_view word)
{
    if (word.size() > 63)
        throw Error(Errc::Parse, "lattice paths are limited to 63 steps");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == 'y' || c == 'Y')
            bits |= std::uint64_t{1} << i;
        else if (c != 'x' && c != 'X')
            throw Error(Errc::Parse, "path words use only x and y");
    }
    return LatticePath(bits, static_cast<std::uint32_t>(word.size()));
}

std::int32_t LatticePath::height() const
{
    std::int32_t h = 0, best = 0;
    for (std::uint32_t i = 1; i <= length_; ++i) {
        h += is_y(i) ? -1 : 1;
        best = std::max(best, h);
    }
    return best;
}

std::int32_t LatticePath::finishing_height() const
{
    std::int32_t ys = static_cast<std::int32_t>(std::popcount(bits_));
    return static_cast<std::int32_t>(length_) - 2 * ys;
}

std::string LatticePath::word() const
{
    std::string out;
    for (std::uint32_t i = 1; i <= length_; ++i)
        out += is_y(i) ? 'y' : 'x';
    return out;
}

LatticePath LatticePath::prefix(std::uint32_t len) const
{
    if (len > length_)
        throw Error(Errc::InvalidArgument, "prefix longer than the path");
    std::uint64_t mask = len == 0 ? 0 : (~std::uint64_t{0} >> (64 - len));
    return LatticePath(bits_ & mask, len);
}

std::uint32_t PathClass::summand_dimension(std::uint32_t p) const
{
    switch (kind) {
    case PathKind::PDP: return finishing_height + 1;
    case PathKind::IDP: return p;
    case PathKind::Neither: break;
    }
    throw Error(Errc::NotInDomain, "path labels no summand");
}

std::string PathClass::to_string() const
{
    switch (kind) {
    case PathKind::PDP: return "PDP(" + std::to_string(finishing_height) + ")";
    case PathKind::IDP: return "IDP";
    case PathKind::Neither: break;
    }
    return "Neither";
}

PathClass classify_path(const LatticePath& path, std::uint32_t p)
{
    if (p < 2)
        throw Error(Errc::NotPrime, "classification needs a prime");
    const std::int32_t escape = static_cast<std::int32_t>(p) - 1;
    std::int32_t h = 0;
    for (std::uint32_t i = 1; i <= path.length(); ++i) {
        h += path.is_y(i) ? -1 : 1;
        if (h < 0)
            return {PathKind::Neither, 0};
        if (h == escape)
            return {PathKind::IDP, 0};
    }
    return {PathKind::PDP, static_cast<std::uint32_t>(h)};
}

namespace {

// Word with the first letter as the most significant bit of `w`.
LatticePath path_from_word_index(std::uint64_t w, std::uint32_t d)
{
    std::uint64_t bits = 0;
    for (std::uint32_t i = 0; i < d; ++i)
        if ((w >> (d - 1 - i)) & 1u)
            bits |= std::uint64_t{1} << i;
    return LatticePath(bits, d);
}

void check_enumerable(std::uint32_t d)
{
    if (d > 40)
        throw Error(Errc::InfeasibleSize, "path enumeration is limited to d <= 40");
}

}  // namespace

std::vector<ClassifiedPath> enumerate_paths(std::uint32_t d, std::uint32_t p)
{
    check_enumerable(d);
    std::vector<ClassifiedPath> out;
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t w = 0; w < total; ++w) {
        LatticePath path = path_from_word_index(w, d);
        PathClass cls = classify_path(path, p);
        if (cls.kind != PathKind::Neither)
            out.push_back({path, cls});
    }
    return out;
}

PathTally tally_paths(std::uint32_t d, std::uint32_t p)
{
    check_enumerable(d);
    PathTally t;
    t.pdp.assign(p - 1, 0);
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        PathClass cls = classify_path(LatticePath(bits, d), p);
        switch (cls.kind) {
        case PathKind::PDP: ++t.pdp[cls.finishing_height]; break;
        case PathKind::IDP: ++t.idp; break;
        case PathKind::Neither: ++t.neither; break;
        }
    }
    return t;
}

std::vector<std::vector<std::uint64_t>> nu_table(std::uint32_t d_max, std::uint32_t q)
{
    std::vector<std::vector<std::uint64_t>> nu(d_max + 1, std::vector<std::uint64_t>(q + 1, 0));
    nu[0][0] = 1;
    for (std::uint32_t d = 0; d < d_max; ++d)
        for (std::uint32_t h = 0; h <= q; ++h)
            nu[d + 1][h] = (h >= 1 ? nu[d][h - 1] : 0) + (h + 1 <= q ? nu[d][h + 1] : 0);
    return nu;
}

std::vector<std::uint64_t> nu_bar_table(std::uint32_t d_max, std::uint32_t q)
{
    if (q < 1)
        throw Error(Errc::InvalidArgument, "escape height must be positive");
    auto below = nu_table(d_max, q - 1);
    std::vector<std::uint64_t> out(d_max + 1, 0);
    for (std::uint32_t d = 0; d < d_max; ++d)
        out[d + 1] = below[d][q - 1] + 2 * out[d];
    return out;
}

CountTables count_tables(std::uint32_t d_max, std::uint32_t p)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, "count tables need a prime");
    CountTables t;
    t.p = p;
    t.d_max = d_max;
    t.mu.assign(d_max + 1, std::vector<std::uint64_t>(p, 0));
    auto mu = [&](std::uint32_t d, std::uint32_t h) -> std::uint64_t& { return t.mu[d][h - 1]; };
    if (p == 2) {
        mu(0, 1) = 1;
        for (std::uint32_t d = 1; d <= d_max; ++d)
            mu(d, 2) = std::uint64_t{1} << (d - 1);
    } else {
        mu(0, 1) = 1;
        if (d_max >= 1)
            mu(1, 2) = 1;
        for (std::uint32_t d = 1; d < d_max; ++d) {
            for (std::uint32_t h = 1; h <= p; ++h) {
                std::uint64_t v;
                if (h == 1)
                    v = mu(d, 2);
                else if (h <= p - 2)
                    v = mu(d, h - 1) + mu(d, h + 1);
                else if (h == p - 1)
                    v = mu(d, p - 2);
                else
                    v = mu(d, p - 1) + 2 * mu(d, p);
                mu(d + 1, h) = v;
            }
        }
    }
    t.nu = nu_table(d_max, p - 2);
    t.nu_bar = nu_bar_table(d_max, p - 1);
    return t;
}

Matching match_path(const LatticePath& path, std::uint32_t p)
{
    PathClass cls = classify_path(path, p);
    if (cls.kind == PathKind::Neither)
        throw Error(Errc::NotInDomain, "path " + path.word() + " is neither a PDP nor an IDP");
    const std::uint32_t d = path.length();
    Matching m;
    m.rho.assign(d + 1, 0);
    m.s = d;
    if (cls.kind == PathKind::IDP) {
        std::int32_t h = 0;
        for (std::uint32_t i = 1; i <= d; ++i) {
            h += path.is_y(i) ? -1 : 1;
            if (h == static_cast<std::int32_t>(p) - 1) {
                m.s = i;
                break;
            }
        }
    }
    std::vector<std::uint32_t> free_x;  // unmatched x positions, most recent last
    for (std::uint32_t j = 1; j <= m.s; ++j) {
        if (!path.is_y(j)) {
            free_x.push_back(j);
            continue;
        }
        if (free_x.empty())
            throw Error(Errc::UnmatchedY, "y-step " + std::to_string(j) + " of " + path.word() + " has no match");
        m.rho[j] = free_x.back();
        free_x.pop_back();
        m.i1.push_back(j);
    }
    std::vector<bool> in_i2(d + 1, false);
    for (auto j : m.i1) {
        m.i2.push_back(m.rho[j]);
        in_i2[m.rho[j]] = true;
    }
    std::sort(m.i2.begin(), m.i2.end());
    for (std::uint32_t i = 1; i <= m.s; ++i)
        if (!path.is_y(i) && !in_i2[i])
            m.i3.push_back(i);
    for (std::uint32_t i = m.s + 1; i <= d; ++i)
        (path.is_y(i) ? m.i5 : m.i4).push_back(i);
    return m;
}

Monomial lambda_monomial(const LatticePath& path)
{
    const std::uint32_t d = path.length();
    Monomial mon(d);
    for (std::uint32_t i = 1; i <= d; ++i)
        mon.set(var_index({i, path.is_y(i) ? VarKind::Y : VarKind::X}), 1);
    return mon;
}

namespace {

Polynomial u_product(const LatticePath& path, const Matching& m, const PrimeField& field)
{
    const std::uint32_t d = path.length();
    Polynomial out = Polynomial::constant(d, field, 1);
    for (auto j : m.i1)
        out *= Polynomial::u(d, field, m.rho[j], j);
    return out;
}

Polynomial variables(std::uint32_t d, const PrimeField& field, const std::vector<std::uint32_t>& idx, VarKind kind)
{
    Monomial mon(d);
    for (auto i : idx)
        mon.set(var_index({i, kind}), 1);
    return Polynomial::monomial(mon, field);
}

}  // namespace

Polynomial theta(const LatticePath& path, const PrimeField& field)
{
    PathClass cls = classify_path(path, field.p());
    Matching m = match_path(path, field.p());
    const std::uint32_t d = path.length();
    Polynomial us = u_product(path, m, field);
    if (cls.kind == PathKind::PDP)
        return us * variables(d, field, m.i3, VarKind::X);
    std::vector<std::uint32_t> ys = m.i3;
    ys.insert(ys.end(), m.i5.begin(), m.i5.end());
    return transfer(variables(d, field, ys, VarKind::Y)) * us * variables(d, field, m.i4, VarKind::X);
}

Polynomial theta_prime(const LatticePath& path, const PrimeField& field)
{
    PathClass cls = classify_path(path, field.p());
    Matching m = match_path(path, field.p());
    const std::uint32_t d = path.length();
    Polynomial us = u_product(path, m, field);
    if (cls.kind == PathKind::PDP)
        return us * variables(d, field, m.i3, VarKind::Y);
    std::vector<std::uint32_t> ys = m.i3;
    ys.insert(ys.end(), m.i5.begin(), m.i5.end());
    return us * variables(d, field, ys, VarKind::Y) * variables(d, field, m.i4, VarKind::X);
}

std::vector<TensorSummand> tensor_decompose(std::uint32_t d, std::uint32_t p)
{
    std::vector<TensorSummand> out;
    for (const auto& cp : enumerate_paths(d, p))
        out.push_back({cp.path, cp.cls.summand_dimension(p)});
    return out;
}

}  // namespace modinv
